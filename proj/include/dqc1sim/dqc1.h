// Copyright 2026 The dqc1sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DQC1SIM_DQC1_H
#define DQC1SIM_DQC1_H

#include <cstdint>

#include "dqc1sim/qsim.h"

namespace dqc1sim {

/// Estimate of a normalized trace. `shots == 0` marks an exact value.
struct TraceEstimate {
    Complex value;
    std::uint64_t shots = 0;
    double std_error = 0.0;
    double std_error_re = 0.0;
    double std_error_im = 0.0;
};

enum class Basis { X, Y, Z };

struct ShotRecord {
    Basis basis;
    int outcome;  // +1 or -1
    std::uint64_t shot_index;
    std::uint64_t register_x;
    std::uint64_t register_y;
};

struct SamplingOptions {
    unsigned threads = 1;
};

/// tr(V)/D: twice the control's <0|rho|1> coherence after the controlled-V
/// circuit on a maximally mixed register. X-expectation is Re(tr V)/D and
/// Y-expectation is -Im(tr V)/D.
Complex dqc1_exact(const UnitarySpec &v);

/// One shot of standard DQC1: a uniformly drawn register basis state stands
/// in for the maximally mixed register.
ShotRecord dqc1_shot(const UnitarySpec &v, Basis basis, std::uint64_t shot_index, std::uint64_t seed);

/// Splits shots between X and Y (odd shot to X) and returns the estimate of
/// tr(V)/D as <X> - i<Y>.
TraceEstimate dqc1_sample(const UnitarySpec &v, std::uint64_t shots, std::uint64_t seed,
                          SamplingOptions options = {});

/// |tr U|^2 / d^2: X-expectation of the control after
/// cSWAP, (U ⊗ I), cSWAP on two maximally mixed registers.
double bb_dqc1_exact(const UnitarySpec &u);

ShotRecord bb_dqc1_shot(const UnitarySpec &u, std::uint64_t shot_index, std::uint64_t seed);

/// Black-box estimate of |tr U|^2/d^2 from X-basis measurements only.
TraceEstimate bb_dqc1_sample(const UnitarySpec &u, std::uint64_t shots, std::uint64_t seed,
                             SamplingOptions options = {});

struct GlobalPhaseReport {
    double theta = 0.0;
    /// |bb_dqc1_exact(e^{i theta} U) - bb_dqc1_exact(U)|.
    double blackbox_exact_deviation = 0.0;
    /// max entrywise deviation of build_tau_bb over the random (rho, sigma)
    /// trials; negative when the register is too large for the oracle.
    double blackbox_state_deviation = -1.0;
    /// |estimate difference| of bb_dqc1_sample with a shared seed.
    double blackbox_sample_deviation = 0.0;
    Complex standard_plain;
    Complex standard_phased;
    /// |dqc1(e^{i theta} U) - e^{i theta} dqc1(U)|.
    double standard_phase_error = 0.0;
    /// The standard protocol output moved when the global phase changed.
    bool standard_sees_phase = false;
};

/// Demonstrates that the black-box protocol cannot observe a global phase
/// while the standard (controlled-U) protocol does.
GlobalPhaseReport global_phase_nogo_check(const UnitarySpec &u, double theta, std::uint64_t trials,
                                          std::uint64_t seed);

}  // namespace dqc1sim

#endif
