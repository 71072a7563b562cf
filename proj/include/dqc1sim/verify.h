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

#ifndef DQC1SIM_VERIFY_H
#define DQC1SIM_VERIFY_H

#include <cstdint>
#include <string>
#include <vector>

namespace dqc1sim {

struct VerifyOptions {
    /// Subset sized to finish in seconds.
    bool quick = false;
    /// Test hook: route the phased black-box evaluation through a controlled
    /// gate so the global-phase invariant must fail.
    bool break_phase_invariance = false;
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

struct InvariantResult {
    std::string name;
    bool passed;
    std::string detail;
};

/// Runs the desk-scale invariant suite of every module.
std::vector<InvariantResult> run_verification(const VerifyOptions &options);

}  // namespace dqc1sim

#endif
