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

#ifndef DQC1SIM_ORDER_FINDING_H
#define DQC1SIM_ORDER_FINDING_H

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "dqc1sim/numtheory.h"
#include "dqc1sim/qsim.h"

namespace dqc1sim {

using AttemptRng = std::mt19937_64;

/// Orbit decomposition of x -> a*x mod N. Orbit d with length r_d carries
/// the eigenphases j/r_d, j = 0..r_d-1, of U_a.
class EigenphaseTable {
   public:
    struct Orbit {
        u64 representative;
        u64 length;
        std::vector<u64> members;  // representative * a^k mod N, k = 0..length-1
    };

    static EigenphaseTable make(u64 n, u64 a);

    u64 n() const {
        return n_;
    }
    u64 a() const {
        return a_;
    }
    u64 order() const {
        return order_;
    }
    const std::vector<Orbit> &orbits() const {
        return orbits_;
    }
    const Orbit &orbit_of(u64 x) const {
        return orbits_[orbit_index_[x]];
    }

    /// Multiplicity of each reduced eigenphase in [0, 1) over all N
    /// eigenvectors of U_a.
    std::map<Fraction, u64> phase_multiplicities() const;

   private:
    u64 n_ = 0;
    u64 a_ = 0;
    u64 order_ = 0;
    std::vector<Orbit> orbits_;
    std::vector<std::uint32_t> orbit_index_;
};

/// One eigenvector of U_a drawn from the uniform mixture: register value x,
/// its orbit length r_d and phase index j in [0, r_d).
struct EigenphaseSample {
    u64 register_value;
    u64 orbit_length;
    u64 index;

    Fraction phase() const {
        return Fraction(static_cast<i64>(index), static_cast<i64>(orbit_length));
    }
};

EigenphaseSample eigenphase_sample(const EigenphaseTable &table, AttemptRng &rng);

/// Parameters of one order-finding pass: t = 2^rounds with N^2 <= t <= 2N^2.
class PhaseEstimationConfig {
   public:
    /// Picks the unique power of two in [N^2, 2N^2].
    static PhaseEstimationConfig for_modulus(u64 n, u64 a);
    /// Throws BadT unless N^2 <= 2^rounds <= 2N^2, NotCoprime if gcd(a, N) > 1.
    static PhaseEstimationConfig make(u64 n, u64 a, unsigned rounds);

    u64 n() const {
        return n_;
    }
    u64 a() const {
        return a_;
    }
    unsigned rounds() const {
        return rounds_;
    }
    u64 t() const {
        return u64{1} << rounds_;
    }

   private:
    PhaseEstimationConfig(u64 n, u64 a, unsigned rounds) : n_(n), a_(a), rounds_(rounds) {
    }
    u64 n_;
    u64 a_;
    unsigned rounds_;
};

/// Iterative phase estimation with one reused control qubit.
///
/// Round j = 1..L kicks back the phase 2^{L-j} * phi onto the control's |1>
/// branch, applies the feedback rotation built from the bits already measured,
/// then a Hadamard and a measurement. The bit of round j is bit j-1 of c.
/// The outcome distribution is |G(phi - c/t)|^2 / t^2 with t = 2^L.
u64 semiclassical_ipe(double phi, unsigned rounds, AttemptRng &rng);

/// Same process with the phase held exactly; dyadic phases are then measured
/// deterministically.
u64 semiclassical_ipe(const Fraction &phi, unsigned rounds, AttemptRng &rng);

/// Sparse register-pair state of the faithful circuit, (u, v) -> amplitude.
class BranchState {
   public:
    using Key = std::pair<u64, u64>;

    explicit BranchState(Key initial);

    const std::map<Key, Complex> &amplitudes() const {
        return amps_;
    }
    std::size_t support() const {
        return amps_.size();
    }
    double norm_squared() const;

    /// One black-box round: cSWAP, multiply register 1 by `multiplier`,
    /// cSWAP, then the feedback phase on the control's |1> branch, Hadamard and
    /// a control measurement. Collapses this state and returns the bit.
    int apply_round(u64 multiplier, u64 modulus, double feedback_phase, AttemptRng &rng);

   private:
    std::map<Key, Complex> amps_;
};

enum class AttemptPath { Eigenphase, Faithful };

struct AttemptRecord {
    AttemptPath path = AttemptPath::Eigenphase;
    u64 a = 0;
    /// Eigenphase path: the two sampled eigenvectors (for U_a and U_a^dag).
    std::optional<EigenphaseSample> first;
    std::optional<EigenphaseSample> second;
    /// Faithful path: initial register basis pair.
    std::optional<std::pair<u64, u64>> registers;
    u64 c = 0;
    std::optional<u64> order;
    bool order_recovered = false;
    bool recovered_directly = false;
    std::optional<std::pair<u64, u64>> factors;
    /// Faithful path: largest BranchState support seen.
    std::size_t max_support = 0;
    /// Classical shortcut: a shared a factor with N, no circuit was run.
    bool classical_shortcut = false;
};

/// Eigenphase-sampling attempt: phi = (j/r_d - j'/r_d') mod 1, then IPE,
/// continued fractions and factor extraction.
AttemptRecord run_attempt_eigenpath(const PhaseEstimationConfig &config, const EigenphaseTable &table,
                                    AttemptRng &rng);
AttemptRecord run_attempt_eigenpath(const PhaseEstimationConfig &config, AttemptRng &rng);

/// Eigenphase attempt with the two eigenphases given.
AttemptRecord run_attempt_with_phases(const PhaseEstimationConfig &config, const Fraction &first,
                                      const Fraction &second, AttemptRng &rng);

/// Literal simulation of the black-box circuit on the register pair |x>|y>.
/// Throws StateBlowup if the support ever exceeds r_d(x) * r_d(y).
AttemptRecord run_attempt_faithful(const PhaseEstimationConfig &config, u64 x, u64 y, AttemptRng &rng);

/// Faithful attempt with (x, y) drawn uniformly (maximally mixed registers).
AttemptRecord run_attempt_faithful(const PhaseEstimationConfig &config, AttemptRng &rng);

struct FactorOptions {
    std::size_t attempt_cap = 500;
    std::uint64_t seed = 1;
    std::optional<u64> fixed_a;
    AttemptPath path = AttemptPath::Eigenphase;
    /// Return a factor immediately when a random a shares one with N.
    bool classical_shortcut = true;
    /// Keep running up to the cap after the first success (for statistics).
    bool run_all_attempts = false;
    unsigned threads = 1;
};

struct FactoringResult {
    u64 n = 0;
    std::optional<std::pair<u64, u64>> factors;
    std::vector<AttemptRecord> attempts;
    /// Number of attempts that ran the circuit.
    std::size_t circuit_attempts = 0;
    std::size_t orders_recovered = 0;
    std::size_t orders_recovered_directly = 0;
    std::size_t factor_successes = 0;
};

/// Validates that N is odd, composite and not a prime power.
void check_factoring_input(u64 n);

/// Each attempt i draws its own a (unless fixed) and randomness from
/// derive_seed(seed, i), so the record stream is independent of `threads`.
/// Throws AttemptCapExceeded if no attempt yields factors.
FactoringResult factor(u64 n, const FactorOptions &options);

/// Measured c of `samples` independent attempts (sample i uses attempt_rng(seed, i)).
std::vector<u64> sample_attempt_outcomes(const PhaseEstimationConfig &config, std::size_t samples,
                                         std::uint64_t seed, AttemptPath path, unsigned threads = 1);

/// Per-attempt RNG for attempt `index` of a run seeded with `seed`.
AttemptRng attempt_rng(std::uint64_t seed, std::uint64_t index);

}  // namespace dqc1sim

#endif
