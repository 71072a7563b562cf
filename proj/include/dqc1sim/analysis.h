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

#ifndef DQC1SIM_ANALYSIS_H
#define DQC1SIM_ANALYSIS_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dqc1sim/numtheory.h"
#include "dqc1sim/order_finding.h"

namespace dqc1sim {

/// |G(delta)|^2 = sin^2(pi t delta) / sin^2(pi delta), equal to t^2 when
/// delta is an integer.
double fejer_kernel(double delta, u64 t);

/// |G|^2 at delta = phase - c/t, evaluated with exact integer detection of
/// the removable singularity and of the zeros at nonzero multiples of 1/t.
double fejer_kernel_at(const Fraction &phase, u64 c, u64 t);

/// Exact P(c) of the black-box order-finding circuit.
struct OutcomeDistribution {
    u64 n = 0;
    u64 a = 0;
    u64 t = 0;
    std::vector<double> probabilities;

    double total() const;
    /// "c,probability" rows with round-trip precision.
    std::string to_csv() const;
};

/// Multiplicity of each eigenphase difference (j/r_d - j'/r_d') mod 1 over
/// all N^2 eigenvector pairs of U_a ⊗ U_a^dag.
std::map<Fraction, u64> phase_difference_multiplicities(const EigenphaseTable &table);

/// Groups the N^2 pairs by distinct difference, then sums the closed-form
/// kernel per outcome: P(c) = sum_delta m(delta) |G(delta - c/t)|^2 / (N^2 t^2).
OutcomeDistribution exact_distribution(u64 n, u64 a, u64 t);

/// Eigenvalues j/r_d with r_d = r and gcd(j, r) = 1 over the orbits of
/// register values coprime to N, counted by enumeration.
u64 count_good_eigenvalues(u64 n, u64 a);

/// phi(r) (p-1)(q-1) / r.
u64 good_eigenvalues_closed_form(u64 p, u64 q, u64 r);

/// chi (2N - chi).
u64 num_c(u64 chi, u64 n);

/// A phase difference is usable when, reduced mod 1, its denominator is
/// exactly r (the numerator is then coprime to r).
bool is_usable_difference(const Fraction &delta, u64 r);

/// Pairs among all N^2 whose difference is usable.
u64 count_usable_pairs(u64 n, u64 a);

struct SuccessBound {
    /// 4/(N pi^2) (p-1)(q-1) phi(r)/r.
    double value;
    /// Guaranteed |G|^2 / t^2 inside the 1/(2t) window of a fraction.
    double kernel_floor;
};

/// Throws BadFactorization unless N = p q with p, q prime.
SuccessBound success_lower_bound(u64 n, u64 p, u64 q, u64 a);

/// P (2 - P).
double two_register_success(double p);

/// pq / ((p-1)(q-1)) * ln ln r. A scale indicator only: constants and the
/// logarithm base of the asymptotic form are unknown.
double expected_runs_estimate(u64 n, u64 p, u64 q, u64 r);

/// Probability mass on outcomes c with |delta - c/t| <= 1/(2t) (mod 1) for
/// some usable difference delta.
double good_outcome_mass(const OutcomeDistribution &dist, const EigenphaseTable &table);

/// Register values whose orbit length differs from the order r.
u64 count_short_orbit_values(const EigenphaseTable &table);

struct CountingReport {
    u64 n = 0;
    u64 a = 0;
    u64 t = 0;
    u64 r = 0;
    std::optional<std::pair<u64, u64>> factors;
    u64 chi = 0;
    std::optional<u64> chi_closed_form;
    u64 num_c = 0;
    u64 usable_pairs = 0;
    bool usable_bound_holds = false;
    std::optional<double> bound_lower;
    /// chi / N: fraction of single-register eigenvalues that reveal r.
    double single_register_fraction = 0.0;
    /// P (2 - P) at P = chi / N; equals num_c / N^2.
    double two_register_success = 0.0;
    std::optional<double> expected_runs;
    double good_outcome_mass = 0.0;
    u64 short_orbit_values = 0;
    std::optional<u64> short_orbit_limit;  // p + q - 1
    /// Soft check: more than p + q - 1 values have r_d != r.
    bool short_orbit_warning = false;
};

/// Full counting analysis for (N, a) with t the power of two in [N^2, 2N^2].
/// Closed-form fields are filled when N is a product of two distinct primes.
CountingReport counting_report(u64 n, u64 a);

}  // namespace dqc1sim

#endif
