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

#include "dqc1sim/verify.h"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "dqc1sim/analysis.h"
#include "dqc1sim/dqc1.h"
#include "dqc1sim/numtheory.h"
#include "dqc1sim/order_finding.h"
#include "dqc1sim/qsim.h"
#include "dqc1sim/rng.h"
#include "dqc1sim/stats.h"

namespace dqc1sim {

namespace {

struct Check {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            if (passed) {
                detail << "failed: ";
            } else {
                detail << "; ";
            }
            detail << what;
            passed = false;
        }
    }
};

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(6);
    out << v;
    return out.str();
}

std::vector<std::pair<u64, u64>> semiprimes_up_to(u64 limit) {
    std::vector<std::pair<u64, u64>> out;
    for (u64 n = 4; n <= limit; n++) {
        if (auto pq = split_semiprime(n)) {
            out.push_back(*pq);
        }
    }
    return out;
}

std::vector<double> ipe_expected(double phi, unsigned rounds) {
    u64 t = u64{1} << rounds;
    std::vector<double> p(t);
    for (u64 c = 0; c < t; c++) {
        p[c] = fejer_kernel(phi - static_cast<double>(c) / static_cast<double>(t), t) /
               (static_cast<double>(t) * static_cast<double>(t));
    }
    return p;
}

InvariantResult finish(std::string name, Check &check, const std::string &summary) {
    std::string detail = check.passed ? summary : check.detail.str();
    return InvariantResult{std::move(name), check.passed, detail};
}

}  // namespace

std::vector<InvariantResult> run_verification(const VerifyOptions &options) {
    const bool full = !options.quick;
    std::mt19937_64 rng(derive_seed(options.seed, 0x564552494659ULL, 0));
    std::vector<InvariantResult> results;

    {
        Check check;
        for (u64 x : {0ULL, 1ULL, 5ULL, 7ULL, 11ULL}) {
            check.require(multiplicative_order(2, 15) % orbit_length(x, 2, 15) == 0,
                          "orbit length does not divide the order");
        }
        u64 limit = full ? 200 : 60;
        for (u64 n = 3; n <= limit; n++) {
            for (u64 a = 2; a < n; a++) {
                if (gcd(a, n) != 1) {
                    continue;
                }
                u64 r = multiplicative_order(a, n);
                for (u64 x = 0; x < n; x++) {
                    u64 len = orbit_length(x, a, n);
                    check.require(r % len == 0, "r_d does not divide r at N=" + std::to_string(n));
                    if (gcd(x, n) == 1) {
                        check.require(len == r, "coprime orbit shorter than r at N=" + std::to_string(n));
                    }
                }
            }
        }
        results.push_back(finish("numtheory.orbit_divides_order", check, "checked N <= " + std::to_string(limit)));
    }

    {
        Check check;
        u64 limit = full ? 10000 : 500;
        for (int k = 0; k < (full ? 20000 : 1000); k++) {
            auto r = static_cast<i64>(1 + uniform_below(rng, limit));
            auto alpha = static_cast<i64>(uniform_below(rng, 2 * limit)) - static_cast<i64>(limit);
            auto beta = static_cast<i64>(uniform_below(rng, 2 * limit)) - static_cast<i64>(limit);
            bool lhs = std::gcd(alpha + beta * r, r) == 1;
            bool rhs = std::gcd(alpha, r) == 1;
            check.require(lhs == rhs, "coprimality shift fails for alpha=" + std::to_string(alpha));
        }
        results.push_back(finish("analysis.coprimality_shift", check, "random alpha, beta, r <= " + std::to_string(limit)));
    }

    {
        Check check;
        std::vector<UnitarySpec> specs = {UnitarySpec::mod_mul(2, 15), UnitarySpec::mod_mul(7, 33),
                                          UnitarySpec::diagonal_phases({0.3, 1.2, -2.0}),
                                          UnitarySpec::scalar_phase(0.7, UnitarySpec::mod_mul(2, 21))};
        for (std::size_t d : {2, 3, 4, 8}) {
            specs.push_back(UnitarySpec::dense(random_unitary(d, rng)));
        }
        double worst = 0.0;
        for (const auto &u : specs) {
            worst = std::max(worst, unitarity_error(as_dense(u)));
        }
        check.require(worst <= kUnitarityTol, "unitarity error " + fmt(worst));
        results.push_back(finish("qsim.unitarity", check, "max ||U^dag U - I|| = " + fmt(worst)));
    }

    {
        Check check;
        double worst = 0.0;
        for (std::size_t d : {2, 3, 4, 8}) {
            for (int k = 0; k < 20; k++) {
                auto u = UnitarySpec::dense(random_unitary(d, rng));
                double lhs = bb_dqc1_exact(u) * static_cast<double>(d * d);
                double rhs = std::norm(trace_of(u));
                worst = std::max(worst, std::abs(lhs - rhs));
                worst = std::max(worst, std::abs(bb_dqc1_exact(u) - std::norm(dqc1_exact(u))));
                Matrix m = as_dense(u);
                auto v = UnitarySpec::dense(kron(m, dagger(m)));
                worst = std::max(worst, std::abs(bb_dqc1_exact(u) - dqc1_exact(v).real()));
                worst = std::max(worst, std::abs(dqc1_exact(v).imag()));
            }
        }
        check.require(worst <= 1e-10, "deviation " + fmt(worst));
        results.push_back(finish("dqc1.blackbox_trace_identity", check, "max deviation " + fmt(worst)));
    }

    {
        Check check;
        double formula = 0.0, equivalence = 0.0, coherence = 0.0;
        int trials = full ? 50 : 10;
        for (int k = 0; k < trials; k++) {
            std::size_t d = 1 + static_cast<std::size_t>(k % 4);
            Matrix um = random_unitary(d, rng);
            auto u = UnitarySpec::dense(um);
            auto rho = DensityMatrix::make(random_density(d, rng));
            auto sigma = DensityMatrix::make(random_density(d, rng));
            auto tau = build_tau_bb(u, rho, sigma);
            formula = std::max(formula, max_abs_diff(tau.matrix(), tau_bb_block_formula(um, rho.matrix(), sigma.matrix())));
            Complex expect = (um * rho.matrix()).trace() * (sigma.matrix() * um.adjoint()).trace();
            coherence = std::max(coherence, std::abs(control_coherence(tau) - expect));

            auto rho_e = DensityMatrix::make(random_density_in_eigenbasis(um, rng));
            auto sigma_e = DensityMatrix::make(random_density_in_eigenbasis(um, rng));
            auto tau_bb = build_tau_bb(u, rho_e, sigma_e);
            auto tau_ctrl = build_tau_ctrl(kron(um, um.adjoint()),
                                           DensityMatrix::make(kron(rho_e.matrix(), sigma_e.matrix())));
            equivalence = std::max(equivalence, max_abs_diff(tau_bb.matrix(), tau_ctrl.matrix()));
        }
        check.require(formula <= 1e-12, "block formula deviation " + fmt(formula));
        check.require(equivalence <= 1e-12, "eigenbasis equivalence deviation " + fmt(equivalence));
        check.require(coherence <= 1e-12, "coherence deviation " + fmt(coherence));
        results.push_back(finish("qsim.tau_equivalence", check,
                                 "formula " + fmt(formula) + ", equivalence " + fmt(equivalence) + ", coherence " +
                                     fmt(coherence)));
    }

    {
        Check check;
        double worst_bb = 0.0, worst_fig2 = 0.0;
        for (int k = 0; k < 20; k++) {
            std::size_t d = 2 + static_cast<std::size_t>(k % 3);
            Matrix um = random_unitary(d, rng);
            double theta = 2.0 * std::numbers::pi * uniform01(rng);
            auto u = UnitarySpec::dense(um);
            auto phased = UnitarySpec::scalar_phase(theta, u);
            auto rho = DensityMatrix::make(random_density(d, rng));
            auto sigma = DensityMatrix::make(random_density(d, rng));
            Matrix plain_state = build_tau_bb(u, rho, sigma).matrix();
            Matrix phased_state;
            if (options.break_phase_invariance) {
                // Fault injection: a controlled version of e^{i theta} U sees the phase.
                Matrix m = as_dense(phased);
                phased_state = build_tau_ctrl(kron(m, Matrix::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d))),
                                              DensityMatrix::make(kron(rho.matrix(), sigma.matrix())))
                                   .matrix();
                Matrix reference = build_tau_ctrl(kron(um, Matrix::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d))),
                                                  DensityMatrix::make(kron(rho.matrix(), sigma.matrix())))
                                       .matrix();
                plain_state = reference;
            } else {
                phased_state = build_tau_bb(phased, rho, sigma).matrix();
            }
            worst_bb = std::max(worst_bb, max_abs_diff(plain_state, phased_state));
            worst_bb = std::max(worst_bb, std::abs(bb_dqc1_exact(u) - bb_dqc1_exact(phased)));

            Matrix phase_gate = Matrix::Identity(2, 2);
            phase_gate(1, 1) = std::polar(1.0, theta);
            Matrix rhs = kron(phase_gate, Matrix::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d))) *
                         controlled(um);
            worst_fig2 = std::max(worst_fig2, max_abs_diff(controlled(as_dense(phased)), rhs));
        }
        check.require(worst_bb <= 1e-12, "black-box output depends on the global phase (" + fmt(worst_bb) + ")");
        check.require(worst_fig2 <= 1e-12, "controlled phase decomposition deviation " + fmt(worst_fig2));
        results.push_back(finish("dqc1.global_phase_invariance", check,
                                 "black-box deviation " + fmt(worst_bb) + ", decomposition " + fmt(worst_fig2)));
    }

    {
        Check check;
        std::uint64_t seeds = full ? 200 : 40;
        std::uint64_t shots = full ? 10000 : 2000;
        auto u = UnitarySpec::mod_mul(2, 15);
        double exact_bb = bb_dqc1_exact(u);
        double exact_std = dqc1_exact(u).real();
        double sum_bb = 0.0, sum_bb2 = 0.0, sum_std = 0.0, sum_std2 = 0.0;
        for (std::uint64_t s = 0; s < seeds; s++) {
            double b = bb_dqc1_sample(u, shots, options.seed * 1000003 + s).value.real();
            double v = dqc1_sample(u, shots, options.seed * 1000003 + s).value.real();
            sum_bb += b;
            sum_bb2 += b * b;
            sum_std += v;
            sum_std2 += v * v;
        }
        auto z = [&](double sum, double sum2, double exact) {
            double k = static_cast<double>(seeds);
            double mean = sum / k;
            double var = (sum2 - k * mean * mean) / (k - 1.0);
            return std::abs(mean - exact) / std::sqrt(var / k);
        };
        double z_bb = z(sum_bb, sum_bb2, exact_bb);
        double z_std = z(sum_std, sum_std2, exact_std);
        check.require(z_bb < 5.0, "black-box estimator biased (z=" + fmt(z_bb) + ")");
        check.require(z_std < 5.0, "standard estimator biased (z=" + fmt(z_std) + ")");
        results.push_back(finish("dqc1.sampling_unbiased", check, "z_bb=" + fmt(z_bb) + ", z_std=" + fmt(z_std)));
    }

    {
        Check check;
        std::size_t shots = full ? 100000 : 20000;
        double worst_p = 1.0;
        std::vector<double> phis = full ? std::vector<double>{1.0 / 3, 1.0 / 7, 0.137} : std::vector<double>{1.0 / 3};
        std::vector<unsigned> rounds_list = full ? std::vector<unsigned>{4, 8} : std::vector<unsigned>{4};
        std::uint64_t stream = 0;
        for (double phi : phis) {
            for (unsigned rounds : rounds_list) {
                AttemptRng local = attempt_rng(options.seed, 0x1000 + stream++);
                std::vector<std::uint64_t> counts(std::size_t{1} << rounds, 0);
                for (std::size_t i = 0; i < shots; i++) {
                    counts[semiclassical_ipe(phi, rounds, local)]++;
                }
                auto res = chi_square_test(counts, ipe_expected(phi, rounds));
                worst_p = std::min(worst_p, res.p_value);
                check.require(res.p_value >= 0.001, "chi-square rejects phi=" + fmt(phi) + ", L=" +
                                                        std::to_string(rounds) + " (p=" + fmt(res.p_value) + ")");
            }
        }
        for (unsigned rounds = 1; rounds <= 6; rounds++) {
            u64 t = u64{1} << rounds;
            for (u64 k = 0; k < t; k++) {
                AttemptRng local = attempt_rng(options.seed, 0x2000 + k);
                for (int rep = 0; rep < 8; rep++) {
                    check.require(semiclassical_ipe(Fraction(static_cast<i64>(k), static_cast<i64>(t)), rounds, local) == k,
                                  "dyadic phase not recovered exactly");
                    check.require(semiclassical_ipe(static_cast<double>(k) / static_cast<double>(t), rounds, local) == k,
                                  "dyadic phase (double) not recovered exactly");
                }
            }
        }
        results.push_back(finish("order_finding.ipe_distribution", check, "min chi-square p-value " + fmt(worst_p)));
    }

    {
        Check check;
        auto dist = exact_distribution(15, 2, 256);
        check.require(std::abs(dist.probabilities[0] - 59.0 / 225.0) <= 1e-12, "P(0) != 59/225");
        check.require(std::abs(dist.probabilities[64] - 54.0 / 225.0) <= 1e-12, "P(64) != 54/225");
        std::vector<std::pair<u64, u64>> cases = {{15, 2}};
        if (full) {
            cases.emplace_back(21, 2);
        }
        double worst_tv = 0.0;
        for (auto [n, a] : cases) {
            auto config = PhaseEstimationConfig::for_modulus(n, a);
            auto exact = exact_distribution(n, a, config.t());
            check.require(std::abs(exact.total() - 1.0) <= 1e-9, "distribution does not sum to 1");
            auto cs = sample_attempt_outcomes(config, 100000, options.seed, AttemptPath::Eigenphase, options.threads);
            double tv = total_variation(empirical_distribution(cs, config.t()), exact.probabilities);
            worst_tv = std::max(worst_tv, tv);
            check.require(tv <= 0.02, "eigenpath TV " + fmt(tv) + " at N=" + std::to_string(n));
        }
        results.push_back(finish("analysis.exact_distribution", check, "worst TV " + fmt(worst_tv)));
    }

    if (full) {
        Check check;
        double worst_tv = 0.0;
        for (auto [n, a] : std::vector<std::pair<u64, u64>>{{15, 2}, {21, 2}}) {
            auto config = PhaseEstimationConfig::for_modulus(n, a);
            auto eig = sample_attempt_outcomes(config, 100000, options.seed, AttemptPath::Eigenphase, options.threads);
            auto fai = sample_attempt_outcomes(config, 100000, options.seed + 1, AttemptPath::Faithful, options.threads);
            double tv = total_variation(empirical_distribution(eig, config.t()), empirical_distribution(fai, config.t()));
            worst_tv = std::max(worst_tv, tv);
            check.require(tv <= 0.02, "faithful/eigenpath TV " + fmt(tv) + " at N=" + std::to_string(n));
        }
        results.push_back(finish("order_finding.faithful_equivalence", check, "worst TV " + fmt(worst_tv)));
    }

    {
        Check check;
        std::size_t cases = 0;
        for (auto [p, q] : semiprimes_up_to(full ? 50 : 15)) {
            u64 n = p * q;
            for (u64 a = 2; a < n; a++) {
                if (gcd(a, n) != 1) {
                    continue;
                }
                cases++;
                u64 r = multiplicative_order(a, n);
                check.require(count_good_eigenvalues(n, a) == good_eigenvalues_closed_form(p, q, r),
                              "chi mismatch at N=" + std::to_string(n) + ", a=" + std::to_string(a));
            }
        }
        results.push_back(finish("analysis.chi_closed_form", check, std::to_string(cases) + " (N, a) pairs"));
    }

    {
        Check check;
        std::size_t cases = 0, violations = 0;
        std::string first;
        for (auto [p, q] : semiprimes_up_to(full ? 50 : 15)) {
            u64 n = p * q;
            for (u64 a = 2; a < n; a++) {
                if (gcd(a, n) != 1 || (!full && a != 2)) {
                    continue;
                }
                cases++;
                u64 chi = count_good_eigenvalues(n, a);
                u64 usable = count_usable_pairs(n, a);
                if (usable < num_c(chi, n)) {
                    if (violations++ == 0) {
                        first = "N=" + std::to_string(n) + ", a=" + std::to_string(a) + ": usable " +
                                std::to_string(usable) + " < " + std::to_string(num_c(chi, n));
                    }
                }
            }
        }
        check.require(violations == 0, std::to_string(violations) + " of " + std::to_string(cases) +
                                           " (N, a) pairs violate usable >= chi(2N-chi), first " + first);
        results.push_back(finish("analysis.usable_pairs_lower_bound", check, std::to_string(cases) + " (N, a) pairs"));
    }

    {
        Check check;
        std::vector<std::pair<u64, u64>> cases = {{15, 2}, {21, 2}};
        if (full) {
            cases.insert(cases.end(), {{33, 2}, {35, 2}, {35, 3}, {39, 2}});
        }
        std::string summary;
        for (auto [n, a] : cases) {
            auto [p, q] = *split_semiprime(n);
            auto config = PhaseEstimationConfig::for_modulus(n, a);
            double mass = good_outcome_mass(exact_distribution(n, a, config.t()), EigenphaseTable::make(n, a));
            double bound = success_lower_bound(n, p, q, a).value;
            check.require(mass >= bound, "good-outcome mass " + fmt(mass) + " below bound " + fmt(bound) +
                                             " at N=" + std::to_string(n));
            summary += "N=" + std::to_string(n) + ": " + fmt(mass) + ">=" + fmt(bound) + " ";
        }
        results.push_back(finish("analysis.success_bound", check, summary));
    }

    {
        Check check;
        auto u = UnitarySpec::mod_mul(2, 21);
        auto a = dqc1_sample(u, 50001, options.seed, SamplingOptions{1});
        auto b = dqc1_sample(u, 50001, options.seed, SamplingOptions{4});
        check.require(a.value == b.value && a.std_error == b.std_error, "standard sampling differs across threads");
        auto c = bb_dqc1_sample(u, 50001, options.seed, SamplingOptions{1});
        auto d = bb_dqc1_sample(u, 50001, options.seed, SamplingOptions{3});
        check.require(c.value == d.value && c.std_error == d.std_error, "black-box sampling differs across threads");
        FactorOptions fo;
        fo.seed = options.seed;
        fo.fixed_a = 2;
        fo.run_all_attempts = true;
        fo.attempt_cap = 200;
        fo.threads = 1;
        auto f1 = factor(21, fo);
        fo.threads = 4;
        auto f2 = factor(21, fo);
        bool same = f1.attempts.size() == f2.attempts.size();
        for (std::size_t i = 0; same && i < f1.attempts.size(); i++) {
            same = f1.attempts[i].c == f2.attempts[i].c && f1.attempts[i].order == f2.attempts[i].order;
        }
        check.require(same, "factoring records differ across threads");
        results.push_back(finish("reproducibility.parallel", check, "bit-identical across thread counts"));
    }

    return results;
}

}  // namespace dqc1sim
