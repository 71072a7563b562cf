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

#include "dqc1sim/analysis.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "dqc1sim/errors.h"

namespace dqc1sim {

namespace {

using i128 = __int128;

i128 floor_mod(i128 x, i128 m) {
    i128 r = x % m;
    return r < 0 ? r + m : r;
}

void require_window(u64 n, u64 t) {
    if (t == 0 || (t & (t - 1)) != 0) {
        throw Error(ErrorKind::BadT, "t = " + std::to_string(t) + " is not a power of two");
    }
    if (t < n * n || t > 2 * n * n) {
        throw Error(ErrorKind::BadT, "t = " + std::to_string(t) + " is outside [N^2, 2N^2] for N = " +
                                         std::to_string(n));
    }
}

}  // namespace

double fejer_kernel(double delta, u64 t) {
    double td = static_cast<double>(t);
    double nearest = std::round(delta);
    if (delta == nearest) {
        return td * td;
    }
    double num = std::sin(std::numbers::pi * td * delta);
    double den = std::sin(std::numbers::pi * delta);
    return num * num / (den * den);
}

double fejer_kernel_at(const Fraction &phase, u64 c, u64 t) {
    // delta = phase - c/t = k / (d t)
    i128 d = phase.den();
    i128 k = static_cast<i128>(phase.num()) * static_cast<i128>(t) - static_cast<i128>(c) * d;
    i128 dt = d * static_cast<i128>(t);
    double td = static_cast<double>(t);
    if (floor_mod(k, dt) == 0) {
        return td * td;
    }
    if (floor_mod(k, d) == 0) {
        return 0.0;
    }
    double num = std::sin(std::numbers::pi * static_cast<double>(floor_mod(k, 2 * d)) / static_cast<double>(d));
    double den = std::sin(std::numbers::pi * static_cast<double>(floor_mod(k, 2 * dt)) / static_cast<double>(dt));
    return num * num / (den * den);
}

double OutcomeDistribution::total() const {
    double s = 0.0;
    for (double p : probabilities) {
        s += p;
    }
    return s;
}

std::string OutcomeDistribution::to_csv() const {
    std::ostringstream out;
    out.precision(17);
    out << "c,probability\n";
    for (std::size_t c = 0; c < probabilities.size(); c++) {
        out << c << ',' << probabilities[c] << '\n';
    }
    return out.str();
}

std::map<Fraction, u64> phase_difference_multiplicities(const EigenphaseTable &table) {
    auto phases = table.phase_multiplicities();
    std::map<Fraction, u64> out;
    for (const auto &[p1, m1] : phases) {
        for (const auto &[p2, m2] : phases) {
            out[(p1 - p2).mod_one()] += m1 * m2;
        }
    }
    return out;
}

OutcomeDistribution exact_distribution(u64 n, u64 a, u64 t) {
    auto table = EigenphaseTable::make(n, a);
    require_window(n, t);
    auto diffs = phase_difference_multiplicities(table);

    OutcomeDistribution dist;
    dist.n = n;
    dist.a = table.a();
    dist.t = t;
    dist.probabilities.assign(t, 0.0);
    double norm = static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(t) * static_cast<double>(t);
    for (u64 c = 0; c < t; c++) {
        double acc = 0.0;
        for (const auto &[delta, mult] : diffs) {
            acc += static_cast<double>(mult) * fejer_kernel_at(delta, c, t);
        }
        dist.probabilities[c] = acc / norm;
    }
    return dist;
}

u64 count_good_eigenvalues(u64 n, u64 a) {
    auto table = EigenphaseTable::make(n, a);
    u64 r = table.order();
    u64 count = 0;
    for (const auto &orbit : table.orbits()) {
        if (gcd(orbit.representative, n) != 1 || orbit.length != r) {
            continue;
        }
        for (u64 j = 0; j < orbit.length; j++) {
            count += gcd(j, r) == 1;
        }
    }
    return count;
}

u64 good_eigenvalues_closed_form(u64 p, u64 q, u64 r) {
    return euler_totient(r) * (p - 1) * (q - 1) / r;
}

u64 num_c(u64 chi, u64 n) {
    return chi * (2 * n - chi);
}

bool is_usable_difference(const Fraction &delta, u64 r) {
    return static_cast<u64>(delta.mod_one().den()) == r;
}

u64 count_usable_pairs(u64 n, u64 a) {
    auto table = EigenphaseTable::make(n, a);
    u64 count = 0;
    for (const auto &[delta, mult] : phase_difference_multiplicities(table)) {
        if (is_usable_difference(delta, table.order())) {
            count += mult;
        }
    }
    return count;
}

SuccessBound success_lower_bound(u64 n, u64 p, u64 q, u64 a) {
    Semiprime::make(n, std::pair{p, q});
    u64 r = multiplicative_order(a, n);
    double value = 4.0 / (static_cast<double>(n) * std::numbers::pi * std::numbers::pi) *
                   static_cast<double>((p - 1) * (q - 1)) * static_cast<double>(euler_totient(r)) /
                   static_cast<double>(r);
    return SuccessBound{value, 4.0 / (std::numbers::pi * std::numbers::pi)};
}

double two_register_success(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "probability must lie in [0, 1]");
    }
    return p * (2.0 - p);
}

double expected_runs_estimate(u64 n, u64 p, u64 q, u64 r) {
    Semiprime::make(n, std::pair{p, q});
    if (r < 2) {
        throw Error(ErrorKind::InvalidArgument, "order must be at least 2");
    }
    return static_cast<double>(p * q) / static_cast<double>((p - 1) * (q - 1)) *
           std::log(std::log(static_cast<double>(r)));
}

double good_outcome_mass(const OutcomeDistribution &dist, const EigenphaseTable &table) {
    std::vector<Fraction> usable;
    for (const auto &[delta, mult] : phase_difference_multiplicities(table)) {
        if (is_usable_difference(delta, table.order())) {
            usable.push_back(delta);
        }
    }
    double mass = 0.0;
    auto t = static_cast<i128>(dist.t);
    for (u64 c = 0; c < dist.t; c++) {
        bool good = false;
        for (const auto &delta : usable) {
            i128 d = delta.den();
            i128 k = static_cast<i128>(delta.num()) * t - static_cast<i128>(c) * d;
            // |delta - c/t - s| <= 1/(2t) for some integer s <=> |k - s d t| * 2 <= d
            for (i128 s = -1; s <= 1 && !good; s++) {
                i128 diff = k - s * d * t;
                if (diff < 0) {
                    diff = -diff;
                }
                good = 2 * diff <= d;
            }
            if (good) {
                break;
            }
        }
        if (good) {
            mass += dist.probabilities[c];
        }
    }
    return mass;
}

u64 count_short_orbit_values(const EigenphaseTable &table) {
    u64 count = 0;
    for (const auto &orbit : table.orbits()) {
        if (orbit.length != table.order()) {
            count += orbit.length;
        }
    }
    return count;
}

CountingReport counting_report(u64 n, u64 a) {
    auto config = PhaseEstimationConfig::for_modulus(n, a);
    auto table = EigenphaseTable::make(n, a);
    CountingReport rep;
    rep.n = n;
    rep.a = table.a();
    rep.t = config.t();
    rep.r = table.order();
    rep.chi = count_good_eigenvalues(n, a);
    rep.num_c = num_c(rep.chi, n);
    rep.usable_pairs = count_usable_pairs(n, a);
    rep.usable_bound_holds = rep.usable_pairs >= rep.num_c;
    rep.single_register_fraction = static_cast<double>(rep.chi) / static_cast<double>(n);
    rep.two_register_success = two_register_success(rep.single_register_fraction);
    rep.good_outcome_mass = good_outcome_mass(exact_distribution(n, a, config.t()), table);
    rep.short_orbit_values = count_short_orbit_values(table);

    rep.factors = split_semiprime(n);
    if (rep.factors) {
        auto [p, q] = *rep.factors;
        rep.chi_closed_form = good_eigenvalues_closed_form(p, q, rep.r);
        rep.bound_lower = success_lower_bound(n, p, q, a).value;
        if (rep.r >= 2) {
            rep.expected_runs = expected_runs_estimate(n, p, q, rep.r);
        }
        rep.short_orbit_limit = p + q - 1;
        rep.short_orbit_warning = rep.short_orbit_values > p + q - 1;
    }
    return rep;
}

}  // namespace dqc1sim
