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

#include "dqc1sim/order_finding.h"

#include <cmath>
#include <numbers>
#include <string>

#include "dqc1sim/errors.h"
#include "dqc1sim/parallel.h"
#include "dqc1sim/rng.h"

namespace dqc1sim {

namespace {

constexpr std::uint64_t kAttemptStream = 0x4154544d50545321ULL;
constexpr double kCollapseFloor = 1e-15;
constexpr double kPruneFloor = 1e-30;

/// Phase subtracted by the feedback rotation of round j (1-based):
/// sum_{k=1}^{j-1} m_{j-k} / 2^{k+1}.
double feedback_phase(const std::vector<int> &bits, std::size_t round) {
    double phase = 0.0;
    for (std::size_t k = 1; k < round; k++) {
        if (bits[round - k - 1]) {
            phase += std::ldexp(1.0, -static_cast<int>(k + 1));
        }
    }
    return phase;
}

int measure_control(double kicked_phase, AttemptRng &rng) {
    // After the Hadamard the control reads 1 with probability sin^2(pi psi).
    double s = std::sin(std::numbers::pi * kicked_phase);
    double p_one = s * s;
    if (p_one < kCollapseFloor) {
        return 0;
    }
    if (p_one > 1.0 - kCollapseFloor) {
        return 1;
    }
    return uniform01(rng) < p_one ? 1 : 0;
}

template <typename FracPowerFn>
u64 run_ipe(unsigned rounds, AttemptRng &rng, FracPowerFn frac_power) {
    if (rounds == 0 || rounds > 62) {
        throw Error(ErrorKind::InvalidArgument, "IPE needs 1..62 rounds");
    }
    std::vector<int> bits(rounds, 0);
    u64 c = 0;
    for (std::size_t j = 1; j <= rounds; j++) {
        unsigned power = rounds - static_cast<unsigned>(j);
        double psi = frac_power(power) - feedback_phase(bits, j);
        bits[j - 1] = measure_control(psi, rng);
        c |= static_cast<u64>(bits[j - 1]) << (j - 1);
    }
    return c;
}

void finish_record(AttemptRecord &rec, const PhaseEstimationConfig &config) {
    auto recovery = recover_order_detailed(rec.c, config.t(), config.a(), config.n());
    if (recovery) {
        rec.order = recovery->order;
        rec.order_recovered = true;
        rec.recovered_directly = recovery->direct;
        rec.factors = factor_from_order(config.a(), recovery->order, config.n());
    }
}

}  // namespace

EigenphaseTable EigenphaseTable::make(u64 n, u64 a) {
    if (n < 2) {
        throw Error(ErrorKind::InvalidArgument, "modulus must be at least 2");
    }
    EigenphaseTable table;
    table.n_ = n;
    table.a_ = a % n;
    table.order_ = multiplicative_order(a, n);
    constexpr auto kUnassigned = ~std::uint32_t{0};
    table.orbit_index_.assign(n, kUnassigned);
    for (u64 x = 0; x < n; x++) {
        if (table.orbit_index_[x] != kUnassigned) {
            continue;
        }
        Orbit orbit{x, 0, {}};
        u64 y = x;
        do {
            table.orbit_index_[y] = static_cast<std::uint32_t>(table.orbits_.size());
            orbit.members.push_back(y);
            y = mul_mod(y, table.a_, n);
        } while (y != x);
        orbit.length = orbit.members.size();
        table.orbits_.push_back(std::move(orbit));
    }
    return table;
}

std::map<Fraction, u64> EigenphaseTable::phase_multiplicities() const {
    std::map<Fraction, u64> out;
    for (const auto &orbit : orbits_) {
        for (u64 j = 0; j < orbit.length; j++) {
            out[Fraction(static_cast<i64>(j), static_cast<i64>(orbit.length))]++;
        }
    }
    return out;
}

EigenphaseSample eigenphase_sample(const EigenphaseTable &table, AttemptRng &rng) {
    u64 x = uniform_below(rng, table.n());
    u64 len = table.orbit_of(x).length;
    u64 j = uniform_below(rng, len);
    return EigenphaseSample{x, len, j};
}

PhaseEstimationConfig PhaseEstimationConfig::for_modulus(u64 n, u64 a) {
    if (n < 2 || n > (u64{1} << 30)) {
        throw Error(ErrorKind::InvalidArgument, "modulus out of range");
    }
    unsigned rounds = 0;
    while ((u64{1} << rounds) < n * n) {
        rounds++;
    }
    return make(n, a, rounds);
}

PhaseEstimationConfig PhaseEstimationConfig::make(u64 n, u64 a, unsigned rounds) {
    if (n < 2 || n > (u64{1} << 30)) {
        throw Error(ErrorKind::InvalidArgument, "modulus out of range");
    }
    if (gcd(a % n, n) != 1) {
        throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(a) + ", " + std::to_string(n) +
                                               ") = " + std::to_string(gcd(a % n, n)));
    }
    if (rounds >= 63 || (u64{1} << rounds) < n * n || (u64{1} << rounds) > 2 * n * n) {
        throw Error(ErrorKind::BadT, "t = 2^" + std::to_string(rounds) + " is outside [N^2, 2N^2] for N = " +
                                         std::to_string(n));
    }
    return PhaseEstimationConfig(n, a % n, rounds);
}

u64 semiclassical_ipe(double phi, unsigned rounds, AttemptRng &rng) {
    return run_ipe(rounds, rng, [phi](unsigned power) {
        double scaled = std::ldexp(phi, static_cast<int>(power));
        return scaled - std::floor(scaled);
    });
}

u64 semiclassical_ipe(const Fraction &phi, unsigned rounds, AttemptRng &rng) {
    Fraction reduced = phi.mod_one();
    auto num = static_cast<u64>(reduced.num());
    auto den = static_cast<u64>(reduced.den());
    return run_ipe(rounds, rng, [num, den](unsigned power) {
        u64 scaled = mul_mod(num, mod_pow(2, power, den), den);
        return static_cast<double>(scaled) / static_cast<double>(den);
    });
}

BranchState::BranchState(Key initial) {
    amps_.emplace(initial, Complex(1.0, 0.0));
}

double BranchState::norm_squared() const {
    double total = 0.0;
    for (const auto &[key, amp] : amps_) {
        total += std::norm(amp);
    }
    return total;
}

int BranchState::apply_round(u64 multiplier, u64 modulus, double feedback_phase, AttemptRng &rng) {
    // Control |0>: U on register 1. Control |1>: the swapped-in register 2
    // receives U. The |1> branch also picks up the feedback rotation.
    Complex feedback = std::polar(1.0, -2.0 * std::numbers::pi * feedback_phase);
    std::map<Key, Complex> zero_branch;
    std::map<Key, Complex> one_branch;
    for (const auto &[key, amp] : amps_) {
        Key via_first{mul_mod(key.first, multiplier, modulus), key.second};
        Key via_second{key.first, mul_mod(key.second, multiplier, modulus)};
        Complex a = 0.5 * amp;
        Complex b = 0.5 * feedback * amp;
        zero_branch[via_first] += a;
        zero_branch[via_second] += b;
        one_branch[via_first] += a;
        one_branch[via_second] -= b;
    }
    auto weight = [](const std::map<Key, Complex> &m) {
        double w = 0.0;
        for (const auto &[key, amp] : m) {
            w += std::norm(amp);
        }
        return w;
    };
    double p_zero = weight(zero_branch);
    double p_one = weight(one_branch);
    double total = p_zero + p_one;
    p_one /= total;

    int bit;
    if (p_one < kCollapseFloor) {
        bit = 0;
    } else if (p_one > 1.0 - kCollapseFloor) {
        bit = 1;
    } else {
        bit = uniform01(rng) < p_one ? 1 : 0;
    }

    std::map<Key, Complex> &kept = bit ? one_branch : zero_branch;
    double scale = 1.0 / std::sqrt(weight(kept));
    amps_.clear();
    for (const auto &[key, amp] : kept) {
        if (std::norm(amp) > kPruneFloor) {
            amps_.emplace(key, amp * scale);
        }
    }
    return bit;
}

AttemptRecord run_attempt_with_phases(const PhaseEstimationConfig &config, const Fraction &first,
                                      const Fraction &second, AttemptRng &rng) {
    AttemptRecord rec;
    rec.path = AttemptPath::Eigenphase;
    rec.a = config.a();
    rec.c = semiclassical_ipe((first - second).mod_one(), config.rounds(), rng);
    finish_record(rec, config);
    return rec;
}

AttemptRecord run_attempt_eigenpath(const PhaseEstimationConfig &config, const EigenphaseTable &table,
                                    AttemptRng &rng) {
    if (table.n() != config.n() || table.a() != config.a()) {
        throw Error(ErrorKind::DimMismatch, "eigenphase table does not match the configuration");
    }
    EigenphaseSample first = eigenphase_sample(table, rng);
    EigenphaseSample second = eigenphase_sample(table, rng);
    AttemptRecord rec = run_attempt_with_phases(config, first.phase(), second.phase(), rng);
    rec.first = first;
    rec.second = second;
    return rec;
}

AttemptRecord run_attempt_eigenpath(const PhaseEstimationConfig &config, AttemptRng &rng) {
    return run_attempt_eigenpath(config, EigenphaseTable::make(config.n(), config.a()), rng);
}

AttemptRecord run_attempt_faithful(const PhaseEstimationConfig &config, u64 x, u64 y, AttemptRng &rng) {
    u64 n = config.n();
    if (x >= n || y >= n) {
        throw Error(ErrorKind::InvalidArgument, "register values must lie in [0, N)");
    }
    std::size_t support_bound = orbit_length(x, config.a(), n) * orbit_length(y, config.a(), n);

    AttemptRecord rec;
    rec.path = AttemptPath::Faithful;
    rec.a = config.a();
    rec.registers = std::pair{x, y};

    unsigned rounds = config.rounds();
    // multipliers[p] = a^(2^p) mod N
    std::vector<u64> multipliers(rounds);
    u64 m = config.a();
    for (unsigned p = 0; p < rounds; p++) {
        multipliers[p] = m;
        m = mul_mod(m, m, n);
    }

    BranchState state({x, y});
    rec.max_support = state.support();
    std::vector<int> bits(rounds, 0);
    for (std::size_t j = 1; j <= rounds; j++) {
        unsigned power = rounds - static_cast<unsigned>(j);
        bits[j - 1] = state.apply_round(multipliers[power], n, feedback_phase(bits, j), rng);
        rec.c |= static_cast<u64>(bits[j - 1]) << (j - 1);
        rec.max_support = std::max(rec.max_support, state.support());
        if (state.support() > support_bound) {
            throw Error(ErrorKind::StateBlowup, "support " + std::to_string(state.support()) +
                                                    " exceeds orbit product " + std::to_string(support_bound));
        }
    }
    finish_record(rec, config);
    return rec;
}

AttemptRecord run_attempt_faithful(const PhaseEstimationConfig &config, AttemptRng &rng) {
    u64 x = uniform_below(rng, config.n());
    u64 y = uniform_below(rng, config.n());
    return run_attempt_faithful(config, x, y, rng);
}

AttemptRng attempt_rng(std::uint64_t seed, std::uint64_t index) {
    return AttemptRng(derive_seed(seed, kAttemptStream, index));
}

std::vector<u64> sample_attempt_outcomes(const PhaseEstimationConfig &config, std::size_t samples,
                                         std::uint64_t seed, AttemptPath path, unsigned threads) {
    auto table = EigenphaseTable::make(config.n(), config.a());
    std::vector<u64> out(samples);
    for_each_chunk(samples, 4096, threads, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; i++) {
            AttemptRng rng = attempt_rng(seed, i);
            out[i] = path == AttemptPath::Faithful ? run_attempt_faithful(config, rng).c
                                                   : run_attempt_eigenpath(config, table, rng).c;
        }
    });
    return out;
}

void check_factoring_input(u64 n) {
    if (n < 4 || is_prime(n)) {
        throw Error(ErrorKind::NotComposite, std::to_string(n) + " is not composite");
    }
    if (n % 2 == 0) {
        throw Error(ErrorKind::EvenInput, std::to_string(n) + " is even");
    }
    if (auto base = perfect_power_base(n); base && factorize(n).size() == 1) {
        throw Error(ErrorKind::PrimePower, std::to_string(n) + " is a prime power");
    }
}

FactoringResult factor(u64 n, const FactorOptions &options) {
    check_factoring_input(n);
    if (options.fixed_a) {
        u64 a = *options.fixed_a;
        if (a <= 1 || a >= n) {
            throw Error(ErrorKind::InvalidArgument, "a must satisfy 1 < a < N");
        }
    }
    if (options.attempt_cap == 0) {
        throw Error(ErrorKind::InvalidArgument, "attempt cap must be positive");
    }

    FactoringResult result;
    result.n = n;

    auto run_one = [&](std::uint64_t index) {
        AttemptRng rng = attempt_rng(options.seed, index);
        u64 a;
        if (options.fixed_a) {
            a = *options.fixed_a;
        } else {
            a = 2 + uniform_below(rng, n - 2);
            while (!options.classical_shortcut && gcd(a, n) != 1) {
                a = 2 + uniform_below(rng, n - 2);
            }
        }
        u64 g = gcd(a, n);
        if (g != 1) {
            AttemptRecord rec;
            rec.a = a;
            rec.classical_shortcut = true;
            rec.factors = std::pair{std::min(g, n / g), std::max(g, n / g)};
            return rec;
        }
        auto config = PhaseEstimationConfig::for_modulus(n, a);
        if (options.path == AttemptPath::Faithful) {
            return run_attempt_faithful(config, rng);
        }
        return run_attempt_eigenpath(config, rng);
    };

    constexpr std::size_t kBatch = 64;
    std::size_t next = 0;
    bool done = false;
    while (!done && next < options.attempt_cap) {
        std::size_t batch = std::min(kBatch, options.attempt_cap - next);
        std::vector<AttemptRecord> records(batch);
        for_each_chunk(batch, 1, options.threads, [&](std::size_t, std::size_t begin, std::size_t) {
            records[begin] = run_one(next + begin);
        });
        for (auto &rec : records) {
            result.attempts.push_back(rec);
            if (!rec.classical_shortcut) {
                result.circuit_attempts++;
                result.orders_recovered += rec.order_recovered;
                result.orders_recovered_directly += rec.recovered_directly;
                result.factor_successes += rec.factors.has_value();
            }
            if (rec.factors && !result.factors) {
                result.factors = rec.factors;
            }
            if (result.factors && !options.run_all_attempts) {
                done = true;
                break;
            }
        }
        next += batch;
    }
    if (!result.factors) {
        throw Error(ErrorKind::AttemptCapExceeded,
                    "no factor of " + std::to_string(n) + " after " + std::to_string(options.attempt_cap) + " attempts");
    }
    return result;
}

}  // namespace dqc1sim
