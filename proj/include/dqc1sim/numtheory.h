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

#ifndef DQC1SIM_NUMTHEORY_H
#define DQC1SIM_NUMTHEORY_H

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dqc1sim {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Rational number kept in lowest terms with a positive denominator.
class Fraction {
   public:
    Fraction() = default;
    Fraction(i64 num, i64 den);

    i64 num() const {
        return num_;
    }
    i64 den() const {
        return den_;
    }
    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// Representative of this value mod 1, in [0, 1).
    Fraction mod_one() const;

    std::string str() const;

    friend Fraction operator+(const Fraction &a, const Fraction &b);
    friend Fraction operator-(const Fraction &a, const Fraction &b);
    friend bool operator==(const Fraction &a, const Fraction &b) = default;
    friend std::strong_ordering operator<=>(const Fraction &a, const Fraction &b);

   private:
    i64 num_ = 0;
    i64 den_ = 1;
};

/// A number to factor, optionally with its known prime factors (analysis only).
struct Semiprime {
    u64 n;
    std::optional<std::pair<u64, u64>> factors;

    /// Validates N >= 2 and, if factors are given, p*q == N with both prime.
    static Semiprime make(u64 n, std::optional<std::pair<u64, u64>> factors = std::nullopt);
};

u64 gcd(u64 a, u64 b);
u64 mul_mod(u64 a, u64 b, u64 modulus);
u64 mod_pow(u64 base, u64 exponent, u64 modulus);
bool is_prime(u64 n);

/// Smallest r > 0 with a^r = 1 mod N. Throws NotCoprime when gcd(a, N) > 1.
u64 multiplicative_order(u64 a, u64 modulus);

/// Smallest t > 0 with x*a^t = x mod N, i.e. the length of the cycle of x
/// under multiplication by a. Always divides multiplicative_order(a, N).
u64 orbit_length(u64 x, u64 a, u64 modulus);

u64 euler_totient(u64 n);

/// Prime factorization by trial division as (prime, exponent) pairs.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

/// Returns (p, q) with p < q when n is a product of two distinct primes.
std::optional<std::pair<u64, u64>> split_semiprime(u64 n);

/// If n = b^k for some k >= 2 returns b (smallest such base); otherwise nullopt.
std::optional<u64> perfect_power_base(u64 n);

/// Continued-fraction convergents of c/t with denominator <= max_den,
/// in strictly increasing denominator order. Requires 0 <= c < t.
std::vector<Fraction> convergents(u64 c, u64 t, u64 max_den);

struct OrderRecovery {
    u64 order;
    /// The order itself appeared as a convergent denominator, without
    /// falling back to multiples.
    bool direct;
};

/// Order recovery from a phase-estimation outcome c/t.
///
/// Candidates are the convergent denominators q <= N of c/t together with
/// their multiples m*q <= N; the smallest candidate with a^cand = 1 mod N is
/// returned. The smallest passing candidate is necessarily the order.
std::optional<OrderRecovery> recover_order_detailed(u64 c, u64 t, u64 a, u64 modulus);

inline std::optional<u64> recover_order(u64 c, u64 t, u64 a, u64 modulus) {
    auto rec = recover_order_detailed(c, t, a, modulus);
    if (!rec) {
        return std::nullopt;
    }
    return rec->order;
}

/// gcd(a^{r/2} - 1, N), gcd(a^{r/2} + 1, N) when r is even, a^{r/2} != -1 and
/// both gcds are nontrivial. The pair is ordered (smaller, larger).
std::optional<std::pair<u64, u64>> factor_from_order(u64 a, u64 r, u64 modulus);

}  // namespace dqc1sim

#endif
