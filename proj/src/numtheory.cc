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

#include "dqc1sim/numtheory.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "dqc1sim/errors.h"

namespace dqc1sim {

namespace {

i64 igcd(i64 a, i64 b) {
    return std::gcd(a, b);
}

void require_coprime(u64 a, u64 modulus) {
    u64 g = gcd(a % modulus, modulus);
    if (g != 1) {
        throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(a) + ", " + std::to_string(modulus) +
                                               ") = " + std::to_string(g));
    }
}

}  // namespace

Fraction::Fraction(i64 num, i64 den) {
    if (den == 0) {
        throw Error(ErrorKind::InvalidArgument, "zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i64 g = igcd(num, den);
    if (g == 0) {
        g = 1;
    }
    num_ = num / g;
    den_ = den / g;
}

Fraction Fraction::mod_one() const {
    i64 r = num_ % den_;
    if (r < 0) {
        r += den_;
    }
    return Fraction(r, den_);
}

std::string Fraction::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Fraction operator+(const Fraction &a, const Fraction &b) {
    i64 l = std::lcm(a.den_, b.den_);
    return Fraction(a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l);
}

Fraction operator-(const Fraction &a, const Fraction &b) {
    return a + Fraction(-b.num_, b.den_);
}

std::strong_ordering operator<=>(const Fraction &a, const Fraction &b) {
    using i128 = __int128;
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    if (lhs < rhs) {
        return std::strong_ordering::less;
    }
    if (lhs > rhs) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

Semiprime Semiprime::make(u64 n, std::optional<std::pair<u64, u64>> factors) {
    if (n < 2) {
        throw Error(ErrorKind::InvalidArgument, "N must be at least 2");
    }
    if (factors) {
        auto [p, q] = *factors;
        if (p * q != n || !is_prime(p) || !is_prime(q)) {
            throw Error(ErrorKind::BadFactorization,
                        std::to_string(p) + " * " + std::to_string(q) + " is not a prime factorization of " +
                            std::to_string(n));
        }
    }
    return Semiprime{n, factors};
}

u64 gcd(u64 a, u64 b) {
    return std::gcd(a, b);
}

u64 mul_mod(u64 a, u64 b, u64 modulus) {
    using u128 = unsigned __int128;
    return static_cast<u64>(static_cast<u128>(a) * b % modulus);
}

u64 mod_pow(u64 base, u64 exponent, u64 modulus) {
    if (modulus == 1) {
        return 0;
    }
    u64 result = 1;
    base %= modulus;
    while (exponent > 0) {
        if (exponent & 1) {
            result = mul_mod(result, base, modulus);
        }
        base = mul_mod(base, base, modulus);
        exponent >>= 1;
    }
    return result;
}

bool is_prime(u64 n) {
    if (n < 2) {
        return false;
    }
    for (u64 k = 2; k * k <= n; k++) {
        if (n % k == 0) {
            return false;
        }
    }
    return true;
}

u64 multiplicative_order(u64 a, u64 modulus) {
    if (modulus < 2) {
        throw Error(ErrorKind::InvalidArgument, "modulus must be at least 2");
    }
    require_coprime(a, modulus);
    u64 base = a % modulus;
    u64 x = base;
    u64 r = 1;
    while (x != 1) {
        x = mul_mod(x, base, modulus);
        r++;
    }
    return r;
}

u64 orbit_length(u64 x, u64 a, u64 modulus) {
    if (modulus < 1) {
        throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
    }
    require_coprime(a, modulus);
    x %= modulus;
    u64 base = a % modulus;
    u64 y = mul_mod(x, base, modulus);
    u64 len = 1;
    while (y != x) {
        y = mul_mod(y, base, modulus);
        len++;
    }
    return len;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 p = 2; p * p <= n; p++) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                e++;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) {
        out.emplace_back(n, 1);
    }
    return out;
}

u64 euler_totient(u64 n) {
    if (n == 0) {
        throw Error(ErrorKind::InvalidArgument, "totient of 0");
    }
    u64 result = n;
    for (auto [p, e] : factorize(n)) {
        result = result / p * (p - 1);
    }
    return result;
}

std::optional<std::pair<u64, u64>> split_semiprime(u64 n) {
    auto f = factorize(n);
    if (f.size() == 2 && f[0].second == 1 && f[1].second == 1) {
        return std::pair{f[0].first, f[1].first};
    }
    return std::nullopt;
}

std::optional<u64> perfect_power_base(u64 n) {
    auto f = factorize(n);
    if (f.empty()) {
        return std::nullopt;
    }
    unsigned g = 0;
    for (auto [p, e] : f) {
        g = std::gcd(g, e);
    }
    if (g < 2) {
        return std::nullopt;
    }
    u64 base = 1;
    for (auto [p, e] : f) {
        for (unsigned k = 0; k < e / g; k++) {
            base *= p;
        }
    }
    return base;
}

std::vector<Fraction> convergents(u64 c, u64 t, u64 max_den) {
    if (t == 0 || c >= t) {
        throw Error(ErrorKind::InvalidArgument, "convergents require 0 <= c < t");
    }
    std::vector<Fraction> out;
    // h/k recurrences: h_{-1}=1, h_{-2}=0, k_{-1}=0, k_{-2}=1.
    i64 h_prev = 0, h = 1;
    i64 k_prev = 1, k = 0;
    u64 num = c, den = t;
    while (den != 0) {
        u64 q = num / den;
        u64 rem = num - q * den;
        i64 h_next = static_cast<i64>(q) * h + h_prev;
        i64 k_next = static_cast<i64>(q) * k + k_prev;
        if (static_cast<u64>(k_next) > max_den) {
            break;
        }
        out.emplace_back(h_next, k_next);
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
        num = den;
        den = rem;
    }
    return out;
}

std::optional<OrderRecovery> recover_order_detailed(u64 c, u64 t, u64 a, u64 modulus) {
    std::set<u64> direct;
    for (const auto &f : convergents(c, t, modulus)) {
        direct.insert(static_cast<u64>(f.den()));
    }
    std::set<u64> candidates;
    for (u64 q : direct) {
        u64 max_m = (modulus + q - 1) / q;
        for (u64 m = 1; m <= max_m && m * q <= modulus; m++) {
            candidates.insert(m * q);
        }
    }
    for (u64 cand : candidates) {
        if (mod_pow(a, cand, modulus) == 1) {
            return OrderRecovery{cand, direct.contains(cand)};
        }
    }
    return std::nullopt;
}

std::optional<std::pair<u64, u64>> factor_from_order(u64 a, u64 r, u64 modulus) {
    if (r % 2 != 0) {
        return std::nullopt;
    }
    u64 half = mod_pow(a, r / 2, modulus);
    if (half == modulus - 1) {
        return std::nullopt;
    }
    u64 g1 = gcd((half + modulus - 1) % modulus, modulus);
    u64 g2 = gcd((half + 1) % modulus, modulus);
    auto nontrivial = [&](u64 g) { return g > 1 && g < modulus; };
    if (!nontrivial(g1) || !nontrivial(g2)) {
        return std::nullopt;
    }
    return std::pair{std::min(g1, g2), std::max(g1, g2)};
}

}  // namespace dqc1sim
