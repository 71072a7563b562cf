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

#include <gtest/gtest.h>

#include <algorithm>

#include "dqc1sim/errors.h"

using namespace dqc1sim;

TEST(Fraction, ReducesAndNormalizesSign) {
    Fraction f(6, -8);
    EXPECT_EQ(f.num(), -3);
    EXPECT_EQ(f.den(), 4);
    EXPECT_EQ(f.mod_one(), Fraction(1, 4));
    EXPECT_EQ(Fraction(5, 4).mod_one(), Fraction(1, 4));
    EXPECT_EQ(Fraction(1, 4) - Fraction(1, 2), Fraction(-1, 4));
    EXPECT_EQ(Fraction(1, 3) + Fraction(1, 6), Fraction(1, 2));
    EXPECT_LT(Fraction(1, 3), Fraction(1, 2));
    EXPECT_EQ(Fraction(3, 4).str(), "3/4");
    EXPECT_THROW(Fraction(1, 0), Error);
}

TEST(ModPow, Examples) {
    EXPECT_EQ(mod_pow(2, 4, 15), 1u);
    EXPECT_EQ(mod_pow(7, 0, 15), 1u);
    EXPECT_EQ(mod_pow(7, 2, 15), 4u);
    EXPECT_EQ(mod_pow(3, 1000000006, 1000000007), 1u);
}

TEST(ModPow, LargeModulusDoesNotOverflow) {
    const u64 p = 18446744073709551557ULL;  // largest 64-bit prime
    EXPECT_EQ(mod_pow(2, p - 1, p), 1u);
    EXPECT_EQ(mul_mod(p - 1, p - 1, p), 1u);
}

TEST(MultiplicativeOrder, Examples) {
    EXPECT_EQ(multiplicative_order(2, 15), 4u);
    EXPECT_EQ(multiplicative_order(4, 15), 2u);
    EXPECT_EQ(multiplicative_order(2, 21), 6u);
    try {
        multiplicative_order(3, 15);
        FAIL() << "expected NotCoprime";
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotCoprime);
    }
}

TEST(MultiplicativeOrder, MatchesBruteForce) {
    for (u64 n = 2; n <= 120; n++) {
        for (u64 a = 1; a < n; a++) {
            if (gcd(a, n) != 1) {
                continue;
            }
            u64 r = 1, x = a % n;
            while (x != 1 % n) {
                x = x * a % n;
                r++;
            }
            ASSERT_EQ(multiplicative_order(a, n), r) << a << " mod " << n;
        }
    }
}

TEST(OrbitLength, Examples) {
    EXPECT_EQ(orbit_length(5, 2, 15), 2u);
    EXPECT_EQ(orbit_length(0, 2, 15), 1u);
    EXPECT_EQ(orbit_length(0, 7, 33), 1u);
    EXPECT_EQ(orbit_length(7, 2, 15), 4u);
}

TEST(OrbitLength, DividesOrderAndEqualsItOnUnits) {
    for (u64 n : {15u, 21u, 33u, 35u, 39u}) {
        for (u64 a = 2; a < n; a++) {
            if (gcd(a, n) != 1) {
                continue;
            }
            u64 r = multiplicative_order(a, n);
            for (u64 x = 0; x < n; x++) {
                u64 len = orbit_length(x, a, n);
                EXPECT_EQ(r % len, 0u);
                if (gcd(x, n) == 1) {
                    EXPECT_EQ(len, r);
                }
            }
        }
    }
}

TEST(EulerTotient, Examples) {
    EXPECT_EQ(euler_totient(4), 2u);
    EXPECT_EQ(euler_totient(1), 1u);
    EXPECT_EQ(euler_totient(6), 2u);
    EXPECT_EQ(euler_totient(12), 4u);
    for (u64 n = 1; n <= 200; n++) {
        u64 count = 0;
        for (u64 k = 1; k <= n; k++) {
            count += gcd(k, n) == 1;
        }
        ASSERT_EQ(euler_totient(n), count) << n;
    }
}

TEST(Factorize, SemiprimeAndPrimePower) {
    auto pq = split_semiprime(35);
    ASSERT_TRUE(pq.has_value());
    EXPECT_EQ(pq->first, 5u);
    EXPECT_EQ(pq->second, 7u);
    EXPECT_FALSE(split_semiprime(9).has_value());
    EXPECT_FALSE(split_semiprime(30).has_value());
    EXPECT_FALSE(split_semiprime(13).has_value());
    EXPECT_EQ(perfect_power_base(27), std::optional<u64>(3));
    EXPECT_FALSE(perfect_power_base(15).has_value());
    EXPECT_THROW(Semiprime::make(15, std::pair<u64, u64>{3, 7}), Error);
    EXPECT_EQ(Semiprime::make(15, std::pair<u64, u64>{3, 5}).n, 15u);
}

TEST(Convergents, Examples) {
    auto cf = convergents(64, 256, 15);
    ASSERT_EQ(cf.size(), 2u);
    EXPECT_EQ(cf[0], Fraction(0, 1));
    EXPECT_EQ(cf[1], Fraction(1, 4));

    cf = convergents(0, 256, 15);
    ASSERT_EQ(cf.size(), 1u);
    EXPECT_EQ(cf[0], Fraction(0, 1));

    cf = convergents(85, 256, 15);
    EXPECT_NE(std::find(cf.begin(), cf.end(), Fraction(1, 3)), cf.end());
}

TEST(Convergents, DenominatorsNonDecreasingAndCapped) {
    for (u64 c = 0; c < 512; c++) {
        auto cf = convergents(c, 512, 21);
        for (std::size_t i = 0; i < cf.size(); i++) {
            EXPECT_LE(cf[i].den(), 21);
            if (i == 1) {
                // 0/1 is followed by 1/1 when c/t > 1/2
                EXPECT_GE(cf[i].den(), cf[i - 1].den());
            } else if (i > 1) {
                EXPECT_GT(cf[i].den(), cf[i - 1].den());
            }
        }
    }
}

TEST(RecoverOrder, Examples) {
    EXPECT_EQ(recover_order(64, 256, 2, 15), std::optional<u64>(4));
    EXPECT_EQ(recover_order(0, 256, 2, 15), std::optional<u64>(4));
    EXPECT_EQ(recover_order(128, 256, 2, 15), std::optional<u64>(4));

    auto direct = recover_order_detailed(64, 256, 2, 15);
    ASSERT_TRUE(direct.has_value());
    EXPECT_TRUE(direct->direct);
    auto rescued = recover_order_detailed(128, 256, 2, 15);
    ASSERT_TRUE(rescued.has_value());
    EXPECT_FALSE(rescued->direct);
}

TEST(RecoverOrder, AlwaysReturnsTheTrueOrder) {
    // Any candidate that passes a^k = 1 and is minimal must be r itself.
    for (u64 c = 0; c < 512; c += 7) {
        auto got = recover_order(c, 512, 2, 21);
        ASSERT_TRUE(got.has_value());
        EXPECT_EQ(*got, 6u);
    }
}

TEST(FactorFromOrder, Examples) {
    EXPECT_EQ(factor_from_order(2, 4, 15), (std::optional<std::pair<u64, u64>>{{3, 5}}));
    EXPECT_FALSE(factor_from_order(14, 2, 15).has_value());
    EXPECT_EQ(factor_from_order(4, 2, 15), (std::optional<std::pair<u64, u64>>{{3, 5}}));
    EXPECT_FALSE(factor_from_order(2, 3, 7 * 1).has_value());
}

TEST(IsPrime, SmallRange) {
    std::vector<u64> primes;
    for (u64 n = 0; n < 60; n++) {
        if (is_prime(n)) {
            primes.push_back(n);
        }
    }
    EXPECT_EQ(primes, (std::vector<u64>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59}));
    EXPECT_TRUE(is_prime(1000000007));
    EXPECT_FALSE(is_prime(1000000007ULL * 3));
}
