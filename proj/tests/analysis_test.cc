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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>
#include <numbers>

#include "dqc1sim/errors.h"
#include "dqc1sim/order_finding.h"

using namespace dqc1sim;

namespace {

constexpr double kPi = std::numbers::pi;

// Coherent phase estimation amplitude sum, evaluated term by term.
double kernel_by_sum(double delta, u64 t) {
    Complex s = 0.0;
    for (u64 k = 0; k < t; k++) {
        s += std::polar(1.0, 2 * kPi * delta * static_cast<double>(k));
    }
    return std::norm(s);
}

}  // namespace

TEST(FejerKernel, MatchesGeometricSum) {
    for (double delta : {0.0, 0.01, 0.1, 1.0 / 3, 0.5, 0.77, 1.0, -0.2, 2.0}) {
        for (u64 t : {4u, 16u, 64u}) {
            EXPECT_NEAR(fejer_kernel(delta, t), kernel_by_sum(delta, t), 1e-9 * static_cast<double>(t * t));
        }
    }
}

TEST(FejerKernel, ExactAtIntegersAndLatticePoints) {
    EXPECT_EQ(fejer_kernel_at(Fraction(1, 4), 64, 256), 256.0 * 256.0);
    EXPECT_EQ(fejer_kernel_at(Fraction(1, 4), 65, 256), 0.0);
    EXPECT_EQ(fejer_kernel_at(Fraction(0, 1), 0, 256), 256.0 * 256.0);
    EXPECT_NEAR(fejer_kernel_at(Fraction(1, 3), 85, 256), fejer_kernel(1.0 / 3 - 85.0 / 256, 256), 1e-6);
}

TEST(ExactDistribution, N15Values) {
    auto dist = exact_distribution(15, 2, 256);
    ASSERT_EQ(dist.probabilities.size(), 256u);
    EXPECT_NEAR(dist.probabilities[0], 59.0 / 225, 1e-12);
    EXPECT_NEAR(dist.probabilities[64], 54.0 / 225, 1e-12);
    EXPECT_NEAR(dist.probabilities[128], 58.0 / 225, 1e-12);
    EXPECT_NEAR(dist.probabilities[192], 54.0 / 225, 1e-12);
    EXPECT_NEAR(dist.total(), 1.0, 1e-12);
}

TEST(ExactDistribution, DifferenceMultiplicitiesN15) {
    auto mult = phase_difference_multiplicities(EigenphaseTable::make(15, 2));
    EXPECT_EQ(mult[Fraction(0, 1)], 59u);
    EXPECT_EQ(mult[Fraction(1, 2)], 58u);
    EXPECT_EQ(mult[Fraction(1, 4)], 54u);
    EXPECT_EQ(mult[Fraction(3, 4)], 54u);
}

TEST(ExactDistribution, NormalizedAndSymmetric) {
    for (auto [n, a] : std::vector<std::pair<u64, u64>>{{21, 2}, {33, 5}, {35, 3}}) {
        auto config = PhaseEstimationConfig::for_modulus(n, a);
        auto dist = exact_distribution(n, a, config.t());
        EXPECT_NEAR(dist.total(), 1.0, 1e-10);
        // the difference spectrum is closed under negation
        for (u64 c = 1; c < config.t(); c++) {
            EXPECT_NEAR(dist.probabilities[c], dist.probabilities[config.t() - c], 1e-12);
        }
    }
}

TEST(ExactDistribution, RejectsBadWindow) {
    EXPECT_THROW(exact_distribution(15, 2, 128), Error);
    EXPECT_THROW(exact_distribution(15, 2, 300), Error);
    EXPECT_THROW(exact_distribution(15, 3, 256), Error);
}

TEST(ExactDistribution, CsvShape) {
    auto csv = exact_distribution(15, 2, 256).to_csv();
    EXPECT_EQ(csv.rfind("c,probability\n", 0), 0u);
    EXPECT_NE(csv.find("\n64,0.2399999"), std::string::npos);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 257);
}

TEST(Counting, GoodEigenvalues) {
    EXPECT_EQ(count_good_eigenvalues(15, 2), 4u);
    EXPECT_EQ(good_eigenvalues_closed_form(3, 5, 4), 4u);
    EXPECT_EQ(count_good_eigenvalues(21, 2), 4u);
    EXPECT_EQ(good_eigenvalues_closed_form(3, 7, 6), 4u);
    EXPECT_EQ(count_good_eigenvalues(35, 2), 8u);
}

TEST(Counting, UsablePairs) {
    EXPECT_EQ(count_usable_pairs(15, 2), 108u);
    EXPECT_EQ(num_c(4, 15), 104u);
    EXPECT_EQ(count_usable_pairs(15, 4), 108u);
    EXPECT_TRUE(is_usable_difference(Fraction(1, 4), 4));
    EXPECT_FALSE(is_usable_difference(Fraction(1, 2), 4));
    EXPECT_FALSE(is_usable_difference(Fraction(0, 1), 4));
}

TEST(Counting, PairLowerBoundCounterexamples) {
    // Enumerated independently; the chi(2N - chi) lower bound does not hold here.
    EXPECT_EQ(count_usable_pairs(15, 11), 100u);
    EXPECT_EQ(num_c(count_good_eigenvalues(15, 11), 15), 104u);
    EXPECT_EQ(count_usable_pairs(21, 2), 128u);
    EXPECT_EQ(num_c(count_good_eigenvalues(21, 2), 21), 152u);
    EXPECT_EQ(count_usable_pairs(35, 2), 384u);
    EXPECT_EQ(num_c(count_good_eigenvalues(35, 2), 35), 496u);
}

TEST(SuccessBound, Examples) {
    auto b15 = success_lower_bound(15, 3, 5, 2);
    EXPECT_NEAR(b15.value, 0.10807592921849363, 1e-15);
    EXPECT_NEAR(b15.kernel_floor, 4 / (kPi * kPi), 1e-15);
    EXPECT_NEAR(success_lower_bound(21, 3, 7, 2).value, 0.07719709229892402, 1e-15);
    for (auto [n, p, q] : std::vector<std::tuple<u64, u64, u64>>{{15, 3, 5}, {21, 3, 7}, {35, 5, 7}, {39, 3, 13}}) {
        for (u64 a = 2; a < n; a++) {
            if (gcd(a, n) != 1) {
                continue;
            }
            double v = success_lower_bound(n, p, q, a).value;
            EXPECT_GT(v, 0.0);
            EXPECT_LT(v, 1.0);
        }
    }
}

TEST(ParkerPlenio, Examples) {
    EXPECT_EQ(two_register_success(0.0), 0.0);
    EXPECT_EQ(two_register_success(1.0), 1.0);
    EXPECT_NEAR(two_register_success(0.1), 0.19, 1e-15);
}

TEST(ExpectedRuns, Examples) {
    EXPECT_NEAR(expected_runs_estimate(15, 3, 5, 4), 0.6124392374592768, 1e-12);
    EXPECT_NEAR(expected_runs_estimate(21, 3, 7, 6), 1.0205966413696537, 1e-12);
    EXPECT_LT(expected_runs_estimate(35, 5, 7, 4), expected_runs_estimate(35, 5, 7, 12));
}

TEST(GoodOutcomeMass, AboveBound) {
    auto dist = exact_distribution(15, 2, 256);
    double mass = good_outcome_mass(dist, EigenphaseTable::make(15, 2));
    EXPECT_NEAR(mass, 108.0 / 225, 1e-12);
    EXPECT_GE(mass, success_lower_bound(15, 3, 5, 2).value);
}

TEST(CountingReport, N21) {
    auto rep = counting_report(21, 2);
    EXPECT_EQ(rep.r, 6u);
    EXPECT_EQ(rep.chi, 4u);
    EXPECT_EQ(rep.chi_closed_form, std::optional<u64>(4));
    EXPECT_EQ(rep.num_c, 152u);
    EXPECT_EQ(rep.usable_pairs, 128u);
    EXPECT_FALSE(rep.usable_bound_holds);
    ASSERT_TRUE(rep.bound_lower.has_value());
    EXPECT_NEAR(*rep.bound_lower, 0.0772, 5e-5);
    EXPECT_NEAR(rep.two_register_success, 152.0 / 441, 1e-12);
    EXPECT_FALSE(rep.short_orbit_warning);
}

TEST(CountingReport, ShortOrbitLimitAcrossSweep) {
    // At most p + q - 1 register values have r_d != r.
    for (u64 n : {15u, 21u, 33u, 35u, 39u}) {
        auto [p, q] = *split_semiprime(n);
        for (u64 a = 2; a < n; a++) {
            if (gcd(a, n) != 1) {
                continue;
            }
            u64 shorts = count_short_orbit_values(EigenphaseTable::make(n, a));
            EXPECT_LE(shorts, p + q - 1) << n << " " << a;
        }
    }
}

TEST(CoprimalityShift, HoldsOnGrid) {
    for (i64 r = 1; r <= 40; r++) {
        for (i64 alpha = -60; alpha <= 60; alpha++) {
            for (i64 beta = -3; beta <= 3; beta++) {
                ASSERT_EQ(std::gcd(alpha + beta * r, r) == 1, std::gcd(alpha, r) == 1);
            }
        }
    }
}
