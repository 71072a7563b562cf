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

#ifndef DQC1SIM_STATS_H
#define DQC1SIM_STATS_H

#include <cstdint>
#include <span>
#include <vector>

namespace dqc1sim {

/// Normalized histogram of outcomes in [0, bins).
std::vector<double> empirical_distribution(std::span<const std::uint64_t> outcomes, std::size_t bins);

/// Half the L1 distance.
double total_variation(std::span<const double> p, std::span<const double> q);

struct ChiSquareResult {
    double statistic;
    double degrees_of_freedom;
    double p_value;
};

/// Pearson goodness-of-fit of observed counts against expected probabilities.
/// Bins with expected count below `min_expected` are pooled into one.
ChiSquareResult chi_square_test(std::span<const std::uint64_t> counts, std::span<const double> expected,
                                double min_expected = 5.0);

}  // namespace dqc1sim

#endif
