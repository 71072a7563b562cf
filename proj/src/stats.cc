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

#include "dqc1sim/stats.h"

#include <boost/math/distributions/chi_squared.hpp>
#include <algorithm>
#include <cmath>
#include <utility>

#include "dqc1sim/errors.h"

namespace dqc1sim {

std::vector<double> empirical_distribution(std::span<const std::uint64_t> outcomes, std::size_t bins) {
    std::vector<double> p(bins, 0.0);
    if (outcomes.empty()) {
        return p;
    }
    for (auto c : outcomes) {
        if (c >= bins) {
            throw Error(ErrorKind::InvalidArgument, "outcome outside histogram range");
        }
        p[c] += 1.0;
    }
    for (double &v : p) {
        v /= static_cast<double>(outcomes.size());
    }
    return p;
}

double total_variation(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw Error(ErrorKind::DimMismatch, "distributions have different supports");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); i++) {
        s += std::abs(p[i] - q[i]);
    }
    return 0.5 * s;
}

ChiSquareResult chi_square_test(std::span<const std::uint64_t> counts, std::span<const double> expected,
                                double min_expected) {
    if (counts.size() != expected.size()) {
        throw Error(ErrorKind::DimMismatch, "counts and expected probabilities differ in length");
    }
    double n = 0.0;
    for (std::size_t i = 0; i < counts.size(); i++) {
        n += static_cast<double>(counts[i]);
        if (counts[i] > 0 && expected[i] <= 0.0) {
            // Outcome the model says is impossible; pooling must not hide it.
            return ChiSquareResult{INFINITY, 1.0, 0.0};
        }
    }
    std::vector<std::pair<double, double>> cells;  // (observed, expected)
    double pooled_obs = 0.0;
    double pooled_exp = 0.0;
    for (std::size_t i = 0; i < counts.size(); i++) {
        double e = expected[i] * n;
        double o = static_cast<double>(counts[i]);
        if (e < min_expected) {
            pooled_obs += o;
            pooled_exp += e;
        } else {
            cells.emplace_back(o, e);
        }
    }
    if (pooled_exp >= min_expected || cells.empty()) {
        cells.emplace_back(pooled_obs, pooled_exp);
    } else if (pooled_obs > 0.0 || pooled_exp > 0.0) {
        // Too thin to stand alone: fold into the smallest regular cell.
        auto smallest = std::min_element(cells.begin(), cells.end(),
                                         [](const auto &x, const auto &y) { return x.second < y.second; });
        smallest->first += pooled_obs;
        smallest->second += pooled_exp;
    }
    double stat = 0.0;
    for (const auto &[o, e] : cells) {
        if (e <= 0.0) {
            continue;
        }
        stat += (o - e) * (o - e) / e;
    }
    if (cells.size() <= 1) {
        // Deterministic model and every observation matched it.
        return ChiSquareResult{stat, 1.0, 1.0};
    }
    double dof = static_cast<double>(cells.size() - 1);
    boost::math::chi_squared dist(dof);
    double p_value = boost::math::cdf(boost::math::complement(dist, stat));
    return ChiSquareResult{stat, dof, p_value};
}

}  // namespace dqc1sim
