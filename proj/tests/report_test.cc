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

#include "dqc1sim/report.h"

#include <gtest/gtest.h>

#include "dqc1sim/order_finding.h"

using namespace dqc1sim;

TEST(Report, ProvenanceFields) {
    nlohmann::json config = {{"command", "trace"}, {"shots", 10}};
    auto rep = with_provenance({{"x", 1}}, config, 42);
    EXPECT_EQ(rep["seed"], 42);
    EXPECT_EQ(rep["version"], kVersion);
    EXPECT_EQ(rep["config_hash"], config_hash(config));
    EXPECT_EQ(rep["config_hash"].get<std::string>().size(), 16u);
    EXPECT_NE(config_hash(config), config_hash({{"command", "trace"}, {"shots", 11}}));
}

TEST(Report, FactoringResultIsByteReproducible) {
    FactorOptions opts;
    opts.seed = 5;
    opts.fixed_a = 2;
    opts.run_all_attempts = true;
    opts.attempt_cap = 50;
    auto a = dump_report(to_json(factor(21, opts)));
    opts.threads = 4;
    auto b = dump_report(to_json(factor(21, opts)));
    EXPECT_EQ(a, b);
    auto j = nlohmann::json::parse(a);
    EXPECT_EQ(j["factors"], nlohmann::json::array({3, 7}));
    EXPECT_EQ(j["c_values"].size(), 50u);
}
