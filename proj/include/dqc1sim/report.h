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

#ifndef DQC1SIM_REPORT_H
#define DQC1SIM_REPORT_H

#include <cstdint>
#include <json.hpp>
#include <string>

#include "dqc1sim/analysis.h"
#include "dqc1sim/dqc1.h"
#include "dqc1sim/order_finding.h"

namespace dqc1sim {

inline constexpr const char *kVersion = "0.1.0";

nlohmann::json to_json(const Complex &z);
nlohmann::json to_json(const TraceEstimate &est);
nlohmann::json to_json(const AttemptRecord &rec);
nlohmann::json to_json(const FactoringResult &result);
nlohmann::json to_json(const CountingReport &rep);
nlohmann::json to_json(const GlobalPhaseReport &rep);

/// FNV-1a over the canonical (key-sorted, compact) dump of `config`.
std::string config_hash(const nlohmann::json &config);

/// Adds {seed, config, config_hash, version} to a report.
nlohmann::json with_provenance(nlohmann::json report, const nlohmann::json &config, std::uint64_t seed);

/// Fixed-format dump used for every emitted report.
std::string dump_report(const nlohmann::json &report);

}  // namespace dqc1sim

#endif
