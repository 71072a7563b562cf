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

#include <cstdio>

namespace dqc1sim {

using nlohmann::json;

namespace {

json pair_json(const std::optional<std::pair<u64, u64>> &p) {
    if (!p) {
        return nullptr;
    }
    return json::array({p->first, p->second});
}

template <typename T>
json opt_json(const std::optional<T> &v) {
    if (!v) {
        return nullptr;
    }
    return *v;
}

json sample_json(const EigenphaseSample &s) {
    return {{"register", s.register_value}, {"orbit_length", s.orbit_length}, {"index", s.index},
            {"phase", s.phase().str()}};
}

}  // namespace

json to_json(const Complex &z) {
    return {{"re", z.real()}, {"im", z.imag()}};
}

json to_json(const TraceEstimate &est) {
    return {{"value", to_json(est.value)},
            {"shots", est.shots},
            {"std_error", est.std_error},
            {"std_error_re", est.std_error_re},
            {"std_error_im", est.std_error_im}};
}

json to_json(const AttemptRecord &rec) {
    json j;
    j["a"] = rec.a;
    j["classical_shortcut"] = rec.classical_shortcut;
    if (rec.classical_shortcut) {
        j["factors"] = pair_json(rec.factors);
        return j;
    }
    j["path"] = rec.path == AttemptPath::Eigenphase ? "eigenphase" : "faithful";
    j["c"] = rec.c;
    if (rec.first && rec.second) {
        j["eigenphases"] = json::array({sample_json(*rec.first), sample_json(*rec.second)});
    }
    if (rec.registers) {
        j["registers"] = json::array({rec.registers->first, rec.registers->second});
        j["max_support"] = rec.max_support;
    }
    j["order"] = opt_json(rec.order);
    j["order_recovered"] = rec.order_recovered;
    j["recovered_directly"] = rec.recovered_directly;
    j["factors"] = pair_json(rec.factors);
    return j;
}

json to_json(const FactoringResult &result) {
    json attempts = json::array();
    json cs = json::array();
    for (const auto &rec : result.attempts) {
        attempts.push_back(to_json(rec));
        if (!rec.classical_shortcut) {
            cs.push_back(rec.c);
        }
    }
    auto rate = [&](std::size_t k) {
        return result.circuit_attempts == 0 ? json(nullptr)
                                            : json(static_cast<double>(k) / static_cast<double>(result.circuit_attempts));
    };
    return {{"n", result.n},
            {"factors", pair_json(result.factors)},
            {"attempts", result.attempts.size()},
            {"circuit_attempts", result.circuit_attempts},
            {"c_values", cs},
            {"order_recovery_rate", rate(result.orders_recovered)},
            {"direct_order_recovery_rate", rate(result.orders_recovered_directly)},
            {"factor_rate", rate(result.factor_successes)},
            {"records", attempts}};
}

json to_json(const CountingReport &rep) {
    json j = {{"n", rep.n},
              {"a", rep.a},
              {"t", rep.t},
              {"r", rep.r},
              {"factors", pair_json(rep.factors)},
              {"chi", rep.chi},
              {"chi_closed_form", opt_json(rep.chi_closed_form)},
              {"num_c", rep.num_c},
              {"usable_pairs", rep.usable_pairs},
              {"usable_bound_holds", rep.usable_bound_holds},
              {"bound_lower", opt_json(rep.bound_lower)},
              {"single_register_fraction", rep.single_register_fraction},
              {"two_register_success", rep.two_register_success},
              {"expected_runs_estimate", opt_json(rep.expected_runs)},
              {"good_outcome_mass", rep.good_outcome_mass},
              {"short_orbit_values", rep.short_orbit_values},
              {"short_orbit_limit", opt_json(rep.short_orbit_limit)},
              {"short_orbit_warning", rep.short_orbit_warning}};
    return j;
}

json to_json(const GlobalPhaseReport &rep) {
    return {{"theta", rep.theta},
            {"blackbox_exact_deviation", rep.blackbox_exact_deviation},
            {"blackbox_state_deviation",
             rep.blackbox_state_deviation < 0 ? json(nullptr) : json(rep.blackbox_state_deviation)},
            {"blackbox_sample_deviation", rep.blackbox_sample_deviation},
            {"standard_plain", to_json(rep.standard_plain)},
            {"standard_phased", to_json(rep.standard_phased)},
            {"standard_phase_error", rep.standard_phase_error},
            {"standard_sees_phase", rep.standard_sees_phase}};
}

std::string config_hash(const json &config) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : config.dump()) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json with_provenance(json report, const json &config, std::uint64_t seed) {
    report["seed"] = seed;
    report["config"] = config;
    report["config_hash"] = config_hash(config);
    report["version"] = kVersion;
    return report;
}

std::string dump_report(const json &report) {
    return report.dump(2) + "\n";
}

}  // namespace dqc1sim
