/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 npnkit contributors
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Industrial use-case catalogue and dependability translations.
//
// CSA -> network reliability assumes packet losses are independent and that
// the application fails only after survival_cycles + 1 consecutive losses:
//
//   1 - CSA = (1 - R)^(survival_cycles + 1)
//
// Under this model the "3GPP URLLC target - modified" row (5 nines, survival
// time 0) maps to exactly 99.999 %; rows whose published reliability differs
// from the formula are kept verbatim in the catalogue and not reconciled.

#include <cctype>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "npnkit/common.hpp"

namespace npn {

/// Closed range as published; `open_upper` marks "> min" entries.
struct ValueRange {
    double min = 0.0;
    double max = 0.0;
    bool open_upper = false;

    static ValueRange exactly(double v) { return {v, v, false}; }
    static ValueRange between(double lo, double hi) { return {lo, hi, false}; }
    static ValueRange at_least(double v) { return {v, v, true}; }

    bool is_point() const { return min == max && !open_upper; }

    friend bool operator==(const ValueRange&, const ValueRange&) = default;
};

struct UseCaseSpec {
    std::string id;
    std::string name;
    ValueRange message_size_bytes;
    ValueRange cycle_time_ms;
    std::optional<double> bitrate_mbps;
    ValueRange csa_nines;
    int survival_time_cycles = 0;
    ValueRange latency_bound_ms;
    double network_reliability = 0.0;
    bool reliability_is_lower_bound = false;

    // Stricter end of each published range.
    double message_bytes() const { return message_size_bytes.max; }
    double cycle_ms() const { return cycle_time_ms.min; }
    double latency_ms() const { return latency_bound_ms.min; }
    double csa_nines_strict() const { return csa_nines.max; }

    /// Published rate when present, else size over cycle at the strict ends.
    double rate_mbps() const {
        if (bitrate_mbps) return *bitrate_mbps;
        return 8.0 * message_bytes() / cycle_ms() / 1000.0;
    }

    void validate() const {
        if (id.empty()) throw ValidationError("use case id must not be empty");
        if (!(message_size_bytes.min > 0.0) || message_size_bytes.max < message_size_bytes.min)
            throw ValidationError("use case '" + id + "': invalid message size");
        if (!(cycle_time_ms.min > 0.0) || cycle_time_ms.max < cycle_time_ms.min)
            throw ValidationError("use case '" + id + "': invalid cycle time");
        if (!(latency_bound_ms.min > 0.0) || latency_bound_ms.max < latency_bound_ms.min)
            throw ValidationError("use case '" + id + "': latency bound must be positive");
        if (!(network_reliability > 0.0 && network_reliability < 1.0))
            throw ValidationError("use case '" + id + "': network reliability must be in (0, 1)");
        if (survival_time_cycles < 0) throw ValidationError("use case '" + id + "': negative survival time");
        if (bitrate_mbps && !(*bitrate_mbps > 0.0)) throw ValidationError("use case '" + id + "': invalid bitrate");
    }

    friend bool operator==(const UseCaseSpec&, const UseCaseSpec&) = default;
};

/// Required per-packet network reliability for a CSA unavailability `1 - CSA`
/// and a survival time of `survival_cycles` cycles.
inline double csa_to_network_reliability(double csa_unavailability, int survival_cycles) {
    if (!(csa_unavailability > 0.0 && csa_unavailability < 1.0))
        throw DomainError("CSA unavailability must be in (0, 1)");
    if (survival_cycles < 0) throw DomainError("survival time must be non-negative");
    return 1.0 - std::pow(csa_unavailability, 1.0 / (survival_cycles + 1));
}

/// Per-attempt residual error target so that `attempts` independent attempts
/// reach `reliability`.
inline double per_attempt_bler_target(double reliability, int attempts) {
    if (!(reliability > 0.0 && reliability < 1.0)) throw DomainError("reliability must be in (0, 1)");
    if (attempts < 1) throw DomainError("attempts must be at least 1");
    return std::pow(1.0 - reliability, 1.0 / attempts);
}

/// The ten industrial use cases with their published requirements.
inline std::vector<UseCaseSpec> builtin_use_cases() {
    using R = ValueRange;
    return {
        {"urllc_modified", "3GPP URLLC target - modified 22.104 motion control (2)", R::exactly(32), R::exactly(1),
         0.256, R::exactly(5), 0, R::exactly(1), 0.99999, false},
        {"motion_control_2", "22.104 motion control (2)", R::exactly(40), R::exactly(1), 0.32, R::between(6, 8), 1,
         R::exactly(1), 0.9999, false},
        {"UC1", "UC1 (robotics motion planning)", R::exactly(500), R::exactly(5), 0.8, R::exactly(4), 0, R::exactly(5),
         0.9999, false},
        {"UC4", "UC4 (process monitoring)", R::exactly(1024), R::exactly(5), 1.6384, R::exactly(5), 1, R::exactly(10),
         0.999, false},
        {"UC7", "UC7 (controller-to-controller)", R::exactly(500), R::exactly(10), 0.4, R::between(3, 5), 2,
         R::exactly(10), 0.99, false},
        {"mobile_robots_cooperative_motion",
         "22.104 mobile robots (1) - precise cooperative robotic motion control", R::between(40, 250), R::exactly(1),
         std::nullopt, R::at_least(6), 1, R::exactly(1), 0.999, true},
        {"mobile_robots_machine_control", "22.104 mobile robots (1) - machine control", R::exactly(250),
         R::exactly(10), 0.2, R::exactly(6), 1, R::exactly(10), 0.999, false},
        {"mobile_robots_cooperative_driving", "22.104 mobile robots (1) - co-operative driving", R::between(40, 250),
         R::between(10, 50), std::nullopt, R::at_least(6), 1, R::between(10, 50), 0.999, true},
        {"c2c_1", "22.104 (controller-to-controller) (1)", R::exactly(1000), R::exactly(10), 0.8, R::between(6, 8), 1,
         R::exactly(10), 0.9999, false},
        {"c2c_2", "22.104 (controller-to-controller) (2)", R::exactly(1000), R::exactly(50), 0.16, R::between(6, 8), 1,
         R::exactly(50), 0.9999, false},
    };
}

/// Catalogue lookup by id (case-insensitive) or full name.
inline std::optional<UseCaseSpec> find_use_case(std::string_view key) {
    auto lower = [](std::string_view s) {
        std::string out(s);
        for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return out;
    };
    const auto k = lower(key);
    for (auto& uc : builtin_use_cases())
        if (lower(uc.id) == k || lower(uc.name) == k) return uc;
    return std::nullopt;
}

}  // namespace npn
