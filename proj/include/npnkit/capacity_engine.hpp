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

// Snapshot capacity search.
//
// Supply: RB-symbols per second per cell and direction after control
// overhead. Demand: message bits per second divided by the bits one
// RB-symbol carries at the user's spectral efficiency, times the expected
// number of transmissions. A load is feasible when every cell stays at or
// below full utilization in the evaluated direction on every drop.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "npnkit/airlink_timing.hpp"
#include "npnkit/common.hpp"
#include "npnkit/propagation.hpp"
#include "npnkit/qos_usecases.hpp"
#include "npnkit/radio_link.hpp"

namespace npn {

class InfeasibleLink : public Error {
public:
    using Error::Error;
};

inline constexpr int kSubcarriersPerRb = 12;

/// Maximum transmission bandwidth N_RB (TS 38.101-1 Table 5.3.2-1 and
/// TS 38.101-2 Table 5.3.2-1), keyed by (scs kHz, bandwidth MHz).
inline const std::map<std::pair<int, int>, int>& transmission_bandwidth_table() {
    static const std::map<std::pair<int, int>, int> table = {
        // FR1, 15 kHz
        {{15, 5}, 25}, {{15, 10}, 52}, {{15, 15}, 79}, {{15, 20}, 106}, {{15, 25}, 133}, {{15, 30}, 160},
        {{15, 40}, 216}, {{15, 50}, 270},
        // FR1, 30 kHz
        {{30, 5}, 11}, {{30, 10}, 24}, {{30, 15}, 38}, {{30, 20}, 51}, {{30, 25}, 65}, {{30, 30}, 78},
        {{30, 40}, 106}, {{30, 50}, 133}, {{30, 60}, 162}, {{30, 70}, 189}, {{30, 80}, 217}, {{30, 90}, 245},
        {{30, 100}, 273},
        // FR1 and FR2, 60 kHz
        {{60, 10}, 11}, {{60, 15}, 18}, {{60, 20}, 24}, {{60, 25}, 31}, {{60, 30}, 38}, {{60, 40}, 51},
        {{60, 50}, 65}, {{60, 60}, 79}, {{60, 70}, 93}, {{60, 80}, 107}, {{60, 90}, 121}, {{60, 100}, 135},
        {{60, 200}, 264},
        // FR2, 120 kHz
        {{120, 50}, 32}, {{120, 100}, 66}, {{120, 200}, 132}, {{120, 400}, 264},
    };
    return table;
}

inline int transmission_bandwidth_rbs(double bandwidth_mhz, int scs_khz) {
    const double rounded = std::round(bandwidth_mhz);
    if (std::abs(rounded - bandwidth_mhz) > 1e-9) throw ValidationError("bandwidth must be a whole number of MHz");
    const auto& t = transmission_bandwidth_table();
    const auto it = t.find({scs_khz, static_cast<int>(rounded)});
    if (it == t.end())
        throw ValidationError("no RB count for " + std::to_string(static_cast<int>(rounded)) + " MHz at " +
                              std::to_string(scs_khz) + " kHz");
    return it->second;
}

struct ResourceModel {
    int rbs_per_slot = 0;
    double control_overhead = 0.10;
    LinkAdaptation link_adaptation;

    static ResourceModel for_band(const BandConfig& band, double control_overhead = 0.10) {
        ResourceModel m;
        m.rbs_per_slot = transmission_bandwidth_rbs(band.bandwidth_mhz, band.scs_khz);
        m.control_overhead = control_overhead;
        return m;
    }

    void validate() const {
        if (rbs_per_slot < 1) throw ValidationError("rbs_per_slot must be positive");
        if (!(control_overhead >= 0.0 && control_overhead < 1.0))
            throw ValidationError("control_overhead must be in [0, 1)");
    }

    friend bool operator==(const ResourceModel&, const ResourceModel&) = default;
};

/// Bits one RB-symbol carries per bit/s/Hz: 12 subcarriers of width scs for
/// one symbol of duration 1 / (14 * scs / 15 kHz) ms.
inline constexpr double kBitsPerRbSymbolPerSe = kSubcarriersPerRb * 15.0 / kSymbolsPerSlot;

inline double resources_per_second(const BandConfig& band, const TddPattern& pattern, Direction direction,
                                   const ResourceModel& model) {
    model.validate();
    const double symbols_per_s = kSymbolsPerSlot * 1000.0 / band.numerology().slot_duration_ms();
    return model.rbs_per_slot * symbols_per_s * pattern.direction_fraction(direction) *
           (1.0 - model.control_overhead);
}

inline double resources_per_second(const BandConfig& band, Direction direction, const ResourceModel& model) {
    return resources_per_second(band, band.pattern(), direction, model);
}

/// Expected transmissions per packet when up to `attempts` are allowed and
/// each fails independently with `bler`: 1 + bler + ... + bler^(attempts-1).
inline double expected_transmissions(double bler, int attempts) {
    double total = 0.0;
    double term = 1.0;
    for (int i = 0; i < attempts; ++i) {
        total += term;
        term *= bler;
    }
    return total;
}

/// RB-symbols per second one user needs at spectral efficiency `se`.
inline double required_user_resources_at_se(const UseCaseSpec& use_case, double se, double bler, int attempts) {
    if (attempts < 1) throw ValidationError("attempts must be at least 1");
    if (!(se > 0.0)) throw InfeasibleLink("spectral efficiency is zero");
    const double bits_per_s = use_case.rate_mbps() * 1e6;
    return bits_per_s * expected_transmissions(bler, attempts) / (se * kBitsPerRbSymbolPerSe);
}

inline double required_user_resources(const UseCaseSpec& use_case, double sinr_db, int attempts,
                                       const ResourceModel& model) {
    if (attempts < 1) throw ValidationError("attempts must be at least 1");
    const double bler = per_attempt_bler_target(use_case.network_reliability, attempts);
    const double se = sinr_to_se(sinr_db, bler, model.link_adaptation);
    return required_user_resources_at_se(use_case, se, bler, attempts);
}

/// Latency configuration used for capacity: capability 1, configured grant,
/// one PDCCH and HARQ-ACK occasion per TTI.
inline SchedulingConfig capacity_scheduling(const BandConfig& band) {
    SchedulingConfig c;
    c.tti_symbols = band.tti_symbols;
    c.pdcch_occasions_per_slot = kSymbolsPerSlot / band.tti_symbols;
    c.harq_feedback_occasions_per_slot = kSymbolsPerSlot / band.tti_symbols;
    c.ul_access = UlAccess::ConfiguredGrant;
    c.ue_capability = UeCapability::Cap1;
    return c;
}

inline int attempts_for(const BandConfig& band, const UseCaseSpec& use_case, Direction direction) {
    return max_attempts_within_bound(band.pattern(), band.numerology(), capacity_scheduling(band), direction,
                                     use_case.latency_ms())
        .attempts();
}

// ---------------------------------------------------------------------------
// Load evaluation
// ---------------------------------------------------------------------------

struct CapacityOptions {
    int n_drops = 20;
    int fixed_point_rounds = 10;
    double damping = 0.5;
    unsigned threads = 1;
    ResourceModel model;  // rbs_per_slot 0 means "derive from the band"

    friend bool operator==(const CapacityOptions&, const CapacityOptions&) = default;
};

struct LoadResult {
    bool feasible = true;
    double worst_utilization = 0.0;
    int failures = 0;  // drops that were infeasible
};

namespace detail {

struct DropOutcome {
    bool feasible = true;
    double worst_utilization = 0.0;
};

/// Per-cell utilization for the given per-cell activity.
inline std::vector<double> cell_utilization(const LinkSnapshot& snap, const BandConfig& band, const RadioConfig& radio,
                                            const UseCaseSpec& uc, Direction dir, int attempts, double supply,
                                            const LinkAdaptation& la, const std::vector<double>& activity,
                                            bool& link_ok) {
    const auto sinr = snap.sinr_db(dir, band, radio, activity);
    const double bler = per_attempt_bler_target(uc.network_reliability, attempts);
    std::vector<double> demand(snap.cells(), 0.0);
    link_ok = true;
    for (std::size_t u = 0; u < snap.ues(); ++u) {
        const double se = sinr_to_se(sinr[u], bler, la);
        if (!(se > 0.0)) {
            link_ok = false;
            demand[static_cast<std::size_t>(snap.serving_cell(u))] = std::numeric_limits<double>::infinity();
            continue;
        }
        demand[static_cast<std::size_t>(snap.serving_cell(u))] += required_user_resources_at_se(uc, se, bler, attempts);
    }
    for (auto& d : demand) d /= supply;
    return demand;
}

inline DropOutcome evaluate_drop(const FactoryScenario& scenario, const BandConfig& band, const RadioConfig& radio,
                                 const UseCaseSpec& uc, Direction dir, int n_users, int attempts,
                                 std::uint64_t drop_seed, const CapacityOptions& opt, const ResourceModel& model) {
    DropOutcome out;
    if (n_users == 0) return out;
    const auto ues = drop_ues(scenario, n_users, drop_seed);
    const auto snap = LinkSnapshot::sampled(scenario, radio, ues, derive_seed(drop_seed, 0x4C494E4BULL));
    const double supply = resources_per_second(band, dir, model);

    // Activity starts at full load and moves toward min(1, utilization).
    // Each round is monotone in both activity and user count, so the final
    // utilization is monotone in n_users.
    std::vector<double> activity(snap.cells(), 1.0);
    bool link_ok = true;
    for (int round = 0; round < opt.fixed_point_rounds; ++round) {
        const auto util = cell_utilization(snap, band, radio, uc, dir, attempts, supply, model.link_adaptation,
                                           activity, link_ok);
        for (std::size_t c = 0; c < activity.size(); ++c)
            activity[c] = (1.0 - opt.damping) * activity[c] + opt.damping * std::min(1.0, util[c]);
    }
    const auto util = cell_utilization(snap, band, radio, uc, dir, attempts, supply, model.link_adaptation, activity,
                                       link_ok);
    out.worst_utilization = *std::max_element(util.begin(), util.end());
    out.feasible = link_ok && out.worst_utilization <= 1.0;
    return out;
}

inline ResourceModel resolve_model(const BandConfig& band, const CapacityOptions& opt) {
    if (opt.model.rbs_per_slot > 0) return opt.model;
    ResourceModel m = ResourceModel::for_band(band, opt.model.control_overhead);
    m.link_adaptation = opt.model.link_adaptation;
    return m;
}

}  // namespace detail

/// Drop d uses seed derive_seed(seed, d); UE positions extend by prefix as
/// n_users grows.
inline LoadResult evaluate_load(const FactoryScenario& scenario, const BandConfig& band, const RadioConfig& radio,
                                const UseCaseSpec& use_case, Direction direction, int n_users, std::uint64_t seed,
                                const CapacityOptions& opt = {}) {
    if (n_users < 0) throw ValidationError("n_users must be non-negative");
    if (opt.n_drops < 1) throw ValidationError("n_drops must be at least 1");
    if (!(opt.damping > 0.0 && opt.damping <= 1.0)) throw ValidationError("damping must be in (0, 1]");
    LoadResult r;
    if (n_users == 0) return r;

    const int attempts = attempts_for(band, use_case, direction);
    if (attempts < 1) {
        r.feasible = false;
        r.failures = opt.n_drops;
        r.worst_utilization = std::numeric_limits<double>::infinity();
        return r;
    }
    const ResourceModel model = detail::resolve_model(band, opt);

    std::vector<detail::DropOutcome> drops(static_cast<std::size_t>(opt.n_drops));
    parallel_for(drops.size(), opt.threads, [&](std::size_t d) {
        drops[d] = detail::evaluate_drop(scenario, band, radio, use_case, direction, n_users, attempts,
                                         derive_seed(seed, d), opt, model);
    });
    for (const auto& d : drops) {
        r.worst_utilization = std::max(r.worst_utilization, d.worst_utilization);
        if (!d.feasible) ++r.failures;
    }
    r.feasible = r.failures == 0;
    return r;
}

/// Largest n with evaluate_load feasible: doubling bracket, then bisection.
inline int max_users_in_direction(const FactoryScenario& scenario, const BandConfig& band, const RadioConfig& radio,
                                  const UseCaseSpec& use_case, Direction direction, std::uint64_t seed,
                                  const CapacityOptions& opt = {}, int cap = 1 << 20) {
    auto ok = [&](int n) { return evaluate_load(scenario, band, radio, use_case, direction, n, seed, opt).feasible; };
    if (!ok(1)) return 0;
    int lo = 1;
    int hi = 2;
    while (hi <= cap && ok(hi)) {
        lo = hi;
        hi *= 2;
    }
    if (hi > cap) return lo;
    while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        (ok(mid) ? lo : hi) = mid;
    }
    return lo;
}

struct CapacityResult {
    int max_users_dl = 0;
    int max_users_ul = 0;
    int combined = 0;
    double se_per_cell_dl = 0.0;
    double se_per_cell_ul = 0.0;
    int drops_evaluated = 0;
    int n_cells = 0;

    friend bool operator==(const CapacityResult&, const CapacityResult&) = default;
};

/// users * rate / (bandwidth * direction share * cells), in bit/s/Hz/cell.
inline double se_per_cell(int users, double rate_mbps, double direction_bandwidth_mhz, int n_cells) {
    if (!(direction_bandwidth_mhz > 0.0) || n_cells < 1) throw ValidationError("invalid SE accounting inputs");
    return users * rate_mbps / (direction_bandwidth_mhz * n_cells);
}

/// Bandwidth available to one direction: the full carrier for FDD, the
/// direction's symbol share of the carrier for TDD.
inline double direction_bandwidth_mhz(const BandConfig& band, Direction d) {
    return band.bandwidth_mhz * band.pattern().direction_fraction(d);
}

inline int cell_count(const FactoryScenario& scenario, const RadioConfig& radio) {
    return radio.antenna.kind == AntennaKind::Das ? 1 : static_cast<int>(scenario.gnb_positions.size());
}

inline CapacityResult assemble_capacity(int dl, int ul, const BandConfig& band, const UseCaseSpec& uc, int n_cells,
                                        int drops) {
    CapacityResult r;
    r.max_users_dl = dl;
    r.max_users_ul = ul;
    r.combined = std::min(dl, ul);
    r.n_cells = n_cells;
    r.drops_evaluated = drops;
    const double dl_bw = direction_bandwidth_mhz(band, Direction::DL);
    const double ul_bw = direction_bandwidth_mhz(band, Direction::UL);
    r.se_per_cell_dl = dl_bw > 0.0 ? se_per_cell(dl, uc.rate_mbps(), dl_bw, n_cells) : 0.0;
    r.se_per_cell_ul = ul_bw > 0.0 ? se_per_cell(ul, uc.rate_mbps(), ul_bw, n_cells) : 0.0;
    return r;
}

inline CapacityResult max_served_users(const FactoryScenario& scenario, const BandConfig& band,
                                       const RadioConfig& radio, const UseCaseSpec& use_case, std::uint64_t seed,
                                       const CapacityOptions& opt = {}) {
    scenario.validate();
    band.validate();
    radio.validate();
    use_case.validate();
    const int dl = max_users_in_direction(scenario, band, radio, use_case, Direction::DL, seed, opt);
    const int ul = max_users_in_direction(scenario, band, radio, use_case, Direction::UL, seed, opt);
    return assemble_capacity(dl, ul, band, use_case, cell_count(scenario, radio), opt.n_drops);
}

}  // namespace npn
