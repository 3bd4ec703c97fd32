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

// Indoor/outdoor TDD timeline overlap.
//
// Both patterns start at slot 0 and share slot boundaries. The timeline is
// walked symbol by symbol over lcm(len_in, len_out) slots, so S slots split
// into their DL, guard and UL parts. Counts are reported in slots when
// neither pattern has an S slot, otherwise in symbols.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "npnkit/airlink_timing.hpp"
#include "npnkit/common.hpp"

namespace npn {

class NumerologyMismatch : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Non-negative rational in lowest terms; 0/0 inputs normalize to 0/1.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Fraction of(std::int64_t n, std::int64_t d) {
        if (d == 0) return {0, 1};
        const std::int64_t g = std::gcd(n, d);
        return {n / g, d / g};
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Fraction&, const Fraction&) = default;
    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        return of(a.num * b.den + b.num * a.den, a.den * b.den);
    }
};

enum class InterferenceClass { NearFarDlDl, NearFarUlUl, CrossLinkBs2Bs, CrossLinkUe2Ue };

inline const char* to_string(InterferenceClass c) {
    switch (c) {
        case InterferenceClass::NearFarDlDl: return "near_far_dl_dl";
        case InterferenceClass::NearFarUlUl: return "near_far_ul_ul";
        case InterferenceClass::CrossLinkBs2Bs: return "cross_link_bs2bs";
        case InterferenceClass::CrossLinkUe2Ue: return "cross_link_ue2ue";
    }
    return "?";
}

/// Class of an (indoor, outdoor) direction pair. Outdoor DL during indoor
/// UL hits the indoor gNB receiver; outdoor UL during indoor DL hits the
/// indoor UE.
inline InterferenceClass classify(Direction indoor, Direction outdoor) {
    if (indoor == Direction::DL) return outdoor == Direction::DL ? InterferenceClass::NearFarDlDl : InterferenceClass::CrossLinkUe2Ue;
    return outdoor == Direction::UL ? InterferenceClass::NearFarUlUl : InterferenceClass::CrossLinkBs2Bs;
}

/// Tallies for one indoor direction, in report units.
struct DirectionOverlap {
    std::int64_t units = 0;
    std::int64_t near_far = 0;
    std::int64_t cross_link = 0;
    std::int64_t quiet = 0;

    Fraction near_far_fraction() const { return Fraction::of(near_far, units); }
    Fraction cross_link_fraction() const { return Fraction::of(cross_link, units); }
    Fraction quiet_fraction() const { return Fraction::of(quiet, units); }

    friend bool operator==(const DirectionOverlap&, const DirectionOverlap&) = default;
};

struct OverlapReport {
    std::string indoor;
    std::string outdoor;
    std::int64_t period_slots = 0;
    bool symbol_units = false;
    int outdoor_offset_slots = 0;
    /// A non-zero offset leaves the synchronized-start assumption.
    bool outside_validated_range = false;
    DirectionOverlap dl;
    DirectionOverlap ul;
    bool indoor_dl_safe = true;

    const DirectionOverlap& direction(Direction d) const { return d == Direction::DL ? dl : ul; }

    friend bool operator==(const OverlapReport&, const OverlapReport&) = default;
};

namespace detail {

inline void require_tdd(const TddPattern& p, const char* which) {
    for (auto t : p.slots())
        if (t == SlotType::F) throw ValidationError(std::string(which) + " pattern must use D/U/S slots only");
}

}  // namespace detail

inline OverlapReport overlap_analysis(const TddPattern& indoor, const TddPattern& outdoor,
                                      const Numerology& indoor_numerology = {}, const Numerology& outdoor_numerology = {},
                                      int outdoor_offset_slots = 0) {
    if (!(indoor_numerology == outdoor_numerology))
        throw NumerologyMismatch("indoor and outdoor patterns need the same slot duration");
    detail::require_tdd(indoor, "indoor");
    detail::require_tdd(outdoor, "outdoor");

    const auto li = static_cast<std::int64_t>(indoor.size());
    const auto lo = static_cast<std::int64_t>(outdoor.size());
    OverlapReport r;
    r.indoor = indoor.to_string();
    r.outdoor = outdoor.to_string();
    r.period_slots = std::lcm(li, lo);
    r.symbol_units = indoor.has_special() || outdoor.has_special();
    r.outdoor_offset_slots = outdoor_offset_slots;
    r.outside_validated_range = outdoor_offset_slots != 0;

    const std::int64_t offset = ((outdoor_offset_slots % lo) + lo) % lo * kSymbolsPerSlot;
    const std::int64_t total = r.period_slots * kSymbolsPerSlot;
    for (std::int64_t t = 0; t < total; ++t) {
        const auto in = indoor.symbol_mask(t);
        const auto out = outdoor.symbol_mask(t + offset);
        if (in & symbol_dir::kDl) {
            ++r.dl.units;
            if (out & symbol_dir::kUl) {
                ++r.dl.cross_link;
                r.indoor_dl_safe = false;
            } else if (out & symbol_dir::kDl) {
                ++r.dl.near_far;
            } else {
                ++r.dl.quiet;
            }
        } else if (in & symbol_dir::kUl) {
            ++r.ul.units;
            if (out & symbol_dir::kDl) ++r.ul.cross_link;
            else if (out & symbol_dir::kUl) ++r.ul.near_far;
            else ++r.ul.quiet;
        }
    }
    if (!r.symbol_units) {
        for (auto* d : {&r.dl, &r.ul}) {
            d->units /= kSymbolsPerSlot;
            d->near_far /= kSymbolsPerSlot;
            d->cross_link /= kSymbolsPerSlot;
            d->quiet /= kSymbolsPerSlot;
        }
    }
    return r;
}

/// Every D/U pattern of `length` slots with at least `min_ul_slots` U slots
/// whose DL never meets outdoor UL. Sorted by DL count (descending), then
/// lexicographically.
inline std::vector<TddPattern> find_safe_patterns(const TddPattern& outdoor, int length, int min_ul_slots) {
    if (length < 1 || length > 20) throw ValidationError("pattern length must be in 1..20");
    if (min_ul_slots < 1) throw ValidationError("min_ul_slots must be at least 1");
    detail::require_tdd(outdoor, "outdoor");

    // Indoor slot i meets exactly the outdoor slots k with k = i mod gcd.
    const int lo = static_cast<int>(outdoor.size());
    const int g = std::gcd(length, lo);
    std::vector<bool> blocked(static_cast<std::size_t>(g), false);
    for (int k = 0; k < lo; ++k)
        for (int s = 0; s < kSymbolsPerSlot; ++s)
            if (outdoor.symbol_mask(static_cast<long long>(k) * kSymbolsPerSlot + s) & symbol_dir::kUl)
                blocked[static_cast<std::size_t>(k % g)] = true;

    std::uint32_t forced_ul = 0;
    for (int i = 0; i < length; ++i)
        if (blocked[static_cast<std::size_t>(i % g)]) forced_ul |= 1u << i;

    std::vector<std::string> found;
    const std::uint32_t all = (1u << length) - 1u;
    // bit i set = slot i is U
    for (std::uint32_t ul = 0; ul <= all; ++ul) {
        if ((ul & forced_ul) == forced_ul && std::popcount(ul) >= min_ul_slots) {
            std::string s(static_cast<std::size_t>(length), 'D');
            for (int i = 0; i < length; ++i)
                if (ul >> i & 1u) s[static_cast<std::size_t>(i)] = 'U';
            found.push_back(std::move(s));
        }
        if (ul == all) break;
    }
    std::sort(found.begin(), found.end(), [](const std::string& a, const std::string& b) {
        const auto da = std::count(a.begin(), a.end(), 'D');
        const auto db = std::count(b.begin(), b.end(), 'D');
        return da != db ? da > db : a < b;
    });
    std::vector<TddPattern> out;
    out.reserve(found.size());
    for (const auto& s : found) out.push_back(TddPattern::parse(s));
    return out;
}

// ---------------------------------------------------------------------------
// Risk summary
// ---------------------------------------------------------------------------

enum class RiskLevel { Low, Medium, High };

inline const char* to_string(RiskLevel l) {
    switch (l) {
        case RiskLevel::Low: return "LOW";
        case RiskLevel::Medium: return "MEDIUM";
        case RiskLevel::High: return "HIGH";
    }
    return "?";
}

struct RiskThresholds {
    double near_field_m = 2.0;
    double medium_range_m = 10.0;
    /// Walls at least this lossy lower the level by one step.
    double strong_wall_db = 30.0;
    double default_window_loss_db = 8.0;
};

struct RiskReport {
    RiskLevel level = RiskLevel::Low;
    std::vector<std::string> flags;
    std::vector<std::string> annotations;
};

inline RiskReport risk_report(const OverlapReport& report, double ue_separation_m, double wall_loss_db,
                              const RiskThresholds& th = {}) {
    if (!(ue_separation_m >= 0.0)) throw ValidationError("separation must be non-negative");
    RiskReport r;
    const bool ue2ue = report.dl.cross_link > 0;
    const bool bs2bs = report.ul.cross_link > 0;
    const bool near_far = report.dl.near_far > 0 || report.ul.near_far > 0;
    if (ue2ue) r.flags.push_back("cross_link_ue2ue: outdoor UL overlaps " + report.dl.cross_link_fraction().to_string() +
                                 " of indoor DL");
    if (bs2bs) r.flags.push_back("cross_link_bs2bs: outdoor DL overlaps " + report.ul.cross_link_fraction().to_string() +
                                 " of indoor UL");
    if (near_far) r.flags.push_back("near_far: same-direction overlap present");

    if ((ue2ue || bs2bs) && ue_separation_m < th.near_field_m) r.level = RiskLevel::High;
    else if ((ue2ue || bs2bs || near_far) && ue_separation_m < th.medium_range_m) r.level = RiskLevel::Medium;
    if (wall_loss_db >= th.strong_wall_db && r.level != RiskLevel::Low)
        r.level = static_cast<RiskLevel>(static_cast<int>(r.level) - 1);

    r.annotations.push_back("interference decays by roughly 5 dB per 10 m of UE separation in the reference measurement");
    r.annotations.push_back("default window penetration loss is " + std::to_string(static_cast<int>(th.default_window_loss_db)) +
                            " dB");
    if (ue2ue && ue_separation_m < th.near_field_m)
        r.annotations.push_back("UE-to-UE cross-link at about 1 m separation produced rare latency outliers above 300 ms");
    if (report.outside_validated_range)
        r.annotations.push_back("frame offset is non-zero: outside the synchronized-start measurement setup");
    return r;
}

}  // namespace npn
