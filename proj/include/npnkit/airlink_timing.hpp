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

// NR numerology, TDD slot timelines and analytic worst-case one-way latency.
//
// Latency follows the user-plane procedure of TR 37.910:
//
//   T_UP   = T1 + n * T_HARQ,     T_HARQ = T1 + T2
//   DL: T1 = t_bs_tx + t_fa_dl + t_dl_duration + t_ue_rx
//       T2 = t_ue_tx + t_fa_ul + t_ul_duration + t_bs_rx
//   UL: T1 = t_ue_tx + t_fa_ul + t_ul_duration + t_bs_rx
//       T2 = t_bs_tx + t_fa_dl + t_dl_duration + t_ue_rx
//
// Alignment delays (t_fa_*) are worst cases over every symbol-aligned arrival
// offset within one pattern period. Queuing and contention are not modeled.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "npnkit/common.hpp"

namespace npn {

inline constexpr int kSymbolsPerSlot = 14;

class NoUsableSlot : public Error {
public:
    using Error::Error;
};

class NegativeComponent : public ValidationError {
public:
    using ValidationError::ValidationError;
};

enum class Direction { DL, UL };

inline const char* to_string(Direction d) { return d == Direction::DL ? "DL" : "UL"; }

// ---------------------------------------------------------------------------
// Numerology
// ---------------------------------------------------------------------------

enum class Scs : int { k15 = 15, k30 = 30, k60 = 60, k120 = 120 };

struct Numerology {
    Scs scs = Scs::k30;

    static Numerology from_khz(int khz) {
        switch (khz) {
            case 15: return {Scs::k15};
            case 30: return {Scs::k30};
            case 60: return {Scs::k60};
            case 120: return {Scs::k120};
            default: throw ValidationError("unsupported subcarrier spacing " + std::to_string(khz) + " kHz");
        }
    }

    int scs_khz() const { return static_cast<int>(scs); }

    /// mu with scs = 15 * 2^mu.
    int mu() const {
        int m = 0;
        for (int s = scs_khz(); s > 15; s /= 2) ++m;
        return m;
    }

    double slot_duration_ms() const { return 15.0 / scs_khz(); }
    double symbol_duration_ms() const { return slot_duration_ms() / kSymbolsPerSlot; }
    static constexpr int symbols_per_slot() { return kSymbolsPerSlot; }

    /// The next numerology up (doubling SCS); 120 kHz is the top.
    std::optional<Numerology> doubled() const {
        if (scs == Scs::k120) return std::nullopt;
        return from_khz(scs_khz() * 2);
    }

    friend bool operator==(const Numerology&, const Numerology&) = default;
};

inline double slot_duration(const Numerology& numerology) { return numerology.slot_duration_ms(); }

// ---------------------------------------------------------------------------
// TDD pattern
// ---------------------------------------------------------------------------

/// F marks a paired-spectrum (FDD) slot in which both directions are always
/// available; it never appears in a TDD pattern string read from a user.
enum class SlotType : char { D = 'D', U = 'U', S = 'S', F = 'F' };

namespace symbol_dir {
inline constexpr std::uint8_t kNone = 0;
inline constexpr std::uint8_t kDl = 1;
inline constexpr std::uint8_t kUl = 2;
}  // namespace symbol_dir

inline std::uint8_t direction_mask(Direction d) { return d == Direction::DL ? symbol_dir::kDl : symbol_dir::kUl; }

struct SpecialSplit {
    int dl_symbols = 10;
    int guard_symbols = 2;
    int ul_symbols = 2;

    void validate() const {
        if (dl_symbols < 0 || guard_symbols < 0 || ul_symbols < 0)
            throw ValidationError("special slot symbol counts must be non-negative");
        if (dl_symbols + guard_symbols + ul_symbols != kSymbolsPerSlot)
            throw ValidationError("special slot symbol counts must sum to 14");
    }

    friend bool operator==(const SpecialSplit&, const SpecialSplit&) = default;
};

class TddPattern {
public:
    TddPattern(std::vector<SlotType> slots, SpecialSplit split = {}) : slots_(std::move(slots)), split_(split) {
        if (slots_.empty()) throw ValidationError("TDD pattern must contain at least one slot");
        split_.validate();
    }

    /// Parses a string over {D, U, S}; whitespace is ignored.
    static TddPattern parse(std::string_view text, SpecialSplit split = {}) {
        std::vector<SlotType> slots;
        for (char c : text) {
            switch (c) {
                case 'D': case 'd': slots.push_back(SlotType::D); break;
                case 'U': case 'u': slots.push_back(SlotType::U); break;
                case 'S': case 's': slots.push_back(SlotType::S); break;
                case ' ': case '\t': break;
                default: throw ValidationError(std::string("invalid TDD pattern character '") + c + "'");
            }
        }
        return TddPattern(std::move(slots), split);
    }

    /// Paired spectrum: one slot with both directions on every symbol.
    static TddPattern fdd() { return TddPattern({SlotType::F}); }

    std::string to_string() const {
        std::string s;
        for (auto t : slots_) s.push_back(static_cast<char>(t));
        return s;
    }

    const std::vector<SlotType>& slots() const { return slots_; }
    const SpecialSplit& special_split() const { return split_; }
    std::size_t size() const { return slots_.size(); }
    bool is_fdd() const { return std::all_of(slots_.begin(), slots_.end(), [](SlotType t) { return t == SlotType::F; }); }
    bool has_special() const { return std::find(slots_.begin(), slots_.end(), SlotType::S) != slots_.end(); }

    int period_symbols() const { return static_cast<int>(slots_.size()) * kSymbolsPerSlot; }
    double period_ms(const Numerology& n) const { return static_cast<double>(slots_.size()) * n.slot_duration_ms(); }

    /// Direction bits of symbol `symbol` (any integer, taken modulo the period).
    std::uint8_t symbol_mask(long long symbol) const {
        const long long period = period_symbols();
        long long s = symbol % period;
        if (s < 0) s += period;
        const auto slot = slots_[static_cast<std::size_t>(s / kSymbolsPerSlot)];
        const int sym = static_cast<int>(s % kSymbolsPerSlot);
        switch (slot) {
            case SlotType::D: return symbol_dir::kDl;
            case SlotType::U: return symbol_dir::kUl;
            case SlotType::F: return symbol_dir::kDl | symbol_dir::kUl;
            case SlotType::S:
                if (sym < split_.dl_symbols) return symbol_dir::kDl;
                if (sym < split_.dl_symbols + split_.guard_symbols) return symbol_dir::kNone;
                return symbol_dir::kUl;
        }
        return symbol_dir::kNone;
    }

    int count(SlotType t) const { return static_cast<int>(std::count(slots_.begin(), slots_.end(), t)); }

    /// Number of symbols per period carrying `d`.
    int direction_symbols(Direction d) const {
        int n = 0;
        for (int s = 0; s < period_symbols(); ++s)
            if (symbol_mask(s) & direction_mask(d)) ++n;
        return n;
    }

    /// Fraction of symbols in a period carrying `d` (1.0 for both on FDD).
    double direction_fraction(Direction d) const {
        return static_cast<double>(direction_symbols(d)) / static_cast<double>(period_symbols());
    }

    friend bool operator==(const TddPattern&, const TddPattern&) = default;

private:
    std::vector<SlotType> slots_;
    SpecialSplit split_;
};

// ---------------------------------------------------------------------------
// Processing times
// ---------------------------------------------------------------------------

/// N1: PDSCH reception to HARQ-ACK; N2: UL grant reception to PUSCH.
enum class ProcessingChannel { PdschDecode, PuschPrepare };
enum class UeCapability { Cap1, Cap2 };
enum class UlAccess { SrBased, ConfiguredGrant };

inline const char* to_string(ProcessingChannel c) { return c == ProcessingChannel::PdschDecode ? "pdsch_decode" : "pusch_prepare"; }
inline const char* to_string(UeCapability c) { return c == UeCapability::Cap1 ? "cap1" : "cap2"; }
inline const char* to_string(UlAccess a) { return a == UlAccess::SrBased ? "sr_based" : "configured_grant"; }

/// Processing time in OFDM symbols keyed by (channel, capability, scs).
class ProcessingTable {
public:
    using Key = std::tuple<ProcessingChannel, UeCapability, int>;

    /// N1 (no additional DM-RS) and N2 from the 38.214 processing-time tables
    /// referenced by the TR 37.910 evaluation. Capability 2 is undefined at
    /// 120 kHz; the capability 1 value stands in.
    static ProcessingTable defaults() {
        ProcessingTable t;
        const int scs[] = {15, 30, 60, 120};
        const double n1_cap1[] = {8, 10, 17, 20};
        const double n1_cap2[] = {3, 4.5, 9, 20};
        const double n2_cap1[] = {10, 12, 23, 36};
        const double n2_cap2[] = {5, 5.5, 11, 36};
        for (int i = 0; i < 4; ++i) {
            t.set(ProcessingChannel::PdschDecode, UeCapability::Cap1, scs[i], n1_cap1[i]);
            t.set(ProcessingChannel::PdschDecode, UeCapability::Cap2, scs[i], n1_cap2[i]);
            t.set(ProcessingChannel::PuschPrepare, UeCapability::Cap1, scs[i], n2_cap1[i]);
            t.set(ProcessingChannel::PuschPrepare, UeCapability::Cap2, scs[i], n2_cap2[i]);
        }
        return t;
    }

    /// Every entry equal to `symbols`; handy for scaling experiments.
    static ProcessingTable uniform(double symbols) {
        ProcessingTable t;
        for (auto ch : {ProcessingChannel::PdschDecode, ProcessingChannel::PuschPrepare})
            for (auto cap : {UeCapability::Cap1, UeCapability::Cap2})
                for (int scs : {15, 30, 60, 120}) t.set(ch, cap, scs, symbols);
        return t;
    }

    void set(ProcessingChannel ch, UeCapability cap, int scs_khz, double symbols) {
        if (!(symbols >= 0.0)) throw ValidationError("processing time must be non-negative");
        entries_[{ch, cap, scs_khz}] = symbols;
    }

    double symbols(ProcessingChannel ch, UeCapability cap, int scs_khz) const {
        auto it = entries_.find({ch, cap, scs_khz});
        if (it == entries_.end())
            throw ValidationError(std::string("processing table has no entry for ") + to_string(ch) + "/" + to_string(cap) +
                                  "/" + std::to_string(scs_khz) + " kHz");
        return it->second;
    }

    /// Capability 2 must never be slower than capability 1.
    void validate() const {
        for (const auto& [key, value] : entries_) {
            const auto& [ch, cap, scs] = key;
            if (cap != UeCapability::Cap2) continue;
            auto it = entries_.find({ch, UeCapability::Cap1, scs});
            if (it != entries_.end() && value > it->second)
                throw ValidationError(std::string("cap2 processing exceeds cap1 for ") + to_string(ch) + " at " +
                                      std::to_string(scs) + " kHz");
        }
    }

    const std::map<Key, double>& entries() const { return entries_; }

    friend bool operator==(const ProcessingTable&, const ProcessingTable&) = default;

private:
    std::map<Key, double> entries_;
};

// ---------------------------------------------------------------------------
// Scheduling configuration
// ---------------------------------------------------------------------------

struct SchedulingConfig {
    int tti_symbols = 14;
    int pdcch_occasions_per_slot = 1;
    int harq_feedback_occasions_per_slot = 2;
    int sr_occasions_per_slot = 1;
    UlAccess ul_access = UlAccess::SrBased;
    UeCapability ue_capability = UeCapability::Cap1;
    ProcessingTable processing_table = ProcessingTable::defaults();

    /// Release-15 style: capability 1, full-slot TTI, SR-based UL, one PDCCH
    /// and two HARQ-ACK occasions per slot, one SR opportunity per slot.
    static SchedulingConfig baseline() { return {}; }

    /// Latency-optimized: capability 2, 2-symbol TTI (7 sub-slots), configured
    /// grant, seven PDCCH and seven HARQ-ACK occasions per slot.
    static SchedulingConfig potential() {
        SchedulingConfig c;
        c.tti_symbols = 2;
        c.pdcch_occasions_per_slot = 7;
        c.harq_feedback_occasions_per_slot = 7;
        c.ul_access = UlAccess::ConfiguredGrant;
        c.ue_capability = UeCapability::Cap2;
        return c;
    }

    void validate() const {
        if (tti_symbols < 2 || tti_symbols > kSymbolsPerSlot) throw ValidationError("tti_symbols must be in 2..14");
        if (pdcch_occasions_per_slot < 1 || pdcch_occasions_per_slot > kSymbolsPerSlot)
            throw ValidationError("pdcch_occasions_per_slot must be in 1..14");
        if (harq_feedback_occasions_per_slot < 1 || harq_feedback_occasions_per_slot > kSymbolsPerSlot)
            throw ValidationError("harq_feedback_occasions_per_slot must be in 1..14");
        if (sr_occasions_per_slot < 1 || sr_occasions_per_slot > kSymbolsPerSlot)
            throw ValidationError("sr_occasions_per_slot must be in 1..14");
        processing_table.validate();
    }

    double processing_symbols(ProcessingChannel ch, const Numerology& n) const {
        return processing_table.symbols(ch, ue_capability, n.scs_khz());
    }

    friend bool operator==(const SchedulingConfig&, const SchedulingConfig&) = default;
};

// ---------------------------------------------------------------------------
// Transmission occasions
// ---------------------------------------------------------------------------

/// A per-slot grid of candidate transmission starts. Starts are spaced
/// max(duration, ceil(14 / per_slot)) symbols apart from symbol 0 of each slot;
/// a start is usable when its `duration` symbols stay inside the slot and all
/// carry `direction`.
struct OccasionGrid {
    int per_slot = 1;
    int duration_symbols = 14;
    Direction direction = Direction::DL;

    int step() const {
        const int spread = (kSymbolsPerSlot + per_slot - 1) / per_slot;
        return std::max(duration_symbols, spread);
    }
};

/// Sorted usable start symbols within one pattern period.
inline std::vector<int> occasion_starts(const TddPattern& pattern, const OccasionGrid& grid) {
    std::vector<int> starts;
    const int step = grid.step();
    const auto need = direction_mask(grid.direction);
    for (std::size_t slot = 0; slot < pattern.size(); ++slot) {
        for (int sym = 0; sym + grid.duration_symbols <= kSymbolsPerSlot; sym += step) {
            const long long base = static_cast<long long>(slot) * kSymbolsPerSlot + sym;
            bool ok = true;
            for (int k = 0; k < grid.duration_symbols && ok; ++k) ok = (pattern.symbol_mask(base + k) & need) != 0;
            if (ok) starts.push_back(static_cast<int>(base));
        }
    }
    return starts;
}

/// One step of an access procedure: wait for the next occasion of `grid`, then
/// spend `symbols_after_start` symbols (on-air plus processing) before the next
/// step may begin.
struct AccessStage {
    OccasionGrid grid;
    int symbols_after_start = 0;
};

/// Chain of stages whose final stage start is the moment data goes on air.
using AccessProcedure = std::vector<AccessStage>;

namespace detail {

class OccasionIndex {
public:
    OccasionIndex(const TddPattern& pattern, const OccasionGrid& grid)
        : period_(pattern.period_symbols()), starts_(occasion_starts(pattern, grid)) {}

    bool empty() const { return starts_.empty(); }
    const std::vector<int>& starts() const { return starts_; }

    /// First occasion start at or after absolute symbol `t` (t >= 0).
    long long next_at_or_after(long long t) const {
        const long long q = t / period_;
        const int r = static_cast<int>(t % period_);
        auto it = std::lower_bound(starts_.begin(), starts_.end(), r);
        if (it != starts_.end()) return q * period_ + *it;
        return (q + 1) * period_ + starts_.front();
    }

private:
    long long period_;
    std::vector<int> starts_;
};

inline int ceil_symbols(double symbols) { return static_cast<int>(std::ceil(symbols - 1e-12)); }

}  // namespace detail

/// Worst-case wait, in symbols, from a symbol-aligned ready time to the start
/// of the final stage of `procedure`.
///
/// The wait as a function of the ready offset only changes at first-stage
/// occasion starts and decreases between them, so the maximum is attained one
/// symbol after some first-stage start. Only those offsets are evaluated.
inline long long worst_case_alignment_symbols(const TddPattern& pattern, const AccessProcedure& procedure) {
    if (procedure.empty()) throw ValidationError("access procedure has no stages");
    std::vector<detail::OccasionIndex> indices;
    indices.reserve(procedure.size());
    for (const auto& stage : procedure) {
        indices.emplace_back(pattern, stage.grid);
        if (indices.back().empty())
            throw NoUsableSlot("pattern " + pattern.to_string() + " has no usable " + to_string(stage.grid.direction) +
                               " occasion");
    }
    const long long period = pattern.period_symbols();
    long long worst = 0;
    for (int s : indices.front().starts()) {
        const long long offset = (s + 1) % period;
        long long t = offset;
        for (std::size_t i = 0; i < procedure.size(); ++i) {
            t = indices[i].next_at_or_after(t);
            if (i + 1 < procedure.size()) t += procedure[i].symbols_after_start;
        }
        worst = std::max(worst, t - offset);
    }
    return worst;
}

/// Occasion grid for data of `direction` (PDSCH with its PDCCH, or PUSCH).
inline OccasionGrid data_grid(const SchedulingConfig& config, Direction direction) {
    return {config.pdcch_occasions_per_slot, config.tti_symbols, direction};
}

/// Access procedure for the data leg of `direction`. DL and configured-grant UL
/// wait for the next data occasion; SR-based UL waits for an SR opportunity,
/// the gNB decode, a PDCCH grant, UE PUSCH preparation (N2) and finally a
/// PUSCH occasion.
inline AccessProcedure data_access_procedure(const Numerology& numerology, const SchedulingConfig& config,
                                             Direction direction) {
    if (direction == Direction::DL || config.ul_access == UlAccess::ConfiguredGrant)
        return {{data_grid(config, direction), 0}};
    const double n1 = config.processing_symbols(ProcessingChannel::PdschDecode, numerology);
    const double n2 = config.processing_symbols(ProcessingChannel::PuschPrepare, numerology);
    const AccessStage sr{{config.sr_occasions_per_slot, 1, Direction::UL}, 1 + detail::ceil_symbols(n1 / 2.0)};
    const AccessStage grant{{config.pdcch_occasions_per_slot, 1, Direction::DL}, 1 + detail::ceil_symbols(n2)};
    const AccessStage pusch{data_grid(config, Direction::UL), 0};
    return {sr, grant, pusch};
}

/// Access procedure for the HARQ feedback leg that follows data of
/// `data_direction`: PUCCH HARQ-ACK occasions after DL data; after UL data the
/// feedback/retransmission grant rides the DL grant leg.
inline AccessProcedure feedback_access_procedure(const SchedulingConfig& config, Direction data_direction) {
    if (data_direction == Direction::DL)
        return {{{config.harq_feedback_occasions_per_slot, config.tti_symbols, Direction::UL}, 0}};
    return {{data_grid(config, Direction::DL), 0}};
}

/// Worst-case alignment delay for data in `direction`, in milliseconds.
inline double worst_case_alignment(const TddPattern& pattern, const Numerology& numerology,
                                   const SchedulingConfig& config, Direction direction) {
    config.validate();
    const auto symbols = worst_case_alignment_symbols(pattern, data_access_procedure(numerology, config, direction));
    return static_cast<double>(symbols) * numerology.symbol_duration_ms();
}

/// Worst-case alignment of the HARQ feedback leg following data in `data_direction`.
inline double worst_case_feedback_alignment(const TddPattern& pattern, const Numerology& numerology,
                                            const SchedulingConfig& config, Direction data_direction) {
    config.validate();
    const auto symbols = worst_case_alignment_symbols(pattern, feedback_access_procedure(config, data_direction));
    return static_cast<double>(symbols) * numerology.symbol_duration_ms();
}

// ---------------------------------------------------------------------------
// Latency composition
// ---------------------------------------------------------------------------

/// Delay components in milliseconds. Unset alignment fields are filled with
/// worst-case values by one_way_latency(): t_fa_dl with the DL grant/data
/// alignment, t_fa_ul with the UL data alignment (UL evaluation) or the
/// HARQ-ACK feedback alignment (DL evaluation).
struct LatencyBudget {
    double t_bs_tx = 0.0;
    double t_bs_rx = 0.0;
    double t_ue_tx = 0.0;
    double t_ue_rx = 0.0;
    std::optional<double> t_fa_dl;
    std::optional<double> t_fa_ul;
    double t_dl_duration = 0.0;
    double t_ul_duration = 0.0;

    void validate() const {
        const double values[] = {t_bs_tx, t_bs_rx, t_ue_tx, t_ue_rx, t_dl_duration, t_ul_duration,
                                 t_fa_dl.value_or(0.0), t_fa_ul.value_or(0.0)};
        for (double v : values)
            if (!(v >= 0.0)) throw ValidationError("latency budget components must be non-negative");
    }
};

/// Processing and on-air components from the configured processing table.
/// Half of N1 is spent on decoding and half on HARQ-ACK preparation; the gNB
/// is assumed as fast as the UE. A single TTI carries the data.
inline LatencyBudget default_budget(const Numerology& numerology, const SchedulingConfig& config) {
    const double sym = numerology.symbol_duration_ms();
    const double half_n1 = config.processing_symbols(ProcessingChannel::PdschDecode, numerology) / 2.0 * sym;
    LatencyBudget b;
    b.t_bs_tx = b.t_bs_rx = b.t_ue_tx = b.t_ue_rx = half_n1;
    b.t_dl_duration = b.t_ul_duration = config.tti_symbols * sym;
    return b;
}

struct LatencyResult {
    double t1_ms = 0.0;
    double t2_ms = 0.0;
    double t_harq_ms = 0.0;
    double t_up_ms = 0.0;
    int n_retx = 0;

    /// One-way latency after `n` retransmissions with the same legs.
    double t_up_after(int n) const { return t1_ms + n * t_harq_ms; }
};

inline LatencyResult one_way_latency(const TddPattern& pattern, const Numerology& numerology,
                                     const SchedulingConfig& config, LatencyBudget budget, Direction direction,
                                     int n_retx) {
    if (n_retx < 0) throw ValidationError("n_retx must be non-negative");
    if (!budget.t_fa_dl) budget.t_fa_dl = worst_case_alignment(pattern, numerology, config, Direction::DL);
    if (!budget.t_fa_ul) {
        budget.t_fa_ul = direction == Direction::UL
                             ? worst_case_alignment(pattern, numerology, config, Direction::UL)
                             : worst_case_feedback_alignment(pattern, numerology, config, Direction::DL);
    }
    budget.validate();

    const double dl_leg = (budget.t_bs_tx + *budget.t_fa_dl) + budget.t_dl_duration + budget.t_ue_rx;
    const double ul_leg = (budget.t_ue_tx + *budget.t_fa_ul) + budget.t_ul_duration + budget.t_bs_rx;

    LatencyResult r;
    r.t1_ms = direction == Direction::DL ? dl_leg : ul_leg;
    r.t2_ms = direction == Direction::DL ? ul_leg : dl_leg;
    r.t_harq_ms = r.t1_ms + r.t2_ms;
    r.n_retx = n_retx;
    r.t_up_ms = r.t1_ms + n_retx * r.t_harq_ms;
    return r;
}

inline LatencyResult one_way_latency(const TddPattern& pattern, const Numerology& numerology,
                                     const SchedulingConfig& config, Direction direction, int n_retx) {
    return one_way_latency(pattern, numerology, config, default_budget(numerology, config), direction, n_retx);
}

struct AttemptsResult {
    int n_retx = 0;
    bool initial_fits = false;

    /// Total transmissions that fit (initial plus retransmissions).
    int attempts() const { return initial_fits ? n_retx + 1 : 0; }
};

/// Largest retransmission count n with t_up(n) <= bound_ms (inclusive).
inline AttemptsResult max_attempts_within_bound(const TddPattern& pattern, const Numerology& numerology,
                                                const SchedulingConfig& config, const LatencyBudget& budget,
                                                Direction direction, double bound_ms) {
    if (!(bound_ms > 0.0)) throw ValidationError("latency bound must be positive");
    const auto r = one_way_latency(pattern, numerology, config, budget, direction, 0);
    if (r.t_up_after(0) > bound_ms) return {0, false};
    int n = 0;
    while (r.t_up_after(n + 1) <= bound_ms) ++n;
    return {n, true};
}

inline AttemptsResult max_attempts_within_bound(const TddPattern& pattern, const Numerology& numerology,
                                                const SchedulingConfig& config, Direction direction, double bound_ms) {
    return max_attempts_within_bound(pattern, numerology, config, default_budget(numerology, config), direction,
                                     bound_ms);
}

// ---------------------------------------------------------------------------
// Handover interruption
// ---------------------------------------------------------------------------

struct HandoverComponent {
    std::string name;
    double min_ms = 0.0;
    double max_ms = 0.0;
};

struct InterruptionRange {
    double min_ms = 0.0;
    double max_ms = 0.0;

    friend bool operator==(const InterruptionRange&, const InterruptionRange&) = default;
};

inline InterruptionRange handover_interruption_budget(const std::vector<HandoverComponent>& components) {
    InterruptionRange total;
    for (const auto& c : components) {
        if (c.min_ms < 0.0 || c.max_ms < 0.0) throw NegativeComponent("negative handover component '" + c.name + "'");
        if (c.min_ms > c.max_ms) throw ValidationError("handover component '" + c.name + "' has min > max");
        total.min_ms += c.min_ms;
        total.max_ms += c.max_ms;
    }
    return total;
}

/// Random-access path of a Release-15 L3 handover with 20 ms SSB periodicity.
inline std::vector<HandoverComponent> l3_handover_components() {
    return {
        {"ue_processing_ho_command", 16.0, 16.0},
        {"retune_and_sync", 20.0, 20.0},
        {"wait_for_rach_occasion", 0.0, 10.0},
        {"random_access", 6.0, 6.0},
    };
}

}  // namespace npn
