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

// Scenario files: JSON with sections scenario, band, radio, scheduling,
// usecase, capacity, coexistence and exclusion. Keys carry their unit in
// the name. Unknown keys are rejected. serialize() writes every typed field
// explicitly, so load(serialize(x)) == x.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "npnkit/airlink_timing.hpp"
#include "npnkit/capacity_engine.hpp"
#include "npnkit/coexistence.hpp"
#include "npnkit/common.hpp"
#include "npnkit/exclusion_zone.hpp"
#include "npnkit/propagation.hpp"
#include "npnkit/qos_usecases.hpp"
#include "npnkit/radio_link.hpp"
#include "npnkit_generated/preset_data.hpp"

namespace npn {

using Json = nlohmann::ordered_json;

class ParseError : public ValidationError {
public:
    ParseError(const std::string& what, std::size_t byte) : ValidationError(what), position(byte) {}
    std::size_t position;
};

class UnknownKey : public ValidationError {
public:
    explicit UnknownKey(const std::string& k) : ValidationError("unknown key '" + k + "'"), key(k) {}
    std::string key;
};

// ---------------------------------------------------------------------------
// Presets
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {"fdd2100", "tdd3800", "tdd26000"};
    return names;
}

inline std::string_view preset_text(std::string_view name) {
    if (name == "fdd2100") return generated::kPresetFdd2100;
    if (name == "tdd3800") return generated::kPresetTdd3800;
    if (name == "tdd26000") return generated::kPresetTdd26000;
    throw ValidationError("unknown preset '" + std::string(name) + "' (expected fdd2100, tdd3800 or tdd26000)");
}

/// FNV-1a 64 over the preset files in name order, as 16 hex digits.
inline std::string preset_checksum() {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& n : preset_names())
        for (unsigned char c : preset_text(n)) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// ---------------------------------------------------------------------------
// Typed configuration
// ---------------------------------------------------------------------------

struct CoexistenceSection {
    std::string indoor;
    std::string outdoor;
    double separation_m = 10.0;
    double wall_loss_db = 8.0;
    int offset_slots = 0;

    friend bool operator==(const CoexistenceSection&, const CoexistenceSection&) = default;
};

struct ExclusionSection {
    std::uint64_t seed = 1;
    Table15Params params;
    double tol_bits = 1e-4;

    friend bool operator==(const ExclusionSection&, const ExclusionSection&) = default;
};

struct ScenarioFile {
    FactoryScenario scenario = FactoryScenario::default_hall(3);
    BandConfig band = BandConfig::tdd3800();
    RadioConfig radio = RadioConfig::preset("tdd3800", AntennaKind::Omni);
    SchedulingConfig scheduling = SchedulingConfig::baseline();
    std::optional<UseCaseSpec> usecase;
    CapacityOptions capacity;
    std::optional<CoexistenceSection> coexistence;
    std::optional<ExclusionSection> exclusion;

    void validate() const {
        scenario.validate();
        band.validate();
        radio.validate();
        scheduling.validate();
        if (usecase) usecase->validate();
        if (capacity.n_drops < 1) throw ValidationError("capacity.n_drops must be at least 1");
        if (coexistence) {
            (void)TddPattern::parse(coexistence->indoor);
            (void)TddPattern::parse(coexistence->outdoor);
        }
        if (exclusion && !(exclusion->tol_bits > 0.0)) throw ValidationError("exclusion.tol_bits must be positive");
    }

    friend bool operator==(const ScenarioFile&, const ScenarioFile&) = default;
};

// ---------------------------------------------------------------------------
// Reading helpers
// ---------------------------------------------------------------------------

namespace detail {

/// Object reader that records which keys were consumed.
class Section {
public:
    Section(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) throw ValidationError(path_ + ": expected an object");
    }

    bool has(const char* key) const { return j_.contains(key); }

    const Json* raw(const char* key) {
        if (!j_.contains(key)) return nullptr;
        used_.insert(key);
        return &j_.at(key);
    }

    void number(const char* key, double& out) {
        if (auto* v = raw(key)) {
            if (!v->is_number()) throw ValidationError(name(key) + ": expected a number");
            out = v->get<double>();
        }
    }

    template <class I>
    void integer(const char* key, I& out) {
        if (auto* v = raw(key)) {
            if (!v->is_number_integer()) throw ValidationError(name(key) + ": expected an integer");
            out = v->get<I>();
        }
    }

    void string(const char* key, std::string& out) {
        if (auto* v = raw(key)) {
            if (!v->is_string()) throw ValidationError(name(key) + ": expected a string");
            out = v->get<std::string>();
        }
    }

    void boolean(const char* key, bool& out) {
        if (auto* v = raw(key)) {
            if (!v->is_boolean()) throw ValidationError(name(key) + ": expected true or false");
            out = v->get<bool>();
        }
    }

    void finish() const {
        for (const auto& [k, v] : j_.items())
            if (!used_.count(k)) throw UnknownKey(name(k.c_str()));
    }

    std::string name(const char* key) const { return path_ + "." + key; }

private:
    const Json& j_;
    std::string path_;
    std::set<std::string> used_;
};

inline Point3 read_point(const Json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 3) throw ValidationError(where + ": expected [x, y, z]");
    for (const auto& c : v)
        if (!c.is_number()) throw ValidationError(where + ": coordinates must be numbers");
    return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

inline Json write_point(const Point3& p) { return Json::array({p.x, p.y, p.z}); }

inline ValueRange read_range(const Json& v, const std::string& where) {
    if (v.is_number()) return ValueRange::exactly(v.get<double>());
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return ValueRange::between(v[0].get<double>(), v[1].get<double>());
    if (v.is_object() && v.size() == 1 && v.contains("at_least") && v["at_least"].is_number())
        return ValueRange::at_least(v["at_least"].get<double>());
    throw ValidationError(where + ": expected a number, [min, max] or {\"at_least\": v}");
}

inline Json write_range(const ValueRange& r) {
    if (r.open_upper) return Json{{"at_least", r.min}};
    if (r.is_point()) return r.min;
    return Json::array({r.min, r.max});
}

template <class E>
E parse_enum(const std::string& text, std::initializer_list<std::pair<const char*, E>> options, const std::string& where) {
    for (const auto& [name, value] : options)
        if (text == name) return value;
    std::string expected;
    for (const auto& [name, value] : options) expected += std::string(expected.empty() ? "" : ", ") + name;
    throw ValidationError(where + ": '" + text + "' is not one of " + expected);
}

// -- scenario ---------------------------------------------------------------

inline void read_coefficients(Section& sec, const char* key, PathlossCoefficients& c, double& sigma) {
    if (auto* v = sec.raw(key)) {
        Section s(*v, sec.name(key));
        s.number("intercept", c.intercept);
        s.number("distance_slope", c.distance_slope);
        s.number("frequency_slope", c.frequency_slope);
        s.number("sigma_db", sigma);
        s.finish();
    }
}

inline InfPathlossTable read_pathloss_table(const Json& j, const std::string& path) {
    InfPathlossTable t;
    Section s(j, path);
    std::string ignored;
    s.string("source", ignored);
    s.string("formula", ignored);
    read_coefficients(s, "los", t.los, t.sigma_los_db);
    read_coefficients(s, "nlos_sh", t.nlos_sh, t.sigma_nlos_sh_db);
    read_coefficients(s, "nlos_dh", t.nlos_dh, t.sigma_nlos_dh_db);
    s.finish();
    return t;
}

inline Json write_pathloss_table(const InfPathlossTable& t) {
    auto row = [](const PathlossCoefficients& c, double sigma) {
        return Json{{"intercept", c.intercept},
                    {"distance_slope", c.distance_slope},
                    {"frequency_slope", c.frequency_slope},
                    {"sigma_db", sigma}};
    };
    return Json{{"los", row(t.los, t.sigma_los_db)},
                {"nlos_sh", row(t.nlos_sh, t.sigma_nlos_sh_db)},
                {"nlos_dh", row(t.nlos_dh, t.sigma_nlos_dh_db)}};
}

inline FactoryScenario read_scenario(const Json& j) {
    FactoryScenario sc = FactoryScenario::default_hall(3);
    Section s(j, "scenario");
    s.number("hall_length_m", sc.hall.length_m);
    s.number("hall_width_m", sc.hall.width_m);
    s.number("hall_height_m", sc.hall.height_m);
    s.number("ue_height_m", sc.ue_height_m);
    s.number("clutter_density", sc.clutter.density);
    s.number("clutter_height_m", sc.clutter.height_m);
    s.number("clutter_size_m", sc.clutter.size_m);
    s.number("carrier_ghz", sc.carrier_ghz);
    s.integer("seed", sc.rng_seed);
    std::string type = to_string(sc.scenario_type);
    s.string("scenario_type", type);
    sc.scenario_type = parse_enum<InfScenario>(type, {{"InF-DH", InfScenario::DH}, {"InF-SH", InfScenario::SH}},
                                               "scenario.scenario_type");
    const Json* layout = s.raw("gnb_layout");
    const Json* positions = s.raw("gnb_positions_m");
    if (layout && positions) throw ValidationError("scenario: give either gnb_layout or gnb_positions_m, not both");
    if (layout) {
        Section g(*layout, "scenario.gnb_layout");
        int rows = 1, cols = 3;
        double height = 8.0;
        g.integer("rows", rows);
        g.integer("cols", cols);
        g.number("height_m", height);
        g.finish();
        sc.gnb_positions = grid_layout(sc.hall, rows, cols, height);
    } else if (positions) {
        if (!positions->is_array()) throw ValidationError("scenario.gnb_positions_m: expected a list of [x, y, z]");
        sc.gnb_positions.clear();
        for (const auto& p : *positions) sc.gnb_positions.push_back(read_point(p, "scenario.gnb_positions_m"));
    } else {
        sc.gnb_positions = grid_layout(sc.hall, 1, 3, 8.0);
    }
    if (auto* pl = s.raw("pathloss")) sc.pathloss_table = read_pathloss_table(*pl, "scenario.pathloss");
    s.finish();
    return sc;
}

inline Json write_scenario(const FactoryScenario& sc) {
    Json pos = Json::array();
    for (const auto& p : sc.gnb_positions) pos.push_back(write_point(p));
    return Json{{"hall_length_m", sc.hall.length_m},
                {"hall_width_m", sc.hall.width_m},
                {"hall_height_m", sc.hall.height_m},
                {"ue_height_m", sc.ue_height_m},
                {"clutter_density", sc.clutter.density},
                {"clutter_height_m", sc.clutter.height_m},
                {"clutter_size_m", sc.clutter.size_m},
                {"carrier_ghz", sc.carrier_ghz},
                {"seed", sc.rng_seed},
                {"scenario_type", to_string(sc.scenario_type)},
                {"gnb_positions_m", pos},
                {"pathloss", write_pathloss_table(sc.pathloss_table)}};
}

// -- band -------------------------------------------------------------------

inline void read_band_keys(Section& s, BandConfig& b) {
    std::string duplex = to_string(b.duplex);
    s.string("duplex", duplex);
    b.duplex = parse_enum<Duplex>(duplex, {{"FDD", Duplex::FDD}, {"TDD", Duplex::TDD}}, s.name("duplex"));
    s.number("carrier_ghz", b.carrier_ghz);
    s.number("bandwidth_mhz", b.bandwidth_mhz);
    s.integer("scs_khz", b.scs_khz);
    s.integer("tti_symbols", b.tti_symbols);
    SpecialSplit split = b.tdd_pattern ? b.tdd_pattern->special_split() : SpecialSplit{};
    if (auto* v = s.raw("special_split")) {
        if (!v->is_array() || v->size() != 3) throw ValidationError(s.name("special_split") + ": expected [dl, guard, ul]");
        split = {(*v)[0].get<int>(), (*v)[1].get<int>(), (*v)[2].get<int>()};
    }
    std::string pattern = b.tdd_pattern ? b.tdd_pattern->to_string() : "";
    s.string("tdd_pattern", pattern);
    if (b.duplex == Duplex::FDD) {
        if (s.has("tdd_pattern") && !pattern.empty()) throw ValidationError("band: FDD band must not set tdd_pattern");
        b.tdd_pattern.reset();
    } else {
        if (pattern.empty()) throw ValidationError("band: TDD band needs tdd_pattern");
        b.tdd_pattern = TddPattern::parse(pattern, split);
    }
}

inline Json preset_json(std::string_view name) {
    try {
        return Json::parse(preset_text(name));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("preset '" + std::string(name) + "': " + e.what(), e.byte);
    }
}

inline BandConfig read_band(const Json& j) {
    Section s(j, "band");
    std::string preset;
    s.string("preset", preset);
    BandConfig b;
    if (!preset.empty()) {
        const Json p = preset_json(preset);
        Section ps(p.at("band"), "preset." + preset + ".band");
        read_band_keys(ps, b);
        ps.finish();
        b.name = preset;
    }
    s.string("name", b.name);
    read_band_keys(s, b);
    s.finish();
    b.validate();
    return b;
}

inline Json write_band(const BandConfig& b) {
    Json j{{"name", b.name},
           {"duplex", to_string(b.duplex)},
           {"carrier_ghz", b.carrier_ghz},
           {"bandwidth_mhz", b.bandwidth_mhz},
           {"scs_khz", b.scs_khz},
           {"tti_symbols", b.tti_symbols}};
    if (b.tdd_pattern) {
        j["tdd_pattern"] = b.tdd_pattern->to_string();
        const auto& sp = b.tdd_pattern->special_split();
        j["special_split"] = Json::array({sp.dl_symbols, sp.guard_symbols, sp.ul_symbols});
    }
    return j;
}

// -- radio ------------------------------------------------------------------

inline void read_radio_keys(Section& s, RadioConfig& r) {
    s.number("gnb_tx_dbm", r.gnb_tx_dbm);
    s.number("ue_tx_max_dbm", r.ue_tx_max_dbm);
    s.number("ue_gain_dbi", r.ue_gain_dbi);
    s.number("gnb_nf_db", r.gnb_nf_db);
    s.number("ue_nf_db", r.ue_nf_db);
    s.number("omni_gain_dbi", r.antenna.omni_gain_dbi);
    s.number("das_head_gain_dbi", r.antenna.das_head_gain_dbi);
    s.number("element_gain_dbi", r.antenna.panel.element_gain_dbi);
    s.integer("panel_rows", r.antenna.panel.rows);
    s.integer("panel_cols", r.antenna.panel.cols);
    s.integer("panel_pol", r.antenna.panel.pol);
    s.number("suppression_db", r.antenna.suppression_db);
    s.number("ul_snr_target_db", r.ul_pc.snr_target_db);
    s.number("ul_alpha", r.ul_pc.alpha);
}

inline AntennaKind parse_antenna(const std::string& text, const std::string& where) {
    return parse_enum<AntennaKind>(text, {{"omni", AntennaKind::Omni}, {"das", AntennaKind::Das}, {"aas", AntennaKind::Aas}},
                                   where);
}

/// Radio values of a band preset for one antenna type.
inline RadioConfig preset_radio(std::string_view preset, AntennaKind kind) {
    const Json p = preset_json(preset);
    RadioConfig r;
    r.antenna.kind = kind;
    Section ps(p.at("radio"), "preset." + std::string(preset) + ".radio");
    read_radio_keys(ps, r);
    ps.finish();
    if (kind == AntennaKind::Das) {
        Section ds(p.at("radio_das"), "preset." + std::string(preset) + ".radio_das");
        read_radio_keys(ds, r);
        ds.finish();
    }
    return r;
}

inline RadioConfig read_radio(const Json& j, const BandConfig& band) {
    Section s(j, "radio");
    std::string antenna = "omni";
    s.string("antenna", antenna);
    const AntennaKind kind = parse_antenna(antenna, "radio.antenna");
    std::string preset = band.name;
    s.string("preset", preset);
    const bool known = std::find(preset_names().begin(), preset_names().end(), preset) != preset_names().end();
    RadioConfig r = known ? preset_radio(preset, kind) : RadioConfig{};
    r.antenna.kind = kind;
    read_radio_keys(s, r);
    s.finish();
    r.validate();
    return r;
}

inline Json write_radio(const RadioConfig& r) {
    return Json{{"antenna", to_string(r.antenna.kind)},
                {"gnb_tx_dbm", r.gnb_tx_dbm},
                {"ue_tx_max_dbm", r.ue_tx_max_dbm},
                {"ue_gain_dbi", r.ue_gain_dbi},
                {"gnb_nf_db", r.gnb_nf_db},
                {"ue_nf_db", r.ue_nf_db},
                {"omni_gain_dbi", r.antenna.omni_gain_dbi},
                {"das_head_gain_dbi", r.antenna.das_head_gain_dbi},
                {"element_gain_dbi", r.antenna.panel.element_gain_dbi},
                {"panel_rows", r.antenna.panel.rows},
                {"panel_cols", r.antenna.panel.cols},
                {"panel_pol", r.antenna.panel.pol},
                {"suppression_db", r.antenna.suppression_db},
                {"ul_snr_target_db", r.ul_pc.snr_target_db},
                {"ul_alpha", r.ul_pc.alpha}};
}

// -- scheduling -------------------------------------------------------------

inline ProcessingTable read_processing_table(const Json& j, const std::string& path) {
    Section s(j, path);
    std::string ignored;
    s.string("source", ignored);
    const Json* entries = s.raw("entries");
    s.finish();
    if (!entries || !entries->is_array()) throw ValidationError(path + ".entries: expected a list");
    ProcessingTable t;
    for (const auto& e : *entries) {
        Section es(e, path + ".entries[]");
        std::string ch, cap;
        int scs = 0;
        double symbols = -1.0;
        es.string("channel", ch);
        es.string("capability", cap);
        es.integer("scs_khz", scs);
        es.number("symbols", symbols);
        es.finish();
        t.set(parse_enum<ProcessingChannel>(ch,
                                            {{"pdsch_decode", ProcessingChannel::PdschDecode},
                                             {"pusch_prepare", ProcessingChannel::PuschPrepare}},
                                            path + ".channel"),
              parse_enum<UeCapability>(cap, {{"cap1", UeCapability::Cap1}, {"cap2", UeCapability::Cap2}},
                                       path + ".capability"),
              scs, symbols);
    }
    t.validate();
    return t;
}

inline Json write_processing_table(const ProcessingTable& t) {
    Json entries = Json::array();
    for (const auto& [key, value] : t.entries()) {
        const auto& [ch, cap, scs] = key;
        entries.push_back(
            Json{{"channel", to_string(ch)}, {"capability", to_string(cap)}, {"scs_khz", scs}, {"symbols", value}});
    }
    return Json{{"entries", entries}};
}

inline SchedulingConfig read_scheduling(const Json& j) {
    Section s(j, "scheduling");
    std::string preset = "baseline";
    s.string("preset", preset);
    SchedulingConfig c = parse_enum<int>(preset, {{"baseline", 0}, {"potential", 1}}, "scheduling.preset") == 1
                             ? SchedulingConfig::potential()
                             : SchedulingConfig::baseline();
    s.integer("tti_symbols", c.tti_symbols);
    s.integer("pdcch_occasions_per_slot", c.pdcch_occasions_per_slot);
    s.integer("harq_feedback_occasions_per_slot", c.harq_feedback_occasions_per_slot);
    s.integer("sr_occasions_per_slot", c.sr_occasions_per_slot);
    std::string access = to_string(c.ul_access);
    s.string("ul_access", access);
    c.ul_access = parse_enum<UlAccess>(access, {{"sr_based", UlAccess::SrBased}, {"configured_grant", UlAccess::ConfiguredGrant}},
                                       "scheduling.ul_access");
    std::string cap = to_string(c.ue_capability);
    s.string("ue_capability", cap);
    c.ue_capability = parse_enum<UeCapability>(cap, {{"cap1", UeCapability::Cap1}, {"cap2", UeCapability::Cap2}},
                                               "scheduling.ue_capability");
    if (auto* t = s.raw("processing_table")) c.processing_table = read_processing_table(*t, "scheduling.processing_table");
    s.finish();
    c.validate();
    return c;
}

inline Json write_scheduling(const SchedulingConfig& c) {
    return Json{{"tti_symbols", c.tti_symbols},
                {"pdcch_occasions_per_slot", c.pdcch_occasions_per_slot},
                {"harq_feedback_occasions_per_slot", c.harq_feedback_occasions_per_slot},
                {"sr_occasions_per_slot", c.sr_occasions_per_slot},
                {"ul_access", to_string(c.ul_access)},
                {"ue_capability", to_string(c.ue_capability)},
                {"processing_table", write_processing_table(c.processing_table)}};
}

// -- use case ---------------------------------------------------------------

inline UseCaseSpec read_usecase(const Json& j) {
    if (j.is_string()) {
        const auto name = j.get<std::string>();
        if (name.empty()) throw ValidationError("usecase: name must not be empty");
        auto uc = find_use_case(name);
        if (!uc) throw ValidationError("usecase: '" + name + "' is not in the catalogue");
        return *uc;
    }
    Section s(j, "usecase");
    UseCaseSpec uc;
    s.string("id", uc.id);
    s.string("name", uc.name);
    auto range = [&](const char* key, ValueRange& out) {
        if (auto* v = s.raw(key)) out = read_range(*v, s.name(key));
    };
    range("message_size_bytes", uc.message_size_bytes);
    range("cycle_time_ms", uc.cycle_time_ms);
    range("csa_nines", uc.csa_nines);
    range("latency_bound_ms", uc.latency_bound_ms);
    if (auto* v = s.raw("bitrate_mbps")) {
        if (!v->is_null()) {
            if (!v->is_number()) throw ValidationError("usecase.bitrate_mbps: expected a number or null");
            uc.bitrate_mbps = v->get<double>();
        }
    }
    s.integer("survival_time_cycles", uc.survival_time_cycles);
    s.number("network_reliability", uc.network_reliability);
    s.boolean("reliability_is_lower_bound", uc.reliability_is_lower_bound);
    s.finish();
    uc.validate();
    return uc;
}

inline Json write_usecase(const UseCaseSpec& uc) {
    return Json{{"id", uc.id},
                {"name", uc.name},
                {"message_size_bytes", write_range(uc.message_size_bytes)},
                {"cycle_time_ms", write_range(uc.cycle_time_ms)},
                {"bitrate_mbps", uc.bitrate_mbps ? Json(*uc.bitrate_mbps) : Json(nullptr)},
                {"csa_nines", write_range(uc.csa_nines)},
                {"survival_time_cycles", uc.survival_time_cycles},
                {"latency_bound_ms", write_range(uc.latency_bound_ms)},
                {"network_reliability", uc.network_reliability},
                {"reliability_is_lower_bound", uc.reliability_is_lower_bound}};
}

// -- capacity, coexistence, exclusion ---------------------------------------

inline CapacityOptions read_capacity(const Json& j) {
    CapacityOptions o;
    Section s(j, "capacity");
    s.integer("n_drops", o.n_drops);
    s.integer("fixed_point_rounds", o.fixed_point_rounds);
    s.number("damping", o.damping);
    s.number("control_overhead", o.model.control_overhead);
    s.integer("rbs_per_slot", o.model.rbs_per_slot);
    s.number("se_efficiency", o.model.link_adaptation.efficiency);
    s.number("se_backoff_db_per_decade", o.model.link_adaptation.backoff_db_per_decade);
    s.number("max_se_bps_hz", o.model.link_adaptation.max_se);
    s.finish();
    return o;
}

inline Json write_capacity(const CapacityOptions& o) {
    return Json{{"n_drops", o.n_drops},
                {"fixed_point_rounds", o.fixed_point_rounds},
                {"damping", o.damping},
                {"control_overhead", o.model.control_overhead},
                {"rbs_per_slot", o.model.rbs_per_slot},
                {"se_efficiency", o.model.link_adaptation.efficiency},
                {"se_backoff_db_per_decade", o.model.link_adaptation.backoff_db_per_decade},
                {"max_se_bps_hz", o.model.link_adaptation.max_se}};
}

inline CoexistenceSection read_coexistence(const Json& j) {
    CoexistenceSection c;
    Section s(j, "coexistence");
    s.string("indoor", c.indoor);
    s.string("outdoor", c.outdoor);
    s.number("separation_m", c.separation_m);
    s.number("wall_loss_db", c.wall_loss_db);
    s.integer("offset_slots", c.offset_slots);
    s.finish();
    if (c.indoor.empty() || c.outdoor.empty()) throw ValidationError("coexistence: indoor and outdoor are required");
    return c;
}

inline Json write_coexistence(const CoexistenceSection& c) {
    return Json{{"indoor", c.indoor},
                {"outdoor", c.outdoor},
                {"separation_m", c.separation_m},
                {"wall_loss_db", c.wall_loss_db},
                {"offset_slots", c.offset_slots}};
}

inline ExclusionSection read_exclusion(const Json& j) {
    ExclusionSection e;
    auto& p = e.params;
    Section s(j, "exclusion");
    bool table15 = true;
    s.boolean("table15", table15);
    if (!table15) throw ValidationError("exclusion: only the table15 scenario generator is supported");
    s.integer("seed", e.seed);
    s.number("tol_bits", e.tol_bits);
    s.number("hall_length_m", p.hall.length_m);
    s.number("hall_width_m", p.hall.width_m);
    s.number("hall_height_m", p.hall.height_m);
    s.number("ap_spacing_m", p.ap_spacing_m);
    s.number("ap_height_m", p.ap_height_m);
    s.integer("users", p.users);
    s.number("user_height_m", p.user_height_m);
    if (auto* v = s.raw("zone_center_m")) p.zone_center = read_point(*v, "exclusion.zone_center_m");
    s.number("zone_length_m", p.zone_length_m);
    s.number("zone_width_m", p.zone_width_m);
    s.number("zone_height_m", p.zone_height_m);
    s.number("zone_clearance_m", p.zone_clearance_m);
    s.number("carrier_ghz", p.carrier_ghz);
    s.integer("max_reflections", p.max_reflections);
    s.number("wall_reflection_db", p.wall_reflection_db);
    s.number("p_t_mw", p.p_t_mw);
    s.number("gamma_dbm", p.gamma_dbm);
    s.number("bandwidth_hz", p.bandwidth_hz);
    s.number("noise_figure_db", p.noise_figure_db);
    s.finish();
    if (p.users < 1) throw ValidationError("exclusion.users must be at least 1");
    return e;
}

inline Json write_exclusion(const ExclusionSection& e) {
    const auto& p = e.params;
    return Json{{"table15", true},
                {"seed", e.seed},
                {"tol_bits", e.tol_bits},
                {"hall_length_m", p.hall.length_m},
                {"hall_width_m", p.hall.width_m},
                {"hall_height_m", p.hall.height_m},
                {"ap_spacing_m", p.ap_spacing_m},
                {"ap_height_m", p.ap_height_m},
                {"users", p.users},
                {"user_height_m", p.user_height_m},
                {"zone_center_m", write_point(p.zone_center)},
                {"zone_length_m", p.zone_length_m},
                {"zone_width_m", p.zone_width_m},
                {"zone_height_m", p.zone_height_m},
                {"zone_clearance_m", p.zone_clearance_m},
                {"carrier_ghz", p.carrier_ghz},
                {"max_reflections", p.max_reflections},
                {"wall_reflection_db", p.wall_reflection_db},
                {"p_t_mw", p.p_t_mw},
                {"gamma_dbm", p.gamma_dbm},
                {"bandwidth_hz", p.bandwidth_hz},
                {"noise_figure_db", p.noise_figure_db}};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Public entry points
// ---------------------------------------------------------------------------

inline ScenarioFile scenario_from_json(const Json& root) {
    detail::Section top(root, "$");
    ScenarioFile f;
    if (auto* b = top.raw("band")) f.band = detail::read_band(*b);
    if (auto* sc = top.raw("scenario")) {
        f.scenario = detail::read_scenario(*sc);
    } else {
        f.scenario.carrier_ghz = f.band.carrier_ghz;
    }
    if (auto* r = top.raw("radio")) {
        f.radio = detail::read_radio(*r, f.band);
    } else {
        const bool known =
            std::find(preset_names().begin(), preset_names().end(), f.band.name) != preset_names().end();
        f.radio = known ? detail::preset_radio(f.band.name, AntennaKind::Omni) : RadioConfig{};
    }
    if (auto* s = top.raw("scheduling")) f.scheduling = detail::read_scheduling(*s);
    if (auto* u = top.raw("usecase")) f.usecase = detail::read_usecase(*u);
    if (auto* c = top.raw("capacity")) f.capacity = detail::read_capacity(*c);
    if (auto* c = top.raw("coexistence")) f.coexistence = detail::read_coexistence(*c);
    if (auto* e = top.raw("exclusion")) f.exclusion = detail::read_exclusion(*e);
    top.finish();
    f.validate();
    return f;
}

inline ScenarioFile parse_scenario(std::string_view text) {
    Json root;
    try {
        root = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("parse error at byte ") + std::to_string(e.byte) + ": " + e.what(), e.byte);
    }
    try {
        return scenario_from_json(root);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("invalid value: ") + e.what());
    }
}

inline ScenarioFile load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open scenario file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

inline Json scenario_to_json(const ScenarioFile& f) {
    Json j{{"scenario", detail::write_scenario(f.scenario)},
           {"band", detail::write_band(f.band)},
           {"radio", detail::write_radio(f.radio)},
           {"scheduling", detail::write_scheduling(f.scheduling)},
           {"capacity", detail::write_capacity(f.capacity)}};
    if (f.usecase) j["usecase"] = detail::write_usecase(*f.usecase);
    if (f.coexistence) j["coexistence"] = detail::write_coexistence(*f.coexistence);
    if (f.exclusion) j["exclusion"] = detail::write_exclusion(*f.exclusion);
    return j;
}

inline std::string serialize_scenario(const ScenarioFile& f) { return scenario_to_json(f).dump(2) + "\n"; }

/// Processing table file: {"entries": [{channel, capability, scs_khz, symbols}, ...]}.
inline ProcessingTable load_processing_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open processing table '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    const auto text = ss.str();
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("parse error at byte ") + std::to_string(e.byte) + ": " + e.what(), e.byte);
    }
    return detail::read_processing_table(j, "processing_table");
}

}  // namespace npn
