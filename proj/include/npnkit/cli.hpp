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

// Command-line front end. Exit codes: 0 success, 1 usage or validation
// error, 2 solver failure. Relative --out paths resolve under
// $NPNKIT_OUT_DIR when it is set.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "npnkit/config.hpp"
#include "npnkit/npnkit.hpp"

namespace npn::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitSolver = 2;

namespace detail {

inline std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

inline std::filesystem::path resolve_out(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("NPNKIT_OUT_DIR"); dir && *dir) p = std::filesystem::path(dir) / p;
    }
    return p;
}

/// Writes to --out when given, otherwise to `out`.
inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    const auto p = resolve_out(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream f(p, std::ios::binary);
    if (!f) throw ValidationError("cannot write '" + p.string() + "'");
    f << text;
}

inline Direction parse_direction(const std::string& s) {
    if (s == "dl" || s == "DL") return Direction::DL;
    if (s == "ul" || s == "UL") return Direction::UL;
    throw ValidationError("direction must be dl or ul");
}

inline double power_dbm(double normalized, double p_t_mw) { return mw_to_dbm(normalized * p_t_mw); }

inline Json dbm_or_null(double dbm) { return std::isfinite(dbm) ? Json(dbm) : Json(nullptr); }

inline Json curve_json(const MaxMinResult& r, double p_t_mw) {
    Json pts = Json::array();
    for (double v : r.per_point_power) pts.push_back(dbm_or_null(power_dbm(v, p_t_mw)));
    return Json{{"min_se_bps_hz", r.min_se},
                {"per_user_se_bps_hz", r.per_user_se},
                {"per_point_power_dbm", pts},
                {"bisection_iterations", r.bisection_iterations}};
}

inline Json overlap_json(const DirectionOverlap& d) {
    return Json{{"units", d.units},
                {"near_far_count", d.near_far},
                {"cross_link_count", d.cross_link},
                {"quiet_count", d.quiet},
                {"near_far", d.near_far_fraction().value()},
                {"cross_link", d.cross_link_fraction().value()},
                {"quiet", d.quiet_fraction().value()},
                {"near_far_exact", d.near_far_fraction().to_string()},
                {"cross_link_exact", d.cross_link_fraction().to_string()},
                {"quiet_exact", d.quiet_fraction().to_string()}};
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

struct LatencyArgs {
    std::string scenario;
    std::string pattern = "DDDSU";
    int scs = 30;
    std::string preset = "baseline";
    std::string direction = "dl";
    int retx = 0;
    std::optional<double> bound_ms;
    std::string processing_table;
    std::optional<int> tti;
    std::string out;
};

inline int run_latency(const LatencyArgs& a, std::ostream& out) {
    SchedulingConfig cfg = a.preset == "potential" ? SchedulingConfig::potential() : SchedulingConfig::baseline();
    if (a.preset != "baseline" && a.preset != "potential") throw ValidationError("--config must be baseline or potential");
    TddPattern pattern = a.pattern == "FDD" || a.pattern == "fdd" ? TddPattern::fdd() : TddPattern::parse(a.pattern);
    Numerology num = Numerology::from_khz(a.scs);
    if (!a.scenario.empty()) {
        const auto f = load_scenario(a.scenario);
        cfg = f.scheduling;
        pattern = f.band.pattern();
        num = f.band.numerology();
    }
    if (a.tti) cfg.tti_symbols = *a.tti;
    if (!a.processing_table.empty()) cfg.processing_table = load_processing_table(a.processing_table);
    cfg.validate();
    if (a.retx < 0) throw ValidationError("--retx must be non-negative");
    const Direction dir = parse_direction(a.direction);

    const auto r = one_way_latency(pattern, num, cfg, dir, a.retx);
    Json t_up = Json::array();
    for (int n = 0; n <= a.retx; ++n) t_up.push_back(r.t_up_after(n));
    Json j{{"pattern", pattern.to_string()},
           {"scs_khz", num.scs_khz()},
           {"direction", to_string(dir)},
           {"tti_symbols", cfg.tti_symbols},
           {"ul_access", to_string(cfg.ul_access)},
           {"ue_capability", to_string(cfg.ue_capability)},
           {"alignment_data_ms", worst_case_alignment(pattern, num, cfg, dir)},
           {"alignment_feedback_ms", worst_case_feedback_alignment(pattern, num, cfg, dir)},
           {"t1_ms", r.t1_ms},
           {"t2_ms", r.t2_ms},
           {"t_harq_ms", r.t_harq_ms},
           {"t_up_ms", t_up}};
    if (a.bound_ms) {
        const auto att = max_attempts_within_bound(pattern, num, cfg, dir, *a.bound_ms);
        j["bound_ms"] = *a.bound_ms;
        j["attempts"] = att.attempts();
    }
    emit(j.dump(2) + "\n", a.out, out);
    return kExitOk;
}

struct CapacityArgs {
    std::string scenario;
    std::string band = "tdd3800";
    std::string pattern;
    std::optional<int> tti;
    std::string antenna = "omni";
    int gnbs = 3;
    std::vector<std::string> usecases;
    std::optional<std::uint64_t> seed;
    std::optional<int> drops;
    unsigned threads = 1;
    std::string out;
};

inline int run_capacity(const CapacityArgs& a, std::ostream& out) {
    if (!a.seed) throw ValidationError("--seed is required for capacity");
    ScenarioFile f;
    if (!a.scenario.empty()) {
        f = load_scenario(a.scenario);
    } else {
        Json j{{"band", Json{{"preset", a.band}}}, {"radio", Json{{"antenna", a.antenna}}}};
        if (!a.pattern.empty()) j["band"]["tdd_pattern"] = a.pattern;
        if (a.tti) j["band"]["tti_symbols"] = *a.tti;
        const int heads = a.antenna == "das" ? 12 : a.gnbs;
        if (heads != 1 && heads != 3 && heads != 12) throw ValidationError("--gnbs must be 1, 3 or 12");
        f = scenario_from_json(j);
        f.scenario = FactoryScenario::default_hall(heads, f.band.carrier_ghz);
    }
    if (a.drops) f.capacity.n_drops = *a.drops;
    f.capacity.threads = a.threads;

    std::vector<UseCaseSpec> ucs;
    if (a.usecases.empty() && f.usecase) ucs.push_back(*f.usecase);
    for (const auto& name : a.usecases) {
        if (name == "all") {
            for (auto& uc : builtin_use_cases()) ucs.push_back(uc);
            continue;
        }
        if (name.empty()) throw ValidationError("--usecase must not be empty");
        auto uc = find_use_case(name);
        if (!uc) throw ValidationError("unknown use case '" + name + "'");
        ucs.push_back(*uc);
    }
    if (ucs.empty()) throw ValidationError("no use case given (use --usecase or a usecase section)");

    std::ostringstream csv;
    csv << "use_case,band,pattern,antenna,n_gnbs,max_dl_users,max_ul_users,combined_users,se_dl_bps_hz_cell,"
           "se_ul_bps_hz_cell\n";
    const int gnbs = static_cast<int>(f.scenario.gnb_positions.size());
    for (const auto& uc : ucs) {
        const auto r = max_served_users(f.scenario, f.band, f.radio, uc, *a.seed, f.capacity);
        csv << csv_field(uc.id) << ',' << f.band.name << ',' << f.band.pattern().to_string() << ','
            << to_string(f.radio.antenna.kind) << ',' << gnbs << ',' << r.max_users_dl << ',' << r.max_users_ul << ','
            << r.combined << ',' << fmt("%.4f", r.se_per_cell_dl) << ',' << fmt("%.4f", r.se_per_cell_ul) << '\n';
    }
    emit(csv.str(), a.out, out);
    return kExitOk;
}

struct SinrMapArgs {
    std::string scenario;
    std::string band = "tdd3800";
    std::string pattern;
    std::string antenna = "omni";
    int gnbs = 3;
    std::string direction = "dl";
    double resolution_m = 1.0;
    double activity = 1.0;
    std::string out;
};

inline int run_sinr_map(const SinrMapArgs& a, std::ostream& out) {
    ScenarioFile f;
    if (!a.scenario.empty()) {
        f = load_scenario(a.scenario);
    } else {
        Json j{{"band", Json{{"preset", a.band}}}, {"radio", Json{{"antenna", a.antenna}}}};
        if (!a.pattern.empty()) j["band"]["tdd_pattern"] = a.pattern;
        f = scenario_from_json(j);
        const int heads = a.antenna == "das" ? 12 : a.gnbs;
        f.scenario = FactoryScenario::default_hall(heads, f.band.carrier_ghz);
    }
    if (!(a.activity >= 0.0 && a.activity <= 1.0)) throw ValidationError("--activity must be in [0, 1]");
    const auto map = sinr_grid(f.scenario, f.band, f.radio, parse_direction(a.direction), a.resolution_m, a.activity);
    std::ostringstream csv;
    write_heatmap_csv(csv, map);
    emit(csv.str(), a.out, out);
    return kExitOk;
}

struct CoexistArgs {
    std::string scenario;
    std::string indoor;
    std::string outdoor;
    double separation_m = 10.0;
    double wall_loss_db = 8.0;
    int offset_slots = 0;
    int search_length = 0;
    int min_ul = 1;
    std::string out;
};

inline int run_coexist(CoexistArgs a, std::ostream& out) {
    if (!a.scenario.empty()) {
        const auto f = load_scenario(a.scenario);
        if (!f.coexistence) throw ValidationError("scenario file has no coexistence section");
        if (a.indoor.empty()) a.indoor = f.coexistence->indoor;
        if (a.outdoor.empty()) a.outdoor = f.coexistence->outdoor;
        a.separation_m = f.coexistence->separation_m;
        a.wall_loss_db = f.coexistence->wall_loss_db;
        a.offset_slots = f.coexistence->offset_slots;
    }
    if (a.indoor.empty() || a.outdoor.empty()) throw ValidationError("--indoor and --outdoor are required");
    const auto indoor = TddPattern::parse(a.indoor);
    const auto outdoor = TddPattern::parse(a.outdoor);
    const auto rep = overlap_analysis(indoor, outdoor, {}, {}, a.offset_slots);
    const auto risk = risk_report(rep, a.separation_m, a.wall_loss_db);
    Json j{{"indoor", rep.indoor},
           {"outdoor", rep.outdoor},
           {"period_slots", rep.period_slots},
           {"count_unit", rep.symbol_units ? "symbols" : "slots"},
           {"outdoor_offset_slots", rep.outdoor_offset_slots},
           {"outside_validated_range", rep.outside_validated_range},
           {"dl", overlap_json(rep.dl)},
           {"ul", overlap_json(rep.ul)},
           {"indoor_dl_safe", rep.indoor_dl_safe},
           {"risk", Json{{"separation_m", a.separation_m},
                         {"wall_loss_db", a.wall_loss_db},
                         {"level", to_string(risk.level)},
                         {"flags", risk.flags},
                         {"annotations", risk.annotations}}}};
    if (a.search_length > 0) {
        Json safe = Json::array();
        for (const auto& p : find_safe_patterns(outdoor, a.search_length, a.min_ul)) safe.push_back(p.to_string());
        j["safe_patterns"] = safe;
    }
    emit(j.dump(2) + "\n", a.out, out);
    return kExitOk;
}

struct ExclusionArgs {
    std::string scenario;
    bool table15 = false;
    std::optional<std::uint64_t> seed;
    std::optional<double> gamma_dbm;
    std::optional<double> tol_bits;
    double sweep_from_dbm = -40.0;
    double sweep_to_dbm = -130.0;
    int sweep_points = 0;
    unsigned threads = 1;
    std::string out;
    std::string sweep_out;
};

inline int run_exclusion(const ExclusionArgs& a, std::ostream& out) {
    ExclusionSection sec;
    if (!a.scenario.empty()) {
        const auto f = load_scenario(a.scenario);
        if (!f.exclusion) throw ValidationError("scenario file has no exclusion section");
        sec = *f.exclusion;
    } else if (!a.table15) {
        throw ValidationError("give --table15 or --scenario");
    }
    if (!a.seed && a.scenario.empty()) throw ValidationError("--seed is required for exclusion");
    if (a.seed) sec.seed = *a.seed;
    if (a.sweep_points < 0 || a.sweep_points == 1) throw ValidationError("--sweep-points must be 0 or at least 2");
    if (a.sweep_points > 0 && a.sweep_out.empty()) throw ValidationError("--sweep-out is required with --sweep-points");
    if (a.gamma_dbm) sec.params.gamma_dbm = *a.gamma_dbm;
    if (a.tol_bits) sec.tol_bits = *a.tol_bits;

    const auto s = table15_scenario(sec.seed, sec.params);
    const auto uniform = evaluate_allocation(s, PowerAllocation::uniform(s.M, s.K));
    const auto free = solve_maxmin(s, false, sec.tol_bits);
    const auto capped = solve_maxmin(s, true, sec.tol_bits);
    Json j{{"M", s.M},
           {"K", s.K},
           {"L", s.L},
           {"seed", sec.seed},
           {"p_t_mw", s.p_t_mw},
           {"noise_dbm", mw_to_dbm(s.noise_mw)},
           {"gamma_dbm", sec.params.gamma_dbm},
           {"tol_bits", sec.tol_bits},
           {"curves", Json{{"uniform_full_power", curve_json(uniform, s.p_t_mw)},
                           {"maxmin", curve_json(free, s.p_t_mw)},
                           {"maxmin_exclusion", curve_json(capped, s.p_t_mw)}}}};
    emit(j.dump(2) + "\n", a.out, out);

    if (a.sweep_points > 0) {
        std::vector<double> gammas(static_cast<std::size_t>(a.sweep_points));
        for (int i = 0; i < a.sweep_points; ++i)
            gammas[static_cast<std::size_t>(i)] =
                a.sweep_from_dbm + (a.sweep_to_dbm - a.sweep_from_dbm) * i / (a.sweep_points - 1);
        std::vector<MaxMinResult> results(gammas.size());
        parallel_for(gammas.size(), a.threads, [&](std::size_t i) {
            CellFreeScenario si = s;
            si.gamma_norm = gamma_norm_from_dbm(gammas[i], s.p_t_mw);
            results[i] = solve_maxmin(si, true, sec.tol_bits);
        });
        std::ostringstream csv;
        csv << "gamma_dbm,min_se_bps_hz,max_point_power_dbm,bisection_iterations_count\n";
        for (std::size_t i = 0; i < gammas.size(); ++i) {
            double worst = 0.0;
            for (double v : results[i].per_point_power) worst = std::max(worst, v);
            const double dbm = power_dbm(worst, s.p_t_mw);
            csv << fmt("%.3f", gammas[i]) << ',' << fmt("%.9f", results[i].min_se) << ','
                << (std::isfinite(dbm) ? fmt("%.6f", dbm) : std::string("-inf")) << ','
                << results[i].bisection_iterations << '\n';
        }
        emit(csv.str(), a.sweep_out, out);
    }
    return kExitOk;
}

struct UsecasesArgs {
    std::string format = "csv";
    std::string out;
};

inline int run_usecases(const UsecasesArgs& a, std::ostream& out) {
    const auto ucs = builtin_use_cases();
    if (a.format == "json") {
        Json arr = Json::array();
        for (const auto& uc : ucs) {
            auto j = npn::detail::write_usecase(uc);
            j["csa_network_reliability"] = uc.network_reliability;
            arr.push_back(j);
        }
        emit(arr.dump(2) + "\n", a.out, out);
        return kExitOk;
    }
    if (a.format != "csv") throw ValidationError("--format must be csv or json");
    std::ostringstream csv;
    csv << "id,name,message_size_bytes_min,message_size_bytes_max,cycle_time_ms_min,cycle_time_ms_max,bitrate_mbps,"
           "csa_nines_min,csa_nines_max,csa_nines_open_upper,survival_time_cycles,latency_bound_ms_min,"
           "latency_bound_ms_max,network_reliability_frac,network_reliability_is_lower_bound\n";
    auto num = [](double v) { return fmt("%.10g", v); };
    for (const auto& uc : ucs) {
        csv << csv_field(uc.id) << ',' << csv_field(uc.name) << ',' << num(uc.message_size_bytes.min) << ','
            << num(uc.message_size_bytes.max) << ',' << num(uc.cycle_time_ms.min) << ',' << num(uc.cycle_time_ms.max)
            << ',' << (uc.bitrate_mbps ? num(*uc.bitrate_mbps) : std::string()) << ',' << num(uc.csa_nines.min) << ','
            << num(uc.csa_nines.max) << ',' << (uc.csa_nines.open_upper ? "true" : "false") << ','
            << uc.survival_time_cycles << ',' << num(uc.latency_bound_ms.min) << ',' << num(uc.latency_bound_ms.max)
            << ',' << num(uc.network_reliability) << ',' << (uc.reliability_is_lower_bound ? "true" : "false")
            << '\n';
    }
    emit(csv.str(), a.out, out);
    return kExitOk;
}

}  // namespace detail

/// Parses argv and dispatches. argv[0] is the program name.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Industrial private 5G network planning toolkit", "npnkit"};
    app.require_subcommand(0, 1);
    bool version = false;
    app.add_flag("--version", version, "Print version and preset-data checksum");

    detail::LatencyArgs lat;
    auto* c_lat = app.add_subcommand("latency", "One-way user-plane latency over a TDD pattern");
    c_lat->add_option("--scenario", lat.scenario, "Scenario file (scheduling and band sections)");
    c_lat->add_option("--pattern", lat.pattern, "Slot pattern over D/U/S, or FDD");
    c_lat->add_option("--scs", lat.scs, "Subcarrier spacing in kHz");
    c_lat->add_option("--config", lat.preset, "baseline or potential");
    c_lat->add_option("--direction", lat.direction, "dl or ul");
    c_lat->add_option("--retx", lat.retx, "Largest retransmission count to report");
    c_lat->add_option("--bound-ms", lat.bound_ms, "Latency bound for the attempt count");
    c_lat->add_option("--processing-table", lat.processing_table, "Processing-time table (JSON)");
    c_lat->add_option("--tti", lat.tti, "TTI length in symbols");
    c_lat->add_option("--out", lat.out, "Output file (JSON)");

    detail::CapacityArgs cap;
    auto* c_cap = app.add_subcommand("capacity", "Maximum served users per use case");
    c_cap->add_option("--scenario", cap.scenario, "Scenario file");
    c_cap->add_option("--band", cap.band, "Band preset: fdd2100, tdd3800, tdd26000");
    c_cap->add_option("--pattern", cap.pattern, "TDD pattern override");
    c_cap->add_option("--tti", cap.tti, "TTI length in symbols");
    c_cap->add_option("--antenna", cap.antenna, "omni, das or aas");
    c_cap->add_option("--gnbs", cap.gnbs, "gNB count on the default hall (1, 3, 12)");
    c_cap->add_option("--usecase", cap.usecases, "Use case id (repeatable, or 'all')");
    c_cap->add_option("--seed", cap.seed, "Random seed")->required();
    c_cap->add_option("--drops", cap.drops, "Number of snapshot drops");
    c_cap->add_option("--threads", cap.threads, "Worker threads");
    c_cap->add_option("--out", cap.out, "Output file (CSV)");

    detail::SinrMapArgs map;
    auto* c_map = app.add_subcommand("sinr-map", "SINR heatmap over the hall");
    c_map->add_option("--scenario", map.scenario, "Scenario file");
    c_map->add_option("--band", map.band, "Band preset");
    c_map->add_option("--pattern", map.pattern, "TDD pattern override");
    c_map->add_option("--antenna", map.antenna, "omni, das or aas");
    c_map->add_option("--gnbs", map.gnbs, "gNB count on the default hall (1, 3, 12)");
    c_map->add_option("--direction", map.direction, "dl or ul");
    c_map->add_option("--resolution-m", map.resolution_m, "Grid resolution in metres");
    c_map->add_option("--activity", map.activity, "Interferer activity in [0, 1]");
    c_map->add_option("--out", map.out, "Output file (CSV)");

    detail::CoexistArgs co;
    auto* c_co = app.add_subcommand("coexist", "Indoor/outdoor TDD overlap analysis");
    c_co->add_option("--scenario", co.scenario, "Scenario file (coexistence section)");
    c_co->add_option("--indoor", co.indoor, "Indoor pattern");
    c_co->add_option("--outdoor", co.outdoor, "Outdoor pattern");
    c_co->add_option("--separation", co.separation_m, "UE separation in metres");
    c_co->add_option("--wall-loss", co.wall_loss_db, "Wall loss in dB");
    c_co->add_option("--offset-slots", co.offset_slots, "Outdoor frame offset in slots");
    c_co->add_option("--search-length", co.search_length, "Also list safe indoor patterns of this length");
    c_co->add_option("--min-ul", co.min_ul, "Minimum UL slots for the search");
    c_co->add_option("--out", co.out, "Output file (JSON)");

    detail::ExclusionArgs ex;
    auto* c_ex = app.add_subcommand("exclusion", "Max-min power allocation with an exclusion zone");
    c_ex->add_option("--scenario", ex.scenario, "Scenario file (exclusion section)");
    c_ex->add_flag("--table15", ex.table15, "Use the reference factory scenario");
    c_ex->add_option("--seed", ex.seed, "Random seed");
    c_ex->add_option("--gamma-dbm", ex.gamma_dbm, "Exclusion-zone power ceiling in dBm");
    c_ex->add_option("--tol-bits", ex.tol_bits, "Bisection tolerance in bit/s/Hz");
    c_ex->add_option("--sweep-from-dbm", ex.sweep_from_dbm, "First gamma of the sweep");
    c_ex->add_option("--sweep-to-dbm", ex.sweep_to_dbm, "Last gamma of the sweep");
    c_ex->add_option("--sweep-points", ex.sweep_points, "Number of sweep points (0 disables)");
    c_ex->add_option("--sweep-out", ex.sweep_out, "Sweep output file (CSV)");
    c_ex->add_option("--threads", ex.threads, "Worker threads for the sweep");
    c_ex->add_option("--out", ex.out, "Output file (JSON)");

    detail::UsecasesArgs uc;
    auto* c_uc = app.add_subcommand("usecases", "List the built-in use-case catalogue");
    c_uc->add_option("--format", uc.format, "csv or json");
    c_uc->add_option("--out", uc.out, "Output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitInvalid;
    }

    try {
        if (version) {
            out << "npnkit " << kVersion << " presets-fnv1a64 " << preset_checksum() << "\n";
            return kExitOk;
        }
        if (c_lat->parsed()) return detail::run_latency(lat, out);
        if (c_cap->parsed()) return detail::run_capacity(cap, out);
        if (c_map->parsed()) return detail::run_sinr_map(map, out);
        if (c_co->parsed()) return detail::run_coexist(co, out);
        if (c_ex->parsed()) return detail::run_exclusion(ex, out);
        if (c_uc->parsed()) return detail::run_usecases(uc, out);
        err << "error: a subcommand is required\n" << app.help();
        return kExitInvalid;
    } catch (const SolverFailure& e) {
        err << "solver failure: " << e.what() << "\n";
        return kExitSolver;
    } catch (const ParseError& e) {
        err << "parse error (byte " << e.position << "): " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}

}  // namespace npn::cli
