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

#include <gtest/gtest.h>

#include <cmath>

#include "npnkit/capacity_engine.hpp"
#include "oracles.hpp"

using namespace npn;

namespace {

CapacityOptions quick(int drops = 4) {
    CapacityOptions o;
    o.n_drops = drops;
    return o;
}

TEST(TransmissionBandwidth, MatchesGuardBandDerivation) {
    // minimum guard bands in kHz per (scs, bandwidth)
    EXPECT_EQ(transmission_bandwidth_rbs(20, 30), oracle::rbs_from_guard_band(20, 30, 805));
    EXPECT_EQ(transmission_bandwidth_rbs(100, 30), oracle::rbs_from_guard_band(100, 30, 845));
    EXPECT_EQ(transmission_bandwidth_rbs(400, 120), oracle::rbs_from_guard_band(400, 120, 9860));
    EXPECT_EQ(transmission_bandwidth_rbs(20, 30), 51);
    EXPECT_THROW(transmission_bandwidth_rbs(33, 30), ValidationError);
    EXPECT_THROW(transmission_bandwidth_rbs(20.5, 30), ValidationError);
}

TEST(Resources, DirectionFractions) {
    const auto band = BandConfig::tdd3800();
    ResourceModel m = ResourceModel::for_band(band);
    m.control_overhead = 0.0;
    const double full = resources_per_second(band, TddPattern::parse("DDDD"), Direction::DL, m);
    EXPECT_DOUBLE_EQ(full, 273.0 * 28000.0);
    EXPECT_DOUBLE_EQ(resources_per_second(band, TddPattern::parse("DUDU"), Direction::DL, m), full * 0.5);
    const auto p = TddPattern::parse("DDDSU");
    const double dl = p.direction_fraction(Direction::DL), ul = p.direction_fraction(Direction::UL);
    const double guard = static_cast<double>(p.count(SlotType::S) * 2) / p.period_symbols();
    EXPECT_NEAR(dl + ul + guard, 1.0, 1e-15);
}

TEST(Resources, OverheadScales) {
    const auto band = BandConfig::fdd2100();
    const auto m = ResourceModel::for_band(band);
    ResourceModel none = m;
    none.control_overhead = 0.0;
    EXPECT_NEAR(resources_per_second(band, Direction::DL, m), 0.9 * resources_per_second(band, Direction::DL, none), 1e-6);
}

TEST(Demand, DirectDivision) {
    UseCaseSpec uc = *find_use_case("UC1");
    uc.bitrate_mbps.reset();
    uc.message_size_bytes = ValueRange::exactly(1000);
    uc.cycle_time_ms = ValueRange::exactly(10);
    const double r = required_user_resources_at_se(uc, 1.0, 1e-12, 1);
    EXPECT_NEAR(r * kBitsPerRbSymbolPerSe, 0.8e6, 1e-3);
    auto faster = uc;
    faster.cycle_time_ms = ValueRange::exactly(5);
    EXPECT_NEAR(required_user_resources_at_se(faster, 1.0, 1e-12, 1), 2.0 * r, 1e-6);
    EXPECT_NEAR(required_user_resources_at_se(uc, 1.0, 0.01, 2), 1.01 * r, 1e-6);
    EXPECT_THROW(required_user_resources_at_se(uc, 0.0, 0.01, 1), InfeasibleLink);
    EXPECT_THROW(required_user_resources_at_se(uc, 1.0, 0.01, 0), ValidationError);
}

TEST(Demand, ExpectedTransmissions) {
    EXPECT_DOUBLE_EQ(expected_transmissions(0.1, 1), 1.0);
    EXPECT_DOUBLE_EQ(expected_transmissions(0.1, 3), 1.0 + 0.1 + 0.01);
}

TEST(SeIdentity, PublishedFddAnchors) {
    const auto uc7 = *find_use_case("UC7");
    EXPECT_NEAR(se_per_cell(175, uc7.rate_mbps(), 20.0, 1), 3.50, 0.01);
    EXPECT_NEAR(se_per_cell(725, uc7.rate_mbps(), 20.0, 12), 1.21, 0.01);
}

TEST(Assemble, MinRule) {
    const auto r = assemble_capacity(950, 163, BandConfig::fdd2100(), *find_use_case("UC7"), 3, 20);
    EXPECT_EQ(r.combined, 163);
}

TEST(Load, ZeroUsersFeasible) {
    const auto s = FactoryScenario::default_hall(3);
    const auto r = evaluate_load(s, BandConfig::tdd3800(), RadioConfig::preset("tdd3800", AntennaKind::Omni),
                                 *find_use_case("UC1"), Direction::DL, 0, 1, quick());
    EXPECT_TRUE(r.feasible);
    EXPECT_EQ(r.worst_utilization, 0.0);
}

TEST(Load, SingleNearbyUserFeasible) {
    FactoryScenario s = FactoryScenario::default_hall(1);
    s.hall = {4, 4, 10};
    s.gnb_positions = {{2, 2, 8}};
    for (const auto& uc : builtin_use_cases()) {
        const auto band = BandConfig::tdd3800("DDDSU", 2);
        if (attempts_for(band, uc, Direction::DL) < 1) continue;
        EXPECT_TRUE(evaluate_load(s, band, RadioConfig::preset("tdd3800", AntennaKind::Omni), uc, Direction::DL, 1, 1,
                                  quick())
                        .feasible)
            << uc.id;
    }
}

TEST(Load, FeasibilityMonotoneInUsers) {
    const auto s = FactoryScenario::default_hall(3);
    const auto band = BandConfig::tdd3800();
    const auto radio = RadioConfig::preset("tdd3800", AntennaKind::Omni);
    const auto uc = *find_use_case("UC1");
    for (auto d : {Direction::DL, Direction::UL}) {
        double prev_util = 0.0;
        bool seen_infeasible = false;
        for (int n = 5; n <= 200; n += 15) {
            const auto r = evaluate_load(s, band, radio, uc, d, n, 7, quick(3));
            if (seen_infeasible) {
                EXPECT_FALSE(r.feasible) << n;
            }
            if (!r.feasible) seen_infeasible = true;
            if (d == Direction::DL) {
                EXPECT_GE(r.worst_utilization, prev_util - 1e-12) << n;
            }
            prev_util = r.worst_utilization;
        }
    }
}

TEST(Capacity, ResultInvariants) {
    const auto s = FactoryScenario::default_hall(3);
    const auto uc = *find_use_case("UC7");
    for (const auto& band : {BandConfig::fdd2100(), BandConfig::tdd3800("DUDU", 7)}) {
        for (auto kind : {AntennaKind::Omni, AntennaKind::Das}) {
            auto scen = kind == AntennaKind::Das ? FactoryScenario::default_hall(12, band.carrier_ghz) : s;
            scen.carrier_ghz = band.carrier_ghz;
            const auto r = max_served_users(scen, band, RadioConfig::preset(band.name, kind), uc, 3, quick());
            EXPECT_EQ(r.combined, std::min(r.max_users_dl, r.max_users_ul));
            const int cells = kind == AntennaKind::Das ? 1 : 3;
            EXPECT_EQ(r.n_cells, cells);
            EXPECT_DOUBLE_EQ(r.se_per_cell_dl,
                             r.max_users_dl * uc.rate_mbps() / (direction_bandwidth_mhz(band, Direction::DL) * cells));
            EXPECT_DOUBLE_EQ(r.se_per_cell_ul,
                             r.max_users_ul * uc.rate_mbps() / (direction_bandwidth_mhz(band, Direction::UL) * cells));
            EXPECT_GT(r.combined, 0);
        }
    }
}

TEST(Capacity, ThreadCountDoesNotChangeResult) {
    const auto s = FactoryScenario::default_hall(3);
    auto one = quick(6);
    auto many = one;
    many.threads = 4;
    const auto uc = *find_use_case("UC1");
    const auto radio = RadioConfig::preset("tdd3800", AntennaKind::Aas);
    EXPECT_EQ(max_served_users(s, BandConfig::tdd3800(), radio, uc, 11, one),
              max_served_users(s, BandConfig::tdd3800(), radio, uc, 11, many));
}

TEST(Capacity, UnreachableLatencyGivesZero) {
    const auto s = FactoryScenario::default_hall(3);
    const auto uc = *find_use_case("urllc_modified");  // 1 ms bound, full-slot TTI on DDDSU cannot make it
    const auto r = max_served_users(s, BandConfig::tdd3800(), RadioConfig{}, uc, 1, quick(2));
    EXPECT_EQ(r.combined, 0);
}

}  // namespace
