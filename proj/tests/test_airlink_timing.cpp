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
#include <random>
#include <string>

#include "npnkit/airlink_timing.hpp"
#include "alignment_cases.hpp"
#include "oracles.hpp"

using namespace npn;
using testcases::Case;
using testcases::oracle_stages;
using testcases::random_case;

namespace {

TEST(Numerology, SlotDurations) {
    EXPECT_DOUBLE_EQ(slot_duration(Numerology::from_khz(15)), 1.0);
    EXPECT_DOUBLE_EQ(slot_duration(Numerology::from_khz(30)), 0.5);
    EXPECT_DOUBLE_EQ(slot_duration(Numerology::from_khz(60)), 0.25);
    EXPECT_DOUBLE_EQ(slot_duration(Numerology::from_khz(120)), 0.125);
    EXPECT_DOUBLE_EQ(Numerology::from_khz(30).symbol_duration_ms(), 0.5 / 14);
    EXPECT_THROW(Numerology::from_khz(45), ValidationError);
}

TEST(TddPattern, ParseAndPeriod) {
    const auto p = TddPattern::parse("DDDSU");
    EXPECT_EQ(p.size(), 5u);
    EXPECT_EQ(p.to_string(), "DDDSU");
    EXPECT_DOUBLE_EQ(p.period_ms(Numerology::from_khz(30)), 2.5);
    EXPECT_THROW(TddPattern::parse("DDXU"), ValidationError);
    EXPECT_THROW(TddPattern::parse(""), ValidationError);
    EXPECT_THROW(TddPattern::parse("DS", SpecialSplit{10, 2, 3}), ValidationError);
}

TEST(TddPattern, SpecialSlotSymbols) {
    const auto p = TddPattern::parse("S");
    EXPECT_EQ(p.direction_symbols(Direction::DL), 10);
    EXPECT_EQ(p.direction_symbols(Direction::UL), 2);
}

TEST(Alignment, MatchesEnumerationOracleOnRandomCases) {
    std::mt19937_64 gen(20260101);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        const auto c = random_case(gen);
        const auto pattern = TddPattern::parse(c.pattern);
        const auto expected = oracle::worst_alignment_symbols(c.pattern, {}, oracle_stages(c.config, c.numerology, c.direction));
        if (expected < 0) {
            EXPECT_THROW(worst_case_alignment(pattern, c.numerology, c.config, c.direction), NoUsableSlot) << c.pattern;
            continue;
        }
        const double got = worst_case_alignment(pattern, c.numerology, c.config, c.direction);
        EXPECT_EQ(got, static_cast<double>(expected) * c.numerology.symbol_duration_ms())
            << c.pattern << " scs=" << c.numerology.scs_khz() << " dir=" << to_string(c.direction);
        ++checked;
    }
    EXPECT_GT(checked, 100);
}

TEST(Alignment, DdsuDlMatchesAllSeventyOffsets) {
    const auto n = Numerology::from_khz(30);
    const auto c = SchedulingConfig::baseline();
    const auto expected = oracle::worst_alignment_symbols("DDDSU", {}, oracle_stages(c, n, Direction::DL));
    EXPECT_EQ(worst_case_alignment(TddPattern::parse("DDDSU"), n, c, Direction::DL),
              static_cast<double>(expected) * n.symbol_duration_ms());
}

TEST(Alignment, ConfiguredGrantBeatsSchedulingRequest) {
    const auto n = Numerology::from_khz(30);
    const auto p = TddPattern::parse("DDDSU");
    auto sr = SchedulingConfig::baseline();
    auto cg = sr;
    cg.ul_access = UlAccess::ConfiguredGrant;
    EXPECT_LT(worst_case_alignment(p, n, cg, Direction::UL), worst_case_alignment(p, n, sr, Direction::UL));
}

TEST(Alignment, AllDownlinkBelowOneSlot) {
    const auto n = Numerology::from_khz(30);
    EXPECT_LT(worst_case_alignment(TddPattern::parse("DDDD"), n, SchedulingConfig::baseline(), Direction::DL),
              n.slot_duration_ms());
}

TEST(Alignment, NoUsableSlot) {
    const auto n = Numerology::from_khz(30);
    EXPECT_THROW(worst_case_alignment(TddPattern::parse("DDDD"), n, SchedulingConfig::baseline(), Direction::UL),
                 NoUsableSlot);
}

TEST(Alignment, BelowTwoPeriodsForPresentDirections) {
    std::mt19937_64 gen(99);
    for (int i = 0; i < 200; ++i) {
        auto c = random_case(gen);
        c.config.ul_access = UlAccess::ConfiguredGrant;
        const auto p = TddPattern::parse(c.pattern);
        try {
            EXPECT_LT(worst_case_alignment(p, c.numerology, c.config, c.direction), 2.0 * p.period_ms(c.numerology));
        } catch (const NoUsableSlot&) {
        }
    }
}

TEST(Latency, ZeroRetransmissionsIsT1) {
    const auto r = one_way_latency(TddPattern::parse("DDDSU"), Numerology::from_khz(30), SchedulingConfig::baseline(),
                                   Direction::DL, 0);
    EXPECT_EQ(r.t_up_ms, r.t1_ms);
    EXPECT_EQ(r.t_harq_ms, r.t1_ms + r.t2_ms);
}

TEST(Latency, AffineInRetransmissions) {
    const auto p = TddPattern::parse("DDDSU");
    const auto n = Numerology::from_khz(30);
    for (auto cfg : {SchedulingConfig::baseline(), SchedulingConfig::potential()})
        for (auto d : {Direction::DL, Direction::UL}) {
            const auto base = one_way_latency(p, n, cfg, d, 0);
            for (int k = 0; k <= 6; ++k) {
                const auto r = one_way_latency(p, n, cfg, d, k);
                EXPECT_EQ(r.t_up_ms, base.t1_ms + k * base.t_harq_ms);
                if (k > 0) {
                    EXPECT_GT(r.t_up_ms, one_way_latency(p, n, cfg, d, k - 1).t_up_ms);
                }
            }
        }
}

TEST(Latency, SymmetricDuduGivesEqualDirections) {
    auto cfg = SchedulingConfig::baseline();
    cfg.ul_access = UlAccess::ConfiguredGrant;
    cfg.harq_feedback_occasions_per_slot = cfg.pdcch_occasions_per_slot;
    cfg.processing_table = ProcessingTable::uniform(8);
    const auto p = TddPattern::parse("DUDU");
    const auto n = Numerology::from_khz(30);
    for (int k = 0; k <= 5; ++k)
        EXPECT_EQ(one_way_latency(p, n, cfg, Direction::DL, k).t_up_ms, one_way_latency(p, n, cfg, Direction::UL, k).t_up_ms);
}

TEST(Latency, PotentialMidBandIsSubMillisecond) {
    const auto r = one_way_latency(TddPattern::parse("DDDSU"), Numerology::from_khz(30), SchedulingConfig::potential(),
                                   Direction::DL, 0);
    EXPECT_LT(r.t_up_ms, 1.0);
}

TEST(Latency, NeverFasterThanOnAirTime) {
    std::mt19937_64 gen(5);
    for (int i = 0; i < 100; ++i) {
        const auto c = random_case(gen);
        try {
            const auto r = one_way_latency(TddPattern::parse(c.pattern), c.numerology, c.config, c.direction, 0);
            EXPECT_GE(r.t_up_ms, c.config.tti_symbols * c.numerology.symbol_duration_ms());
        } catch (const NoUsableSlot&) {
        }
    }
}

TEST(Latency, DoublingScsNeverSlower) {
    auto cfg = SchedulingConfig::baseline();
    cfg.processing_table = ProcessingTable::uniform(10);
    for (const char* pat : {"DDDSU", "DUDU", "DDSU", "DSUUU"})
        for (int scs : {15, 30, 60}) {
            const auto p = TddPattern::parse(pat);
            const auto n1 = Numerology::from_khz(scs);
            const auto n2 = *n1.doubled();
            for (auto d : {Direction::DL, Direction::UL}) {
                const auto a = one_way_latency(p, n1, cfg, d, 1);
                const auto b = one_way_latency(p, n2, cfg, d, 1);
                EXPECT_LE(b.t1_ms, a.t1_ms);
                EXPECT_LE(b.t2_ms, a.t2_ms);
                EXPECT_LE(worst_case_alignment(p, n2, cfg, d), worst_case_alignment(p, n1, cfg, d));
            }
        }
}

TEST(Latency, ConfiguredGrantUplinkT1NoWorse) {
    std::mt19937_64 gen(17);
    for (int i = 0; i < 100; ++i) {
        auto c = random_case(gen);
        c.config.ul_access = UlAccess::SrBased;
        auto cg = c.config;
        cg.ul_access = UlAccess::ConfiguredGrant;
        const auto p = TddPattern::parse(c.pattern);
        try {
            EXPECT_LE(one_way_latency(p, c.numerology, cg, Direction::UL, 0).t1_ms,
                      one_way_latency(p, c.numerology, c.config, Direction::UL, 0).t1_ms);
        } catch (const NoUsableSlot&) {
        }
    }
}

TEST(Attempts, BoundaryIsInclusive) {
    const auto p = TddPattern::parse("DDDSU");
    const auto n = Numerology::from_khz(30);
    const auto cfg = SchedulingConfig::baseline();
    const auto r = one_way_latency(p, n, cfg, Direction::DL, 0);
    const auto exact = max_attempts_within_bound(p, n, cfg, Direction::DL, r.t_up_after(2));
    EXPECT_TRUE(exact.initial_fits);
    EXPECT_EQ(exact.n_retx, 2);
    EXPECT_EQ(exact.attempts(), 3);
    const auto below = max_attempts_within_bound(p, n, cfg, Direction::DL, r.t1_ms * 0.5);
    EXPECT_FALSE(below.initial_fits);
    EXPECT_EQ(below.attempts(), 0);
    EXPECT_THROW(max_attempts_within_bound(p, n, cfg, Direction::DL, 0.0), ValidationError);
}

TEST(Attempts, HigherScsFitsAtLeastAsMany) {
    const auto p = TddPattern::parse("DUDU");
    const auto cfg = SchedulingConfig::baseline();
    for (auto d : {Direction::DL, Direction::UL})
        EXPECT_GE(max_attempts_within_bound(p, Numerology::from_khz(120), cfg, d, 5.0).n_retx,
                  max_attempts_within_bound(p, Numerology::from_khz(60), cfg, d, 5.0).n_retx);
}

TEST(ProcessingTable, Cap2NeverSlowerThanCap1) {
    EXPECT_NO_THROW(ProcessingTable::defaults().validate());
    auto t = ProcessingTable::defaults();
    t.set(ProcessingChannel::PdschDecode, UeCapability::Cap2, 30, 50);
    EXPECT_THROW(t.validate(), ValidationError);
}

TEST(SchedulingConfig, RejectsOutOfRange) {
    auto c = SchedulingConfig::baseline();
    c.tti_symbols = 1;
    EXPECT_THROW(c.validate(), ValidationError);
    c = SchedulingConfig::baseline();
    c.pdcch_occasions_per_slot = 0;
    EXPECT_THROW(c.validate(), ValidationError);
}

TEST(Handover, L3ComponentsSumTo42To52) {
    const auto r = handover_interruption_budget(l3_handover_components());
    EXPECT_EQ(r.min_ms, 42.0);
    EXPECT_EQ(r.max_ms, 52.0);
}

TEST(Handover, EdgeCases) {
    EXPECT_EQ(handover_interruption_budget({}), (InterruptionRange{0, 0}));
    EXPECT_EQ(handover_interruption_budget({{"x", 3, 7}}), (InterruptionRange{3, 7}));
    EXPECT_THROW(handover_interruption_budget({{"neg", -1, 2}}), NegativeComponent);
    EXPECT_THROW(handover_interruption_budget({{"inv", 5, 2}}), ValidationError);
}

}  // namespace
