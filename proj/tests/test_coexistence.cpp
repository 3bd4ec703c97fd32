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

#include <numeric>
#include <random>
#include <set>
#include <string>

#include "npnkit/coexistence.hpp"
#include "oracles.hpp"

using namespace npn;

namespace {

struct Tally {
    long long dl = 0, dl_nf = 0, dl_cl = 0, ul = 0, ul_nf = 0, ul_cl = 0;
};

// Brute-force symbol walk over the common period written against the
// string form of the patterns.
Tally oracle_tally(const std::string& in, const std::string& out) {
    Tally t;
    const long long period = std::lcm<long long>(in.size(), out.size()) * 14;
    for (long long s = 0; s < period; ++s) {
        const char a = oracle::symbol_dir(in, {}, s);
        const char b = oracle::symbol_dir(out, {}, s);
        if (a == 'D') {
            ++t.dl;
            t.dl_nf += b == 'D';
            t.dl_cl += b == 'U';
        } else if (a == 'U') {
            ++t.ul;
            t.ul_nf += b == 'U';
            t.ul_cl += b == 'D';
        }
    }
    return t;
}

std::string random_pattern(std::mt19937_64& rng, bool allow_s) {
    std::uniform_int_distribution<int> len(1, 10);
    std::uniform_int_distribution<int> pick(0, allow_s ? 2 : 1);
    std::string s(static_cast<std::size_t>(len(rng)), 'D');
    for (auto& c : s) c = "DUS"[pick(rng)];
    return s;
}

TEST(Overlap, ReferencePairs) {
    const auto a = overlap_analysis(TddPattern::parse("DDDDUDDDUU"), TddPattern::parse("DDDDU"));
    EXPECT_FALSE(a.symbol_units);
    EXPECT_EQ(a.period_slots, 10);
    EXPECT_EQ(a.ul.cross_link_fraction(), Fraction::of(1, 3));
    EXPECT_EQ(a.ul.near_far_fraction(), Fraction::of(2, 3));
    EXPECT_EQ(a.dl.cross_link, 0);
    EXPECT_TRUE(a.indoor_dl_safe);

    const auto b = overlap_analysis(TddPattern::parse("DDDU"), TddPattern::parse("DDDDU"));
    EXPECT_EQ(b.period_slots, 20);
    EXPECT_EQ(b.dl.units, 15);
    EXPECT_EQ(b.dl.near_far, 12);
    EXPECT_EQ(b.dl.cross_link, 3);
    EXPECT_EQ(b.dl.near_far_fraction(), Fraction::of(4, 5));
    EXPECT_EQ(b.dl.cross_link_fraction(), Fraction::of(1, 5));
    EXPECT_FALSE(b.indoor_dl_safe);
}

TEST(Overlap, MatchesBruteForceOnRandomPairs) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 300; ++i) {
        const auto in = random_pattern(rng, i % 2 == 0);
        const auto out = random_pattern(rng, i % 3 == 0);
        const auto r = overlap_analysis(TddPattern::parse(in), TddPattern::parse(out));
        const auto t = oracle_tally(in, out);
        const long long k = r.symbol_units ? 1 : 14;
        EXPECT_EQ(r.dl.units * k, t.dl) << in << " " << out;
        EXPECT_EQ(r.dl.near_far * k, t.dl_nf) << in << " " << out;
        EXPECT_EQ(r.dl.cross_link * k, t.dl_cl) << in << " " << out;
        EXPECT_EQ(r.ul.units * k, t.ul) << in << " " << out;
        EXPECT_EQ(r.ul.near_far * k, t.ul_nf) << in << " " << out;
        EXPECT_EQ(r.ul.cross_link * k, t.ul_cl) << in << " " << out;
        for (const auto* d : {&r.dl, &r.ul}) EXPECT_EQ(d->near_far + d->cross_link + d->quiet, d->units);
        EXPECT_EQ(r.indoor_dl_safe, t.dl_cl == 0);
    }
}

TEST(Overlap, IdenticalPatternsHaveNoCrossLink) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const auto p = TddPattern::parse(random_pattern(rng, true));
        const auto r = overlap_analysis(p, p);
        EXPECT_EQ(r.dl.cross_link, 0);
        EXPECT_EQ(r.ul.cross_link, 0);
        EXPECT_EQ(r.dl.near_far, r.dl.units);
        EXPECT_EQ(r.ul.near_far, r.ul.units);
    }
}

TEST(Overlap, RepetitionInvariance) {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 100; ++i) {
        const auto in = random_pattern(rng, true);
        const auto out = random_pattern(rng, true);
        const auto a = overlap_analysis(TddPattern::parse(in), TddPattern::parse(out));
        const auto b = overlap_analysis(TddPattern::parse(in + in), TddPattern::parse(out + out + out));
        EXPECT_EQ(a.dl.near_far_fraction(), b.dl.near_far_fraction());
        EXPECT_EQ(a.dl.cross_link_fraction(), b.dl.cross_link_fraction());
        EXPECT_EQ(a.ul.near_far_fraction(), b.ul.near_far_fraction());
        EXPECT_EQ(a.ul.cross_link_fraction(), b.ul.cross_link_fraction());
    }
}

TEST(Overlap, OffsetAndValidation) {
    const auto r = overlap_analysis(TddPattern::parse("DDDU"), TddPattern::parse("DDDU"), {}, {}, 1);
    EXPECT_TRUE(r.outside_validated_range);
    EXPECT_GT(r.dl.cross_link, 0);
    EXPECT_EQ(overlap_analysis(TddPattern::parse("DDDU"), TddPattern::parse("DDDU"), {}, {}, 4).dl.cross_link, 0);
    EXPECT_THROW(overlap_analysis(TddPattern::parse("DU"), TddPattern::parse("DU"), Numerology::from_khz(30), Numerology::from_khz(60)),
                 NumerologyMismatch);
    EXPECT_THROW(overlap_analysis(TddPattern::fdd(), TddPattern::parse("DU")), ValidationError);
}

TEST(Fractions, LowestTerms) {
    EXPECT_EQ(Fraction::of(6, 8), (Fraction{3, 4}));
    EXPECT_EQ(Fraction::of(0, 0), (Fraction{0, 1}));
    EXPECT_EQ(Fraction::of(3, 15).to_string(), "1/5");
}

TEST(SafePatterns, ClosedUnderAnalysis) {
    for (const std::string outdoor : {"DDDDU", "DDDSU", "DDDU", "DU", "DDDDDDDSUU"}) {
        const auto found = find_safe_patterns(TddPattern::parse(outdoor), 10, 2);
        std::set<std::string> seen;
        for (const auto& p : found) {
            EXPECT_TRUE(overlap_analysis(p, TddPattern::parse(outdoor)).indoor_dl_safe) << p.to_string();
            EXPECT_GE(p.count(SlotType::U), 2);
            seen.insert(p.to_string());
        }
        // completeness by exhaustive enumeration
        std::size_t expected = 0;
        for (unsigned m = 0; m < 1024; ++m) {
            std::string s(10, 'D');
            for (int i = 0; i < 10; ++i)
                if (m >> i & 1u) s[static_cast<std::size_t>(i)] = 'U';
            if (std::count(s.begin(), s.end(), 'U') < 2) continue;
            const auto t = oracle_tally(s, outdoor);
            if (t.dl_cl == 0) {
                ++expected;
                EXPECT_TRUE(seen.count(s)) << s;
            }
        }
        EXPECT_EQ(found.size(), expected);
    }
}

TEST(SafePatterns, ReferenceAndExtremes) {
    const auto found = find_safe_patterns(TddPattern::parse("DDDDU"), 10, 3);
    bool has = false;
    for (const auto& p : found) has = has || p.to_string() == "DDDDUDDDUU";
    EXPECT_TRUE(has);
    EXPECT_EQ(found.front().to_string(), "DDDDUDDDUU");

    EXPECT_EQ(find_safe_patterns(TddPattern::parse("D"), 4, 1).size(), 15u);
    const auto all_u = find_safe_patterns(TddPattern::parse("U"), 4, 1);
    ASSERT_EQ(all_u.size(), 1u);
    EXPECT_EQ(all_u.front().to_string(), "UUUU");
    EXPECT_THROW(find_safe_patterns(TddPattern::parse("DU"), 0, 1), ValidationError);
    EXPECT_THROW(find_safe_patterns(TddPattern::parse("DU"), 4, 0), ValidationError);
}

TEST(Risk, Levels) {
    const auto cross = overlap_analysis(TddPattern::parse("DDDU"), TddPattern::parse("DDDDU"));
    EXPECT_EQ(risk_report(cross, 1.0, 0.0).level, RiskLevel::High);
    EXPECT_EQ(risk_report(cross, 5.0, 0.0).level, RiskLevel::Medium);
    EXPECT_EQ(risk_report(cross, 50.0, 0.0).level, RiskLevel::Low);
    EXPECT_EQ(risk_report(cross, 1.0, 40.0).level, RiskLevel::Medium);
    const auto same = overlap_analysis(TddPattern::parse("DDDU"), TddPattern::parse("DDDU"));
    EXPECT_EQ(risk_report(same, 1.0, 0.0).level, RiskLevel::Medium);
    const auto rep = risk_report(cross, 1.0, 0.0);
    EXPECT_EQ(rep.flags.size(), 3u);
    EXPECT_STREQ(to_string(RiskLevel::High), "HIGH");
    EXPECT_THROW(risk_report(cross, -1.0, 0.0), ValidationError);
}

TEST(Classify, AllPairs) {
    EXPECT_EQ(classify(Direction::DL, Direction::DL), InterferenceClass::NearFarDlDl);
    EXPECT_EQ(classify(Direction::DL, Direction::UL), InterferenceClass::CrossLinkUe2Ue);
    EXPECT_EQ(classify(Direction::UL, Direction::UL), InterferenceClass::NearFarUlUl);
    EXPECT_EQ(classify(Direction::UL, Direction::DL), InterferenceClass::CrossLinkBs2Bs);
}

}  // namespace
