// Copyright 2026 The treebsm Authors
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

#include <random>

#include "gtest/gtest.h"
#include "treebsm/core/branching.h"
#include "treebsm/core/channel.h"
#include "treebsm/core/errors.h"
#include "treebsm/core/tree.h"

using namespace treebsm;

TEST(branching, photon_count_milestones) {
    EXPECT_EQ(photon_count({2, 2}), 7);
    EXPECT_EQ(photon_count({15, 15, 2}), 691);
    EXPECT_EQ(photon_count({74, 15}), 1185);
    EXPECT_EQ(photon_count({1}), 2);
}

TEST(branching, parse_and_print) {
    auto b = BranchingVector::parse("15,15,2");
    EXPECT_EQ(b, BranchingVector({15, 15, 2}));
    EXPECT_EQ(b.str(), "15,15,2");
    EXPECT_EQ(BranchingVector::parse(" 3 , 2 ").str(), "3,2");
    EXPECT_EQ(BranchingVector::parse("(3,2)").str(), "3,2");
    EXPECT_THROW(BranchingVector::parse(""), UsageError);
    EXPECT_THROW(BranchingVector::parse("3,,2"), UsageError);
    EXPECT_THROW(BranchingVector::parse("3,x"), UsageError);
    EXPECT_THROW(BranchingVector::parse("0"), UsageError);
    EXPECT_THROW(BranchingVector::parse("-1"), UsageError);
}

TEST(branching, photon_count_strictly_monotone) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; trial++) {
        int d = 1 + rng() % 4;
        std::vector<int> v(d);
        for (auto &x : v) {
            x = 1 + rng() % 10;
        }
        auto base = photon_count(BranchingVector(v));
        for (int k = 0; k < d; k++) {
            auto w = v;
            w[k]++;
            EXPECT_GT(photon_count(BranchingVector(w)), base);
        }
    }
}

TEST(tree, small_shapes) {
    auto t = build_tree({2});
    EXPECT_EQ(t.size(), 3);
    EXPECT_EQ(t.children(0).size(), 2u);
    EXPECT_TRUE(t.children(1).empty());

    auto t32 = build_tree({3, 2});
    EXPECT_EQ(t32.size(), 10);
    for (int v = 1; v <= 3; v++) {
        EXPECT_EQ(t32.children(v).size(), 2u);
        EXPECT_EQ(t32.parent(v), 0);
    }

    auto t22 = build_tree({2, 2});
    EXPECT_EQ(t22.size(), 7);
    EXPECT_EQ(t22.level_range(0), std::make_pair(0, 1));
    EXPECT_EQ(t22.level_range(1), std::make_pair(1, 3));
    EXPECT_EQ(t22.level_range(2), std::make_pair(3, 7));
    EXPECT_EQ(t22.parent(3), 1);
    EXPECT_EQ(t22.parent(6), 2);
    EXPECT_EQ(t22.neighbors(1), (std::vector<int>{0, 3, 4}));
}

TEST(tree, invariants_on_random_vectors) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; trial++) {
        int d = 1 + rng() % 4;
        std::vector<int> v(d);
        for (auto &x : v) {
            x = 1 + rng() % 10;
        }
        BranchingVector b(v);
        auto t = build_tree(b);
        ASSERT_EQ(t.size(), photon_count(b));
        int roots = 0;
        for (int u = 0; u < t.size(); u++) {
            if (t.parent(u) < 0) {
                roots++;
                EXPECT_EQ(t.level(u), 0);
            } else {
                EXPECT_EQ(t.level(t.parent(u)), t.level(u) - 1);
            }
            EXPECT_EQ((int)t.children(u).size(), b.at_or_zero(t.level(u)));
            for (int c : t.children(u)) {
                EXPECT_EQ(t.parent(c), u);
            }
        }
        EXPECT_EQ(roots, 1);
    }
}

TEST(tree, cap) {
    EXPECT_THROW(build_tree({100, 100, 100}), SizeError);
    try {
        build_tree({10, 10}, 50);
        FAIL();
    } catch (const SizeError &e) {
        EXPECT_NE(std::string(e.what()).find("50"), std::string::npos);
    }
}

TEST(channel, derived_rates) {
    auto p = ChannelParams::make(0.9, 0.01);
    EXPECT_NEAR(p.eps_bsm(), 0.0297, 1e-15);
    EXPECT_NEAR(p.err_dzz(), 0.0198, 1e-15);
    EXPECT_DOUBLE_EQ(p.err_dxx(), p.eps_bsm());
    for (double eps : {0.0, 1e-5, 0.01, 0.2, 0.5, 1.0}) {
        auto q = ChannelParams::make(1.0, eps);
        EXPECT_NEAR(q.eps_bsm(), 2 * q.eps_d() - (4.0 / 3.0) * q.eps_d() * q.eps_d(), 1e-12);
        EXPECT_LE(q.err_dzz(), q.err_dxx());
    }
    EXPECT_THROW(ChannelParams::make(1.1, 0), UsageError);
    EXPECT_THROW(ChannelParams::make(0.5, -0.1), UsageError);
}

TEST(channel, outcome_probabilities) {
    auto p1 = ChannelParams::make(1.0, 0);
    EXPECT_DOUBLE_EQ(outcome_probability(OutcomeCounts{2, 0, 0}, p1), 0.25);
    auto p9 = ChannelParams::make(0.9, 0);
    EXPECT_NEAR(outcome_probability(OutcomeCounts{1, 1, 0}, p9), 0.32805, 1e-15);
    EXPECT_DOUBLE_EQ(outcome_probability(BsmOutcome::Failed, p9), 1 - 0.81);
}

TEST(channel, multinomial_normalization) {
    for (double eta : {0.0, 0.3, 0.95, 1.0}) {
        auto p = ChannelParams::make(eta, 0);
        for (int s = 0; s <= 50; s++) {
            double total = 0;
            for_each_outcome_counts(s, [&](OutcomeCounts c) { total += outcome_probability(c, p); });
            EXPECT_NEAR(total, 1.0, 1e-10) << "s=" << s << " eta=" << eta;
        }
    }
}

TEST(channel, binomial_exact) {
    EXPECT_EQ(binomial(10, 3), 120);
    EXPECT_EQ(binomial(50, 25), 126410606437752.0);
    EXPECT_EQ(multinomial(2, 3, 4), 1260);
    EXPECT_EQ(binomial(5, 7), 0);
}
