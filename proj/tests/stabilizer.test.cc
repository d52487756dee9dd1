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

#include "gtest/gtest.h"
#include "treebsm/core/errors.h"
#include "treebsm/montecarlo/rng.h"
#include "treebsm/stabilizer/graph_state.h"
#include "treebsm/stabilizer/tableau.h"

using namespace treebsm;

static std::vector<std::string> rows(const StabilizerTableau &t) {
    std::vector<std::string> out;
    for (const auto &g : t.generators()) {
        out.push_back(g.str());
    }
    return out;
}

static StabilizerTableau cluster3() {
    return graph_state_tableau(3, {{0, 1}, {1, 2}});
}

TEST(pauli_string, parse_print_and_products) {
    auto p = PauliString::parse("-XYZI");
    EXPECT_EQ(p.str(), "-XYZI");
    EXPECT_EQ(p.weight(), 3);
    auto x = PauliString::parse("X");
    auto z = PauliString::parse("Z");
    EXPECT_FALSE(x.commutes(z));
    EXPECT_THROW(x *= z, std::logic_error);
    // XX * ZZ = (XZ)(XZ) = (-iY)(-iY) = -YY
    auto xx = PauliString::parse("XX");
    xx *= PauliString::parse("ZZ");
    EXPECT_EQ(xx.str(), "-YY");
    auto yy = PauliString::parse("YY");
    yy *= PauliString::parse("XX");
    EXPECT_EQ(yy.str(), "-ZZ");
    auto a = PauliString::parse("XZ");
    a *= PauliString::parse("ZX");
    EXPECT_EQ(a.str(), "+YY");
}

TEST(pauli_string, wide_strings_cross_word_boundaries) {
    std::string s(150, 'I');
    s[3] = 'X';
    s[70] = 'Z';
    s[140] = 'Y';
    auto p = PauliString::parse(s);
    std::string t(150, 'I');
    t[70] = 'X';
    t[140] = 'X';
    auto q = PauliString::parse(t);
    EXPECT_TRUE(p.commutes(q));
    p *= q;
    EXPECT_EQ(p.letter(70), 'Y');
    EXPECT_EQ(p.letter(140), 'Z');
}

TEST(graph_state, examples) {
    EXPECT_EQ(rows(cluster3()), (std::vector<std::string>{"+XZI", "+ZXZ", "+IZX"}));
    EXPECT_EQ(rows(graph_state_tableau(1, {})), (std::vector<std::string>{"+X"}));
    EXPECT_EQ(rows(graph_state_tableau(build_tree({2}))), (std::vector<std::string>{"+XZZ", "+ZXI", "+ZIX"}));
}

TEST(graph_state, gates_build_the_same_state) {
    auto tree = build_tree({3, 2});
    StabilizerTableau t(0);
    for (int v = 0; v < tree.size(); v++) {
        t.add_qubit('Z');
        t.h(v);
    }
    for (int v = 1; v < tree.size(); v++) {
        t.cz(tree.parent(v), v);
    }
    EXPECT_TRUE(tableau_equal(t, graph_state_tableau(tree)));
}

TEST(tableau, cnot_and_h_identities) {
    auto t = graph_state_tableau(build_tree({2, 2}));
    auto u = t;
    u.cnot(1, 4);
    u.h(2);
    u.cz(0, 5);
    u.cz(0, 5);
    u.h(2);
    u.cnot(1, 4);
    EXPECT_EQ(rows(u), rows(t));
    // CNOT = H_t CZ H_t
    auto a = t, b = t;
    a.cnot(3, 6);
    b.h(6);
    b.cz(3, 6);
    b.h(6);
    EXPECT_EQ(rows(a), rows(b));
}

TEST(tableau, worked_example_z_measurement) {
    for (int m : {1, -1}) {
        auto t = cluster3();
        MeasureOptions mo;
        mo.forced = m;
        mo.destructive = false;
        auto r = t.measure(1, 'Z', mo);
        EXPECT_FALSE(r.deterministic);
        std::string s = m > 0 ? "+" : "-";
        EXPECT_EQ(rows(t), (std::vector<std::string>{s + "XII", s + "IZI", s + "IIX"}));
    }
}

TEST(tableau, worked_example_x_measurement) {
    for (int m : {1, -1}) {
        auto t = cluster3();
        MeasureOptions mo;
        mo.forced = m;
        mo.destructive = false;
        t.measure(1, 'X', mo);
        std::string s = m > 0 ? "+" : "-";
        auto got = rows(t);
        std::sort(got.begin(), got.end());
        std::vector<std::string> want{s + "ZIZ", "+XIX", s + "IXI"};
        std::sort(want.begin(), want.end());
        EXPECT_EQ(got, want);
    }
}

TEST(tableau, destructive_drops_residual) {
    auto t = cluster3();
    MeasureOptions mo;
    mo.forced = -1;
    t.measure(1, 'Z', mo);
    EXPECT_EQ(rows(t), (std::vector<std::string>{"-XII", "-IIX"}));
    EXPECT_TRUE(t.removed(1));
    EXPECT_THROW(t.measure(1, 'Z', mo), UsageError);
}

TEST(tableau, deterministic_outcomes) {
    StabilizerTableau t(0);
    t.add_qubit('X');
    MeasureOptions mo;
    auto r = t.measure(0, 'X', mo);
    EXPECT_TRUE(r.deterministic);
    EXPECT_EQ(r.outcome, 1);

    StabilizerTableau u(0);
    u.add_qubit('X');
    mo.forced = -1;
    EXPECT_THROW(u.measure(0, 'X', mo), ContradictionError);

    // Z_0 Z_2 fixed on a 3-cluster after X_1 measurement: deterministic product
    auto c = cluster3();
    MeasureOptions f;
    f.forced = -1;
    c.measure(1, 'X', f);
    f.forced.reset();
    f.preferred = 1;
    int z0 = c.measure(0, 'Z', f).outcome;
    auto r2 = c.measure(2, 'Z', MeasureOptions{});
    EXPECT_TRUE(r2.deterministic);
    EXPECT_EQ(z0 * r2.outcome, -1);
}

TEST(tableau, random_outcomes_use_rng) {
    int minus = 0;
    for (int i = 0; i < 200; i++) {
        CounterRng rng(3, i);
        auto t = cluster3();
        MeasureOptions mo;
        mo.rng = &rng;
        minus += t.measure(1, 'Z', mo).outcome < 0;
        EXPECT_TRUE(t.commuting());
    }
    EXPECT_GT(minus, 60);
    EXPECT_LT(minus, 140);
    auto t = cluster3();
    EXPECT_THROW(t.measure(1, 'Z', MeasureOptions{}), UsageError);
}

TEST(tableau, canonical_form) {
    auto a = StabilizerTableau::parse("+XZ\n+ZX\n");
    auto b = StabilizerTableau::parse("+ZX\n+XZ\n");
    EXPECT_TRUE(tableau_equal(a, b));
    EXPECT_FALSE(tableau_equal(StabilizerTableau::parse("+X"), StabilizerTableau::parse("-X")));
    EXPECT_THROW(tableau_equal(StabilizerTableau::parse("+X"), StabilizerTableau::parse("+XX")), UsageError);

    auto g = graph_state_tableau(build_tree({2, 2}));
    StabilizerTableau mixed(g.num_qubits());
    for (int i = 0; i < g.num_generators(); i++) {
        PauliString p = g.generator(i);
        if (i + 1 < g.num_generators()) {
            p *= g.generator(i + 1);
        }
        mixed.add_generator(p);
    }
    EXPECT_TRUE(mixed.independent());
    EXPECT_TRUE(tableau_equal(g, mixed));
}

TEST(tableau, text_round_trip) {
    auto g = graph_state_tableau(build_tree({3, 2}));
    auto back = StabilizerTableau::parse(g.str());
    EXPECT_EQ(back.str(), g.str());
}

TEST(tableau, group_sign) {
    auto g = graph_state_tableau(build_tree({2}));
    // K_1 K_2 = Z0 X1 Z0 X2 = X1 X2
    EXPECT_EQ(g.group_sign(PauliString::parse("IXX")), std::optional<bool>(false));
    EXPECT_EQ(g.group_sign(PauliString::parse("-IXX")), std::optional<bool>(true));
    EXPECT_EQ(g.group_sign(PauliString::parse("ZII")), std::nullopt);
}

TEST(encode, plus_gives_tree_state) {
    auto tree = build_tree({2});
    auto code = encode_logical(tree, InputState::Plus, {1, 1});
    EXPECT_TRUE(tableau_equal(code, StabilizerTableau::parse("+XI\n+IX\n")));
    EXPECT_EQ(code.logical_x()->str(), "+XI");
    EXPECT_EQ(code.logical_z()->str(), "+ZZ");
}

TEST(encode, zero_gives_sum_of_tree_and_flipped) {
    auto tree = build_tree({2});
    auto code = encode_logical(tree, InputState::Zero, {1, 1});
    // (|++> + |-->)/sqrt2 is stabilized by XX and ZZ
    EXPECT_TRUE(tableau_equal(code, StabilizerTableau::parse("+XX\n+ZZ\n")));
}

TEST(encode, corrections_remove_outcome_dependence) {
    for (auto shape : {BranchingVector{2}, BranchingVector{2, 2}, BranchingVector{3, 2}, BranchingVector{1, 2, 1}}) {
        auto tree = build_tree(shape);
        for (auto in : {InputState::Plus, InputState::Minus, InputState::Zero, InputState::One, InputState::PlusI,
                        InputState::MinusI}) {
            auto ref = encode_logical(tree, in, {1, 1});
            EXPECT_TRUE(ref.commuting());
            EXPECT_EQ(ref.num_generators(), tree.size() - 1);
            for (int r : {1, -1}) {
                for (int p : {1, -1}) {
                    EXPECT_TRUE(tableau_equal(encode_logical(tree, in, {r, p}), ref)) << shape.str();
                }
            }
        }
    }
}

TEST(encode, logical_state_matches_input) {
    for (auto shape : {BranchingVector{2}, BranchingVector{3, 2}, BranchingVector{2, 2, 2}}) {
        auto tree = build_tree(shape);
        struct Case {
            InputState in;
            char op;
            bool negative;
        };
        for (auto c : {Case{InputState::Plus, 'X', false}, Case{InputState::Minus, 'X', true},
                       Case{InputState::Zero, 'Z', false}, Case{InputState::One, 'Z', true}}) {
            auto code = encode_logical(tree, c.in, {-1, 1});
            const PauliString &l = c.op == 'X' ? *code.logical_x() : *code.logical_z();
            EXPECT_EQ(code.group_sign(l), std::optional<bool>(c.negative)) << shape.str();
            // code stabilizers hold on every logical state
            for (auto s : tree_code_stabilizers(tree)) {
                PauliString shifted(tree.size() - 1);
                for (int v = 1; v < tree.size(); v++) {
                    shifted.set_letter(v - 1, s.letter(v));
                }
                EXPECT_EQ(code.group_sign(shifted), std::optional<bool>(false));
            }
        }
    }
}

TEST(encode, z_readout_transfers_logical_value) {
    auto tree = build_tree({3, 2});
    for (auto [in, want] : {std::pair{InputState::Zero, 1}, std::pair{InputState::One, -1}}) {
        for (int seed = 0; seed < 8; seed++) {
            CounterRng rng(seed, 1);
            auto code = encode_logical(tree, in, {}, &rng);
            int product = 1;
            for (int u : tree.children(0)) {
                MeasureOptions mo;
                mo.rng = &rng;
                product *= code.measure(u - 1, 'Z', mo).outcome;
            }
            EXPECT_EQ(product, want);
        }
    }
}

TEST(indirect_z, examples) {
    auto t22 = build_tree({2, 2});
    EXPECT_TRUE(verify_indirect_z(t22, 1));
    EXPECT_THROW(verify_indirect_z(build_tree({2}), 1), UsageError);
    auto t32 = build_tree({3, 2});
    for (int v = 1; v <= 3; v++) {
        EXPECT_TRUE(verify_indirect_z(t32, v));
    }
}

TEST(indirect_z, every_internal_vertex_of_small_trees) {
    for (auto shape : {BranchingVector{2, 2}, BranchingVector{3, 2}, BranchingVector{1, 2, 3}, BranchingVector{2, 1, 2},
                       BranchingVector{4, 2}, BranchingVector{1, 1, 1, 1}}) {
        auto tree = build_tree(shape);
        ASSERT_LE(tree.size(), 15);
        for (int v = 0; v < tree.size(); v++) {
            if (!tree.children(v).empty()) {
                EXPECT_TRUE(verify_indirect_z(tree, v)) << shape.str() << " v=" << v;
            }
        }
    }
}
