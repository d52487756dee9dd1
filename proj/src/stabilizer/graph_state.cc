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

#include "treebsm/stabilizer/graph_state.h"

#include "treebsm/core/errors.h"

namespace treebsm {

StabilizerTableau graph_state_tableau(int n, const std::vector<std::pair<int, int>> &edges) {
    std::vector<PauliString> rows;
    rows.reserve(n);
    for (int v = 0; v < n; v++) {
        rows.push_back(PauliString::single(n, v, 'X'));
    }
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b) {
            throw UsageError("bad graph edge");
        }
        rows[a].set_z(b, !rows[a].z(b));
        rows[b].set_z(a, !rows[b].z(a));
    }
    StabilizerTableau t(n);
    for (auto &r : rows) {
        t.add_generator(std::move(r));
    }
    return t;
}

StabilizerTableau graph_state_tableau(const TreeGraph &tree) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < tree.size(); v++) {
        edges.push_back({tree.parent(v), v});
    }
    return graph_state_tableau(tree.size(), edges);
}

PauliString tree_logical_x(const TreeGraph &tree, int v) {
    if (v < 0) {
        v = tree.level_range(1).first;
    }
    if (tree.level(v) != 1) {
        throw UsageError("X_L is built on a level-1 vertex");
    }
    PauliString p(tree.size());
    p.set_letter(v, 'X');
    for (int w : tree.children(v)) {
        p.set_letter(w, 'Z');
    }
    return p;
}

PauliString tree_logical_z(const TreeGraph &tree) {
    PauliString p(tree.size());
    for (int u : tree.children(0)) {
        p.set_letter(u, 'Z');
    }
    return p;
}

std::vector<PauliString> tree_code_stabilizers(const TreeGraph &tree) {
    std::vector<PauliString> out;
    auto [first, last] = tree.level_range(1);
    PauliString x1 = tree_logical_x(tree, first);
    for (int v = first + 1; v < last; v++) {
        PauliString p = tree_logical_x(tree, v);
        p *= x1;
        out.push_back(p);
    }
    for (int u = last; u < tree.size(); u++) {
        PauliString k = PauliString::single(tree.size(), u, 'X');
        for (int w : tree.neighbors(u)) {
            k.set_letter(w, 'Z');
        }
        out.push_back(k);
    }
    return out;
}

PauliString input_state_stabilizer(InputState s, int n, int q) {
    switch (s) {
        case InputState::Plus:
            return PauliString::single(n, q, 'X');
        case InputState::Minus:
            return PauliString::single(n, q, 'X', true);
        case InputState::Zero:
            return PauliString::single(n, q, 'Z');
        case InputState::One:
            return PauliString::single(n, q, 'Z', true);
        case InputState::PlusI:
            return PauliString::single(n, q, 'Y');
        default:
            return PauliString::single(n, q, 'Y', true);
    }
}

StabilizerTableau encode_logical(
    const TreeGraph &tree, InputState input, const EncodeOutcomes &outcomes, CounterRng *rng) {
    int n = tree.size();
    if (tree.depth() < 1) {
        throw UsageError("encoding needs a tree of depth >= 1");
    }
    StabilizerTableau t = graph_state_tableau(tree);
    PauliString in = input_state_stabilizer(input, n + 1, n);
    int p = t.add_qubit(in.letter(n), in.negative());
    PauliString xl = tree_logical_x(tree);
    PauliString zl = tree_logical_z(tree);
    xl.resize(n + 1);
    zl.resize(n + 1);

    t.cz(p, 0);
    MeasureOptions mo;
    mo.rng = rng;
    mo.forced = outcomes.root;
    int m_root = t.measure(0, 'X', mo).outcome;
    mo.forced = outcomes.input;
    int m_input = t.measure(p, 'X', mo).outcome;
    if (m_root < 0) {
        t.apply_pauli(xl);
    }
    if (m_input < 0) {
        t.apply_pauli(zl);
    }

    std::vector<int> keep;
    for (int v = 1; v < n; v++) {
        keep.push_back(v);
    }
    StabilizerTableau code = t.restrict_to(keep);
    auto shrink = [&](const PauliString &full) {
        PauliString out(n - 1);
        for (int v = 1; v < n; v++) {
            out.set_letter(v - 1, full.letter(v));
        }
        return out;
    };
    code.logical_x() = shrink(xl);
    code.logical_z() = shrink(zl);
    return code;
}

namespace {

// Measures X_w and Z on C_w, then Z_r. Outcomes of random measurements follow
// `pattern` bit by bit.
bool indirect_then_direct(const TreeGraph &tree, int r, int w, unsigned pattern) {
    StabilizerTableau t = graph_state_tableau(tree);
    int bit = 0;
    auto next = [&]() {
        MeasureOptions mo;
        mo.preferred = ((pattern >> bit++) & 1) ? -1 : 1;
        return mo;
    };
    int product = t.measure(w, 'X', next()).outcome;
    for (int u : tree.children(w)) {
        product *= t.measure(u, 'Z', next()).outcome;
    }
    MeasureOptions last;
    last.preferred = 1;
    MeasureResult z = t.measure(r, 'Z', last);
    return z.deterministic && z.outcome == product;
}

// Fixes Z_r first, then checks the indirect product reproduces it.
bool direct_then_indirect(const TreeGraph &tree, int r, int w, unsigned pattern) {
    StabilizerTableau t = graph_state_tableau(tree);
    int bit = 0;
    auto next = [&]() {
        MeasureOptions mo;
        mo.preferred = ((pattern >> bit++) & 1) ? -1 : 1;
        mo.destructive = false;
        return mo;
    };
    int zr = t.measure(r, 'Z', next()).outcome;
    int product = t.measure(w, 'X', next()).outcome;
    for (int u : tree.children(w)) {
        product *= t.measure(u, 'Z', next()).outcome;
    }
    return product == zr;
}

}  // namespace

bool verify_indirect_z(const TreeGraph &tree, int target) {
    if (target < 0 || target >= tree.size()) {
        throw UsageError("target vertex out of range");
    }
    auto kids = tree.children(target);
    if (kids.empty()) {
        throw UsageError("indirect Z needs a target with children; vertex " + std::to_string(target) + " is a leaf");
    }
    int w = kids[0];
    int k = 2 + (int)tree.children(w).size();
    // all patterns while cheap, a fixed spread beyond that
    unsigned limit = k <= 12 ? (1u << k) : 4096u;
    unsigned stride = k <= 12 ? 1u : 2654435761u;
    for (unsigned i = 0; i < limit; i++) {
        unsigned pattern = i * stride;
        if (!indirect_then_direct(tree, target, w, pattern) || !direct_then_indirect(tree, target, w, pattern)) {
            return false;
        }
    }
    return true;
}

}  // namespace treebsm
