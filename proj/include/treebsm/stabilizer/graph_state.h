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

#ifndef TREEBSM_STABILIZER_GRAPH_STATE_H
#define TREEBSM_STABILIZER_GRAPH_STATE_H

#include <utility>
#include <vector>

#include "treebsm/core/tree.h"
#include "treebsm/stabilizer/tableau.h"

namespace treebsm {

/// K_v = X_v prod_{w in N_v} Z_w for every vertex.
StabilizerTableau graph_state_tableau(int num_vertices, const std::vector<std::pair<int, int>> &edges);
StabilizerTableau graph_state_tableau(const TreeGraph &tree);

/// Logical operators of the tree code, in the tree's own vertex numbering.
/// X_L uses the first level-1 vertex.
PauliString tree_logical_x(const TreeGraph &tree, int level1_vertex = -1);
PauliString tree_logical_z(const TreeGraph &tree);

/// Code stabilizers of a tree code (root removed): K_u for levels >= 2 and
/// X_{L,v1} X_{L,v} for the other level-1 vertices. Tree numbering.
std::vector<PauliString> tree_code_stabilizers(const TreeGraph &tree);

enum class InputState { Plus, Minus, Zero, One, PlusI, MinusI };

/// Stabilizer of the input state as a single-qubit string on qubit q.
PauliString input_state_stabilizer(InputState s, int num_qubits, int q);

struct EncodeOutcomes {
    std::optional<int> root;   // X outcome on the root
    std::optional<int> input;  // X outcome on the input qubit
};

/// Attaches an input qubit to the root by CZ, measures both in X, applies the
/// X_L / Z_L corrections and returns the code tableau on the n-1 non-root
/// qubits (vertex v becomes qubit v-1), with X_L and Z_L designated.
StabilizerTableau encode_logical(
    const TreeGraph &tree, InputState input, const EncodeOutcomes &outcomes = {}, CounterRng *rng = nullptr);

/// Checks Z_r K_w = X_w prod_{s in N_w \ r} Z_s operationally on tree graph
/// states: over every outcome pattern, measuring X_w and Z on C_w makes Z_r
/// deterministic with the product of those outcomes, and the reverse order
/// agrees too. Throws UsageError for a leaf target.
bool verify_indirect_z(const TreeGraph &tree, int target);

}  // namespace treebsm

#endif
