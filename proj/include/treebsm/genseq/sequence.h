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

#ifndef TREEBSM_GENSEQ_SEQUENCE_H
#define TREEBSM_GENSEQ_SEQUENCE_H

#include <string>
#include <string_view>
#include <vector>

#include "treebsm/core/branching.h"

namespace treebsm {

enum class Opcode { Emit, H, MX, MY, MZ, CZ };

/// One matter-qubit operation. Emit: a = register, b = new photon. CZ: a, b =
/// registers. Everything else acts on register a.
struct Instruction {
    Opcode op;
    int a = 0;
    int b = 0;

    std::string str() const;
    bool operator==(const Instruction &) const = default;
};

/// Instructions in execution order.
///
/// Text form, one instruction per line:
///   E r p    emit photon p from register r
///   H r      Hadamard on register r
///   CZ r s
///   MX r | MY r | MZ r
/// Lines starting with '#' are comments; "# registers N" and "# photons N"
/// headers set the declared sizes (otherwise they are inferred).
struct InstructionSequence {
    int num_registers = 0;
    int num_photons = 0;
    std::vector<Instruction> ops;

    std::string str() const;
    static InstructionSequence parse(std::string_view text);

    /// Throws UsageError on out-of-range registers, photon indices that are not
    /// 0, 1, 2, ... in emission order, or a register used after being measured
    /// without a fresh preparation in between.
    void validate() const;
    int count(Opcode op) const;
};

/// Expands M_X(Q0) M_X(Q1) CZ(Q0,Q1) F(Q0,b) F(Q1,b), read right to left.
///
/// F(Q, b) = G_1 with parent Q, and for a parent register P
///   G_k = (G_{k+1} on Q_{k+1}; CZ(P, Q_{k+1}); E(Q_{k+1}); H(Q_{k+1}); MZ(Q_{k+1}))^{b_{k-1}}
///   G_d = E(P)^{b_{d-1}}
/// so leaves are emitted by their parent's register. Registers Q0 .. Q_d are
/// used (d + 1 in total). A measured register is re-prepared in |+> before
/// its next use.
InstructionSequence compile_bell_pair(const BranchingVector &b);

/// Where each emitted photon sits: tree 0 is rooted at Q0, tree 1 at Q1;
/// vertex uses the tree's breadth-first numbering (never the root).
struct PhotonSite {
    int tree;
    int vertex;
    bool leaf;
};
std::vector<PhotonSite> photon_layout(const BranchingVector &b);

}  // namespace treebsm

#endif
