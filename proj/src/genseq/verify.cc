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

#include "treebsm/genseq/verify.h"

#include <sstream>

#include "treebsm/core/errors.h"
#include "treebsm/core/tree.h"
#include "treebsm/montecarlo/rng.h"
#include "treebsm/stabilizer/graph_state.h"

namespace treebsm {

namespace {

// Tree-numbered operator placed on the slots of tree t.
PauliString embed(const PauliString &p, int t, int per_tree, int total) {
    PauliString out(total);
    for (int v = 1; v < p.num_qubits(); v++) {
        out.set_letter(t * per_tree + v - 1, p.letter(v));
    }
    out.set_negative(p.negative());
    return out;
}

}  // namespace

StabilizerTableau bell_pair_target(const BranchingVector &b) {
    TreeGraph tree = build_tree(b);
    int per = tree.size() - 1;
    int total = 2 * per;
    StabilizerTableau t(total);
    for (int side = 0; side < 2; side++) {
        for (const auto &s : tree_code_stabilizers(tree)) {
            t.add_generator(embed(s, side, per, total));
        }
    }
    PauliString x0 = embed(tree_logical_x(tree), 0, per, total);
    PauliString z0 = embed(tree_logical_z(tree), 0, per, total);
    PauliString x1 = embed(tree_logical_x(tree), 1, per, total);
    PauliString z1 = embed(tree_logical_z(tree), 1, per, total);
    PauliString zx = z0, xz = x0;
    zx *= x1;
    xz *= z1;
    t.add_generator(zx);
    t.add_generator(xz);
    return t;
}

bool run_bell_pair(const InstructionSequence &seq, const BranchingVector &b, const std::vector<bool> &pattern,
                   std::string *diagnostic) {
    seq.validate();
    auto fail = [&](const std::string &why) {
        if (diagnostic) {
            *diagnostic = why;
        }
        return false;
    };
    std::vector<PhotonSite> layout = photon_layout(b);
    if ((int)layout.size() != seq.num_photons) {
        return fail("sequence emits " + std::to_string(seq.num_photons) + " photons, the tree pair has " +
                    std::to_string(layout.size()));
    }
    TreeGraph tree = build_tree(b);
    int per = tree.size() - 1;

    StabilizerTableau t(0);
    std::vector<int> reg_slot(seq.num_registers, -1);
    std::vector<int> last_photon(seq.num_registers, -1);
    std::vector<int> photon_slot(seq.num_photons, -1);
    std::vector<int> root_outcome(2, +1);
    std::size_t m_index = 0;
    auto slot_of = [&](int r) {
        if (reg_slot[r] < 0) {
            reg_slot[r] = t.add_qubit('X');
        }
        return reg_slot[r];
    };
    for (const Instruction &ins : seq.ops) {
        switch (ins.op) {
            case Opcode::Emit: {
                int r = slot_of(ins.a);
                int p = t.add_qubit('Z');
                t.cnot(r, p);
                photon_slot[ins.b] = p;
                last_photon[ins.a] = ins.b;
                break;
            }
            case Opcode::H:
                t.h(slot_of(ins.a));
                break;
            case Opcode::CZ: {
                int a = slot_of(ins.a);
                t.cz(a, slot_of(ins.b));
                break;
            }
            case Opcode::MX:
            case Opcode::MY:
            case Opcode::MZ: {
                char basis = ins.op == Opcode::MX ? 'X' : ins.op == Opcode::MY ? 'Y' : 'Z';
                MeasureOptions mo;
                bool flip = m_index < pattern.size() && pattern[m_index];
                mo.preferred = flip ? -1 : +1;
                int outcome = t.measure(slot_of(ins.a), basis, mo).outcome;
                m_index++;
                reg_slot[ins.a] = -1;
                if (ins.op == Opcode::MZ && outcome < 0 && last_photon[ins.a] >= 0) {
                    // the photon took over the register's role; undo the byproduct Z
                    t.apply_pauli(PauliString::single(t.num_qubits(), photon_slot[last_photon[ins.a]], 'Z'));
                }
                if (ins.op == Opcode::MX && ins.a < 2) {
                    root_outcome[ins.a] = outcome;
                }
                break;
            }
        }
    }
    for (int r = 0; r < seq.num_registers; r++) {
        if (reg_slot[r] >= 0) {
            return fail("register " + std::to_string(r) + " is left unmeasured");
        }
    }
    // the single-photon rotation left out of the sequence
    for (int p = 0; p < seq.num_photons; p++) {
        if (layout[p].leaf) {
            t.h(photon_slot[p]);
        }
    }
    std::vector<int> keep(2 * per, -1);
    for (int p = 0; p < seq.num_photons; p++) {
        keep[layout[p].tree * per + layout[p].vertex - 1] = photon_slot[p];
    }
    StabilizerTableau out = t.restrict_to(keep);

    // root outcomes: X_L of tree 0 for Q0, Z_L of tree 0 for Q1
    int total = 2 * per;
    if (root_outcome[0] < 0) {
        out.apply_pauli(embed(tree_logical_x(tree), 0, per, total));
    }
    if (root_outcome[1] < 0) {
        out.apply_pauli(embed(tree_logical_z(tree), 0, per, total));
    }

    StabilizerTableau want = bell_pair_target(b);
    int row = first_difference(out, want);
    if (row < 0) {
        return true;
    }
    StabilizerTableau a = canonical_form(out), w = canonical_form(want);
    std::ostringstream os;
    os << "canonical row " << row << " differs: got ";
    os << (row < a.num_generators() ? a.generator(row).str() : std::string("(none)"));
    os << ", want " << (row < w.num_generators() ? w.generator(row).str() : std::string("(none)"));
    return fail(os.str());
}

VerifyReport verify_bell_pair(const InstructionSequence &seq, const BranchingVector &b, const VerifyOptions &opts) {
    if (photon_count(b) > opts.max_photons) {
        throw SizeError("tree has " + std::to_string(photon_count(b)) + " photons; the verifier is limited to " +
                        std::to_string(opts.max_photons));
    }
    seq.validate();
    VerifyReport rep;
    rep.measurements = seq.count(Opcode::MX) + seq.count(Opcode::MY) + seq.count(Opcode::MZ);
    int m = rep.measurements;
    auto check = [&](const std::vector<bool> &pattern) {
        std::string why;
        rep.patterns++;
        if (!run_bell_pair(seq, b, pattern, &why)) {
            std::string bits;
            for (bool x : pattern) {
                bits += x ? '1' : '0';
            }
            rep.diagnostic = "outcome pattern " + bits + ": " + why;
            return false;
        }
        return true;
    };
    std::vector<bool> pattern(m, false);
    if (m <= opts.max_exhaustive) {
        rep.exhaustive = true;
        for (std::uint64_t bits = 0; bits < (1ULL << m); bits++) {
            for (int j = 0; j < m; j++) {
                pattern[j] = (bits >> j) & 1;
            }
            if (!check(pattern)) {
                return rep;
            }
        }
        rep.ok = true;
        return rep;
    }
    if (!check(pattern)) {
        return rep;
    }
    for (int j = 0; j < m; j++) {
        pattern[j] = true;
        if (!check(pattern)) {
            return rep;
        }
        pattern[j] = false;
    }
    CounterRng rng(opts.seed, 0);
    for (int k = 0; k < opts.random_patterns; k++) {
        for (int j = 0; j < m; j++) {
            pattern[j] = rng.next_u64() & 1;
        }
        if (!check(pattern)) {
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

}  // namespace treebsm
