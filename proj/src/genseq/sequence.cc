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

#include "treebsm/genseq/sequence.h"

#include <functional>
#include <sstream>

#include "treebsm/core/errors.h"
#include "treebsm/core/tree.h"

namespace treebsm {

namespace {

const char *mnemonic(Opcode op) {
    switch (op) {
        case Opcode::Emit:
            return "E";
        case Opcode::H:
            return "H";
        case Opcode::MX:
            return "MX";
        case Opcode::MY:
            return "MY";
        case Opcode::MZ:
            return "MZ";
        case Opcode::CZ:
            return "CZ";
    }
    return "?";
}

bool is_measurement(Opcode op) {
    return op == Opcode::MX || op == Opcode::MY || op == Opcode::MZ;
}

// Walks the expansion, calling `emit` for each instruction and `site` for
// each photon as it is emitted.
void expand(const BranchingVector &b, const std::function<void(Instruction)> &emit,
            const std::function<void(PhotonSite)> &site) {
    if (b.depth() < 1) {
        throw UsageError("a Bell pair needs a tree of depth >= 1");
    }
    TreeGraph tree = build_tree(b);
    int d = b.depth();
    int photon = 0;
    int tree_index = 0;
    // g(k, P, v): G_k with parent register P standing for vertex v
    std::function<void(int, int, int)> g = [&](int k, int parent, int v) {
        if (k == d) {
            for (int c : tree.children(v)) {
                emit({Opcode::Emit, parent, photon++});
                site({tree_index, c, true});
            }
            return;
        }
        int r = k + 1;
        for (int c : tree.children(v)) {
            g(k + 1, r, c);
            emit({Opcode::CZ, parent, r});
            emit({Opcode::Emit, r, photon++});
            site({tree_index, c, false});
            emit({Opcode::H, r});
            emit({Opcode::MZ, r});
        }
    };
    // rightmost factor first: F(Q1), then F(Q0)
    tree_index = 1;
    g(1, 1, 0);
    tree_index = 0;
    g(1, 0, 0);
    emit({Opcode::CZ, 0, 1});
    emit({Opcode::MX, 1});
    emit({Opcode::MX, 0});
}

}  // namespace

std::string Instruction::str() const {
    std::ostringstream os;
    os << mnemonic(op) << ' ' << a;
    if (op == Opcode::Emit || op == Opcode::CZ) {
        os << ' ' << b;
    }
    return os.str();
}

std::string InstructionSequence::str() const {
    std::ostringstream os;
    os << "# registers " << num_registers << "\n# photons " << num_photons << "\n";
    for (const auto &ins : ops) {
        os << ins.str() << "\n";
    }
    return os.str();
}

InstructionSequence InstructionSequence::parse(std::string_view text) {
    InstructionSequence seq;
    int declared_registers = -1, declared_photons = -1;
    int max_register = -1;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) {
            continue;
        }
        auto fail = [&](const std::string &why) {
            throw UsageError("line " + std::to_string(line_no) + ": " + why + ": '" + line + "'");
        };
        if (word[0] == '#') {
            std::string key;
            int value;
            if (word == "#" && ls >> key >> value) {
                if (key == "registers") {
                    declared_registers = value;
                } else if (key == "photons") {
                    declared_photons = value;
                }
            }
            continue;
        }
        Instruction ins{};
        int operands = 1;
        if (word == "E") {
            ins.op = Opcode::Emit;
            operands = 2;
        } else if (word == "CZ") {
            ins.op = Opcode::CZ;
            operands = 2;
        } else if (word == "H") {
            ins.op = Opcode::H;
        } else if (word == "MX") {
            ins.op = Opcode::MX;
        } else if (word == "MY") {
            ins.op = Opcode::MY;
        } else if (word == "MZ") {
            ins.op = Opcode::MZ;
        } else {
            fail("unknown instruction");
        }
        if (!(ls >> ins.a) || (operands == 2 && !(ls >> ins.b))) {
            fail("missing operand");
        }
        std::string extra;
        if (ls >> extra) {
            fail("trailing text");
        }
        if (ins.a < 0 || ins.b < 0) {
            fail("negative index");
        }
        max_register = std::max(max_register, ins.a);
        if (ins.op == Opcode::CZ) {
            max_register = std::max(max_register, ins.b);
        }
        if (ins.op == Opcode::Emit) {
            seq.num_photons++;
        }
        seq.ops.push_back(ins);
    }
    seq.num_registers = declared_registers >= 0 ? declared_registers : max_register + 1;
    if (declared_photons >= 0) {
        seq.num_photons = declared_photons;
    }
    return seq;
}

void InstructionSequence::validate() const {
    std::vector<char> measured(num_registers, 0);
    int next_photon = 0;
    auto check_register = [&](int r, std::size_t i) {
        if (r < 0 || r >= num_registers) {
            throw UsageError("instruction " + std::to_string(i) + " (" + ops[i].str() + ") uses register " +
                             std::to_string(r) + " of " + std::to_string(num_registers));
        }
    };
    for (std::size_t i = 0; i < ops.size(); i++) {
        const Instruction &ins = ops[i];
        check_register(ins.a, i);
        if (ins.op == Opcode::CZ) {
            check_register(ins.b, i);
            if (ins.a == ins.b) {
                throw UsageError("instruction " + std::to_string(i) + ": CZ on a single register");
            }
        }
        if (ins.op == Opcode::Emit) {
            if (ins.b != next_photon || ins.b >= num_photons) {
                throw UsageError("instruction " + std::to_string(i) + " (" + ins.str() + "): expected photon " +
                                 std::to_string(next_photon) + " of " + std::to_string(num_photons));
            }
            next_photon++;
        }
        if (is_measurement(ins.op)) {
            if (measured[ins.a]) {
                throw UsageError("instruction " + std::to_string(i) + " (" + ins.str() +
                                 "): register measured twice without being used in between");
            }
            measured[ins.a] = 1;
        } else {
            measured[ins.a] = 0;
            if (ins.op == Opcode::CZ) {
                measured[ins.b] = 0;
            }
        }
    }
    if (next_photon != num_photons) {
        throw UsageError("sequence declares " + std::to_string(num_photons) + " photons but emits " +
                         std::to_string(next_photon));
    }
}

int InstructionSequence::count(Opcode op) const {
    int c = 0;
    for (const auto &ins : ops) {
        c += ins.op == op;
    }
    return c;
}

InstructionSequence compile_bell_pair(const BranchingVector &b) {
    InstructionSequence seq;
    int max_register = 0;
    expand(
        b,
        [&](Instruction ins) {
            max_register = std::max({max_register, ins.a, ins.op == Opcode::CZ ? ins.b : 0});
            seq.num_photons += ins.op == Opcode::Emit;
            seq.ops.push_back(ins);
        },
        [](PhotonSite) {});
    seq.num_registers = max_register + 1;
    return seq;
}

std::vector<PhotonSite> photon_layout(const BranchingVector &b) {
    std::vector<PhotonSite> out;
    expand(b, [](Instruction) {}, [&](PhotonSite s) { out.push_back(s); });
    return out;
}

}  // namespace treebsm
