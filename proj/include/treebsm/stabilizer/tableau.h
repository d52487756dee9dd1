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

#ifndef TREEBSM_STABILIZER_TABLEAU_H
#define TREEBSM_STABILIZER_TABLEAU_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treebsm/stabilizer/pauli_string.h"

namespace treebsm {

class CounterRng;

/// How a measurement picks its outcome when it is not determined by the state.
struct MeasureOptions {
    /// Outcome the caller insists on. Disagreeing with a deterministic outcome
    /// raises ContradictionError.
    std::optional<int> forced;
    /// Outcome used only when the result is random; ignored otherwise.
    std::optional<int> preferred;
    /// Source for random outcomes when neither of the above applies.
    CounterRng *rng = nullptr;
    /// Destructive measurements drop the residual single-qubit generator and
    /// retire the qubit.
    bool destructive = true;
};

struct MeasureResult {
    int outcome;  // +1 or -1
    bool deterministic;
};

/// Generator list of a stabilizer group on n qubit slots.
///
/// Removed qubits keep their slot (all generators act as I there) so indices
/// stay stable across destructive measurements.
class StabilizerTableau {
   public:
    StabilizerTableau() = default;
    explicit StabilizerTableau(int num_qubits) : n_(num_qubits), removed_(num_qubits, false) {
    }

    /// One generator per line, "+XZI" form. Blank lines are skipped.
    static StabilizerTableau parse(std::string_view text);
    std::string str() const;

    int num_qubits() const {
        return n_;
    }
    int num_generators() const {
        return (int)gens_.size();
    }
    const std::vector<PauliString> &generators() const {
        return gens_;
    }
    const PauliString &generator(int i) const {
        return gens_[i];
    }
    void add_generator(PauliString p);
    bool removed(int q) const {
        return removed_[q];
    }

    std::optional<PauliString> &logical_x() {
        return logical_x_;
    }
    std::optional<PauliString> &logical_z() {
        return logical_z_;
    }
    const std::optional<PauliString> &logical_x() const {
        return logical_x_;
    }
    const std::optional<PauliString> &logical_z() const {
        return logical_z_;
    }

    /// New qubit slot prepared in the +1 (or -1) eigenstate of `letter`.
    int add_qubit(char letter = 'Z', bool negative = false);

    void h(int q);
    void cz(int a, int b);
    void cnot(int control, int target);
    /// Conjugation by a Pauli operator: flips the sign of every generator (and
    /// logical) that anticommutes with it.
    void apply_pauli(const PauliString &p);

    MeasureResult measure(int q, char basis, const MeasureOptions &opts);

    /// Sign of p when +-p lies in the group, nullopt otherwise.
    std::optional<bool> group_sign(const PauliString &p) const;

    /// All generators pairwise commute.
    bool commuting() const;
    /// Generators are independent.
    bool independent() const;

    /// Keeps the listed qubits, renumbered in list order. Every generator must
    /// act trivially elsewhere.
    StabilizerTableau restrict_to(const std::vector<int> &keep) const;

   private:
    friend StabilizerTableau canonical_form(const StabilizerTableau &t);

    void for_each_operator(auto &&f) {
        for (auto &g : gens_) {
            f(g);
        }
        if (logical_x_) {
            f(*logical_x_);
        }
        if (logical_z_) {
            f(*logical_z_);
        }
    }
    void check_qubit(int q) const;

    int n_ = 0;
    std::vector<PauliString> gens_;
    std::vector<bool> removed_;
    std::optional<PauliString> logical_x_;
    std::optional<PauliString> logical_z_;
};

/// Reduced row echelon form over columns (x_0, z_0, x_1, z_1, ...), pivots
/// taken in column order. Equal groups give identical forms, signs included.
StabilizerTableau canonical_form(const StabilizerTableau &t);

/// Throws UsageError on qubit count mismatch.
bool tableau_equal(const StabilizerTableau &a, const StabilizerTableau &b);

/// Index of the first canonical row where a and b differ, or -1.
int first_difference(const StabilizerTableau &a, const StabilizerTableau &b);

}  // namespace treebsm

#endif
