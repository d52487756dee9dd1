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

#include "treebsm/stabilizer/tableau.h"

#include <algorithm>
#include <sstream>

#include "treebsm/core/errors.h"
#include "treebsm/montecarlo/rng.h"

namespace treebsm {

StabilizerTableau StabilizerTableau::parse(std::string_view text) {
    std::vector<PauliString> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        rows.push_back(PauliString::parse(line));
    }
    if (rows.empty()) {
        return StabilizerTableau(0);
    }
    StabilizerTableau t(rows[0].num_qubits());
    for (auto &r : rows) {
        t.add_generator(std::move(r));
    }
    return t;
}

std::string StabilizerTableau::str() const {
    std::string s;
    for (const auto &g : gens_) {
        s += g.str();
        s += '\n';
    }
    return s;
}

void StabilizerTableau::add_generator(PauliString p) {
    if (p.num_qubits() != n_) {
        throw UsageError("generator length " + std::to_string(p.num_qubits()) + " != " + std::to_string(n_));
    }
    gens_.push_back(std::move(p));
}

void StabilizerTableau::check_qubit(int q) const {
    if (q < 0 || q >= n_) {
        throw UsageError("qubit " + std::to_string(q) + " out of range");
    }
    if (removed_[q]) {
        throw UsageError("qubit " + std::to_string(q) + " was already measured out");
    }
}

int StabilizerTableau::add_qubit(char letter, bool negative) {
    int q = n_++;
    removed_.push_back(false);
    for_each_operator([&](PauliString &p) { p.resize(n_); });
    gens_.push_back(PauliString::single(n_, q, letter, negative));
    return q;
}

void StabilizerTableau::h(int q) {
    check_qubit(q);
    for_each_operator([&](PauliString &p) {
        bool x = p.x(q), z = p.z(q);
        if (x && z) {
            p.flip_sign();
        }
        p.set_x(q, z);
        p.set_z(q, x);
    });
}

void StabilizerTableau::cz(int a, int b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw UsageError("CZ needs two distinct qubits");
    }
    for_each_operator([&](PauliString &p) {
        bool xa = p.x(a), xb = p.x(b), za = p.z(a), zb = p.z(b);
        if (xa && xb && (za != zb)) {
            p.flip_sign();
        }
        p.set_z(a, za ^ xb);
        p.set_z(b, zb ^ xa);
    });
}

void StabilizerTableau::cnot(int c, int t) {
    check_qubit(c);
    check_qubit(t);
    if (c == t) {
        throw UsageError("CNOT needs two distinct qubits");
    }
    for_each_operator([&](PauliString &p) {
        bool xc = p.x(c), xt = p.x(t), zc = p.z(c), zt = p.z(t);
        if (xc && zt && (xt == zc)) {
            p.flip_sign();
        }
        p.set_x(t, xt ^ xc);
        p.set_z(c, zc ^ zt);
    });
}

void StabilizerTableau::apply_pauli(const PauliString &pauli) {
    for_each_operator([&](PauliString &p) {
        if (!p.commutes(pauli)) {
            p.flip_sign();
        }
    });
}

namespace {

// Column c of the symplectic matrix: qubit c/2, x part for even c.
inline bool column_bit(const PauliString &p, int c) {
    return (c & 1) ? p.z(c >> 1) : p.x(c >> 1);
}

// In-place row reduction in the given column order. Returns the number of
// pivot rows, which end up first.
int reduce_rows(std::vector<PauliString> &rows, const std::vector<int> &columns) {
    int r = 0;
    for (int c : columns) {
        int pivot = -1;
        for (int i = r; i < (int)rows.size(); i++) {
            if (column_bit(rows[i], c)) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) {
            continue;
        }
        std::swap(rows[r], rows[pivot]);
        for (int i = 0; i < (int)rows.size(); i++) {
            if (i != r && column_bit(rows[i], c)) {
                rows[i] *= rows[r];
            }
        }
        r++;
        if (r == (int)rows.size()) {
            break;
        }
    }
    return r;
}

std::vector<int> natural_columns(int n) {
    std::vector<int> cols(2 * n);
    for (int c = 0; c < 2 * n; c++) {
        cols[c] = c;
    }
    return cols;
}

}  // namespace

MeasureResult StabilizerTableau::measure(int q, char basis, const MeasureOptions &opts) {
    check_qubit(q);
    if (basis != 'X' && basis != 'Y' && basis != 'Z') {
        throw UsageError(std::string("bad measurement basis '") + basis + "'");
    }
    for (auto o : {opts.forced, opts.preferred}) {
        if (o && *o != 1 && *o != -1) {
            throw UsageError("measurement outcomes are +1 or -1");
        }
    }
    PauliString b = PauliString::single(n_, q, basis);

    std::vector<int> anti;
    for (int i = 0; i < (int)gens_.size(); i++) {
        char l = gens_[i].letter(q);
        if (l != 'I' && l != basis) {
            anti.push_back(i);
        }
    }

    MeasureResult result{1, false};
    int home = -1;  // index of the +-B_q generator after the update
    if (!anti.empty()) {
        // Random outcome: keep S_0, fold it into every other anticommuting
        // generator, then replace S_0 by m B_q.
        PauliString s0 = gens_[anti[0]];
        for (size_t j = 1; j < anti.size(); j++) {
            gens_[anti[j]] *= s0;
        }
        // Logicals are fixed up the same way. In a full-rank state a logical
        // may anticommute with S_0 too; it is then no longer meaningful and
        // is dropped.
        for (auto *l : {&logical_x_, &logical_z_}) {
            if (*l && !(*l)->commutes(b)) {
                if ((*l)->commutes(s0)) {
                    **l *= s0;
                } else {
                    l->reset();
                }
            }
        }
        if (opts.forced) {
            result.outcome = *opts.forced;
        } else if (opts.preferred) {
            result.outcome = *opts.preferred;
        } else if (opts.rng != nullptr) {
            result.outcome = (opts.rng->next_u64() >> 63) ? -1 : 1;
        } else {
            throw UsageError("random measurement outcome but no RNG or outcome supplied");
        }
        b.set_negative(result.outcome < 0);
        gens_[anti[0]] = b;
        home = anti[0];
    } else {
        // Deterministic when +-B_q is in the group. Reducing with q's columns
        // last isolates it as a row and clears q from every other row.
        std::vector<int> cols;
        for (int c = 0; c < 2 * n_; c++) {
            if ((c >> 1) != q) {
                cols.push_back(c);
            }
        }
        cols.push_back(2 * q);
        cols.push_back(2 * q + 1);
        reduce_rows(gens_, cols);
        for (int i = 0; i < (int)gens_.size(); i++) {
            const PauliString &g = gens_[i];
            if (g.letter(q) == basis && g.weight() == 1) {
                home = i;
                break;
            }
        }
        if (home >= 0) {
            result.deterministic = true;
            result.outcome = gens_[home].negative() ? -1 : 1;
            if (opts.forced && *opts.forced != result.outcome) {
                throw ContradictionError(
                    "forced outcome " + std::to_string(*opts.forced) + " on qubit " + std::to_string(q) +
                    " contradicts deterministic " + std::to_string(result.outcome));
            }
        } else {
            // B_q outside an incomplete group: random, and it joins the group.
            if (opts.forced) {
                result.outcome = *opts.forced;
            } else if (opts.preferred) {
                result.outcome = *opts.preferred;
            } else if (opts.rng != nullptr) {
                result.outcome = (opts.rng->next_u64() >> 63) ? -1 : 1;
            } else {
                throw UsageError("random measurement outcome but no RNG or outcome supplied");
            }
            b.set_negative(result.outcome < 0);
            gens_.push_back(b);
            home = (int)gens_.size() - 1;
        }
    }

    // S' = m B_q S for every remaining operator that contains B_q.
    const PauliString mb = gens_[home];
    for (int i = 0; i < (int)gens_.size(); i++) {
        if (i != home && gens_[i].letter(q) != 'I') {
            gens_[i] *= mb;
        }
    }
    for (auto *l : {&logical_x_, &logical_z_}) {
        if (*l && (*l)->letter(q) != 'I') {
            if ((*l)->letter(q) == basis) {
                **l *= mb;
            } else {
                l->reset();
            }
        }
    }
    if (opts.destructive) {
        gens_.erase(gens_.begin() + home);
        removed_[q] = true;
    }
    return result;
}

std::optional<bool> StabilizerTableau::group_sign(const PauliString &p) const {
    if (p.num_qubits() != n_) {
        throw UsageError("operator length mismatch");
    }
    for (const auto &g : gens_) {
        if (!g.commutes(p)) {
            return std::nullopt;
        }
    }
    std::vector<PauliString> rows = gens_;
    auto cols = natural_columns(n_);
    int rank = reduce_rows(rows, cols);
    PauliString rem = p;
    for (int i = 0; i < rank; i++) {
        // leading column of row i
        int lead = -1;
        for (int c = 0; c < 2 * n_; c++) {
            if (column_bit(rows[i], c)) {
                lead = c;
                break;
            }
        }
        if (column_bit(rem, lead)) {
            rem *= rows[i];
        }
    }
    if (!rem.is_identity()) {
        return std::nullopt;
    }
    return rem.negative();
}

bool StabilizerTableau::commuting() const {
    for (size_t i = 0; i < gens_.size(); i++) {
        for (size_t j = i + 1; j < gens_.size(); j++) {
            if (!gens_[i].commutes(gens_[j])) {
                return false;
            }
        }
    }
    return true;
}

bool StabilizerTableau::independent() const {
    std::vector<PauliString> rows = gens_;
    for (auto &r : rows) {
        r.set_negative(false);
    }
    return reduce_rows(rows, natural_columns(n_)) == (int)rows.size();
}

StabilizerTableau StabilizerTableau::restrict_to(const std::vector<int> &keep) const {
    std::vector<int> slot(n_, -1);
    for (int i = 0; i < (int)keep.size(); i++) {
        if (keep[i] < 0 || keep[i] >= n_) {
            throw UsageError("restrict_to: qubit out of range");
        }
        slot[keep[i]] = i;
    }
    auto shrink = [&](const PauliString &p) {
        PauliString out((int)keep.size());
        out.set_negative(p.negative());
        for (int q = 0; q < n_; q++) {
            char l = p.letter(q);
            if (l == 'I') {
                continue;
            }
            if (slot[q] < 0) {
                throw UsageError("restrict_to: operator " + p.str() + " acts on dropped qubit " + std::to_string(q));
            }
            out.set_letter(slot[q], l);
        }
        return out;
    };
    StabilizerTableau t((int)keep.size());
    for (const auto &g : gens_) {
        t.add_generator(shrink(g));
    }
    for (int i = 0; i < (int)keep.size(); i++) {
        t.removed_[i] = removed_[keep[i]];
    }
    if (logical_x_) {
        t.logical_x_ = shrink(*logical_x_);
    }
    if (logical_z_) {
        t.logical_z_ = shrink(*logical_z_);
    }
    return t;
}

StabilizerTableau canonical_form(const StabilizerTableau &t) {
    StabilizerTableau out(t.n_);
    out.gens_ = t.gens_;
    out.removed_ = t.removed_;
    reduce_rows(out.gens_, natural_columns(t.n_));
    return out;
}

bool tableau_equal(const StabilizerTableau &a, const StabilizerTableau &b) {
    return first_difference(a, b) < 0;
}

int first_difference(const StabilizerTableau &a, const StabilizerTableau &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw UsageError(
            "tableau qubit counts differ: " + std::to_string(a.num_qubits()) + " vs " + std::to_string(b.num_qubits()));
    }
    auto ca = canonical_form(a);
    auto cb = canonical_form(b);
    int m = std::max(ca.num_generators(), cb.num_generators());
    for (int i = 0; i < m; i++) {
        if (i >= ca.num_generators() || i >= cb.num_generators() || !(ca.generator(i) == cb.generator(i))) {
            return i;
        }
    }
    return -1;
}

}  // namespace treebsm
