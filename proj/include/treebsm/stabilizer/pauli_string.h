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

#ifndef TREEBSM_STABILIZER_PAULI_STRING_H
#define TREEBSM_STABILIZER_PAULI_STRING_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace treebsm {

/// Signed Hermitian Pauli product. Qubit q carries i^{x z} X^x Z^z, so the
/// (x, z) = (1, 1) letter is exactly Y and the overall phase is the sign.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(int num_qubits);

    /// "+XZI", "-YY", or "XZ" (implicit +).
    static PauliString parse(std::string_view text);
    /// Single-letter operator on one qubit.
    static PauliString single(int num_qubits, int qubit, char letter, bool negative = false);

    int num_qubits() const {
        return n_;
    }
    int num_words() const {
        return (int)xs_.size();
    }
    bool negative() const {
        return negative_;
    }
    void set_negative(bool v) {
        negative_ = v;
    }
    void flip_sign() {
        negative_ = !negative_;
    }

    bool x(int q) const {
        return (xs_[q >> 6] >> (q & 63)) & 1;
    }
    bool z(int q) const {
        return (zs_[q >> 6] >> (q & 63)) & 1;
    }
    void set_x(int q, bool v);
    void set_z(int q, bool v);
    char letter(int q) const;
    void set_letter(int q, char letter);

    bool is_identity() const;
    /// Number of non-identity letters.
    int weight() const;

    /// Symplectic commutation test.
    bool commutes(const PauliString &other) const;

    /// this <- this * rhs. Throws std::logic_error when the product carries an
    /// i phase (only happens for anticommuting inputs).
    PauliString &operator*=(const PauliString &rhs);

    /// Appends identity qubits.
    void resize(int num_qubits);

    std::string str() const;

    bool operator==(const PauliString &other) const = default;

    std::uint64_t *xs() {
        return xs_.data();
    }
    std::uint64_t *zs() {
        return zs_.data();
    }
    const std::uint64_t *xs() const {
        return xs_.data();
    }
    const std::uint64_t *zs() const {
        return zs_.data();
    }

   private:
    int n_ = 0;
    bool negative_ = false;
    std::vector<std::uint64_t> xs_;
    std::vector<std::uint64_t> zs_;
};

}  // namespace treebsm

#endif
