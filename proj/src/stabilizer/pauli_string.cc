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

#include "treebsm/stabilizer/pauli_string.h"

#include <stdexcept>

#include "treebsm/core/errors.h"
#include "treebsm/simd/bits.h"

namespace treebsm {

static int words_for(int n) {
    return (n + 63) / 64;
}

PauliString::PauliString(int num_qubits) : n_(num_qubits), xs_(words_for(num_qubits)), zs_(words_for(num_qubits)) {
}

PauliString PauliString::parse(std::string_view text) {
    bool neg = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        neg = text.front() == '-';
        text.remove_prefix(1);
    }
    PauliString p((int)text.size());
    p.negative_ = neg;
    for (size_t q = 0; q < text.size(); q++) {
        p.set_letter((int)q, text[q]);
    }
    return p;
}

PauliString PauliString::single(int num_qubits, int qubit, char letter, bool negative) {
    PauliString p(num_qubits);
    p.set_letter(qubit, letter);
    p.negative_ = negative;
    return p;
}

void PauliString::set_x(int q, bool v) {
    std::uint64_t m = 1ULL << (q & 63);
    xs_[q >> 6] = v ? (xs_[q >> 6] | m) : (xs_[q >> 6] & ~m);
}

void PauliString::set_z(int q, bool v) {
    std::uint64_t m = 1ULL << (q & 63);
    zs_[q >> 6] = v ? (zs_[q >> 6] | m) : (zs_[q >> 6] & ~m);
}

char PauliString::letter(int q) const {
    static constexpr char table[4] = {'I', 'X', 'Z', 'Y'};
    return table[(int)x(q) | ((int)z(q) << 1)];
}

void PauliString::set_letter(int q, char c) {
    switch (c) {
        case 'I':
        case '_':
            set_x(q, false);
            set_z(q, false);
            break;
        case 'X':
            set_x(q, true);
            set_z(q, false);
            break;
        case 'Y':
            set_x(q, true);
            set_z(q, true);
            break;
        case 'Z':
            set_x(q, false);
            set_z(q, true);
            break;
        default:
            throw UsageError(std::string("not a Pauli letter: '") + c + "'");
    }
}

bool PauliString::is_identity() const {
    for (size_t i = 0; i < xs_.size(); i++) {
        if (xs_[i] | zs_[i]) {
            return false;
        }
    }
    return true;
}

int PauliString::weight() const {
    int w = 0;
    for (int q = 0; q < n_; q++) {
        w += x(q) || z(q);
    }
    return w;
}

bool PauliString::commutes(const PauliString &other) const {
    const auto &k = simd::kernels();
    std::size_t w = xs_.size();
    std::uint64_t c = k.popcount_and(xs_.data(), other.zs_.data(), w) + k.popcount_and(zs_.data(), other.xs_.data(), w);
    return (c & 1) == 0;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    if (rhs.n_ != n_) {
        throw UsageError("Pauli string length mismatch");
    }
    const auto &k = simd::kernels();
    std::size_t w = xs_.size();
    // i-exponent: |x1 z1| + |x2 z2| - |x3 z3| + 2 |z1 x2|  (mod 4)
    std::uint64_t e = k.popcount_and(xs_.data(), zs_.data(), w) + k.popcount_and(rhs.xs_.data(), rhs.zs_.data(), w) +
                      2 * k.popcount_and(zs_.data(), rhs.xs_.data(), w);
    k.xor_into(xs_.data(), rhs.xs_.data(), w);
    k.xor_into(zs_.data(), rhs.zs_.data(), w);
    e -= k.popcount_and(xs_.data(), zs_.data(), w);
    e &= 3;
    if (e & 1) {
        throw std::logic_error("Pauli product is not Hermitian (anticommuting factors)");
    }
    negative_ ^= rhs.negative_ ^ (e == 2);
    return *this;
}

void PauliString::resize(int num_qubits) {
    n_ = num_qubits;
    xs_.resize(words_for(num_qubits));
    zs_.resize(words_for(num_qubits));
}

std::string PauliString::str() const {
    std::string s(1, negative_ ? '-' : '+');
    for (int q = 0; q < n_; q++) {
        s += letter(q);
    }
    return s;
}

}  // namespace treebsm
