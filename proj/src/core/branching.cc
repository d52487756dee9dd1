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

#include "treebsm/core/branching.h"

#include <charconv>
#include <limits>

#include "treebsm/core/errors.h"

namespace treebsm {

BranchingVector::BranchingVector(std::vector<int> branches) : branches_(std::move(branches)) {
    if (branches_.empty()) {
        throw UsageError("branching vector must have depth >= 1");
    }
    for (int b : branches_) {
        if (b < 1) {
            throw UsageError("branching vector entries must be >= 1, got " + std::to_string(b));
        }
    }
}

BranchingVector::BranchingVector(std::initializer_list<int> branches)
    : BranchingVector(std::vector<int>(branches)) {
}

static std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

BranchingVector BranchingVector::parse(std::string_view text) {
    std::vector<int> out;
    std::string_view rest = trim(text);
    if (!rest.empty() && rest.front() == '(' && rest.back() == ')') {
        rest = trim(rest.substr(1, rest.size() - 2));
    }
    if (rest.empty()) {
        throw UsageError("empty branching vector");
    }
    while (true) {
        size_t comma = rest.find(',');
        std::string_view tok = trim(rest.substr(0, comma));
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw UsageError("malformed branching vector '" + std::string(text) + "'");
        }
        out.push_back(v);
        if (comma == std::string_view::npos) {
            break;
        }
        rest = rest.substr(comma + 1);
    }
    return BranchingVector(std::move(out));
}

std::string BranchingVector::str() const {
    std::string s;
    for (size_t k = 0; k < branches_.size(); k++) {
        if (k) {
            s += ',';
        }
        s += std::to_string(branches_[k]);
    }
    return s;
}

std::int64_t photon_count(const BranchingVector &b) {
    constexpr std::int64_t cap = std::numeric_limits<std::int64_t>::max() / 4;
    std::int64_t total = 1;
    std::int64_t layer = 1;
    for (int bk : b.branches()) {
        if (layer > cap / bk) {
            throw SizeError("photon count overflows 64 bits for " + b.str());
        }
        layer *= bk;
        total += layer;
    }
    return total;
}

}  // namespace treebsm
