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

#ifndef TREEBSM_CORE_BRANCHING_H
#define TREEBSM_CORE_BRANCHING_H

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace treebsm {

/// Tree shape (b_0, ..., b_{d-1}). Every entry >= 1, depth >= 1.
class BranchingVector {
   public:
    BranchingVector() = default;
    explicit BranchingVector(std::vector<int> branches);
    BranchingVector(std::initializer_list<int> branches);

    /// Parses "15,15,2". Whitespace around entries is tolerated.
    static BranchingVector parse(std::string_view text);

    int depth() const {
        return (int)branches_.size();
    }
    int operator[](int k) const {
        return branches_[k];
    }
    /// b_k, or 0 past the last level (leaves have no children).
    int at_or_zero(int k) const {
        return k < depth() ? branches_[k] : 0;
    }
    std::span<const int> branches() const {
        return branches_;
    }
    std::string str() const;

    auto operator<=>(const BranchingVector &) const = default;
    bool operator==(const BranchingVector &) const = default;

   private:
    std::vector<int> branches_;
};

/// 1 + sum_k prod_{j<=k} b_j. The root is counted.
std::int64_t photon_count(const BranchingVector &b);

}  // namespace treebsm

#endif
