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

#ifndef TREEBSM_CORE_TREE_H
#define TREEBSM_CORE_TREE_H

#include <cstdint>
#include <span>
#include <vector>

#include "treebsm/core/branching.h"

namespace treebsm {

/// Materialized rooted tree with breadth-first vertex numbering.
///
/// Vertex 0 is the root. The children of any vertex are a contiguous index
/// range, and levels are contiguous too.
class TreeGraph {
   public:
    static constexpr std::int64_t kDefaultVertexCap = 1'000'000;

    int size() const {
        return (int)parent_.size();
    }
    int depth() const {
        return (int)level_begin_.size() - 2;
    }
    int parent(int v) const {
        return parent_[v];
    }
    int level(int v) const {
        return level_[v];
    }
    std::span<const int> children(int v) const;
    /// C_v plus parent(v) for non-root vertices.
    std::vector<int> neighbors(int v) const;
    /// Vertices at level k, as [first, last).
    std::pair<int, int> level_range(int k) const {
        return {level_begin_[k], level_begin_[k + 1]};
    }
    const BranchingVector &shape() const {
        return shape_;
    }

    friend TreeGraph build_tree(const BranchingVector &b, std::int64_t vertex_cap);

   private:
    BranchingVector shape_;
    std::vector<int> parent_;
    std::vector<int> level_;
    std::vector<int> child_begin_;  // size n + 1
    std::vector<int> child_index_;  // identity, kept for span access
    std::vector<int> level_begin_;  // size d + 2
};

TreeGraph build_tree(const BranchingVector &b, std::int64_t vertex_cap = TreeGraph::kDefaultVertexCap);

}  // namespace treebsm

#endif
