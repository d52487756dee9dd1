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

#include "treebsm/core/tree.h"

#include <numeric>
#include <string>

#include "treebsm/core/errors.h"

namespace treebsm {

std::span<const int> TreeGraph::children(int v) const {
    int a = child_begin_[v];
    int b = child_begin_[v + 1];
    return std::span<const int>(child_index_).subspan(a, b - a);
}

std::vector<int> TreeGraph::neighbors(int v) const {
    std::vector<int> out;
    if (v != 0) {
        out.push_back(parent_[v]);
    }
    for (int c : children(v)) {
        out.push_back(c);
    }
    return out;
}

TreeGraph build_tree(const BranchingVector &b, std::int64_t vertex_cap) {
    std::int64_t n = photon_count(b);
    if (n > vertex_cap) {
        throw SizeError(
            "tree " + b.str() + " has " + std::to_string(n) + " vertices, above the cap of " +
            std::to_string(vertex_cap));
    }
    TreeGraph t;
    t.shape_ = b;
    t.parent_.assign(n, -1);
    t.level_.assign(n, 0);
    t.child_begin_.assign(n + 1, 0);
    t.child_index_.resize(n);
    std::iota(t.child_index_.begin(), t.child_index_.end(), 0);

    int d = b.depth();
    t.level_begin_.assign(d + 2, 0);
    int next = 1;
    int layer_first = 0;
    int layer_last = 1;
    for (int k = 0; k <= d; k++) {
        t.level_begin_[k] = layer_first;
        int bk = b.at_or_zero(k);
        for (int v = layer_first; v < layer_last; v++) {
            t.level_[v] = k;
            t.child_begin_[v] = next;
            for (int j = 0; j < bk; j++) {
                t.parent_[next++] = v;
            }
        }
        layer_first = layer_last;
        layer_last = next;
    }
    t.level_begin_[d + 1] = (int)n;
    t.child_begin_[n] = next;
    return t;
}

}  // namespace treebsm
