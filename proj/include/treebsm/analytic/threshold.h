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

#ifndef TREEBSM_ANALYTIC_THRESHOLD_H
#define TREEBSM_ANALYTIC_THRESHOLD_H

#include "treebsm/core/branching.h"
#include "treebsm/core/protocol.h"

namespace treebsm {

/// Box of branching vectors: 1 <= depth <= max_depth, 1 <= b_k <= max_branch.
struct TreeFamily {
    int max_depth = 5;
    int max_branch = 60;
};

/// Default family for threshold reports.
TreeFamily default_threshold_family();

struct BestTree {
    BranchingVector tree;
    double pr_complete = 0;
};

/// Largest pr_complete over the family at loss-free-error eta (eps plays no
/// role in success). Exact: a dominance-pruned dynamic program over levels.
BestTree max_success(Protocol protocol, const TreeFamily &family, double eta);

/// Same maximum by evaluating every tree of the family. For small families.
BestTree max_success_bruteforce(Protocol protocol, const TreeFamily &family, double eta);

struct ThresholdResult {
    double eta_star = 0;  // midpoint of the final bracket
    double lo = 0;        // predicate false here
    double hi = 1;        // predicate true here
    int iterations = 0;
    BestTree witness;     // best tree at hi
};

/// Bisection on eta of "some tree in the family reaches pr_complete >= target".
ThresholdResult find_threshold(Protocol protocol, const TreeFamily &family, double target, double tol = 1e-3);

}  // namespace treebsm

#endif
