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

#ifndef TREEBSM_SEARCH_SEARCH_H
#define TREEBSM_SEARCH_SEARCH_H

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "treebsm/core/branching.h"
#include "treebsm/core/channel.h"
#include "treebsm/core/protocol.h"

namespace treebsm {

/// Family of branching vectors searched over.
///
/// The defaults keep b_0 >= b_1 >= ... >= 2: trees with a single child per
/// vertex or a wider lower level are left out. full_box() drops both
/// restrictions.
struct SearchBounds {
    int max_depth = 4;
    int max_branch = 80;
    std::int64_t max_photons = 2000;
    int min_branch = 2;
    bool non_increasing = true;

    /// Every vector with depth <= d, 1 <= b_k <= b, photon_count <= n.
    static SearchBounds full_box(int d, int b, std::int64_t n);

    /// Throws UsageError unless the family is finite and non-degenerate.
    void validate() const;
};

/// Visits every vector in the family, shortest first and lexicographic
/// within a depth.
void enumerate_trees(const SearchBounds &bounds, const std::function<void(const BranchingVector &)> &visit);
std::vector<BranchingVector> enumerate_trees(const SearchBounds &bounds);

struct ParetoEntry {
    BranchingVector tree;
    std::int64_t n = 0;
    Protocol protocol = Protocol::Static;
    double eta = 0, eps = 0;
    double pr_complete = 0;
    double err_complete = 0;
    bool loss_tolerant = false;     // pr_complete > eta^2
    bool error_correcting = false;  // err_complete < eps_bsm
    bool improves_loss = false;     // higher pr_complete than every smaller tree
    bool improves_error = false;    // lower err_complete than every smaller tree
};

/// Analytic evaluation of one tree, flags included (improves_* left false).
ParetoEntry evaluate_tree(const BranchingVector &b, const ChannelParams &params, Protocol protocol);

/// Every tree in the family, ordered by (n, vector). Evaluation runs on
/// `workers` threads; the result does not depend on the count.
std::vector<ParetoEntry> evaluate_family(const SearchBounds &bounds, const ChannelParams &params,
                                         Protocol protocol, int workers = 1);

/// Trees that improve on all smaller trees in success or in error, ordered
/// by n. Ties in n are broken by the vector; a tree must beat every strictly
/// smaller tree and every earlier tree of its own size.
std::vector<ParetoEntry> pareto_front(const SearchBounds &bounds, const ChannelParams &params, Protocol protocol,
                                      int workers = 1);

/// Header b,n,protocol,eta,eps,pr_complete,err_complete,loss_tolerant,error_correcting
void write_front_csv(std::ostream &os, const std::vector<ParetoEntry> &front);

}  // namespace treebsm

#endif
