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

#include "treebsm/analytic/threshold.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "treebsm/analytic/dynamic_protocol.h"
#include "treebsm/analytic/static_protocol.h"
#include "treebsm/core/errors.h"

namespace treebsm {

TreeFamily default_threshold_family() {
    return TreeFamily{5, 60};
}

static void check_family(const TreeFamily &f) {
    if (f.max_depth < 1 || f.max_branch < 1) {
        throw UsageError("tree family is empty (max_depth and max_branch must be >= 1)");
    }
}

static double ipow(double x, int k) {
    return k == 0 ? 1.0 : std::pow(x, k);
}

namespace {

// A suffix of the tree seen from level k: the branching b_k below it and the
// success of M at levels k and k+1. All later quantities are non-decreasing
// in both success values, so per b_k only the Pareto front over (m0, m1) can
// matter.
struct Suffix {
    double m0;   // M_k
    double m1;   // M_{k+1}, read as 1 at the leaves
    int bk;      // b_k, 0 at the leaves
    int parent;  // index into the previous height's flat list, -1 at the leaves
};

void prune(std::vector<Suffix> &pts) {
    std::sort(pts.begin(), pts.end(), [](const Suffix &a, const Suffix &b) {
        return a.m0 != b.m0 ? a.m0 > b.m0 : a.m1 > b.m1;
    });
    std::size_t kept = 0;
    double best = -1;
    for (const auto &p : pts) {
        if (p.m1 > best) {
            best = p.m1;
            pts[kept++] = p;
        }
    }
    pts.resize(kept);
}

struct Chain {
    double pd, pd_partner;
};

Chain chain_for(Protocol protocol, double eta) {
    if (protocol == Protocol::Static) {
        return {eta * eta, 0.5 * eta * eta};
    }
    // dynamic success runs on the single-qubit Z chain of each side
    return {eta, eta};
}

double top_success(Protocol protocol, double eta, int b0, const Suffix &level1) {
    double e2 = eta * eta;
    double h = 0.5 * e2;
    double a, q;
    if (protocol == Protocol::Static) {
        a = level1.m0;
        q = ipow(level1.m1, level1.bk);
    } else {
        auto indirect = [&](double m) { return eta >= 1.0 ? 1.0 : (m - eta) / (1.0 - eta); };
        double i1 = indirect(level1.m0);
        double pm2 = level1.bk == 0 ? 1.0 : e2 + (1.0 - e2) * std::pow(indirect(level1.m1), 2);
        a = e2 + (1.0 - e2) * i1 * i1;
        q = ipow(pm2, level1.bk);
    }
    // closed form of the first-level multinomial sum
    return ipow(a, b0) - ipow(a - h * q, b0);
}

}  // namespace

BestTree max_success(Protocol protocol, const TreeFamily &family, double eta) {
    check_family(family);
    if (protocol == Protocol::LossOnly) {
        throw UnsupportedConfiguration("threshold search needs an analytic protocol");
    }
    Chain ch = chain_for(protocol, eta);
    int B = family.max_branch;

    // heights[h] holds the pruned suffixes with h levels below the root's
    // children, flattened over b_k
    std::vector<std::vector<Suffix>> heights;
    heights.push_back({Suffix{ch.pd, 1.0, 0, -1}});

    BestTree best;
    best.pr_complete = -1;
    auto consider_tops = [&](int h) {
        const auto &pts = heights[h];
        for (int i = 0; i < (int)pts.size(); i++) {
            for (int b0 = 1; b0 <= B; b0++) {
                double pr = top_success(protocol, eta, b0, pts[i]);
                if (pr > best.pr_complete) {
                    best.pr_complete = pr;
                    std::vector<int> v{b0};
                    for (int hh = h, j = i; hh > 0; j = heights[hh][j].parent, hh--) {
                        v.push_back(heights[hh][j].bk);
                    }
                    best.tree = BranchingVector(v);
                }
            }
        }
    };
    consider_tops(0);

    for (int height = 1; height < family.max_depth; height++) {
        const auto &prev = heights.back();
        std::vector<double> single(prev.size());
        for (std::size_t i = 0; i < prev.size(); i++) {
            single[i] = ch.pd_partner * ipow(prev[i].m1, prev[i].bk);
        }
        std::vector<Suffix> next;
        std::vector<Suffix> front;
        for (int b = 1; b <= B; b++) {
            front.clear();
            for (std::size_t i = 0; i < prev.size(); i++) {
                double m = ch.pd + (1.0 - ch.pd) * (1.0 - ipow(1.0 - single[i], b));
                front.push_back(Suffix{m, prev[i].m0, b, (int)i});
            }
            prune(front);
            next.insert(next.end(), front.begin(), front.end());
        }
        heights.push_back(std::move(next));
        consider_tops(height);
    }
    return best;
}

BestTree max_success_bruteforce(Protocol protocol, const TreeFamily &family, double eta) {
    check_family(family);
    auto params = ChannelParams::make(eta, 0.0);
    BestTree best;
    best.pr_complete = -1;
    std::vector<int> v;
    std::function<void()> rec = [&]() {
        if (!v.empty()) {
            BranchingVector b(v);
            double pr = logical_bsm(protocol, b, params).pr_complete;
            if (pr > best.pr_complete) {
                best = {b, pr};
            }
        }
        if ((int)v.size() == family.max_depth) {
            return;
        }
        for (int x = 1; x <= family.max_branch; x++) {
            v.push_back(x);
            rec();
            v.pop_back();
        }
    };
    rec();
    return best;
}

ThresholdResult find_threshold(Protocol protocol, const TreeFamily &family, double target, double tol) {
    check_family(family);
    if (!(target > 0.0 && target < 1.0)) {
        throw UnreachableTarget("target must lie in (0,1), got " + std::to_string(target));
    }
    if (!(tol > 0)) {
        throw UsageError("tolerance must be positive");
    }
    ThresholdResult r;
    r.witness = max_success(protocol, family, 1.0);
    if (r.witness.pr_complete < target) {
        throw UnreachableTarget(
            "no tree with depth <= " + std::to_string(family.max_depth) + " and branching <= " +
            std::to_string(family.max_branch) + " reaches " + std::to_string(target) + " even at eta = 1");
    }
    r.lo = 0.0;
    r.hi = 1.0;
    while (r.hi - r.lo > tol && r.iterations < 60) {
        double mid = 0.5 * (r.lo + r.hi);
        BestTree bt = max_success(protocol, family, mid);
        if (bt.pr_complete >= target) {
            r.hi = mid;
            r.witness = bt;
        } else {
            r.lo = mid;
        }
        r.iterations++;
    }
    r.eta_star = 0.5 * (r.lo + r.hi);
    return r;
}

}  // namespace treebsm
