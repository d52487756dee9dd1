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

#include "treebsm/search/search.h"

#include <algorithm>
#include <exception>
#include <iomanip>
#include <ostream>
#include <string>
#include <thread>

#include "treebsm/analytic/dynamic_protocol.h"
#include "treebsm/core/errors.h"

namespace treebsm {

SearchBounds SearchBounds::full_box(int d, int b, std::int64_t n) {
    SearchBounds s;
    s.max_depth = d;
    s.max_branch = b;
    s.max_photons = n;
    s.min_branch = 1;
    s.non_increasing = false;
    return s;
}

void SearchBounds::validate() const {
    if (max_depth < 1 || max_branch < 1 || max_photons < 2 || min_branch < 1) {
        throw UsageError("search bounds must be positive (depth >= 1, branch >= 1, photons >= 2)");
    }
    if (min_branch > max_branch) {
        throw UsageError("min_branch exceeds max_branch");
    }
}

void enumerate_trees(const SearchBounds &bounds, const std::function<void(const BranchingVector &)> &visit) {
    bounds.validate();
    std::vector<int> v;
    // photons so far, as 1 + b_0 + b_0 b_1 + ...; the last product kept apart
    std::function<void(int, std::int64_t, std::int64_t)> rec = [&](int depth, std::int64_t n, std::int64_t prod) {
        if ((int)v.size() == depth) {
            visit(BranchingVector(v));
            return;
        }
        int hi = bounds.max_branch;
        if (bounds.non_increasing && !v.empty()) {
            hi = std::min(hi, v.back());
        }
        for (int x = bounds.min_branch; x <= hi; x++) {
            // the remaining levels add at least prod * x * min^j photons each
            std::int64_t p = prod * x, total = n + p, tail = p;
            for (int j = (int)v.size() + 1; j < depth && total <= bounds.max_photons; j++) {
                tail *= bounds.min_branch;
                total += tail;
            }
            if (total > bounds.max_photons) {
                break;
            }
            v.push_back(x);
            rec(depth, n + p, p);
            v.pop_back();
        }
    };
    for (int depth = 1; depth <= bounds.max_depth; depth++) {
        rec(depth, 1, 1);
    }
}

std::vector<BranchingVector> enumerate_trees(const SearchBounds &bounds) {
    std::vector<BranchingVector> out;
    enumerate_trees(bounds, [&](const BranchingVector &b) { out.push_back(b); });
    return out;
}

ParetoEntry evaluate_tree(const BranchingVector &b, const ChannelParams &params, Protocol protocol) {
    LogicalBsmResult r = logical_bsm(protocol, b, params);
    ParetoEntry e;
    e.tree = b;
    e.n = photon_count(b);
    e.protocol = protocol;
    e.eta = params.eta;
    e.eps = params.eps;
    e.pr_complete = r.pr_complete;
    e.err_complete = r.err_complete;
    e.loss_tolerant = r.pr_complete > params.eta * params.eta;
    e.error_correcting = r.err_complete < params.eps_bsm();
    return e;
}

std::vector<ParetoEntry> evaluate_family(const SearchBounds &bounds, const ChannelParams &params,
                                         Protocol protocol, int workers) {
    if (workers < 1) {
        throw UsageError("workers must be >= 1");
    }
    std::vector<BranchingVector> trees = enumerate_trees(bounds);
    std::vector<ParetoEntry> out(trees.size());
    workers = (int)std::max<std::size_t>(1, std::min<std::size_t>(workers, trees.size()));
    std::vector<std::exception_ptr> failures(workers);
    auto job = [&](int k) {
        try {
            // strided so deep and shallow trees spread evenly
            for (std::size_t i = k; i < trees.size(); i += workers) {
                out[i] = evaluate_tree(trees[i], params, protocol);
            }
        } catch (...) {
            failures[k] = std::current_exception();
        }
    };
    if (workers == 1) {
        job(0);
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < workers; k++) {
            pool.emplace_back(job, k);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    for (auto &f : failures) {
        if (f) {
            std::rethrow_exception(f);
        }
    }
    std::sort(out.begin(), out.end(), [](const ParetoEntry &a, const ParetoEntry &b) {
        if (a.n != b.n) {
            return a.n < b.n;
        }
        auto x = a.tree.branches(), y = b.tree.branches();
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    });
    return out;
}

std::vector<ParetoEntry> pareto_front(const SearchBounds &bounds, const ChannelParams &params, Protocol protocol,
                                      int workers) {
    std::vector<ParetoEntry> all = evaluate_family(bounds, params, protocol, workers);
    std::vector<ParetoEntry> front;
    double best_pr = -1, best_err = 2;
    for (auto &e : all) {
        e.improves_loss = e.pr_complete > best_pr;
        e.improves_error = e.err_complete < best_err;
        if (e.improves_loss || e.improves_error) {
            best_pr = std::max(best_pr, e.pr_complete);
            best_err = std::min(best_err, e.err_complete);
            front.push_back(e);
        }
    }
    return front;
}

void write_front_csv(std::ostream &os, const std::vector<ParetoEntry> &front) {
    os << "b,n,protocol,eta,eps,pr_complete,err_complete,loss_tolerant,error_correcting\n";
    auto flags = os.flags();
    os << std::setprecision(17);
    for (const auto &e : front) {
        os << '"' << e.tree.str() << "\"," << e.n << ',' << protocol_name(e.protocol) << ',' << e.eta << ',' << e.eps
           << ',' << e.pr_complete << ',' << e.err_complete << ',' << (e.loss_tolerant ? "true" : "false") << ','
           << (e.error_correcting ? "true" : "false") << '\n';
    }
    os.flags(flags);
}

}  // namespace treebsm
