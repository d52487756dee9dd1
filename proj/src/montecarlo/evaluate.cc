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

#include "treebsm/montecarlo/evaluate.h"

#include <stdexcept>
#include <string>

namespace treebsm {

ProtocolEvaluator::ProtocolEvaluator(const TreeGraph &tree) : t_(tree) {
    mode_[0].assign(tree.size(), None);
    mode_[1].assign(tree.size(), None);
}

void ProtocolEvaluator::mark(int v, int side, Mode m) {
    auto &cur = mode_[side][v];
    if (cur != None && cur != m) {
        throw std::logic_error(
            "photon " + std::to_string(v) + " of tree " + (side ? "B" : "A") + " used in two measurement bases");
    }
    cur = m;
}

ProtocolEvaluator::BasisCounts ProtocolEvaluator::basis_counts() const {
    BasisCounts c;
    for (int s = 0; s < 2; s++) {
        for (auto m : mode_[s]) {
            c.bsm += m == Bsm;
            c.x += m == MeasX;
            c.z += m == MeasZ;
        }
    }
    return c;
}

ProtocolEvaluator::Result ProtocolEvaluator::vote(int m, int wrong) {
    if (m % 2 == 0 && wrong != 0 && wrong != m) {
        // drop one result at random
        if (rng_->below(m) < (std::uint64_t)wrong) {
            wrong--;
        }
        m--;
    } else if (m % 2 == 0) {
        m--;
        wrong = wrong ? wrong - 1 : 0;
    }
    return {true, 2 * wrong > m};
}

// Static: pair v was fused by a BSM. Every child pair is fused too, so the
// recursion only reads outcomes.
ProtocolEvaluator::Result ProtocolEvaluator::zz_static(int v) {
    int m = 0, wrong = 0;
    for (int w : t_.children(v)) {
        if (w_->outcome(w) != BsmOutcome::Complete) {
            continue;
        }
        bool ok = true;
        bool e = w_->xx_err[w];
        for (int u : t_.children(w)) {
            Result r = zz_static(u);
            if (!r.ok) {
                ok = false;
                break;
            }
            e ^= r.err;
        }
        if (ok) {
            m++;
            wrong += e;
        }
    }
    if (m > 0) {
        return vote(m, wrong);
    }
    if (w_->outcome(v) != BsmOutcome::Failed) {
        return {true, (bool)w_->zz_err[v]};
    }
    return {false, false};
}

// Dynamic: the children of a complete pair are fused; the children of a
// partial or failed pair are measured in X on each side separately.
ProtocolEvaluator::Result ProtocolEvaluator::zz_dynamic(int v) {
    BsmOutcome o = w_->outcome(v);
    if (o == BsmOutcome::Complete) {
        int m = 0, wrong = 0;
        for (int w : t_.children(v)) {
            mark_pair(w);
        }
        for (int w : t_.children(v)) {
            if (w_->outcome(w) != BsmOutcome::Complete) {
                continue;
            }
            for (int u : t_.children(w)) {
                mark_pair(u);
            }
            bool ok = true;
            bool e = w_->xx_err[w];
            for (int u : t_.children(w)) {
                Result r = zz_dynamic(u);
                if (!r.ok) {
                    ok = false;
                    break;
                }
                e ^= r.err;
            }
            if (ok) {
                m++;
                wrong += e;
            }
        }
        if (m > 0) {
            return vote(m, wrong);
        }
        return {true, (bool)w_->zz_err[v]};
    }
    Result a = iz(v, 0);
    Result b = iz(v, 1);
    if (a.ok && b.ok) {
        return {true, a.err != b.err};
    }
    if (o == BsmOutcome::Partial) {
        return {true, (bool)w_->zz_err[v]};
    }
    return {false, false};
}

// Indirect Z of photon v on one side: X on a child, Z on all grandchildren.
ProtocolEvaluator::Result ProtocolEvaluator::iz(int v, int side) {
    for (int w : t_.children(v)) {
        mark(w, side, MeasX);
    }
    int m = 0, wrong = 0;
    for (int w : t_.children(v)) {
        if (w_->lost[side][w]) {
            continue;
        }
        bool ok = true;
        bool e = w_->x_err[side][w];
        for (int u : t_.children(w)) {
            Result r = mz(u, side);
            if (!r.ok) {
                ok = false;
                break;
            }
            e ^= r.err;
        }
        if (ok) {
            m++;
            wrong += e;
        }
    }
    if (m > 0) {
        return vote(m, wrong);
    }
    return {false, false};
}

// Z of photon v on one side, indirect preferred over direct.
ProtocolEvaluator::Result ProtocolEvaluator::mz(int v, int side) {
    mark(v, side, MeasZ);
    Result r = iz(v, side);
    if (r.ok) {
        return r;
    }
    if (!w_->lost[side][v]) {
        return {true, (bool)w_->z_err[side][v]};
    }
    return {false, false};
}

LogicalOutcome ProtocolEvaluator::top_static() {
    LogicalOutcome out;
    for (int v = 1; v < t_.size(); v++) {
        mark_pair(v);
    }
    auto level1 = t_.children(0);
    bool zz_ok = true;
    bool zz_e = false;
    for (int v : level1) {
        Result r = zz_static(v);
        if (!r.ok) {
            zz_ok = false;
            break;
        }
        zz_e ^= r.err;
    }
    int m = 0, wrong = 0;
    for (int v : level1) {
        if (w_->outcome(v) != BsmOutcome::Complete) {
            continue;
        }
        bool ok = true;
        bool e = w_->xx_err[v];
        for (int w : t_.children(v)) {
            Result r = zz_static(w);
            if (!r.ok) {
                ok = false;
                break;
            }
            e ^= r.err;
        }
        if (ok) {
            m++;
            wrong += e;
        }
    }
    if (!zz_ok || m == 0) {
        return out;
    }
    out.success = true;
    out.zz_error = zz_e;
    out.xx_error = vote(m, wrong).err;
    out.error = out.zz_error || out.xx_error;
    return out;
}

LogicalOutcome ProtocolEvaluator::top_dynamic() {
    LogicalOutcome out;
    auto level1 = t_.children(0);
    for (int v : level1) {
        mark_pair(v);
    }
    // XX_L candidates fuse their children, so mark those first
    for (int v : level1) {
        if (w_->outcome(v) == BsmOutcome::Complete) {
            for (int w : t_.children(v)) {
                mark_pair(w);
            }
        }
    }
    bool zz_ok = true;
    bool zz_e = false;
    for (int v : level1) {
        Result r = zz_dynamic(v);
        if (!r.ok) {
            zz_ok = false;
            break;
        }
        zz_e ^= r.err;
    }
    if (!zz_ok) {
        return out;
    }
    int m = 0, wrong = 0;
    for (int v : level1) {
        if (w_->outcome(v) != BsmOutcome::Complete) {
            continue;
        }
        bool ok = true;
        bool e = w_->xx_err[v];
        for (int w : t_.children(v)) {
            Result r = zz_dynamic(w);
            if (!r.ok) {
                ok = false;
                break;
            }
            e ^= r.err;
        }
        if (ok) {
            m++;
            wrong += e;
        }
    }
    if (m == 0) {
        return out;
    }
    out.success = true;
    out.zz_error = zz_e;
    out.xx_error = vote(m, wrong).err;
    out.error = out.zz_error || out.xx_error;
    return out;
}

// Loss-only: a complete level-1 pair measures its children in Z on both
// sides; a failed one recovers its ZZ' indirectly on both sides.
LogicalOutcome ProtocolEvaluator::top_loss_only() {
    LogicalOutcome out;
    auto level1 = t_.children(0);
    for (int v : level1) {
        mark_pair(v);
    }
    for (int v : level1) {
        BsmOutcome o = w_->outcome(v);
        if (o == BsmOutcome::Failed) {
            if (!iz(v, 0).ok || !iz(v, 1).ok) {
                return out;
            }
        }
    }
    bool any = false;
    for (int v : level1) {
        if (w_->outcome(v) == BsmOutcome::Failed) {
            continue;
        }
        bool ok = true;
        for (int w : t_.children(v)) {
            ok = mz(w, 0).ok && ok;
            ok = mz(w, 1).ok && ok;
        }
        if (ok && w_->outcome(v) == BsmOutcome::Complete) {
            any = true;
        }
    }
    out.success = any;
    return out;
}

LogicalOutcome ProtocolEvaluator::run(Protocol protocol, const World &world, CounterRng &vote_rng) {
    w_ = &world;
    rng_ = &vote_rng;
    for (int s = 0; s < 2; s++) {
        std::fill(mode_[s].begin(), mode_[s].end(), None);
    }
    switch (protocol) {
        case Protocol::Static:
            return top_static();
        case Protocol::Dynamic:
            return top_dynamic();
        case Protocol::LossOnly:
            return top_loss_only();
    }
    throw std::logic_error("unknown protocol");
}

}  // namespace treebsm
