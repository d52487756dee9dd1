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

#ifndef TREEBSM_ANALYTIC_DYNAMIC_PROTOCOL_H
#define TREEBSM_ANALYTIC_DYNAMIC_PROTOCOL_H

#include <vector>

#include "treebsm/analytic/static_protocol.h"

namespace treebsm {

/// Per-level quantities of the adaptive protocol for a pair at level k.
///
/// The c branch is a pair whose own BSM was complete, so its children get BSMs.
/// The p and f branches hand the children single-qubit measurements, and the
/// pair's ZZ' comes from two independent single-qubit indirect Z results.
struct DynamicLevel {
    double pr_i_c = 0, err_i_c = 0;  // indirect ZZ' through complete children
    double pr_s_c = 0, err_s_c = 0;  // one child route of the above
    double pr_i_f = 0, err_i_f = 0;  // I_Z * I_Z'; identical for the p branch
    double pr_m = 0;                 // ZZ' known after the adaptive schedule
    double err_m_c = 0, err_m_p = 0, err_m_f = 0;  // ZZ' error given outcome c/p/f and success
    double err_m = 0;                // mixture over outcomes, given success
};

struct DynamicLayerStats {
    std::vector<DynamicLevel> levels;  // k = 0..d
    LayerStats single_qubit;           // W = Z chain used on each tree side

    const DynamicLevel &operator[](int k) const {
        return levels[k];
    }
    double pr_i_p(int k) const {
        return levels[k].pr_i_f;
    }
    double err_i_p(int k) const {
        return levels[k].err_i_f;
    }
};

DynamicLayerStats dynamic_layer_recursion(const BranchingVector &b, const ChannelParams &params);

LogicalBsmResult dynamic_logical_bsm(const BranchingVector &b, const ChannelParams &params);

/// Dispatch on protocol (Static or Dynamic; LossOnly has no analytic form).
LogicalBsmResult logical_bsm(Protocol protocol, const BranchingVector &b, const ChannelParams &params);

}  // namespace treebsm

#endif
