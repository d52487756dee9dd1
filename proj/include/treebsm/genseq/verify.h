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

#ifndef TREEBSM_GENSEQ_VERIFY_H
#define TREEBSM_GENSEQ_VERIFY_H

#include <cstdint>
#include <string>
#include <vector>

#include "treebsm/genseq/sequence.h"
#include "treebsm/stabilizer/tableau.h"

namespace treebsm {

/// Stabilizer state the sequence must produce on the 2(n-1) photons, photon
/// i of tree t at slot t*(n-1) + (vertex-1): both trees' code stabilizers plus
/// Z_L X_L' and X_L Z_L' (tree 0 unprimed).
StabilizerTableau bell_pair_target(const BranchingVector &b);

struct VerifyOptions {
    /// Enumerate every outcome pattern up to this many random measurements.
    int max_exhaustive = 12;
    /// Extra random patterns past that size.
    int random_patterns = 32;
    std::uint64_t seed = 1;
    /// Largest tree (photon_count) the verifier accepts.
    std::int64_t max_photons = 200;
};

struct VerifyReport {
    bool ok = false;
    int measurements = 0;
    int patterns = 0;
    bool exhaustive = false;
    std::string diagnostic;  // empty when ok
};

/// Runs the sequence once. Measurement j takes outcome (-1)^{pattern bit j}
/// whenever it is random; deterministic results are kept as they come.
/// Applies the byproduct corrections and the leaf rotations, then compares
/// with bell_pair_target. `diagnostic` is filled on mismatch.
bool run_bell_pair(const InstructionSequence &seq, const BranchingVector &b, const std::vector<bool> &pattern,
                   std::string *diagnostic = nullptr);

/// Checks the sequence over outcome patterns: all of them when there are at
/// most max_exhaustive measurements; otherwise all-zero, every single flip
/// and random patterns. Final signs are affine in the outcome bits, so the
/// zero pattern and the single flips already pin down every pattern.
VerifyReport verify_bell_pair(const InstructionSequence &seq, const BranchingVector &b,
                              const VerifyOptions &opts = {});

}  // namespace treebsm

#endif
