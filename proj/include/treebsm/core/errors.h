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

#ifndef TREEBSM_CORE_ERRORS_H
#define TREEBSM_CORE_ERRORS_H

#include <stdexcept>
#include <string>

namespace treebsm {

/// Bad user input: malformed vectors, ranges, flags, paths.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A requested object would exceed a configured size cap.
struct SizeError : std::length_error {
    using std::length_error::length_error;
};

/// A forced measurement outcome disagrees with a deterministic one.
struct ContradictionError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Threshold target cannot be reached inside the family, even at eta = 1.
struct UnreachableTarget : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Combination of options the engine refuses to run.
struct UnsupportedConfiguration : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace treebsm

#endif
