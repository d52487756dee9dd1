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

#include "treebsm/core/protocol.h"

#include <string>

#include "treebsm/core/errors.h"

namespace treebsm {

std::string_view protocol_name(Protocol p) {
    switch (p) {
        case Protocol::Static:
            return "static";
        case Protocol::Dynamic:
            return "dynamic";
        default:
            return "loss-only";
    }
}

Protocol parse_protocol(std::string_view s) {
    if (s == "static") {
        return Protocol::Static;
    }
    if (s == "dynamic") {
        return Protocol::Dynamic;
    }
    if (s == "loss-only" || s == "loss_only" || s == "lossonly") {
        return Protocol::LossOnly;
    }
    throw UsageError("unknown protocol '" + std::string(s) + "' (static, dynamic, loss-only)");
}

}  // namespace treebsm
