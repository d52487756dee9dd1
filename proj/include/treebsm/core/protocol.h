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

#ifndef TREEBSM_CORE_PROTOCOL_H
#define TREEBSM_CORE_PROTOCOL_H

#include <string_view>

namespace treebsm {

enum class Protocol { Static, Dynamic, LossOnly };

std::string_view protocol_name(Protocol p);
/// "static", "dynamic", "loss-only". Throws UsageError otherwise.
Protocol parse_protocol(std::string_view s);

}  // namespace treebsm

#endif
