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

#ifndef TREEBSM_MONTECARLO_RECORD_H
#define TREEBSM_MONTECARLO_RECORD_H

#include "json.hpp"
#include "treebsm/montecarlo/sampler.h"

namespace treebsm {

/// Result record: config echo, estimates with standard errors, raw counters,
/// sample count, seed and wall time.
nlohmann::json mc_record(const SampleConfig &cfg, const McEstimate &est);

}  // namespace treebsm

#endif
