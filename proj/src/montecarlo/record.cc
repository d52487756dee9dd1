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

#include "treebsm/montecarlo/record.h"

namespace treebsm {

nlohmann::json mc_record(const SampleConfig &cfg, const McEstimate &est) {
    const McCounters &c = est.counts;
    return {
        {"config",
         {{"b", cfg.tree.str()},
          {"eta", cfg.params.eta},
          {"eps", cfg.params.eps},
          {"protocol", protocol_name(cfg.protocol)},
          {"samples", cfg.samples},
          {"seed", cfg.seed},
          {"workers", cfg.workers},
          {"faults", fault_model_name(cfg.faults)}}},
        {"pr_complete", est.pr_complete},
        {"pr_stderr", est.pr_stderr},
        {"err_complete", est.err_complete},
        {"err_stderr", est.err_stderr},
        {"N", c.samples},
        {"seed", cfg.seed},
        {"wall_seconds", est.seconds},
        {"counters",
         {{"samples", c.samples},
          {"successes", c.successes},
          {"errors", c.errors},
          {"zz_errors", c.zz_errors},
          {"xx_errors", c.xx_errors},
          {"bsm_photons", c.bsm_photons},
          {"x_photons", c.x_photons},
          {"z_photons", c.z_photons}}},
    };
}

}  // namespace treebsm
