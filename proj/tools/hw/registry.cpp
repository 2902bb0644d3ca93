// Copyright 2026 The hw Authors
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

#include <chrono>

#include "experiments.hpp"

namespace hw::cli {

const std::vector<ExperimentInfo>& experiments() {
  static const std::vector<ExperimentInfo> list{
      {"gap", run_gap},
      {"diam", run_diam},
      {"sandwich", run_sandwich},
      {"sarnak-xue", run_sarnak_xue},
      {"trace-identity", run_trace_identity},
      {"chartable", run_chartable},
      {"quasirandom", run_quasirandom},
      {"clifford", run_clifford},
      {"trace-decay", run_trace_decay},
      {"prime-split", run_prime_split},
      {"rootsys table", run_rootsys_table},
      {"rootsys verify", run_rootsys_verify},
      {"su2 gap", run_su2_gap},
      {"su2 diam", run_su2_diam},
      {"su2 chir", run_su2_chir},
      {"su2 approx-id", run_su2_approx_id},
      {"su2 sk-fit", run_su2_sk_fit},
      {"su2 reps", run_su2_reps},
  };
  return list;
}

Report run_experiment(const std::string& name, Json params) {
  for (const auto& e : experiments()) {
    if (name != e.name) continue;
    Params p(std::move(params));
    const auto start = std::chrono::steady_clock::now();
    Report r = e.fn(p);
    r.experiment = name;
    r.params = p.json();
    r.meta["elapsed_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw ConfigError("unknown experiment '" + name + "'");
}

}  // namespace hw::cli
