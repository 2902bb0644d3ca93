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

#pragma once

#include <string>
#include <vector>

#include "params.hpp"
#include "report.hpp"

namespace hw::cli {

using ExperimentFn = Report (*)(Params&);

struct ExperimentInfo {
  const char* name;
  ExperimentFn fn;
};

// Finite groups.
Report run_gap(Params& p);
Report run_diam(Params& p);
Report run_sandwich(Params& p);
Report run_sarnak_xue(Params& p);
Report run_trace_identity(Params& p);
Report run_chartable(Params& p);
Report run_quasirandom(Params& p);
Report run_clifford(Params& p);
Report run_trace_decay(Params& p);
Report run_prime_split(Params& p);

// Root systems and SU(2).
Report run_rootsys_table(Params& p);
Report run_rootsys_verify(Params& p);
Report run_su2_gap(Params& p);
Report run_su2_diam(Params& p);
Report run_su2_chir(Params& p);
Report run_su2_approx_id(Params& p);
Report run_su2_sk_fit(Params& p);
Report run_su2_reps(Params& p);

const std::vector<ExperimentInfo>& experiments();
/// Looks up the experiment, runs it, and stamps the elapsed time into meta.
Report run_experiment(const std::string& name, Json params);

}  // namespace hw::cli
