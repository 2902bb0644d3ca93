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

#include <cmath>
#include <random>
#include <sstream>

#include "experiments.hpp"
#include "hw/rootsys.hpp"
#include "hw/su2.hpp"
#include "inputs.hpp"

namespace hw::cli {
namespace {

constexpr const char* kRootNormalization = "short roots have squared length 2";
constexpr const char* kSU2Normalization =
    "|m omega| = m / sqrt(2) (short roots squared length 2); dist(g, h) = arccos(Re(g h^-1)) in [0, pi]";

const std::vector<RootType> kAllTypes{RootType::kA,  RootType::kB,  RootType::kC,  RootType::kD, RootType::kE6,
                                      RootType::kE7, RootType::kE8, RootType::kF4, RootType::kG2};

std::string family_label(RootType type, int rank) {
  switch (type) {
    case RootType::kA: return "A";
    case RootType::kB: return "B";
    case RootType::kC: return "C";
    case RootType::kD: return "D";
    default: return root_type_name(type, rank);
  }
}

std::string rational_str(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

std::vector<SU2Element> gates_of(Params& p, bool need_identity) {
  const std::string source = p.str("gates", "five-adic");
  p.set("gates", source);
  auto gates = load_gates(source);
  if (need_identity) {
    bool has = false;
    for (const auto& g : gates) has = has || su2_distance(g, SU2Element::identity()) < 1e-14;
    if (!has) gates.insert(gates.begin(), SU2Element::identity());
  }
  return gates;
}

SU2Element haar(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  double q[4], s = 0.0;
  for (double& x : q) {
    x = n(rng);
    s += x * x;
  }
  s = std::sqrt(s);
  return SU2Element::from_quaternion(q[0] / s, q[1] / s, q[2] / s, q[3] / s);
}

}  // namespace

Report run_rootsys_table(Params& p) {
  const auto max_rank = static_cast<int>(p.integer("max_rank", kMaxClassicalRank));
  p.set("max_rank", max_rank);
  Report r;
  r.results["normalization"] = kRootNormalization;
  r.results["entries"] = Json::array();
  r.table.columns = {"type", "formula", "ranks", "values", "matches_table", "max_A"};
  bool all_at_most_two = true;
  for (auto type : kAllTypes) {
    std::vector<std::string> values;
    std::vector<int> ranks;
    bool match = true;
    Rational max_a = 0;
    for (int n : admissible_ranks(type)) {
      if (n > max_rank) continue;
      const auto rs = RootSystem::build(type, n);
      const Rational a = exponent_A(rs);
      const bool ok = a == table_exponent(type, n);
      match = match && ok;
      max_a = std::max(max_a, a);
      ranks.push_back(n);
      values.push_back(rational_str(a));
      r.results["entries"].push_back({{"name", rs.name()},
                                      {"simple_roots", rs.rank()},
                                      {"positive_roots", rs.positive_roots().size()},
                                      {"A", rational_str(a)},
                                      {"A_decimal", a.convert_to<double>()},
                                      {"matches_table", ok}});
    }
    if (ranks.empty()) continue;
    const char* formula = "";
    switch (type) {
      case RootType::kA: formula = "1+2/(n+1)"; break;
      case RootType::kB:
      case RootType::kC: formula = "1+1/n"; break;
      case RootType::kD: formula = "1+1/(n-1)"; break;
      default: formula = values.front().c_str(); break;
    }
    std::string joined;
    for (const auto& v : values) joined += (joined.empty() ? "" : " ") + v;
    std::string rank_str = ranks.size() == 1 ? std::to_string(ranks[0])
                                             : std::to_string(ranks.front()) + ".." + std::to_string(ranks.back());
    r.table.rows.push_back({family_label(type, ranks.front()), std::string(formula),
                            rank_str, joined, match, rational_str(max_a)});
    all_at_most_two = all_at_most_two && max_a <= 2;
    r.pass = r.pass && match;
  }
  r.results["all_at_most_two"] = all_at_most_two;
  r.pass = r.pass && all_at_most_two;
  return r;
}

Report run_rootsys_verify(Params& p) {
  std::vector<RootType> types = kAllTypes;
  if (p.has("type")) types = {parse_root_type(p.str("type"))};
  const auto max_rank = static_cast<int>(p.integer("max_rank", 8));
  p.set("max_rank", max_rank);
  Report r;
  r.results["normalization"] = kRootNormalization;
  r.table.columns = {"name", "bound", "worst_ratio", "worst_subset", "subsets", "empty_subset_extremal", "pass"};
  std::size_t total = 0;
  for (auto type : types) {
    std::vector<int> ranks = admissible_ranks(type);
    if (p.has("rank")) {
      const auto n = static_cast<int>(p.integer("rank", 0));
      check_admissible(type, n);
      ranks = {n};
    }
    for (int n : ranks) {
      if (n > max_rank && !p.has("rank")) continue;
      const RootsLemmaReport rep = verify_roots_lemma(RootSystem::build(type, n));
      r.table.rows.push_back({rep.name, rational_str(rep.bound), rational_str(rep.worst_ratio), Json(rep.worst_subset),
                              rep.subsets_checked, rep.empty_subset_is_extremal, rep.pass});
      total += rep.subsets_checked;
      r.pass = r.pass && rep.pass;
    }
  }
  r.results["systems"] = r.table.rows.size();
  r.results["subsets_checked"] = total;
  return r;
}

Report run_su2_gap(Params& p) {
  const auto gates = gates_of(p, false);
  const auto rs = p.nums("r", {1.0});
  p.set("r", rs);
  const auto mu = CompactMeasure::uniform(gates);
  Report r;
  r.results["normalization"] = kSU2Normalization;
  r.table.columns = {"r", "max_label", "gap_r"};
  double last = 0.0;
  for (double x : rs) {
    last = gap_r(mu, x);
    r.table.rows.push_back({x, su2_max_label(x), last});
  }
  if (p.has("expect")) {
    const double tol = p.num("tol", 1e-12);
    const double err = std::abs(last - p.num("expect"));
    r.results["expected"] = p.num("expect");
    r.results["error"] = err;
    r.pass = err <= tol;
  }
  return r;
}

Report run_su2_diam(Params& p) {
  const auto gates = gates_of(p, true);
  const auto eps = p.nums("eps", {0.2});
  const auto cap = static_cast<int>(p.integer("cap", kDiamEpsDepthCap));
  p.set("eps", eps);
  p.set("cap", cap);
  Report r;
  r.results["normalization"] = kSU2Normalization;
  r.table.columns = {"eps", "upper", "nominal", "test_points", "kept"};
  for (double e : eps) {
    const DiamEpsResult d = diam_eps(gates, e, cap);
    const std::string over = "> " + std::to_string(cap);
    r.table.rows.push_back({e, d.upper ? Json(*d.upper) : Json(over), d.nominal ? Json(*d.nominal) : Json(over),
                            d.test_points, d.kept_per_level.empty() ? 0 : d.kept_per_level.back()});
    r.pass = r.pass && d.nominal.has_value();
  }
  return r;
}

Report run_su2_chir(Params& p) {
  const auto gates = gates_of(p, false);
  const double radius = p.num("r", 30.0);
  const WalkSchedule sched{p.num("C0", 1.0), p.num("A", 1.0), WalkSchedule::Mode::kCompact};
  const auto max_dim = static_cast<int>(p.integer("max_dim", kChiRMaxDimension));
  p.set("r", radius);
  p.set("C0", sched.c0);
  p.set("A", sched.a);
  const ChiRReport c = chi_r_trace(CompactMeasure::uniform(gates), radius, sched, p.maybe_num("E"), max_dim);
  Report r;
  r.results = {{"normalization", kSU2Normalization},
               {"max_label", c.max_label},
               {"walk_length", c.walk_length},
               {"value", c.value},
               {"haar_limit", c.haar_limit}};
  r.table.columns = {"c", "multiplicity"};
  for (std::size_t k = 0; k < c.multiplicities.size(); ++k)
    if (c.multiplicities[k]) r.table.rows.push_back({k, c.multiplicities[k]});
  if (c.below_bound) {
    r.results["E"] = *c.e_bound;
    r.results["below_bound"] = *c.below_bound;
    r.pass = *c.below_bound;
  }
  return r;
}

Report run_su2_approx_id(Params& p) {
  const auto rs = p.nums("r", {16, 32, 64, 128});
  const auto samples = static_cast<std::size_t>(p.integer("samples", 1'000'000));
  p.set("r", rs);
  p.set("samples", samples);
  p.set("seed", p.seed());
  const ApproxIdentityReport a = approx_identity_check(rs, samples, p.seed());
  Report r;
  r.table.columns = {"r",         "power",   "log_c",     "integral", "integral_se", "l2_norm", "l2_norm_exact",
                     "distance", "distance_se", "distance_reference", "samples"};
  for (const auto& row : a.rows)
    r.table.rows.push_back({row.r, row.power, row.log_c, row.integral, row.integral_se, row.l2_norm, row.l2_norm_exact,
                            row.distance_integral, row.distance_integral_se, row.distance_integral_reference,
                            row.samples});
  r.results = {{"normalization", kSU2Normalization},
               {"r0", a.r0},
               {"distance_slope", a.distance_slope},
               {"l2_slope", a.l2_slope}};
  r.pass = a.pass;
  return r;
}

Report run_su2_sk_fit(Params& p) {
  const auto gates = gates_of(p, true);
  const auto grid = p.nums("grid", {0.8, 0.4, 0.2, 0.1});
  const auto cap = static_cast<int>(p.integer("cap", kDiamEpsDepthCap));
  p.set("grid", grid);
  p.set("cap", cap);
  const SKFitReport s = solovay_kitaev_fit(gates, grid, cap);
  Report r;
  r.table.columns = {"eps", "length", "certified", "counting_lower_bound"};
  for (const auto& row : s.rows) r.table.rows.push_back({row.eps, row.length, row.certified, row.counting_lower_bound});
  r.results = {{"normalization", kSU2Normalization},
               {"exponent", s.exponent},
               {"exponent_stderr", s.exponent_stderr},
               {"prefactor", s.prefactor},
               {"degenerate", s.degenerate},
               {"nondecreasing", s.nondecreasing},
               {"above_counting_bound", s.above_counting_bound}};
  r.pass = s.pass;
  return r;
}

Report run_su2_reps(Params& p) {
  const auto max_m = static_cast<int>(p.integer("max_m", 200));
  const auto per_m = p.integer("samples", 3);
  const auto tensor_max = static_cast<int>(p.integer("tensor_max", 40));
  const auto measures = p.integer("positivity_measures", 2);
  p.set("max_m", max_m);
  p.set("samples", per_m);
  p.set("tensor_max", tensor_max);
  p.set("positivity_measures", measures);
  p.set("seed", p.seed());
  std::mt19937_64 rng(p.seed());
  double unitary = 0.0, homo = 0.0, character = 0.0;
  for (int m = 0; m <= max_m; ++m) {
    const auto id = Eigen::MatrixXcd::Identity(m + 1, m + 1);
    for (std::int64_t k = 0; k < per_m; ++k) {
      const auto g = haar(rng), h = haar(rng);
      const auto pg = irrep_matrix(m, g), ph = irrep_matrix(m, h);
      unitary = std::max(unitary, (pg * pg.adjoint() - id).cwiseAbs().maxCoeff());
      homo = std::max(homo, (pg * ph - irrep_matrix(m, g * h)).cwiseAbs().maxCoeff());
      const double t = g.half_angle();
      character = std::max(character, std::abs(pg.trace() - std::sin((m + 1) * t) / std::sin(t)));
    }
    character = std::max(character, std::abs(irrep_matrix(m, SU2Element::identity()).trace() - double(m + 1)));
  }
  bool tensor = true;
  for (int a = 0; a <= tensor_max; ++a)
    for (int b = 0; b <= tensor_max; ++b) {
      const auto t = tensor_support_check(a, b);
      tensor = tensor && t.support_matches && t.dimensions_match;
    }
  double min_trace = INFINITY;
  for (std::int64_t s = 0; s < measures; ++s) {
    std::vector<SU2Element> atoms;
    std::vector<double> w;
    for (int k = 0; k < 3; ++k) {
      atoms.push_back(haar(rng));
      w.push_back(std::uniform_real_distribution<double>(0.1, 1.0)(rng));
    }
    double total = 0.0;
    for (double x : w) total += x;
    for (double& x : w) x /= total;
    const auto nn = symmetrize(CompactMeasure(atoms, w));
    for (int m = 0; m <= max_m; ++m) min_trace = std::min(min_trace, irrep_operator(m, nn).trace().real());
  }
  Report r;
  r.table.columns = {"check", "value", "tolerance", "pass"};
  r.table.rows.push_back({"unitarity", unitary, 1e-9, unitary <= 1e-9});
  r.table.rows.push_back({"homomorphism", homo, 1e-9, homo <= 1e-9});
  r.table.rows.push_back({"character", character, 1e-9, character <= 1e-9});
  r.table.rows.push_back({"tensor_support", tensor ? 0 : 1, 0, tensor});
  r.table.rows.push_back({"positivity_min_trace", min_trace, -1e-10, min_trace >= -1e-10});
  r.results = {{"unitarity", unitary},
               {"homomorphism", homo},
               {"character", character},
               {"tensor_exact", tensor},
               {"positivity_min_trace", min_trace}};
  r.pass = unitary <= 1e-9 && homo <= 1e-9 && character <= 1e-9 && tensor && min_trace >= -1e-10;
  return r;
}

}  // namespace hw::cli
