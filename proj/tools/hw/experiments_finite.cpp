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
#include <complex>
#include <cstdio>
#include <numeric>

#include "experiments.hpp"
#include "hw/characters.hpp"
#include "hw/diameter.hpp"
#include "hw/spectra.hpp"
#include "inputs.hpp"

namespace hw::cli {
namespace {

std::size_t cap_of(Params& p) {
  const auto cap = p.integer("cap", static_cast<std::int64_t>(kDefaultOrderCap));
  if (cap <= 0) throw ConfigError("cap must be positive");
  return static_cast<std::size_t>(cap);
}

std::shared_ptr<const GroupTable> group_of(Params& p) {
  const std::string desc = p.str("group");
  p.set("group", canonical_descriptor(desc));
  return load_group(desc, cap_of(p));
}

std::string complex_str(std::complex<double> z) {
  char buf[64];
  if (std::abs(z.imag()) < 1e-12) {
    std::snprintf(buf, sizeof buf, "%.10g", std::abs(z.real()) < 1e-12 ? 0.0 : z.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.10g%+.10gi", std::abs(z.real()) < 1e-12 ? 0.0 : z.real(), z.imag());
  }
  return buf;
}

GapOptions gap_options(Params& p) {
  GapOptions o;
  const std::string method = p.str("method", "auto");
  if (method == "auto") {
    o.method = GapOptions::Method::kAuto;
  } else if (method == "dense") {
    o.method = GapOptions::Method::kDense;
  } else if (method == "iterative") {
    o.method = GapOptions::Method::kIterative;
  } else {
    throw ConfigError("method must be auto, dense or iterative");
  }
  o.tol = p.num("tol", 1e-10);
  o.seed = p.seed();
  return o;
}

}  // namespace

Report run_gap(Params& p) {
  const auto t = group_of(p);
  const std::string gens = p.str("gens", "std");
  p.set("gens", gens);
  const GenSet s = load_genset(*t, gens);
  const Measure mu = Measure::uniform_on(*t, s.members);
  const GapResult g = spectral_gap(mu, gap_options(p));
  Report r;
  r.results = {{"order", t->order()},          {"generators", s.size()},     {"symmetric", s.symmetric},
               {"gap", g.gap},                 {"top_nontrivial_modulus", g.top_nontrivial_modulus},
               {"method", g.method},           {"iterations", g.iterations}, {"residual", g.residual},
               {"converged", g.converged}};
  r.table.columns = {"group", "gens", "order", "gap", "method"};
  r.table.rows.push_back({p.str("group"), gens, t->order(), g.gap, g.method});
  r.pass = g.converged;
  return r;
}

Report run_diam(Params& p) {
  const auto t = group_of(p);
  const std::string gens = p.str("gens", "std");
  p.set("gens", gens);
  const GenSet s = load_genset(*t, gens);
  const GrowthProfile g = diameter(*t, s);
  Report r;
  r.results = {{"order", t->order()},       {"generators", s.size()},
               {"diameter", g.diameter},    {"generating", g.generating},
               {"reached", g.reached},      {"bidirectional_checked", g.bidirectional_checked},
               {"sizes", g.sizes}};
  r.table.columns = {"l", "size"};
  for (std::size_t l = 0; l < g.sizes.size(); ++l) r.table.rows.push_back({l, g.sizes[l]});
  if (p.has("profile")) write_text(p.str("profile"), to_csv(r.table));
  r.pass = g.generating;
  return r;
}

Report run_sandwich(Params& p) {
  const auto t = group_of(p);
  const auto sets = p.strs("gens", {"std", "alt"});
  p.set("gens", sets);
  const double tol = p.num("tol", 1e-9);
  Report r;
  r.table.columns = {"gens", "order", "generators", "diameter", "gap", "lower", "inverse_gap", "upper", "pass"};
  r.results["rows"] = Json::array();
  for (const auto& name : sets) {
    const SandwichReport s = folklore_sandwich(*t, load_genset(*t, name), tol);
    r.results["rows"].push_back({{"gens", name},
                                 {"diameter", s.diameter},
                                 {"gap", s.gap},
                                 {"lower", s.lower},
                                 {"inverse_gap", s.inverse_gap},
                                 {"upper", s.upper},
                                 {"lower_holds", s.lower_holds},
                                 {"upper_holds", s.upper_holds},
                                 {"pass", s.pass}});
    r.table.rows.push_back({name, s.order, s.generators, s.diameter, s.gap, s.lower, s.inverse_gap, s.upper, s.pass});
    r.pass = r.pass && s.pass;
  }
  return r;
}

Report run_sarnak_xue(Params& p) {
  const auto t = group_of(p);
  const auto count = p.integer("measures", 5);
  const auto support = p.integer("support", 6);
  const double tol = p.num("tol", 1e-8);
  p.set("measures", count);
  p.set("support", support);
  p.set("seed", p.seed());
  const CharacterTable chars = character_table(*t);
  Report r;
  r.table.columns = {"measure", "seed", "trace_of_square", "worst_margin", "eigenvalue_rows", "ambiguous", "pass"};
  r.results["measures"] = Json::array();
  for (std::int64_t k = 0; k < count; ++k) {
    const std::uint64_t seed = p.seed() * 1000 + static_cast<std::uint64_t>(k);
    const Measure mu = random_symmetric_measure(*t, seed, static_cast<std::size_t>(support));
    const SarnakXueReport s = verify_sarnak_xue(mu, chars, tol);
    Json rows = Json::array();
    for (const auto& row : s.rows)
      rows.push_back({{"eigenvalue", row.eigenvalue},
                      {"irrep", row.irrep},
                      {"dim", row.irrep_dim},
                      {"multiplicity", row.multiplicity},
                      {"lhs", row.lhs}});
    r.results["measures"].push_back({{"seed", seed},
                                     {"trace_of_square", s.regular_trace_of_square},
                                     {"worst_margin", s.worst_margin},
                                     {"warnings", s.warnings},
                                     {"rows", rows}});
    r.table.rows.push_back({k, seed, s.regular_trace_of_square, s.worst_margin, s.rows.size(), s.ambiguous, s.pass});
    r.pass = r.pass && s.pass;
  }
  return r;
}

Report run_trace_identity(Params& p) {
  const auto t = group_of(p);
  if (t->order() > kDenseSpectrumMaxOrder) throw ConfigError("trace identity needs |G| <= 2048");
  const auto count = p.integer("measures", 10);
  const double tol = p.num("tol", 1e-8);
  p.set("measures", count);
  p.set("seed", p.seed());
  Report r;
  r.table.columns = {"measure", "seed", "regular_trace", "eigenvalue_sum", "deviation"};
  double worst = 0.0;
  for (std::int64_t k = 0; k < count; ++k) {
    const std::uint64_t seed = p.seed() * 1000 + static_cast<std::uint64_t>(k);
    const Measure nu = random_symmetric_measure(*t, seed, 1 + 3 * static_cast<std::size_t>(k));
    const auto ev = regular_spectrum(nu);
    const double sum = std::accumulate(ev.begin(), ev.end(), 0.0);
    const double tr = regular_trace(nu);
    worst = std::max(worst, std::abs(sum - tr));
    r.table.rows.push_back({k, seed, tr, sum, std::abs(sum - tr)});
  }
  r.results = {{"order", t->order()}, {"max_deviation", worst}};
  r.pass = worst <= tol;
  return r;
}

Report run_chartable(Params& p) {
  const auto t = group_of(p);
  const CharacterTable c = character_table(*t);
  const auto& cls = c.classes();
  Report r;
  Json classes = Json::array();
  for (std::size_t k = 0; k < c.num_classes(); ++k)
    classes.push_back({{"representative", t->element(cls.representatives[k]).str()},
                       {"size", cls.sizes[k]},
                       {"element_order", cls.element_orders[k]}});
  Json values = Json::array();
  r.table.columns = {"irrep", "dim"};
  for (std::size_t k = 0; k < c.num_classes(); ++k) r.table.columns.push_back("class" + std::to_string(k));
  for (std::size_t i = 0; i < c.num_irreps(); ++i) {
    Json row = Json::array();
    std::vector<Json> csv{i, c.dim(i)};
    for (std::size_t k = 0; k < c.num_classes(); ++k) {
      const auto v = c.value(i, k);
      row.push_back({v.real(), v.imag()});
      csv.push_back(complex_str(v));
    }
    values.push_back(row);
    r.table.rows.push_back(std::move(csv));
  }
  r.results = {{"order", t->order()},
               {"exponent", c.exponent()},
               {"prime", c.prime()},
               {"dims", c.dims()},
               {"classes", classes},
               {"values", values},
               {"row_orthogonality_error", c.row_orthogonality_error()},
               {"column_orthogonality_error", c.column_orthogonality_error()}};
  r.pass = c.row_orthogonality_error() <= 1e-8 && c.column_orthogonality_error() <= 1e-8;
  return r;
}

Report run_quasirandom(Params& p) {
  const auto t = group_of(p);
  const double alpha = p.num("alpha", 1.0 / 3.0);
  p.set("alpha", alpha);
  const QuasirandomCert q = quasirandom_cert(character_table(*t), alpha);
  Report r;
  r.results = {{"order", t->order()}, {"min_nontrivial_dim", q.min_nontrivial_dim}, {"alpha", q.alpha}, {"c", q.c}};
  r.table.columns = {"irrep", "dim", "kernel_order", "kernel_index"};
  for (std::size_t i = 0; i < q.rows.size(); ++i)
    r.table.rows.push_back({i, q.rows[i].dim, q.rows[i].kernel_order, q.rows[i].kernel_index});
  if (p.has("expect_min_dim")) {
    const auto want = p.integer("expect_min_dim", 0);
    r.results["expected_min_dim"] = want;
    r.pass = q.min_nontrivial_dim == want;
  }
  return r;
}

Report run_clifford(Params& p) {
  const auto t = group_of(p);
  const std::string which = p.str("normal", "center");
  std::vector<ElementIndex> n;
  if (which == "center") {
    n = center(*t);
  } else if (which == "derived") {
    n = derived_subgroup(*t);
  } else {
    throw ConfigError("normal must be center or derived");
  }
  const auto l = static_cast<int>(p.integer("l", 2));
  const auto lp = static_cast<int>(p.integer("lp", 4));
  const std::string measure = p.str("measure", "random");
  const auto count = p.integer("count", 1);
  p.set("normal", which);
  p.set("l", l);
  p.set("lp", lp);
  p.set("measure", measure);

  std::vector<Measure> measures;
  if (measure == "gens") {
    const std::string gens = p.str("gens", "std");
    p.set("gens", gens);
    measures.push_back(symmetrize(Measure::uniform_on(*t, load_genset(*t, gens).members)));
  } else if (measure == "random") {
    p.set("count", count);
    p.set("seed", p.seed());
    const auto support = static_cast<std::size_t>(p.integer("support", 4));
    for (std::int64_t k = 0; k < count; ++k)
      measures.push_back(random_symmetric_measure(*t, p.seed() * 1000 + static_cast<std::uint64_t>(k), support));
  } else {
    throw ConfigError("measure must be gens or random");
  }

  Report r;
  r.results["normal_order"] = n.size();
  r.results["runs"] = Json::array();
  r.table.columns = {"measure", "applicable", "hypothesis", "M", "lhs", "bound", "pass"};
  for (std::size_t k = 0; k < measures.size(); ++k) {
    const CliffordReport c = clifford_bound_check(*t, n, measures[k], l, lp, p.maybe_num("M"), p.num("tol", 1e-6));
    Json rows = Json::array();
    for (const auto& row : c.data.rows)
      rows.push_back({{"dim", row.dim}, {"conjugates", row.conjugates}, {"min_g_dim", row.min_g_dim}, {"term", row.term}});
    r.results["runs"].push_back({{"applicable", c.applicable},
                                 {"hypothesis_value", c.hypothesis_value},
                                 {"M", c.m},
                                 {"lhs", c.lhs},
                                 {"bound", c.bound},
                                 {"note", c.note},
                                 {"rows", rows}});
    r.table.rows.push_back({k, c.applicable, c.hypothesis_value, c.m, c.lhs, c.bound, c.pass});
    r.pass = r.pass && c.pass;
  }
  return r;
}

Report run_trace_decay(Params& p) {
  const auto d = static_cast<int>(p.integer("d", 2));
  std::vector<std::uint32_t> moduli;
  for (auto m : p.integers("moduli", {2, 4, 8, 16, 32})) {
    if (m < 2 || m > 0xffffffffLL) throw ConfigError("moduli must be at least 2");
    moduli.push_back(static_cast<std::uint32_t>(m));
  }
  const auto omega2_primes = static_cast<int>(p.integer("omega2_primes", 1));
  const std::string gens = p.str("gens", "std");
  const double a = p.num("A", 2.0);
  p.set("d", d);
  p.set("moduli", moduli);
  p.set("gens", gens);
  p.set("A", a);
  p.set("omega2_primes", omega2_primes);

  const auto chain = QuotientChain::special_linear(d, moduli, cap_of(p), omega2_primes);
  const GroupTable& fine = chain.finest();
  const Measure mu = Measure::uniform_on(fine, load_genset(fine, gens).members);
  double c0 = 0.0;
  const std::string c0_arg = p.str("C0", "calibrate");
  if (c0_arg == "calibrate") {
    c0 = calibrate_c0(chain, mu, a);
  } else {
    c0 = p.num("C0");
  }
  p.set("C0", c0_arg == "calibrate" ? Json("calibrate") : Json(c0));
  const auto memory_cap = static_cast<std::size_t>(p.integer("memory_cap", static_cast<std::int64_t>(kDefaultOrderCap)));
  const TraceReport t = trace_decay_experiment(chain, mu, {c0, a}, p.maybe_num("M"), memory_cap);

  Report r;
  r.table.columns = {"modulus", "index", "walk_length", "trace", "omega2", "below_bound"};
  for (const auto& row : t.rows)
    r.table.rows.push_back({row.modulus, row.index, row.walk_length, row.trace, row.omega2,
                            row.below_bound ? Json(*row.below_bound) : Json()});
  const double ratio = t.min_trace > 0 ? t.max_trace / t.min_trace : INFINITY;
  r.results = {{"C0", t.c0},
               {"A", t.a},
               {"max_trace", t.max_trace},
               {"min_trace", t.min_trace},
               {"max_min_ratio", ratio},
               {"complete", t.complete},
               {"note", t.note}};
  r.pass = t.pass;
  if (p.has("max_ratio")) {
    r.results["max_ratio_bound"] = p.num("max_ratio");
    r.pass = r.pass && ratio <= p.num("max_ratio");
  }
  return r;
}

Report run_prime_split(Params& p) {
  const auto d = static_cast<int>(p.integer("d", 2));
  std::vector<std::uint32_t> chain;
  for (auto m : p.integers("chain", {})) {
    if (m < 1 || m > 0xffffffffLL) throw ConfigError("chain moduli must be positive");
    chain.push_back(static_cast<std::uint32_t>(m));
  }
  if (chain.empty()) throw ConfigError("missing required parameter 'chain'");
  const std::string gens = p.str("gens", "std");
  const double bound = p.num("bound", 6.0);
  p.set("d", d);
  p.set("chain", chain);
  p.set("gens", gens);
  p.set("bound", bound);
  const PrimeSplitReport s = prime_splitting_check(d, chain, load_integer_generators(d, gens), bound, cap_of(p));
  Report r;
  r.table.columns = {"modulus", "prime", "diam_level", "diam_previous", "diam_prime", "ratio", "within_bound"};
  for (const auto& row : s.rows)
    r.table.rows.push_back(
        {row.modulus, row.prime, row.diam_level, row.diam_previous, row.diam_prime, row.ratio, row.within_bound});
  r.results = {{"max_ratio", s.max_ratio}, {"bound", s.bound}};
  r.pass = s.pass;
  return r;
}

}  // namespace hw::cli
