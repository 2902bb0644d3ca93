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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hw/characters.hpp"
#include "hw/diameter.hpp"
#include "hw/rootsys.hpp"
#include "hw/spectra.hpp"
#include "hw/su2.hpp"

using namespace hw;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

GenSet standard_set(const GroupTable& t, const char* which) {
  return GenSet::from_matrices(t, standard_generators(t, which), false);
}

Outcome table_exponents() {
  // Closed forms of the exponent table, written out independently of the library.
  auto expected = [](RootType type, int n) -> Rational {
    switch (type) {
      case RootType::kA: return 1 + Rational(2, n + 1);
      case RootType::kB:
      case RootType::kC: return 1 + Rational(1, n);
      case RootType::kD: return 1 + Rational(1, n - 1);
      case RootType::kE6: return Rational(7, 6);
      case RootType::kE7: return Rational(10, 9);
      case RootType::kE8: return Rational(16, 15);
      case RootType::kF4: return Rational(7, 6);
      case RootType::kG2: return Rational(4, 3);
    }
    return 0;
  };
  int checked = 0, bad = 0;
  for (auto type : {RootType::kA, RootType::kB, RootType::kC, RootType::kD, RootType::kE6, RootType::kE7,
                    RootType::kE8, RootType::kF4, RootType::kG2})
    for (int n : admissible_ranks(type)) {
      ++checked;
      const Rational a = exponent_A(RootSystem::build(type, n));
      if (a != expected(type, n) || a > 2) ++bad;
    }
  return {bad == 0, fmt("%d entries, %d mismatches", checked, bad)};
}

Outcome roots_lemma() {
  int checked = 0, bad = 0;
  std::size_t subsets = 0;
  for (auto type : {RootType::kA, RootType::kB, RootType::kC, RootType::kD, RootType::kE6, RootType::kE7,
                    RootType::kE8, RootType::kF4, RootType::kG2})
    for (int n : admissible_ranks(type)) {
      if (n > 8) continue;
      const auto rep = verify_roots_lemma(RootSystem::build(type, n));
      ++checked;
      subsets += rep.subsets_checked;
      if (!rep.pass) ++bad;
    }
  return {bad == 0, fmt("%d root systems, %zu proper subsets, %d failures", checked, subsets, bad)};
}

Outcome sandwich() {
  int runs = 0, bad = 0;
  std::vector<GroupTable> groups;
  for (std::uint32_t p : {3u, 5u, 7u}) groups.push_back(GroupTable::special_linear(2, p));
  for (std::uint32_t n : {5u, 17u, 101u}) groups.push_back(GroupTable::cyclic(n));
  for (const auto& t : groups)
    for (const char* which : {"std", "alt"}) {
      ++runs;
      if (!folklore_sandwich(t, standard_set(t, which), 1e-9).pass) ++bad;
    }
  return {bad == 0, fmt("%d group/generator pairs, %d failures", runs, bad)};
}

Outcome sarnak_xue() {
  int runs = 0, bad = 0;
  double worst = 1e300;
  for (std::uint32_t p : {3u, 5u}) {
    const auto t = GroupTable::special_linear(2, p);
    const auto chars = character_table(t);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto rep = verify_sarnak_xue(random_symmetric_measure(t, 1000 * p + seed, 6), chars, 1e-8);
      ++runs;
      worst = std::min(worst, rep.worst_margin);
      if (!rep.pass) ++bad;
    }
  }
  return {bad == 0, fmt("%d measures, worst margin %.3e, %d failures", runs, worst, bad)};
}

Outcome quasirandom() {
  std::ostringstream out;
  bool ok = true;
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    const auto cert = quasirandom_cert(character_table(GroupTable::special_linear(2, p)), 1.0 / 3);
    out << "p=" << p << ":" << cert.min_nontrivial_dim << " ";
    ok = ok && cert.min_nontrivial_dim == static_cast<int>((p - 1) / 2);
  }
  return {ok, "min nontrivial dims " + out.str()};
}

Outcome trace_identity() {
  std::vector<GroupTable> groups{GroupTable::special_linear(2, 3), GroupTable::symmetric(4),
                                 GroupTable::special_linear(2, 5), GroupTable::special_linear(3, 2),
                                 GroupTable::special_linear(2, 7), GroupTable::special_linear(2, 8),
                                 GroupTable::cyclic(101)};
  double worst = 0.0;
  int runs = 0;
  for (const auto& t : groups)
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto nu = random_symmetric_measure(t, seed * 31 + t.order(), 1 + seed * 3);
      const auto ev = regular_spectrum(nu);
      worst = std::max(worst, std::abs(std::accumulate(ev.begin(), ev.end(), 0.0) - regular_trace(nu)));
      ++runs;
    }
  return {worst <= 1e-8, fmt("%d measures on %zu groups, max deviation %.2e", runs, groups.size(), worst)};
}

Outcome trace_decay() {
  const auto chain = QuotientChain::special_linear(2, {2, 4, 8, 16, 32});
  const auto& fine = chain.finest();
  const auto mu = Measure::uniform_on(fine, standard_set(fine, "std").members);
  const double a = 2.0;
  const double c0 = calibrate_c0(chain, mu, a);
  const auto rep = trace_decay_experiment(chain, mu, {c0, a});
  std::ostringstream out;
  out << fmt("C0=%.6f", c0);
  for (const auto& r : rep.rows) out << fmt(" q=%u l=%lld trace-1=%.2e", r.modulus, static_cast<long long>(r.walk_length), r.trace - 1.0);
  const double ratio = rep.max_trace / rep.min_trace;
  out << " max/min=" << ratio;
  return {rep.complete && rep.pass && ratio <= 10.0, out.str()};
}

Outcome clifford() {
  bool ok = true;
  std::ostringstream out;
  {
    const auto s3 = GroupTable::symmetric(3);
    const auto a3 = derived_subgroup(s3);
    std::vector<ElementIndex> support{0};
    ElementIndex tr = 1;
    while (element_order(s3, tr) != 2) ++tr;
    support.push_back(tr);
    for (ElementIndex g = 1; g < s3.order(); ++g)
      if (element_order(s3, g) == 3) support.push_back(g);
    std::vector<Measure> measures{symmetrize(Measure::uniform_on(s3, support))};
    for (std::uint64_t seed = 1; seed <= 3; ++seed) measures.push_back(random_symmetric_measure(s3, seed, 3));
    for (const auto& mu : measures) {
      const auto rep = clifford_bound_check(s3, a3, mu, 2, 4);
      ok = ok && rep.applicable && rep.pass;
      out << fmt("S3/A3 %.4f<=%.4f ", rep.lhs, rep.bound);
    }
  }
  {
    const auto t = GroupTable::special_linear(2, 3);
    const auto z = center(t);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const auto rep = clifford_bound_check(t, z, random_symmetric_measure(t, seed, 5), 2, 4);
      ok = ok && rep.applicable && rep.pass;
      out << fmt("SL2(3)/Z %.4f<=%.4f ", rep.lhs, rep.bound);
    }
  }
  return {ok, out.str()};
}

Outcome prime_splitting() {
  bool ok = true;
  std::ostringstream out;
  const auto gens = standard_integer_generators(2);
  for (const auto& chain : {std::vector<std::uint32_t>{1, 2, 4}, std::vector<std::uint32_t>{1, 3, 15}}) {
    const auto rep = prime_splitting_check(2, chain, gens, 6.0);
    ok = ok && rep.pass;
    for (const auto& r : rep.rows)
      out << fmt("q=%u diam=%d C=%.3f ", r.modulus, r.diam_level, r.ratio);
  }
  return {ok, out.str()};
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

Outcome su2_suite() {
  std::mt19937_64 rng(2024);
  double unitary = 0.0, homo = 0.0, character = 0.0;
  for (int m = 0; m <= 200; ++m) {
    const auto id = Eigen::MatrixXcd::Identity(m + 1, m + 1);
    for (int k = 0; k < 3; ++k) {
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
  for (int a = 0; a <= 40; ++a)
    for (int b = 0; b <= 40; ++b) {
      const auto r = tensor_support_check(a, b);
      tensor = tensor && r.support_matches && r.dimensions_match;
    }
  double min_trace = 1e300;
  for (int s = 0; s < 2; ++s) {
    std::vector<SU2Element> atoms;
    std::vector<double> w;
    double total = 0.0;
    for (int k = 0; k < 3; ++k) {
      atoms.push_back(haar(rng));
      w.push_back(1.0 + k);
      total += w.back();
    }
    for (double& x : w) x /= total;
    const auto nn = symmetrize(CompactMeasure(atoms, w));
    for (int m = 0; m <= 200; ++m) min_trace = std::min(min_trace, irrep_operator(m, nn).trace().real());
  }
  const bool ok = unitary <= 1e-9 && homo <= 1e-9 && character <= 1e-9 && tensor && min_trace >= -1e-10;
  return {ok, fmt("unitarity %.1e, homomorphism %.1e, character %.1e, tensor %s, min trace %.2e", unitary, homo,
                  character, tensor ? "exact" : "mismatch", min_trace)};
}

Outcome su2_gap() {
  const double s = 1.0 / std::sqrt(5.0);
  const auto q = SU2Element::from_quaternion(s, 2 * s, 0, 0);
  const auto mu = CompactMeasure::uniform({SU2Element::identity(), q, q.inverse()});
  const double r = 1.0;  // admits m = 1 only
  const double g = gap_r(mu, r);
  const double expect = 1.0 - (1.0 + 2.0 / std::sqrt(5.0)) / 3.0;
  return {su2_max_label(r) == 1 && std::abs(g - expect) <= 1e-12, fmt("gap_r = %.15f, |error| = %.1e", g, std::abs(g - expect))};
}

Outcome sk_fit() {
  const auto rep = solovay_kitaev_fit(five_adic_gates(), {0.8, 0.4, 0.2, 0.1});
  std::ostringstream out;
  for (const auto& r : rep.rows)
    out << fmt("eps=%.2f l=%d%s (>=%d) ", r.eps, r.length, r.certified ? "" : "*", r.counting_lower_bound);
  out << fmt("b=%.3f+-%.3f", rep.exponent, rep.exponent_stderr);
  return {rep.pass, out.str()};
}

Outcome approx_identity() {
  const auto rep = approx_identity_check({16, 32, 64, 128}, 1'000'000, 42);
  bool normalized = true;
  for (const auto& r : rep.rows) normalized = normalized && r.normalized;
  return {rep.pass, fmt("normalized %s, distance slope %.3f, L2 slope %.3f", normalized ? "yes" : "no",
                        rep.distance_slope, rep.l2_slope)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "exponent table", 1, table_exponents},
      {2, "roots lemma", 60, roots_lemma},
      {3, "folklore sandwich", 30, sandwich},
      {4, "Sarnak-Xue", 60, sarnak_xue},
      {5, "quasirandomness", 120, quasirandom},
      {6, "trace identity", 600, trace_identity},
      {7, "trace decay", 600, trace_decay},
      {8, "Clifford refinement", 60, clifford},
      {9, "prime splitting", 300, prime_splitting},
      {10, "SU(2) representations", 60, su2_suite},
      {11, "SU(2) gap example", 1, su2_gap},
      {12, "Solovay-Kitaev consistency", 900, sk_fit},
      {13, "approximate identity", 600, approx_identity},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.time_limit_s;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("%s [%2d] %s (%.2fs%s): %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                in_time ? "" : ", over time limit", o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
