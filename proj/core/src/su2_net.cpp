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

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "hw/su2.hpp"

namespace hw {
namespace {

using Point = std::array<double, 4>;

Point as_point(const SU2Element& g) { return {g.w(), g.x(), g.y(), g.z()}; }

double dot(const Point& a, const Point& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]; }

std::uint64_t pack_cell(const std::array<std::int64_t, 4>& c) {
  std::uint64_t key = 0;
  for (auto v : c) key = (key << 16) | (static_cast<std::uint64_t>(v + 32768) & 0xffff);
  return key;
}

std::array<std::int64_t, 4> cell_of(const Point& p, double side) {
  std::array<std::int64_t, 4> c{};
  for (int i = 0; i < 4; ++i) c[i] = static_cast<std::int64_t>(std::floor(p[i] / side));
  return c;
}

// Kept points bucketed by R^4 cells whose side is at least the largest query chord,
// so a query only needs the 3^4 surrounding cells.
class BucketGrid {
 public:
  explicit BucketGrid(double side) : side_(side) {}

  void insert(const Point& p, std::uint32_t id) { buckets_[pack_cell(cell_of(p, side_))].push_back(id); }

  /// Whether some stored point q has <p, q> > cos_radius.
  bool any_within(const Point& p, double cos_radius, const std::vector<Point>& pts) const {
    const auto c = cell_of(p, side_);
    auto probe = [&](const std::array<std::int64_t, 4>& cell) {
      auto it = buckets_.find(pack_cell(cell));
      if (it == buckets_.end()) return false;
      for (auto id : it->second)
        if (dot(p, pts[id]) > cos_radius) return true;
      return false;
    };
    if (probe(c)) return true;
    std::array<std::int64_t, 4> n{};
    for (int a = -1; a <= 1; ++a)
      for (int b = -1; b <= 1; ++b)
        for (int d = -1; d <= 1; ++d)
          for (int e = -1; e <= 1; ++e) {
            if (a == 0 && b == 0 && d == 0 && e == 0) continue;
            n = {c[0] + a, c[1] + b, c[2] + d, c[3] + e};
            if (probe(n)) return true;
          }
    return false;
  }

 private:
  double side_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets_;
};

// Centers of the R^4 cubes of side t that meet S^3, pushed onto the sphere. Every point of
// S^3 is within angle asin(t) of one of them.
std::vector<Point> sphere_net(double t) {
  const auto k = static_cast<std::int64_t>(std::ceil(1.0 / t)) + 1;
  std::vector<Point> out;
  auto range = [t](std::int64_t i, double& lo2, double& hi2) {
    const double a = i * t, b = (i + 1) * t;
    const double lo = (a <= 0 && b >= 0) ? 0.0 : std::min(std::abs(a), std::abs(b));
    const double hi = std::max(std::abs(a), std::abs(b));
    lo2 = lo * lo;
    hi2 = hi * hi;
  };
  double lo[4], hi[4];
  for (std::int64_t i0 = -k; i0 < k; ++i0) {
    range(i0, lo[0], hi[0]);
    if (lo[0] > 1.0) continue;
    for (std::int64_t i1 = -k; i1 < k; ++i1) {
      range(i1, lo[1], hi[1]);
      if (lo[0] + lo[1] > 1.0) continue;
      for (std::int64_t i2 = -k; i2 < k; ++i2) {
        range(i2, lo[2], hi[2]);
        if (lo[0] + lo[1] + lo[2] > 1.0) continue;
        for (std::int64_t i3 = -k; i3 < k; ++i3) {
          range(i3, lo[3], hi[3]);
          const double mn = lo[0] + lo[1] + lo[2] + lo[3];
          const double mx = hi[0] + hi[1] + hi[2] + hi[3];
          if (mn > 1.0 || mx < 1.0) continue;
          Point c{(i0 + 0.5) * t, (i1 + 0.5) * t, (i2 + 0.5) * t, (i3 + 0.5) * t};
          const double n = std::sqrt(dot(c, c));
          for (double& x : c) x /= n;
          out.push_back(c);
        }
      }
    }
  }
  return out;
}

}  // namespace

double covering_number_lower_bound(double eps) {
  if (!(eps > 0)) throw InvalidArgumentError("eps must be positive");
  if (eps >= std::numbers::pi) return 1.0;
  return 2.0 * std::numbers::pi / (2.0 * eps - std::sin(2.0 * eps));
}

DiamEpsResult diam_eps(const std::vector<SU2Element>& gates, double eps, int depth_cap) {
  if (!(eps > 0)) throw InvalidArgumentError("eps must be positive");
  bool has_identity = false;
  for (const auto& g : gates) has_identity = has_identity || su2_distance(g, SU2Element::identity()) < 1e-14;
  if (!has_identity) throw InvalidArgumentError("gate set must contain the identity");

  DiamEpsResult res;
  res.eps = eps;
  res.depth_cap = depth_cap;
  if (eps > std::numbers::pi) {
    res.upper = 0;
    res.nominal = 0;
    res.kept_per_level.push_back(1);
    return res;
  }

  const double snap_side = std::sin(eps / 8.0);  // cell diameter (as an angle) eps / 4
  const double net_side = std::sin(eps / 4.0);
  const double net_radius = std::asin(net_side);
  const double upper_radius = eps - net_radius;
  const double cos_upper = std::cos(upper_radius);
  const double cos_nominal = std::cos(eps);
  const double need_upper = covering_number_lower_bound(eps);
  const double need_nominal = covering_number_lower_bound(std::min(std::numbers::pi, eps + net_radius));

  const std::vector<Point> net = sphere_net(net_side);
  res.test_points = net.size();
  std::vector<std::uint32_t> pending_upper(net.size()), pending_nominal;
  for (std::uint32_t i = 0; i < net.size(); ++i) pending_upper[i] = i;
  pending_nominal = pending_upper;

  std::vector<SU2Element> kept{SU2Element::identity()};
  std::vector<Point> kept_pts{as_point(kept[0])};
  std::unordered_set<std::uint64_t> cells{pack_cell(cell_of(kept_pts[0], snap_side))};
  BucketGrid grid(2.0 * std::sin(eps / 2.0));
  grid.insert(kept_pts[0], 0);
  std::vector<std::uint32_t> frontier{0};

  auto sweep = [&](std::vector<std::uint32_t>& pending, double cos_radius) {
    std::size_t keep = 0;
    for (auto id : pending)
      if (!grid.any_within(net[id], cos_radius, kept_pts)) pending[keep++] = id;
    pending.resize(keep);
  };

  for (int l = 0;; ++l) {
    res.kept_per_level.push_back(kept.size());
    const auto count = static_cast<double>(kept.size());
    if (!res.nominal && count >= need_nominal) {
      sweep(pending_nominal, cos_nominal);
      if (pending_nominal.empty()) res.nominal = l;
    }
    if (!res.upper && count >= need_upper) {
      sweep(pending_upper, cos_upper);
      if (pending_upper.empty()) res.upper = l;
    }
    if (res.upper && res.nominal) break;
    if (l == depth_cap || frontier.empty()) break;

    std::vector<std::uint32_t> next;
    for (auto f : frontier)
      for (const auto& s : gates) {
        const SU2Element p = kept[f] * s;
        const Point pt = as_point(p);
        if (!cells.insert(pack_cell(cell_of(pt, snap_side))).second) continue;
        const auto id = static_cast<std::uint32_t>(kept.size());
        kept.push_back(p);
        kept_pts.push_back(pt);
        grid.insert(pt, id);
        next.push_back(id);
      }
    frontier = std::move(next);
  }
  return res;
}

SKFitReport solovay_kitaev_fit(const std::vector<SU2Element>& gates, const std::vector<double>& eps_grid,
                               int depth_cap) {
  if (eps_grid.size() < 4) throw InvalidArgumentError("the fit needs at least 4 eps values");
  for (std::size_t i = 0; i < eps_grid.size(); ++i) {
    if (!(eps_grid[i] >= 0.05)) throw InvalidArgumentError("eps below 0.05 is outside the supported range");
    if (i > 0 && !(eps_grid[i] < eps_grid[i - 1])) throw InvalidArgumentError("eps grid must be decreasing");
  }
  SKFitReport rep;
  rep.nondecreasing = true;
  rep.above_counting_bound = true;
  std::vector<double> xs, ys;
  for (double eps : eps_grid) {
    const DiamEpsResult d = diam_eps(gates, eps, depth_cap);
    SKFitRow row;
    row.eps = eps;
    row.certified = d.upper.has_value();
    if (d.upper) {
      row.length = *d.upper;
    } else if (d.nominal) {
      row.length = *d.nominal;
    } else {
      row.length = depth_cap + 1;
    }
    row.counting_lower_bound = static_cast<int>(
        std::ceil(std::log(covering_number_lower_bound(eps)) / std::log(static_cast<double>(gates.size())) - 1e-12));
    if (!rep.rows.empty() && row.length < rep.rows.back().length) rep.nondecreasing = false;
    if (row.length < row.counting_lower_bound) rep.above_counting_bound = false;
    rep.rows.push_back(row);
    if (row.length > 0 && eps < 1.0) {
      xs.push_back(std::log(std::log(1.0 / eps)));
      ys.push_back(std::log(static_cast<double>(row.length)));
    }
  }
  rep.degenerate = xs.size() < 4 || std::all_of(ys.begin(), ys.end(), [&](double y) { return y == ys.front(); });
  if (!rep.degenerate) {
    rep.exponent = regression_slope(xs, ys);
    const double n = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    const double intercept = my - rep.exponent * mx;
    rep.prefactor = std::exp(intercept);
    double rss = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double e = ys[i] - (intercept + rep.exponent * xs[i]);
      rss += e * e;
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    rep.exponent_stderr = xs.size() > 2 ? std::sqrt(rss / (n - 2) / sxx) : 0.0;
  }
  rep.pass = rep.nondecreasing && rep.above_counting_bound && (rep.degenerate || rep.exponent <= 3.5);
  return rep;
}

}  // namespace hw
