#ifndef SDCLIQUE_POLYTOPE_HPP
#define SDCLIQUE_POLYTOPE_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "rng.hpp"

// The feasible set is the product of the unit simplex over the vertices and
// the capped box {y in [0,1]^m : sum(y) <= s} over the complement edges.

namespace sdc {

/// Bound-classification tolerance and snapping threshold.
inline constexpr double feas_tol = 1e-12;

struct FeasiblePoint {
  std::vector<double> x;
  std::vector<double> y;
  unsigned s = 0;

  double x_sum() const { return std::accumulate(x.begin(), x.end(), 0.0); }
  double y_sum() const { return std::accumulate(y.begin(), y.end(), 0.0); }
};

/// x = e_vx, y = indicator of vy (sorted ascending).
struct PolytopeVertex {
  Vertex vx = 0;
  std::vector<EdgeIndex> vy;
  friend bool operator==(const PolytopeVertex&, const PolytopeVertex&) = default;
};

struct FaceDescriptor {
  std::vector<Vertex> x_support;
  std::vector<EdgeIndex> y_zero;
  std::vector<EdgeIndex> y_one;
  std::vector<EdgeIndex> y_free;
  bool sum_active = false;

  /// Dimension of the face: simplex part plus the free y coordinates, minus
  /// one more when the budget constraint binds on them.
  std::size_t dimension() const {
    std::size_t d = x_support.empty() ? 0 : x_support.size() - 1;
    std::size_t fy = y_free.size();
    if (sum_active && fy > 0)
      --fy;
    return d + fy;
  }
};

/// Direction over (x, y). An empty dy means "no movement in y".
struct Direction {
  std::vector<double> dx;
  std::vector<double> dy;
};

inline bool is_feasible(const FeasiblePoint& z, double tol = 1e-9) {
  if (std::abs(z.x_sum() - 1.0) > tol)
    return false;
  for (double v : z.x)
    if (v < -tol)
      return false;
  for (double v : z.y)
    if (v < -tol || v > 1.0 + tol)
      return false;
  return z.y_sum() <= z.s + tol;
}

inline FaceDescriptor minimal_face(const FeasiblePoint& z, double tol, double sum_tol) {
  FaceDescriptor f;
  for (Vertex i = 0; i < z.x.size(); ++i)
    if (z.x[i] > tol)
      f.x_support.push_back(i);
  for (EdgeIndex e = 0; e < z.y.size(); ++e) {
    if (z.y[e] <= tol)
      f.y_zero.push_back(e);
    else if (z.y[e] >= 1.0 - tol)
      f.y_one.push_back(e);
    else
      f.y_free.push_back(e);
  }
  f.sum_active = std::abs(z.y_sum() - static_cast<double>(z.s)) <= sum_tol;
  return f;
}

inline FaceDescriptor minimal_face(const FeasiblePoint& z, double tol) { return minimal_face(z, tol, tol); }

namespace detail {

/// Indices of the k largest entries of g restricted to `pool`, ties to the
/// smaller index. Result sorted ascending.
template <class Pred>
std::vector<EdgeIndex> select_extreme(std::span<const double> g, std::vector<EdgeIndex> pool, std::size_t k,
                                      Pred better) {
  k = std::min(k, pool.size());
  auto cmp = [&](EdgeIndex a, EdgeIndex b) {
    if (g[a] != g[b])
      return better(g[a], g[b]);
    return a < b;
  };
  if (k < pool.size())
    std::nth_element(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k), pool.end(), cmp);
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

} // namespace detail

/// Maximizer of <(gx,gy), v> over the vertices of the polytope.
inline PolytopeVertex fw_vertex(std::span<const double> gx, std::span<const double> gy, unsigned s) {
  PolytopeVertex v;
  v.vx = static_cast<Vertex>(std::max_element(gx.begin(), gx.end()) - gx.begin());
  std::vector<EdgeIndex> positive;
  for (EdgeIndex e = 0; e < gy.size(); ++e)
    if (gy[e] > 0.0)
      positive.push_back(e);
  v.vy = detail::select_extreme(gy, std::move(positive), s, std::greater<>{});
  return v;
}

/// Minimizer of <(gx,gy), v> over the vertices of `face`.
inline PolytopeVertex in_face_min_vertex(std::span<const double> gx, std::span<const double> gy,
                                         const FaceDescriptor& face, unsigned s) {
  if (face.x_support.empty())
    throw std::invalid_argument("in_face_min_vertex: empty x support");
  if (face.y_one.size() > s)
    throw std::logic_error("in_face_min_vertex: face has more than s coordinates at one");
  PolytopeVertex v;
  v.vx = face.x_support.front();
  for (Vertex i : face.x_support)
    if (gx[i] < gx[v.vx])
      v.vx = i;

  const std::size_t budget = s - face.y_one.size();
  std::vector<EdgeIndex> picked;
  if (face.sum_active) {
    picked = detail::select_extreme(gy, face.y_free, budget, std::less<>{});
  } else {
    std::vector<EdgeIndex> negative;
    for (EdgeIndex e : face.y_free)
      if (gy[e] < 0.0)
        negative.push_back(e);
    picked = detail::select_extreme(gy, std::move(negative), budget, std::less<>{});
  }
  v.vy = face.y_one;
  v.vy.insert(v.vy.end(), picked.begin(), picked.end());
  std::sort(v.vy.begin(), v.vy.end());
  return v;
}

inline double linear_value(std::span<const double> gx, std::span<const double> gy, const PolytopeVertex& v) {
  double val = gx[v.vx];
  for (EdgeIndex e : v.vy)
    val += gy[e];
  return val;
}

/// sup{a >= 0 : z + a d feasible} by ratio tests on the inequality
/// constraints. The simplex equality is not tested: directions are
/// differences of simplex points.
inline double max_feasible_step(const FeasiblePoint& z, const Direction& d) {
  double amax = std::numeric_limits<double>::infinity();
  bool moves = false;
  for (std::size_t i = 0; i < z.x.size(); ++i) {
    if (d.dx[i] != 0.0)
      moves = true;
    if (d.dx[i] < 0.0)
      amax = std::min(amax, std::max(z.x[i], 0.0) / -d.dx[i]);
  }
  if (!d.dy.empty()) {
    double sum_d = 0.0, abs_d = 0.0;
    for (std::size_t e = 0; e < z.y.size(); ++e) {
      const double de = d.dy[e];
      if (de == 0.0)
        continue;
      moves = true;
      sum_d += de;
      abs_d += std::abs(de);
      if (de < 0.0)
        amax = std::min(amax, std::max(z.y[e], 0.0) / -de);
      else
        amax = std::min(amax, std::max(1.0 - z.y[e], 0.0) / de);
    }
    if (sum_d > feas_tol * (1.0 + abs_d))
      amax = std::min(amax, std::max(static_cast<double>(z.s) - z.y_sum(), 0.0) / sum_d);
  }
  if (!moves)
    throw std::invalid_argument("max_feasible_step: zero direction");
  if (!std::isfinite(amax))
    throw std::logic_error("max_feasible_step: unbounded direction");
  if (amax <= 0.0)
    throw std::invalid_argument("max_feasible_step: direction is not feasible");
  return amax;
}

enum class StartMode { fdfw, fwdc };

/// x uniform on (0,1)^n normalized to the simplex; y likewise normalized to
/// sum 1 for FDFW starts (zero when s == 0), or zero for FWdc starts.
inline FeasiblePoint random_start(Rng& rng, std::size_t n, std::size_t m, unsigned s, StartMode mode) {
  FeasiblePoint z;
  z.s = s;
  z.x.resize(n);
  for (auto& v : z.x)
    v = rng.uniform();
  const double sx = z.x_sum();
  for (auto& v : z.x)
    v /= sx;
  z.y.assign(m, 0.0);
  if (mode == StartMode::fdfw && s > 0 && m > 0) {
    for (auto& v : z.y)
      v = rng.uniform();
    const double sy = z.y_sum();
    for (auto& v : z.y)
      v /= sy;
  }
  return z;
}

} // namespace sdc

#endif // SDCLIQUE_POLYTOPE_HPP
