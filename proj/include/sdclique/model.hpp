#ifndef SDCLIQUE_MODEL_HPP
#define SDCLIQUE_MODEL_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"
#include "polytope.hpp"

namespace sdc {

/// Regularized objective
///   h(x,y) = x'[A + A(y)]x + alpha/2 |x|^2 + beta/2 |y|^2
/// with 0 < alpha < 2, beta > 0 and defect budget s <= |comp edges|.
struct ModelParams {
  double alpha = 1.0;
  double beta = 1.0;
  unsigned s = 0;

  /// alpha = 1, beta = 2/n^2.
  static ModelParams standard(const Graph& g, unsigned s) {
    const double n = static_cast<double>(std::max<std::size_t>(g.n(), 1));
    return {1.0, 2.0 / (n * n), s};
  }

  void validate(const Graph& g) const {
    if (!(alpha > 0.0 && alpha < 2.0))
      throw std::invalid_argument("alpha must lie in (0,2)");
    if (!(beta > 0.0))
      throw std::invalid_argument("beta must be positive");
    if (s > g.comp_count())
      throw std::invalid_argument("s exceeds the number of missing edges");
  }
};

/// Gradient of h at one point. gx_i = 2[(A + A(y))x]_i + alpha x_i,
/// gy_ij = 2 x_i x_j + beta y_ij.
struct GradientCache {
  std::vector<double> gx;
  std::vector<double> gy;
  std::uint64_t version = 0;
};

inline double objective(const Graph& g, const ModelParams& p, const FeasiblePoint& z) {
  double quad = 0.0;
  for (const auto& [i, j] : g.edges())
    quad += z.x[i] * z.x[j];
  double fake = 0.0;
  const auto& ce = g.comp_edges();
  for (std::size_t e = 0; e < ce.size(); ++e)
    if (z.y[e] != 0.0)
      fake += z.y[e] * z.x[ce[e].u] * z.x[ce[e].v];
  double xx = 0.0, yy = 0.0;
  for (double v : z.x)
    xx += v * v;
  for (double v : z.y)
    yy += v * v;
  return 2.0 * quad + 2.0 * fake + 0.5 * p.alpha * xx + 0.5 * p.beta * yy;
}

inline GradientCache gradient(const Graph& g, const ModelParams& p, const FeasiblePoint& z) {
  GradientCache c;
  const std::size_t n = g.n();
  c.gx.assign(n, 0.0);
  for (Vertex i = 0; i < n; ++i) {
    double acc = 0.0;
    for (Vertex j : g.neighbors(i))
      acc += z.x[j];
    for (const auto& [j, e] : g.comp_neighbors(i))
      acc += z.y[e] * z.x[j];
    c.gx[i] = 2.0 * acc + p.alpha * z.x[i];
  }
  const auto& ce = g.comp_edges();
  c.gy.resize(ce.size());
  for (std::size_t e = 0; e < ce.size(); ++e)
    c.gy[e] = 2.0 * z.x[ce[e].u] * z.x[ce[e].v] + p.beta * z.y[e];
  return c;
}

/// phi(a) = c0 + c1 a + c2 a^2 + c3 a^3.
struct Cubic {
  double c0 = 0, c1 = 0, c2 = 0, c3 = 0;
  double operator()(double a) const { return c0 + a * (c1 + a * (c2 + a * c3)); }
  double derivative(double a) const { return c1 + a * (2.0 * c2 + 3.0 * a * c3); }
};

/// A feasible point together with the products A x and A(y) x, kept exact
/// under the affine moves the solvers make. Everything the iterations need
/// (gradient rows, objective, line polynomials) is read off these in O(n)
/// plus the size of the y support touched.
class TrackedPoint {
public:
  static constexpr unsigned audit_period = 500;
  static constexpr double drift_tol = 1e-8;

  TrackedPoint(const Graph& g, const ModelParams& p, FeasiblePoint z) : g_(&g), p_(p), z_(std::move(z)) {
    if (z_.x.size() != g.n() || z_.y.size() != g.comp_count())
      throw std::invalid_argument("point dimensions do not match graph");
    rebuild();
  }

  const FeasiblePoint& point() const noexcept { return z_; }
  const ModelParams& params() const noexcept { return p_; }
  const Graph& graph() const noexcept { return *g_; }
  std::uint64_t version() const noexcept { return version_; }
  unsigned drift_rebuilds() const noexcept { return drift_rebuilds_; }
  double y_sum() const noexcept { return y_sum_; }

  double gx(Vertex i) const { return 2.0 * (u_[i] + w_[i]) + p_.alpha * z_.x[i]; }
  double gy(EdgeIndex e) const {
    const auto& [i, j] = g_->comp_edges()[e];
    return 2.0 * z_.x[i] * z_.x[j] + p_.beta * z_.y[e];
  }

  std::vector<double> gx_vector() const {
    std::vector<double> out(z_.x.size());
    for (Vertex i = 0; i < out.size(); ++i)
      out[i] = gx(i);
    return out;
  }
  std::vector<double> gy_vector() const {
    std::vector<double> out(z_.y.size());
    for (EdgeIndex e = 0; e < out.size(); ++e)
      out[e] = gy(e);
    return out;
  }
  GradientCache cache() const { return {gx_vector(), gy_vector(), version_}; }

  double objective() const {
    double xu = 0.0, xw = 0.0;
    for (std::size_t i = 0; i < z_.x.size(); ++i) {
      xu += z_.x[i] * u_[i];
      xw += z_.x[i] * w_[i];
    }
    return xu + xw + 0.5 * p_.alpha * x_sq_ + 0.5 * p_.beta * y_sq_;
  }

  // Primitive moves. Each keeps A x and A(y) x exact.

  void scale_x(double c) {
    for (std::size_t i = 0; i < z_.x.size(); ++i) {
      z_.x[i] *= c;
      u_[i] *= c;
      w_[i] *= c;
    }
    x_sq_ *= c * c;
    touch();
  }

  void scale_y(double c) {
    for (auto& v : z_.y)
      v *= c;
    for (auto& v : w_)
      v *= c;
    y_sq_ *= c * c;
    y_sum_ *= c;
    touch();
  }

  void add_x(Vertex l, double t) {
    x_sq_ += t * (2.0 * z_.x[l] + t);
    z_.x[l] += t;
    for (Vertex j : g_->neighbors(l))
      u_[j] += t;
    for (const auto& [j, e] : g_->comp_neighbors(l))
      if (z_.y[e] != 0.0)
        w_[j] += t * z_.y[e];
    touch();
  }

  void add_y(EdgeIndex e, double t) {
    const auto& [i, j] = g_->comp_edges()[e];
    w_[i] += t * z_.x[j];
    w_[j] += t * z_.x[i];
    y_sq_ += t * (2.0 * z_.y[e] + t);
    y_sum_ += t;
    z_.y[e] += t;
    touch();
  }

  /// z <- z + t (v - z). Negative t moves away from v. When move_y is false
  /// only x moves.
  void move(const PolytopeVertex& v, double t, bool move_y) {
    const double c = 1.0 - t;
    scale_x(c);
    if (move_y)
      scale_y(c);
    add_x(v.vx, t);
    if (move_y)
      for (EdgeIndex e : v.vy)
        add_y(e, t);
    count_update();
  }

  /// Replace the 0/1 vector y by the indicator of `ones` (sorted); the
  /// current y must itself be 0/1.
  void set_y_vertex(std::span<const EdgeIndex> old_ones, std::span<const EdgeIndex> ones) {
    for (EdgeIndex e : old_ones)
      if (!std::binary_search(ones.begin(), ones.end(), e))
        add_y(e, -z_.y[e]);
    for (EdgeIndex e : ones)
      if (z_.y[e] != 1.0)
        add_y(e, 1.0 - z_.y[e]);
    count_update();
  }

  /// Polynomial phi(a) = h(z + a sigma (v - z)), sigma = +1 toward v,
  /// -1 away from v. Also reports |d|_2^2 and |d|_1.
  Cubic line_cubic(const PolytopeVertex& v, double sigma, bool move_y, double* dir_norm_sq = nullptr,
                   double* dir_l1 = nullptr) const {
    const Vertex l = v.vx;
    double xu = 0.0, xw = 0.0;
    for (std::size_t i = 0; i < z_.x.size(); ++i) {
      xu += z_.x[i] * u_[i];
      xw += z_.x[i] * w_[i];
    }
    const double xl = z_.x[l];
    const double t1 = u_[l] - xu;
    const double t2 = -2.0 * u_[l] + xu;
    const double t3 = w_[l] - xw;
    const double t4 = -2.0 * w_[l] + xw;
    const double xa = xl - x_sq_;
    const double aa = 1.0 - 2.0 * xl + x_sq_;
    double t5 = 0.0, t6 = 0.0, t7 = 0.0, ya = 0.0, bb = 0.0, l1y = 0.0;
    if (move_y) {
      double xq = 0.0, ql = 0.0, yp = 0.0;
      for (EdgeIndex e : v.vy) {
        const auto& [i, j] = g_->comp_edges()[e];
        xq += 2.0 * z_.x[i] * z_.x[j];
        if (i == l)
          ql += z_.x[j];
        else if (j == l)
          ql += z_.x[i];
        yp += z_.y[e];
      }
      t5 = xq - xw;
      t6 = (ql - xq) - (w_[l] - xw);
      t7 = (-2.0 * ql + xq) - (-2.0 * w_[l] + xw);
      ya = yp - y_sq_;
      bb = static_cast<double>(v.vy.size()) - 2.0 * yp + y_sq_;
      l1y = static_cast<double>(v.vy.size()) + y_sum_ - 2.0 * yp;
    }
    Cubic c;
    c.c0 = xu + xw + 0.5 * p_.alpha * x_sq_ + 0.5 * p_.beta * y_sq_;
    c.c1 = sigma * (2.0 * t1 + 2.0 * t3 + t5 + p_.alpha * xa + p_.beta * ya);
    c.c2 = t2 + t4 + 2.0 * t6 + 0.5 * p_.alpha * aa + 0.5 * p_.beta * bb;
    c.c3 = sigma * t7;
    if (dir_norm_sq)
      *dir_norm_sq = std::max(aa, 0.0) + std::max(bb, 0.0);
    if (dir_l1)
      *dir_l1 = 2.0 * std::max(1.0 - xl, 0.0) + std::max(l1y, 0.0);
    return c;
  }

  /// Zero coordinates within feas_tol of a bound, restore sum(x) = 1 and,
  /// when the budget constraint is (nearly) tight, sum(y) = s.
  void snap(bool snap_y) {
    for (Vertex i = 0; i < z_.x.size(); ++i)
      if (z_.x[i] != 0.0 && z_.x[i] <= feas_tol)
        add_x(i, -z_.x[i]);
    const double sx = z_.x_sum();
    if (sx != 1.0)
      scale_x(1.0 / sx);
    if (!snap_y)
      return;
    double free_sum = 0.0, ones = 0.0;
    for (EdgeIndex e = 0; e < z_.y.size(); ++e) {
      double& ye = z_.y[e];
      if (ye != 0.0 && ye <= feas_tol)
        add_y(e, -ye);
      else if (ye != 1.0 && ye >= 1.0 - feas_tol)
        add_y(e, 1.0 - ye);
      if (z_.y[e] == 1.0)
        ones += 1.0;
      else
        free_sum += z_.y[e];
    }
    const double target = static_cast<double>(z_.s) - ones;
    const double total = ones + free_sum;
    if (free_sum > 0.0 && (total > z_.s || std::abs(total - z_.s) <= sum_tolerance())) {
      const double f = target / free_sum;
      for (EdgeIndex e = 0; e < z_.y.size(); ++e)
        if (z_.y[e] != 0.0 && z_.y[e] != 1.0)
          add_y(e, (f - 1.0) * z_.y[e]);
    }
    y_sum_ = z_.y_sum();
  }

  /// Tolerance for deciding that sum(y) = s, scaled by the number of
  /// accumulated coordinates.
  double sum_tolerance() const { return feas_tol * std::max<double>(1.0, static_cast<double>(z_.y.size())); }

  /// Recompute every cached product from scratch.
  void rebuild() {
    const std::size_t n = g_->n();
    u_.assign(n, 0.0);
    w_.assign(n, 0.0);
    for (const auto& [i, j] : g_->edges()) {
      u_[i] += z_.x[j];
      u_[j] += z_.x[i];
    }
    const auto& ce = g_->comp_edges();
    for (std::size_t e = 0; e < ce.size(); ++e) {
      const double ye = z_.y[e];
      if (ye == 0.0)
        continue;
      w_[ce[e].u] += ye * z_.x[ce[e].v];
      w_[ce[e].v] += ye * z_.x[ce[e].u];
    }
    x_sq_ = 0.0;
    for (double v : z_.x)
      x_sq_ += v * v;
    y_sq_ = 0.0;
    y_sum_ = 0.0;
    for (double v : z_.y) {
      y_sq_ += v * v;
      y_sum_ += v;
    }
    updates_since_audit_ = 0;
    touch();
  }

  /// Largest absolute deviation of the cached x-gradient from a fresh
  /// evaluation.
  double drift() const {
    TrackedPoint fresh(*g_, p_, z_);
    double worst = 0.0;
    for (Vertex i = 0; i < z_.x.size(); ++i)
      worst = std::max(worst, std::abs(gx(i) - fresh.gx(i)));
    return worst;
  }

private:
  void touch() { ++version_; }

  void count_update() {
    if (++updates_since_audit_ < audit_period)
      return;
    if (drift() > drift_tol)
      ++drift_rebuilds_;
    rebuild();
  }

  const Graph* g_;
  ModelParams p_;
  FeasiblePoint z_;
  std::vector<double> u_;
  std::vector<double> w_;
  double x_sq_ = 0.0;
  double y_sq_ = 0.0;
  double y_sum_ = 0.0;
  std::uint64_t version_ = 0;
  unsigned updates_since_audit_ = 0;
  unsigned drift_rebuilds_ = 0;
};

/// Gradient after the step z_new = z_old + t (v - z_old), computed from the
/// cached products of z_old rather than from scratch.
inline GradientCache update_gradient(const TrackedPoint& at_old, const PolytopeVertex& v, double t, bool move_y) {
  TrackedPoint next = at_old;
  if (t != 0.0)
    next.move(v, t, move_y);
  return next.cache();
}

/// lambda_a(z) = <grad h(z), a - z>.
inline double multiplier(const GradientCache& c, const FeasiblePoint& z, const PolytopeVertex& a) {
  double val = linear_value(c.gx, c.gy, a);
  for (std::size_t i = 0; i < z.x.size(); ++i)
    val -= c.gx[i] * z.x[i];
  for (std::size_t e = 0; e < z.y.size(); ++e)
    val -= c.gy[e] * z.y[e];
  return val;
}

/// G(z) = max over the polytope of <grad h(z), v - z>; nonnegative.
inline double fw_gap(const GradientCache& c, const FeasiblePoint& z, unsigned s) {
  return std::max(0.0, multiplier(c, z, fw_vertex(c.gx, c.gy, s)));
}

/// G_F(z) = max(G(z), max over face vertices b of -lambda_b(z)).
inline double in_face_gap(const GradientCache& c, const FeasiblePoint& z, const FaceDescriptor& face) {
  const double g = fw_gap(c, z, z.s);
  const double away = -multiplier(c, z, in_face_min_vertex(c.gx, c.gy, face, z.s));
  return std::max(g, away);
}

/// Objective value at any local maximizer supported on a clique of size k.
inline double closed_form_value(const ModelParams& p, unsigned clique_size) {
  if (clique_size == 0)
    throw std::invalid_argument("clique size must be positive");
  return 1.0 - (2.0 - p.alpha) / (2.0 * clique_size) + p.s * p.beta / 2.0;
}

// ---------------------------------------------------------------------------
// Certificates

struct DefectiveCliqueCertificate {
  std::vector<Vertex> clique;              // sorted
  std::vector<EdgeIndex> y_vertex;         // sorted, exactly s entries
  std::vector<EdgeIndex> missing_in_clique;
  unsigned s = 0;
  double value = 0.0;           // closed form
  double objective_check = 0.0; // h evaluated at (barycenter, y_vertex)
};

enum class CertificateReject {
  none,
  fractional_y,
  budget_not_tight,
  not_defective,
  uncovered_missing_edge,
  not_maximal,
  not_barycentric,
  malformed,
};

inline std::string_view to_string(CertificateReject r) {
  switch (r) {
  case CertificateReject::none: return "none";
  case CertificateReject::fractional_y: return "fractional-y";
  case CertificateReject::budget_not_tight: return "sum-y-not-s";
  case CertificateReject::not_defective: return "not-s-defective";
  case CertificateReject::uncovered_missing_edge: return "missing-edge-not-in-y";
  case CertificateReject::not_maximal: return "not-maximal";
  case CertificateReject::not_barycentric: return "x-not-barycentric";
  case CertificateReject::malformed: return "malformed";
  }
  return "unknown";
}

struct CertificateOutcome {
  std::optional<DefectiveCliqueCertificate> certificate;
  CertificateReject reason = CertificateReject::none;
  explicit operator bool() const noexcept { return certificate.has_value(); }
};

/// Vertex v outside `clique` adjacent to all of it in G(y), if any.
inline std::optional<Vertex> extending_vertex(const Graph& g, std::span<const Vertex> clique,
                                              std::span<const EdgeIndex> y_ones) {
  std::vector<char> in_c(g.n(), 0);
  for (Vertex v : clique)
    in_c[v] = 1;
  std::vector<unsigned> hits(g.n(), 0);
  for (Vertex c : clique)
    for (Vertex v : g.neighbors(c))
      ++hits[v];
  for (EdgeIndex e : y_ones) {
    const auto& [a, b] = g.comp_edges()[e];
    if (in_c[a] && !in_c[b])
      ++hits[b];
    else if (in_c[b] && !in_c[a])
      ++hits[a];
  }
  for (Vertex v = 0; v < g.n(); ++v)
    if (!in_c[v] && hits[v] == clique.size())
      return v;
  return std::nullopt;
}

/// Checks the combinatorial invariants of a (clique, y vertex) pair; on
/// success fills value and objective_check.
inline CertificateOutcome certify(const Graph& g, const ModelParams& p, std::vector<Vertex> clique,
                                  std::vector<EdgeIndex> y_ones) {
  std::sort(clique.begin(), clique.end());
  std::sort(y_ones.begin(), y_ones.end());
  if (clique.empty() || std::adjacent_find(clique.begin(), clique.end()) != clique.end() ||
      clique.back() >= g.n() || std::adjacent_find(y_ones.begin(), y_ones.end()) != y_ones.end() ||
      (!y_ones.empty() && y_ones.back() >= g.comp_count()))
    return {std::nullopt, CertificateReject::malformed};
  if (y_ones.size() != p.s)
    return {std::nullopt, CertificateReject::budget_not_tight};
  if (missing_edge_count(g, clique) > p.s)
    return {std::nullopt, CertificateReject::not_defective};
  std::vector<EdgeIndex> missing;
  for (std::size_t a = 0; a < clique.size(); ++a)
    for (std::size_t b = a + 1; b < clique.size(); ++b) {
      const EdgeIndex e = g.comp_index(clique[a], clique[b]);
      if (e == no_edge)
        continue;
      if (!std::binary_search(y_ones.begin(), y_ones.end(), e))
        return {std::nullopt, CertificateReject::uncovered_missing_edge};
      missing.push_back(e);
    }
  if (extending_vertex(g, clique, y_ones))
    return {std::nullopt, CertificateReject::not_maximal};

  DefectiveCliqueCertificate cert;
  cert.s = p.s;
  cert.value = closed_form_value(p, static_cast<unsigned>(clique.size()));
  FeasiblePoint bary;
  bary.s = p.s;
  bary.x.assign(g.n(), 0.0);
  for (Vertex v : clique)
    bary.x[v] = 1.0 / static_cast<double>(clique.size());
  bary.y.assign(g.comp_count(), 0.0);
  for (EdgeIndex e : y_ones)
    bary.y[e] = 1.0;
  cert.objective_check = objective(g, p, bary);
  std::sort(missing.begin(), missing.end());
  cert.clique = std::move(clique);
  cert.y_vertex = std::move(y_ones);
  cert.missing_in_clique = std::move(missing);
  return {std::move(cert), CertificateReject::none};
}

inline constexpr double certificate_tol = 1e-4;

/// Rounds z to (support of x, 0/1 vertex of y) and accepts iff the result
/// is a local maximizer pattern and x sits within tol of the barycenter.
inline CertificateOutcome extract_certificate(const Graph& g, const ModelParams& p, const FeasiblePoint& z,
                                              double tol = certificate_tol) {
  std::vector<EdgeIndex> ones;
  for (EdgeIndex e = 0; e < z.y.size(); ++e) {
    if (z.y[e] > 1.0 - tol)
      ones.push_back(e);
    else if (z.y[e] >= tol)
      return {std::nullopt, CertificateReject::fractional_y};
  }
  std::vector<Vertex> clique;
  for (Vertex i = 0; i < z.x.size(); ++i)
    if (z.x[i] > tol)
      clique.push_back(i);
  if (clique.empty())
    return {std::nullopt, CertificateReject::malformed};
  auto out = certify(g, p, clique, ones);
  if (!out)
    return out;
  const double w = 1.0 / static_cast<double>(clique.size());
  for (Vertex i = 0; i < z.x.size(); ++i) {
    const double target = std::binary_search(clique.begin(), clique.end(), i) ? w : 0.0;
    if (std::abs(z.x[i] - target) > tol)
      return {std::nullopt, CertificateReject::not_barycentric};
  }
  return out;
}

// ---------------------------------------------------------------------------
// Identification radius

/// Largest eigenvalue of A + A(y) for a 0/1 vector y, by shifted power
/// iteration.
inline double spectral_radius(const Graph& g, std::span<const EdgeIndex> y_ones, double tol = 1e-8,
                              unsigned max_iter = 10000) {
  const std::size_t n = g.n();
  if (n == 0)
    return 0.0;
  std::vector<std::vector<Vertex>> extra(n);
  for (EdgeIndex e : y_ones) {
    extra[g.comp_edges()[e].u].push_back(g.comp_edges()[e].v);
    extra[g.comp_edges()[e].v].push_back(g.comp_edges()[e].u);
  }
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n))), next(n);
  double lambda = 0.0;
  for (unsigned it = 0; it < max_iter; ++it) {
    for (Vertex i = 0; i < n; ++i) {
      double acc = v[i];
      for (Vertex j : g.neighbors(i))
        acc += v[j];
      for (Vertex j : extra[i])
        acc += v[j];
      next[i] = acc;
    }
    double norm = 0.0, rq = 0.0;
    for (Vertex i = 0; i < n; ++i) {
      norm += next[i] * next[i];
      rq += next[i] * v[i];
    }
    norm = std::sqrt(norm);
    for (Vertex i = 0; i < n; ++i)
      v[i] = next[i] / norm;
    const double est = rq - 1.0;
    if (it > 0 && std::abs(est - lambda) <= tol * std::max(1.0, std::abs(est))) {
      lambda = est;
      break;
    }
    lambda = est;
  }
  return lambda;
}

/// Maximum degree of G(y) for a 0/1 vector y.
inline unsigned augmented_max_degree(const Graph& g, std::span<const EdgeIndex> y_ones) {
  std::vector<std::size_t> deg(g.n());
  for (Vertex i = 0; i < g.n(); ++i)
    deg[i] = g.degree(i);
  for (EdgeIndex e : y_ones) {
    ++deg[g.comp_edges()[e].u];
    ++deg[g.comp_edges()[e].v];
  }
  return deg.empty() ? 0U : static_cast<unsigned>(*std::max_element(deg.begin(), deg.end()));
}

/// l1 radius around the barycenter of C inside which the x-iterates of FWdc
/// drop every vertex outside C in at most |supp \ C| steps. Infinity when C
/// is the whole vertex set.
inline double identification_radius(const Graph& g, const ModelParams& p, std::span<const Vertex> clique,
                                    std::span<const EdgeIndex> y_ones, bool use_dmax) {
  std::vector<char> in_c(g.n(), 0);
  for (Vertex v : clique)
    in_c[v] = 1;
  for (std::size_t a = 0; a < clique.size(); ++a)
    for (std::size_t b = a + 1; b < clique.size(); ++b) {
      const EdgeIndex e = g.comp_index(clique[a], clique[b]);
      if (e != no_edge && std::find(y_ones.begin(), y_ones.end(), e) == y_ones.end())
        throw std::invalid_argument("identification_radius: set is not a clique of G(y)");
    }
  if (clique.size() == g.n())
    return std::numeric_limits<double>::infinity();

  std::vector<unsigned> hits(g.n(), 0);
  for (Vertex c : clique)
    for (Vertex v : g.neighbors(c))
      ++hits[v];
  for (EdgeIndex e : y_ones) {
    const auto& [a, b] = g.comp_edges()[e];
    if (in_c[a] && !in_c[b])
      ++hits[b];
    else if (in_c[b] && !in_c[a])
      ++hits[a];
  }
  const double k = static_cast<double>(clique.size());
  double m = std::numeric_limits<double>::infinity();
  for (Vertex v = 0; v < g.n(); ++v)
    if (!in_c[v])
      m = std::min(m, k - hits[v]);
  const double m_alpha = m - 1.0 + p.alpha / 2.0;
  const double delta = use_dmax ? static_cast<double>(augmented_max_degree(g, y_ones)) : spectral_radius(g, y_ones);
  return m_alpha / (m_alpha + 2.0 * k * delta + k * p.alpha);
}

} // namespace sdc

#endif // SDCLIQUE_MODEL_HPP
