#ifndef SDCLIQUE_SOLVER_COMMON_HPP
#define SDCLIQUE_SOLVER_COMMON_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "model.hpp"
#include "stepsize.hpp"

namespace sdc {

using Clock = std::chrono::steady_clock;

struct StopConfig {
  double eps_gap = 1e-3;
  std::uint64_t max_iters = 1'000'000;
  double time_limit_s = std::numeric_limits<double>::infinity();
  /// Absolute wall-clock cutoff shared by all runs of an experiment.
  std::optional<Clock::time_point> deadline;
  bool require_certificate = true;

  void validate() const {
    if (!(eps_gap > 0.0))
      throw std::invalid_argument("eps must be positive");
  }
};

enum class StopReason {
  converged,      // gap and support conditions met, certificate accepted
  no_certificate, // gap and support met but rejected, stalled, or out of iterations
  time_limit,
};

inline std::string_view to_string(StopReason r) {
  switch (r) {
  case StopReason::converged: return "converged";
  case StopReason::no_certificate: return "no-certificate";
  case StopReason::time_limit: return "time-limit";
  }
  return "unknown";
}

enum class DirectionKind { fw, in_face };

struct IterationRecord {
  std::uint64_t iter = 0;
  DirectionKind kind = DirectionKind::fw;
  double slope = 0.0;
  double gap = 0.0;
  double face_gap = 0.0;
  double alpha_max = 0.0;
  double alpha = 0.0;
  double dir_norm_sq = 0.0;
  double objective = 0.0;
  double delta_h = 0.0;
  std::uint32_t support = 0;
  bool y_changed = false;
  std::vector<Vertex> support_set; // filled only when tracing
  std::vector<double> x;           // filled only when tracing with full points
  std::vector<EdgeIndex> y_ones;   // FWdc only, when tracing
};

/// Keeps the most recent `capacity` records.
class TraceBuffer {
public:
  explicit TraceBuffer(std::size_t capacity = 10000) : capacity_(capacity) {}
  void push(IterationRecord r) {
    if (capacity_ == 0)
      return;
    if (buf_.size() == capacity_)
      buf_.pop_front();
    buf_.push_back(std::move(r));
  }
  std::vector<IterationRecord> records() const { return {buf_.begin(), buf_.end()}; }
  std::size_t size() const { return buf_.size(); }
  bool empty() const { return buf_.empty(); }

private:
  std::size_t capacity_;
  std::deque<IterationRecord> buf_;
};

/// Per-iteration checks of the convergence theory. Off by default.
struct Instrumentation {
  bool enabled = false;
  /// Curvature bound used for the (S1)/(S2) checks; <= 0 means 2 d_max + alpha.
  double L = 0.0;
  bool trace = false;
  bool trace_points = false;
  std::size_t trace_capacity = 10000;
};

struct Diagnostics {
  std::uint64_t iterations_checked = 0;
  std::uint64_t slope_gf_violations = 0;
  double slope_gf_max_err = 0.0;
  std::uint64_t cap_checks = 0;
  std::uint64_t cap_violations = 0;
  std::uint64_t s1s2_checks = 0;
  std::uint64_t s1_violations = 0;
  std::uint64_t s2_violations = 0;
  std::uint64_t monotone_violations = 0;
  std::uint64_t y_change_checks = 0;
  std::uint64_t y_change_increase_violations = 0;
  double y_change_min_increase = std::numeric_limits<double>::infinity();
  std::uint64_t y_change_bound_checks = 0;
  std::uint64_t y_change_bound_violations = 0;
  unsigned drift_rebuilds = 0;

  std::uint64_t total_violations() const {
    return slope_gf_violations + cap_violations + s1_violations + s2_violations + y_change_increase_violations +
           y_change_bound_violations;
  }

  Diagnostics& operator+=(const Diagnostics& o) {
    iterations_checked += o.iterations_checked;
    slope_gf_violations += o.slope_gf_violations;
    slope_gf_max_err = std::max(slope_gf_max_err, o.slope_gf_max_err);
    cap_checks += o.cap_checks;
    cap_violations += o.cap_violations;
    s1s2_checks += o.s1s2_checks;
    s1_violations += o.s1_violations;
    s2_violations += o.s2_violations;
    monotone_violations += o.monotone_violations;
    y_change_checks += o.y_change_checks;
    y_change_increase_violations += o.y_change_increase_violations;
    y_change_min_increase = std::min(y_change_min_increase, o.y_change_min_increase);
    y_change_bound_checks += o.y_change_bound_checks;
    y_change_bound_violations += o.y_change_bound_violations;
    drift_rebuilds += o.drift_rebuilds;
    return *this;
  }
};

enum class Algorithm { fdfw, fwdc };

inline std::string_view to_string(Algorithm a) { return a == Algorithm::fdfw ? "fdfw" : "fwdc"; }

inline Algorithm parse_algorithm(std::string_view s) {
  if (s == "fdfw")
    return Algorithm::fdfw;
  if (s == "fwdc")
    return Algorithm::fwdc;
  throw std::invalid_argument("unknown algorithm: " + std::string(s));
}

struct SolveResult {
  Algorithm algo = Algorithm::fdfw;
  unsigned s = 0;
  std::uint64_t seed = 0;
  FeasiblePoint z;
  std::optional<DefectiveCliqueCertificate> certificate;
  CertificateReject reject = CertificateReject::none;
  /// Support of x rounded at the certificate tolerance.
  std::vector<Vertex> candidate;
  double objective = 0.0;
  double gap = 0.0;
  std::uint64_t iters = 0;
  std::uint64_t y_changes = 0;
  double time_ms = 0.0;
  StopReason stop_reason = StopReason::no_certificate;
  /// Both stopping conditions (gap <= eps, support s-defective) held.
  bool gap_criterion_met = false;
  bool monotone = true;
  Diagnostics diagnostics;
  std::vector<IterationRecord> trace;

  unsigned clique_size() const { return certificate ? static_cast<unsigned>(certificate->clique.size()) : 0U; }
};

inline std::vector<Vertex> support_of(const FeasiblePoint& z, double tol = 0.0) {
  std::vector<Vertex> out;
  for (Vertex i = 0; i < z.x.size(); ++i)
    if (z.x[i] > tol)
      out.push_back(i);
  return out;
}

/// Certificate for the terminal support: C = supp(x), y = the missing
/// edges inside C completed to s ones. Completion prefers coordinates that
/// are large in the terminal y and never adds a fake edge that would let a
/// vertex outside C extend C.
inline CertificateOutcome certificate_from_support(const Graph& g, const ModelParams& p, const FeasiblePoint& z) {
  std::vector<Vertex> clique = support_of(z);
  if (clique.empty())
    return {std::nullopt, CertificateReject::malformed};
  std::vector<char> in_c(g.n(), 0);
  for (Vertex v : clique)
    in_c[v] = 1;
  std::vector<EdgeIndex> ones;
  for (std::size_t a = 0; a < clique.size(); ++a)
    for (std::size_t b = a + 1; b < clique.size(); ++b) {
      const EdgeIndex e = g.comp_index(clique[a], clique[b]);
      if (e != no_edge)
        ones.push_back(e);
    }
  if (ones.size() > p.s)
    return {std::nullopt, CertificateReject::not_defective};

  // hits[v] = |E^y(v) ∩ C| for the y built so far.
  std::vector<unsigned> hits(g.n(), 0);
  for (Vertex c : clique)
    for (Vertex v : g.neighbors(c))
      ++hits[v];
  const auto k = static_cast<unsigned>(clique.size());

  std::vector<char> chosen(g.comp_count(), 0);
  for (EdgeIndex e : ones)
    chosen[e] = 1;
  std::vector<EdgeIndex> order(g.comp_count());
  for (EdgeIndex e = 0; e < order.size(); ++e)
    order[e] = e;
  const auto& ce = g.comp_edges();
  auto outside = [&](EdgeIndex e) { return !in_c[ce[e].u] && !in_c[ce[e].v]; };
  std::stable_sort(order.begin(), order.end(), [&](EdgeIndex a, EdgeIndex b) {
    if (z.y[a] != z.y[b])
      return z.y[a] > z.y[b];
    return outside(a) && !outside(b);
  });
  for (EdgeIndex e : order) {
    if (ones.size() >= p.s)
      break;
    if (chosen[e])
      continue;
    const auto& [a, b] = ce[e];
    if (in_c[a] != in_c[b]) {
      const Vertex out = in_c[a] ? b : a;
      if (hits[out] + 1 >= k)
        continue;
      ++hits[out];
    }
    chosen[e] = 1;
    ones.push_back(e);
  }
  return certify(g, p, std::move(clique), std::move(ones));
}

/// Both stopping conditions of the experimental protocol.
inline bool support_is_defective_clique(const Graph& g, const FeasiblePoint& z, unsigned s) {
  const auto supp = support_of(z);
  return !supp.empty() && missing_edge_count(g, supp) <= s;
}

inline double default_curvature_bound(const Graph& g, const ModelParams& p) {
  return 2.0 * static_cast<double>(max_degree(g)) + p.alpha;
}

/// Deadline bookkeeping shared by both solvers.
class StopClock {
public:
  explicit StopClock(const StopConfig& cfg) : start_(Clock::now()), deadline_(cfg.deadline) {
    if (std::isfinite(cfg.time_limit_s)) {
      auto own = start_ + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(cfg.time_limit_s));
      deadline_ = deadline_ ? std::min(*deadline_, own) : own;
    }
  }
  bool expired() const { return deadline_ && Clock::now() >= *deadline_; }
  double elapsed_ms() const { return std::chrono::duration<double, std::milli>(Clock::now() - start_).count(); }

private:
  Clock::time_point start_;
  std::optional<Clock::time_point> deadline_;
};

inline constexpr std::uint64_t clock_check_period = 1024;

namespace detail {

inline void finish_result(SolveResult& r, const Graph& g, const ModelParams& p, const TrackedPoint& tp,
                          double gap, const StopClock& clock) {
  r.z = tp.point();
  r.objective = tp.objective();
  r.gap = gap;
  r.time_ms = clock.elapsed_ms();
  r.candidate = support_of(r.z, certificate_tol);
  r.diagnostics.drift_rebuilds = tp.drift_rebuilds();
  if (!r.certificate && r.stop_reason != StopReason::time_limit) {
    // Report why the rounded terminal point is not certifiable.
    auto out = certificate_from_support(g, p, r.z);
    r.reject = out.reason;
  }
}

inline IterationRecord with_point(IterationRecord rec, const FeasiblePoint& z, const Instrumentation& ins) {
  rec.support_set = support_of(z);
  rec.support = static_cast<std::uint32_t>(rec.support_set.size());
  if (ins.trace_points)
    rec.x = z.x;
  return rec;
}

} // namespace detail


} // namespace sdc

#endif // SDCLIQUE_SOLVER_COMMON_HPP
