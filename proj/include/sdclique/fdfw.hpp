#ifndef SDCLIQUE_FDFW_HPP
#define SDCLIQUE_FDFW_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "solver_common.hpp"

// Frank-Wolfe with in-face directions over the full product polytope.

namespace sdc {

struct SolveState {
  TrackedPoint tp;
  FaceDescriptor face;
  GradientCache cache;
  std::uint64_t iter = 0;
  DirectionKind last_direction_kind = DirectionKind::fw;
  bool last_step_maximal = false;
  PolytopeVertex fw;
  PolytopeVertex away;
  double slope_fw = 0.0;
  double slope_fd = 0.0;
  double gap = 0.0;
  double face_gap = 0.0;
  double objective = 0.0;
  bool monotone_so_far = true;

  SolveState(const Graph& g, const ModelParams& p, FeasiblePoint z) : tp(g, p, std::move(z)) { refresh(); }

  /// Recompute gradient, face, both candidate vertices and the gaps.
  void refresh() {
    cache = tp.cache();
    const FeasiblePoint& z = tp.point();
    face = minimal_face(z, feas_tol, tp.sum_tolerance());
    fw = fw_vertex(cache.gx, cache.gy, z.s);
    away = in_face_min_vertex(cache.gx, cache.gy, face, z.s);
    slope_fw = multiplier(cache, z, fw);
    slope_fd = -multiplier(cache, z, away);
    gap = std::max(0.0, slope_fw);
    face_gap = std::max(gap, slope_fd);
    objective = tp.objective();
  }
};

/// One iteration. Returns the record; `state` is refreshed at the new point.
/// Requires gap > 0.
inline IterationRecord fdfw_iterate(SolveState& st, const StepsizeConfig& sc, const Instrumentation& ins,
                                    Diagnostics& diag) {
  const FeasiblePoint& z = st.tp.point();
  const PolytopeVertex away = st.away;
  const bool take_fw = st.slope_fw >= st.slope_fd;
  const PolytopeVertex target = take_fw ? st.fw : st.away;
  const double sigma = take_fw ? 1.0 : -1.0;
  const double slope = take_fw ? st.slope_fw : st.slope_fd;

  IterationRecord rec;
  rec.iter = st.iter;
  rec.gap = st.gap;
  // Independent evaluation of G_F for the consistency check.
  rec.face_gap = ins.enabled ? in_face_gap(st.cache, z, minimal_face(z, feas_tol, st.tp.sum_tolerance()))
                             : st.face_gap;
  if (!(slope > 0.0))
    throw std::logic_error("fdfw: no ascent direction at a non-stationary point");

  double amax = 1.0;
  if (!take_fw) {
    Direction d;
    d.dx = z.x;
    d.dx[away.vx] -= 1.0;
    d.dy = z.y;
    for (EdgeIndex e : away.vy)
      d.dy[e] -= 1.0;
    amax = max_feasible_step(z, d);
  }
  double dn2 = 0.0, dl1 = 0.0;
  const Cubic phi = st.tp.line_cubic(target, sigma, true, &dn2, &dl1);
  const double alpha = choose_step(sc, phi, slope, dn2, dl1, amax);
  const double h_old = st.objective;

  st.tp.move(target, sigma * alpha, true);
  st.tp.snap(true);
  st.last_direction_kind = take_fw ? DirectionKind::fw : DirectionKind::in_face;
  st.last_step_maximal = alpha >= amax;
  ++st.iter;
  st.refresh();

  rec.kind = st.last_direction_kind;
  rec.slope = slope;
  rec.alpha_max = amax;
  rec.alpha = alpha;
  rec.dir_norm_sq = dn2;
  rec.objective = st.objective;
  rec.delta_h = st.objective - h_old;
  if (rec.delta_h < -1e-12) {
    st.monotone_so_far = false;
    ++diag.monotone_violations;
  }

  if (ins.enabled) {
    ++diag.iterations_checked;
    const double err = std::abs(slope - rec.face_gap);
    diag.slope_gf_max_err = std::max(diag.slope_gf_max_err, err);
    if (err > 1e-12 * std::max(1.0, std::abs(rec.face_gap)))
      ++diag.slope_gf_violations;
    if (alpha >= amax) {
      ++diag.cap_checks;
      if (amax > rec.gap / rec.face_gap + 1e-10)
        ++diag.cap_violations;
    }
    if (sc.rule != StepRule::s1_fixed) {
      const double L = ins.L;
      const auto k = sc.rule == StepRule::exact ? exact_constants(L) : armijo_constants(L, sc.c1, sc.gamma);
      const auto chk = verify_s1_s2(slope, dn2, amax, alpha, phi(alpha) - phi.c0, k.C_const, k.rho);
      ++diag.s1s2_checks;
      diag.s1_violations += chk.s1 ? 0 : 1;
      diag.s2_violations += chk.s2 ? 0 : 1;
    }
  }
  return rec;
}

inline SolveResult run_fdfw(const Graph& g, const ModelParams& p, FeasiblePoint z0, const StepsizeConfig& sc,
                            const StopConfig& stop, Instrumentation ins = {}) {
  p.validate(g);
  sc.validate();
  stop.validate();
  if (z0.s != p.s)
    throw std::invalid_argument("run_fdfw: starting point budget differs from params");
  if (!is_feasible(z0))
    throw std::invalid_argument("run_fdfw: infeasible starting point");
  if (ins.L <= 0.0)
    ins.L = default_curvature_bound(g, p);

  StopClock clock(stop);
  SolveResult r;
  r.algo = Algorithm::fdfw;
  r.s = p.s;
  SolveState st(g, p, std::move(z0));
  TraceBuffer trace(ins.trace ? ins.trace_capacity : 0);

  while (true) {
    if (st.gap <= stop.eps_gap) {
      auto supp = support_of(st.tp.point());
      const bool defective = !supp.empty() && missing_edge_count(g, supp) <= p.s;
      if (defective || !stop.require_certificate) {
        r.gap_criterion_met = defective;
        auto out = certificate_from_support(g, p, st.tp.point());
        r.reject = out.reason;
        r.certificate = std::move(out.certificate);
        r.stop_reason = (r.certificate || !stop.require_certificate) ? StopReason::converged
                                                                       : StopReason::no_certificate;
        break;
      }
    }
    if (st.gap <= 0.0) {
      r.stop_reason = StopReason::no_certificate;
      break;
    }
    if (st.iter >= stop.max_iters) {
      r.stop_reason = StopReason::no_certificate;
      break;
    }
    if (st.iter % clock_check_period == 0 && clock.expired()) {
      r.stop_reason = StopReason::time_limit;
      break;
    }
    auto rec = fdfw_iterate(st, sc, ins, r.diagnostics);
    if (ins.trace)
      trace.push(detail::with_point(std::move(rec), st.tp.point(), ins));
  }
  r.iters = st.iter;
  r.monotone = st.monotone_so_far;
  r.trace = trace.records();
  detail::finish_result(r, g, p, st.tp, st.gap, clock);
  return r;
}

} // namespace sdc

#endif // SDCLIQUE_FDFW_HPP
