#ifndef SDCLIQUE_FWDC_HPP
#define SDCLIQUE_FWDC_HPP

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "solver_common.hpp"

// Frank-Wolfe variant alternating one in-face step on x with a full FW
// vertex step on y.

namespace sdc {

/// Indices of the min(s, m) largest entries of gy, ties and zero-valued
/// filler to the smaller index. Sorted ascending.
inline std::vector<EdgeIndex> lmo_y_full(std::span<const double> gy, unsigned s) {
  std::vector<EdgeIndex> pool(gy.size());
  for (EdgeIndex e = 0; e < pool.size(); ++e)
    pool[e] = e;
  return detail::select_extreme(gy, std::move(pool), s, std::greater<>{});
}

/// Same result as lmo_y_full on the gradient at the tracked point, touching
/// only coordinates that can be positive: complement edges inside supp(x)
/// and the current ones of y. Returns the picks and the sum of their partials.
inline std::pair<std::vector<EdgeIndex>, double> lmo_y_sparse(const TrackedPoint& tp,
                                                              std::span<const EdgeIndex> y_ones, unsigned s) {
  const Graph& g = tp.graph();
  const FeasiblePoint& z = tp.point();
  const std::size_t k = std::min<std::size_t>(s, g.comp_count());
  std::vector<std::pair<double, EdgeIndex>> cand;
  for (Vertex i = 0; i < z.x.size(); ++i) {
    if (z.x[i] <= 0.0)
      continue;
    for (const auto& [j, e] : g.comp_neighbors(i))
      if (j > i && z.x[j] > 0.0)
        cand.push_back({tp.gy(e), e});
  }
  for (EdgeIndex e : y_ones) {
    const auto& [a, b] = g.comp_edges()[e];
    if (!(z.x[a] > 0.0 && z.x[b] > 0.0))
      cand.push_back({tp.gy(e), e});
  }
  std::erase_if(cand, [](const auto& c) { return !(c.first > 0.0); });
  auto better = [](const auto& a, const auto& b) {
    if (a.first != b.first)
      return a.first > b.first;
    return a.second < b.second;
  };
  if (cand.size() > k) {
    std::nth_element(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(k), cand.end(), better);
    cand.resize(k);
  }
  std::vector<EdgeIndex> picks;
  picks.reserve(k);
  double value = 0.0;
  for (const auto& [v, e] : cand) {
    picks.push_back(e);
    value += v;
  }
  if (picks.size() < k) {
    std::vector<EdgeIndex> taken = picks;
    std::sort(taken.begin(), taken.end());
    for (EdgeIndex e = 0; picks.size() < k; ++e)
      if (!std::binary_search(taken.begin(), taken.end(), e))
        picks.push_back(e);
  }
  std::sort(picks.begin(), picks.end());
  return {std::move(picks), value};
}

/// Ceiling on the number of y changes of a monotone run, evaluated at a
/// clique size c (the ceiling increases with c).
inline double y_change_bound(const ModelParams& p, unsigned c) {
  if (c == 0)
    throw std::invalid_argument("y_change_bound: clique size must be positive");
  return 2.0 / p.beta - (2.0 - p.alpha) / (p.beta * c) + static_cast<double>(p.s);
}

struct FwdcState {
  TrackedPoint tp;
  std::vector<EdgeIndex> y_ones; // sorted
  std::uint64_t iter = 0;
  std::uint64_t y_change_count = 0;
  bool monotone_so_far = true;

  // Quantities at the current point.
  std::vector<double> gx;
  Vertex fw_l = 0;
  Vertex away_l = 0;
  double slope_fw = 0.0;
  double slope_fd = 0.0;
  std::vector<EdgeIndex> y_next;
  double gap_x = 0.0;
  double gap_y = 0.0;
  double gap = 0.0;
  double objective = 0.0;

  FwdcState(const Graph& g, const ModelParams& p, FeasiblePoint z) : tp(g, p, std::move(z)) {
    const auto& y = tp.point().y;
    for (EdgeIndex e = 0; e < y.size(); ++e) {
      if (y[e] == 1.0)
        y_ones.push_back(e);
      else if (y[e] != 0.0)
        throw std::invalid_argument("fwdc: y must be a 0/1 vector");
    }
    refresh();
  }

  void refresh() {
    const FeasiblePoint& z = tp.point();
    gx = tp.gx_vector();
    double xg = 0.0;
    fw_l = 0;
    bool have_away = false;
    for (Vertex i = 0; i < gx.size(); ++i) {
      xg += z.x[i] * gx[i];
      if (gx[i] > gx[fw_l])
        fw_l = i;
      if (z.x[i] > 0.0 && (!have_away || gx[i] < gx[away_l])) {
        away_l = i;
        have_away = true;
      }
    }
    slope_fw = gx[fw_l] - xg;
    slope_fd = xg - gx[away_l];
    auto [picks, value] = lmo_y_sparse(tp, y_ones, z.s);
    y_next = std::move(picks);
    double current = 0.0;
    for (EdgeIndex e : y_ones)
      current += tp.gy(e);
    gap_x = std::max(0.0, slope_fw);
    gap_y = std::max(0.0, value - current);
    gap = gap_x + gap_y;
    objective = tp.objective();
  }
};

/// One outer iteration: x-step on h(., y_k), then y_{k+1} from the partials
/// at (x_k, y_k). With hold_y the y block is left untouched.
inline IterationRecord fwdc_iterate(FwdcState& st, const StepsizeConfig& sc, const Instrumentation& ins,
                                    Diagnostics& diag, bool hold_y = false) {
  IterationRecord rec;
  rec.iter = st.iter;
  rec.gap = st.gap;
  const double h_old = st.objective;
  const FeasiblePoint& z = st.tp.point();

  const bool take_fw = st.slope_fw >= st.slope_fd;
  const double slope = take_fw ? st.slope_fw : st.slope_fd;
  rec.face_gap = std::max(st.gap_x, st.slope_fd);
  if (ins.enabled) {
    // G_F of the x-subproblem, evaluated through the generic polytope code.
    FeasiblePoint zx{z.x, {}, 0};
    GradientCache cx{st.gx, {}, 0};
    rec.face_gap = in_face_gap(cx, zx, minimal_face(zx, feas_tol));
  }
  double dh_x = 0.0;
  if (slope > 0.0) {
    const PolytopeVertex target{take_fw ? st.fw_l : st.away_l, {}};
    const double sigma = take_fw ? 1.0 : -1.0;
    double amax = 1.0;
    if (!take_fw) {
      const double xv = z.x[st.away_l];
      amax = xv / (1.0 - xv);
    }
    double dn2 = 0.0, dl1 = 0.0;
    const Cubic phi = st.tp.line_cubic(target, sigma, false, &dn2, &dl1);
    const double alpha = choose_step(sc, phi, slope, dn2, dl1, amax);
    dh_x = phi(alpha) - phi.c0;
    st.tp.move(target, sigma * alpha, false);
    st.tp.snap(false);
    rec.kind = take_fw ? DirectionKind::fw : DirectionKind::in_face;
    rec.slope = slope;
    rec.alpha_max = amax;
    rec.alpha = alpha;
    rec.dir_norm_sq = dn2;

    if (ins.enabled) {
      ++diag.iterations_checked;
      const double err = std::abs(slope - rec.face_gap);
      diag.slope_gf_max_err = std::max(diag.slope_gf_max_err, err);
      if (err > 1e-12 * std::max(1.0, std::abs(rec.face_gap)))
        ++diag.slope_gf_violations;
      if (alpha >= amax) {
        ++diag.cap_checks;
        if (amax > st.gap_x / rec.face_gap + 1e-10)
          ++diag.cap_violations;
      }
      if (sc.rule != StepRule::s1_fixed) {
        const auto k = sc.rule == StepRule::exact ? exact_constants(ins.L) : armijo_constants(ins.L, sc.c1, sc.gamma);
        const auto chk = verify_s1_s2(slope, dn2, amax, alpha, dh_x, k.C_const, k.rho);
        ++diag.s1s2_checks;
        diag.s1_violations += chk.s1 ? 0 : 1;
        diag.s2_violations += chk.s2 ? 0 : 1;
      }
    }
  }
  if (!hold_y && st.y_next != st.y_ones) {
    st.tp.set_y_vertex(st.y_ones, st.y_next);
    st.y_ones = st.y_next;
    ++st.y_change_count;
    rec.y_changed = true;
  }
  ++st.iter;
  st.refresh();
  rec.objective = st.objective;
  rec.delta_h = st.objective - h_old;
  if (rec.delta_h < -1e-12) {
    st.monotone_so_far = false;
    ++diag.monotone_violations;
  }
  if (rec.y_changed && dh_x >= 0.0) {
    ++diag.y_change_checks;
    diag.y_change_min_increase = std::min(diag.y_change_min_increase, rec.delta_h);
    if (rec.delta_h < st.tp.params().beta / 2.0 - 1e-10)
      ++diag.y_change_increase_violations;
  }
  return rec;
}

inline SolveResult run_fwdc(const Graph& g, const ModelParams& p, FeasiblePoint z0, const StepsizeConfig& sc,
                            const StopConfig& stop, Instrumentation ins = {}) {
  p.validate(g);
  sc.validate();
  stop.validate();
  if (z0.s != p.s)
    throw std::invalid_argument("run_fwdc: starting point budget differs from params");
  if (!is_feasible(z0))
    throw std::invalid_argument("run_fwdc: infeasible starting point");
  for (double v : z0.y)
    if (v != 0.0)
      throw std::invalid_argument("run_fwdc: starting y must be zero");
  if (ins.L <= 0.0)
    ins.L = default_curvature_bound(g, p);

  StopClock clock(stop);
  SolveResult r;
  r.algo = Algorithm::fwdc;
  r.s = p.s;
  FwdcState st(g, p, std::move(z0));
  TraceBuffer trace(ins.trace ? ins.trace_capacity : 0);
  Diagnostics run_diag;

  while (true) {
    if (st.gap <= stop.eps_gap) {
      const bool defective = support_is_defective_clique(g, st.tp.point(), p.s);
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
    if (st.gap <= 0.0 || st.iter >= stop.max_iters) {
      r.stop_reason = StopReason::no_certificate;
      break;
    }
    if (st.iter % clock_check_period == 0 && clock.expired()) {
      r.stop_reason = StopReason::time_limit;
      break;
    }
    auto rec = fwdc_iterate(st, sc, ins, run_diag);
    if (ins.trace) {
      rec = detail::with_point(std::move(rec), st.tp.point(), ins);
      rec.y_ones = st.y_ones;
      trace.push(std::move(rec));
    }
  }
  r.iters = st.iter;
  r.y_changes = st.y_change_count;
  r.monotone = st.monotone_so_far;
  // The y-change assertions only apply to monotone runs.
  if (!r.monotone) {
    run_diag.y_change_checks = 0;
    run_diag.y_change_increase_violations = 0;
    run_diag.y_change_min_increase = std::numeric_limits<double>::infinity();
  } else if (r.certificate) {
    ++run_diag.y_change_bound_checks;
    if (static_cast<double>(r.y_changes) > y_change_bound(p, r.clique_size()))
      ++run_diag.y_change_bound_violations;
  }
  r.diagnostics = run_diag;
  r.trace = trace.records();
  detail::finish_result(r, g, p, st.tp, st.gap, clock);
  return r;
}

} // namespace sdc

#endif // SDCLIQUE_FWDC_HPP
