#include <gtest/gtest.h>

#include <sdclique/driver.hpp>

#include "test_util.hpp"

using namespace sdc;

namespace {

SolveResult solve(const Graph& g, unsigned s, std::uint64_t seed, StepRule rule = StepRule::s1_fixed,
                  Instrumentation ins = {}) {
  const ModelParams p = ModelParams::standard(g, s);
  Rng rng(seed);
  StepsizeConfig sc;
  sc.rule = rule;
  return run_fdfw(g, p, random_start(rng, g.n(), g.comp_count(), s, StartMode::fdfw), sc, StopConfig{}, ins);
}

} // namespace

TEST(Fdfw, TriangleWithoutBudget) {
  const SolveResult r = solve(test::triangle(), 0, 1);
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(r.clique_size(), 3u);
  EXPECT_TRUE(r.certificate->y_vertex.empty());
  EXPECT_EQ(r.stop_reason, StopReason::converged);
}

TEST(Fdfw, PathWithOneMissingEdge) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SolveResult r = solve(test::path3(), 1, seed);
    ASSERT_TRUE(r.certificate) << "seed " << seed;
    EXPECT_EQ(r.clique_size(), 3u);
  }
}

TEST(Fdfw, TerminalCertificatesAreMaximalLocalMaximizers) {
  Rng rng(7);
  for (int t = 0; t < 60; ++t) {
    const Graph g = random_graph(6 + rng.below(7), 0.3 + 0.2 * static_cast<double>(rng.below(3)), rng);
    const unsigned s = static_cast<unsigned>(std::min<std::size_t>(g.comp_count(), 1 + rng.below(4)));
    for (StepRule rule : {StepRule::s1_fixed, StepRule::exact, StepRule::armijo}) {
      const SolveResult r = solve(g, s, rng.below(1u << 30), rule);
      EXPECT_TRUE(r.monotone);
      EXPECT_TRUE(is_feasible(r.z));
      if (!r.gap_criterion_met)
        continue;
      ASSERT_TRUE(r.certificate);
      const auto& c = *r.certificate;
      EXPECT_LE(missing_edge_count(g, c.clique), s);
      EXPECT_TRUE(is_maximal_defective(g, s, c.clique, c.y_vertex));
      EXPECT_NEAR(c.objective_check, closed_form_value(ModelParams::standard(g, s), r.clique_size()), 1e-12);
      EXPECT_LE(r.clique_size(), brute_force_max_defective(g, s).size);
    }
  }
}

TEST(Fdfw, InstrumentedInvariantsHold) {
  Rng rng(8);
  Instrumentation ins;
  ins.enabled = true;
  for (int t = 0; t < 30; ++t) {
    const Graph g = random_graph(6 + rng.below(7), 0.5, rng);
    const unsigned s = static_cast<unsigned>(std::min<std::size_t>(g.comp_count(), 1 + rng.below(3)));
    const SolveResult r = solve(g, s, t, StepRule::s1_fixed, ins);
    EXPECT_GT(r.diagnostics.iterations_checked, 0u);
    EXPECT_EQ(r.diagnostics.slope_gf_violations, 0u);
    EXPECT_EQ(r.diagnostics.cap_violations, 0u);
    EXPECT_EQ(r.diagnostics.monotone_violations, 0u);
  }
}

TEST(Fdfw, IterationRecordsDescribeTheStep) {
  Instrumentation ins;
  ins.enabled = true;
  ins.trace = true;
  ins.trace_points = true;
  const Graph g = test::path3();
  const SolveResult r = solve(g, 1, 3, StepRule::s1_fixed, ins);
  ASSERT_FALSE(r.trace.empty());
  EXPECT_EQ(r.trace.size(), r.iters);
  for (const auto& rec : r.trace) {
    EXPECT_GT(rec.slope, 0.0);
    EXPECT_LE(rec.alpha, rec.alpha_max);
    EXPECT_GE(rec.delta_h, -1e-12);
    EXPECT_EQ(rec.x.size(), g.n());
    EXPECT_EQ(rec.support, rec.support_set.size());
  }
}

TEST(Fdfw, TraceBufferKeepsNewest) {
  TraceBuffer buf(3);
  for (std::uint64_t i = 0; i < 10; ++i) {
    IterationRecord r;
    r.iter = i;
    buf.push(r);
  }
  const auto recs = buf.records();
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_EQ(recs.front().iter, 7u);
  EXPECT_EQ(recs.back().iter, 9u);
  TraceBuffer off(0);
  off.push({});
  EXPECT_TRUE(off.empty());
}

TEST(Fdfw, RejectsBadStarts) {
  const Graph g = test::path3();
  const ModelParams p = ModelParams::standard(g, 1);
  FeasiblePoint bad{{0.5, 0.5, 0.5}, {0.0}, 1};
  EXPECT_THROW(run_fdfw(g, p, bad, {}, {}), std::invalid_argument);
  FeasiblePoint wrong_s{{1.0, 0.0, 0.0}, {0.0}, 0};
  EXPECT_THROW(run_fdfw(g, p, wrong_s, {}, {}), std::invalid_argument);
}

TEST(Fdfw, MaxItersReportsNoCertificate) {
  const Graph g = load_dimacs(test::data_file("johnson8-4-4.clq"));
  const ModelParams p = ModelParams::standard(g, 1);
  Rng rng(1);
  StopConfig stop;
  stop.max_iters = 3;
  const SolveResult r = run_fdfw(g, p, random_start(rng, g.n(), g.comp_count(), 1, StartMode::fdfw), {}, stop);
  EXPECT_EQ(r.iters, 3u);
  EXPECT_FALSE(r.certificate);
  EXPECT_EQ(r.stop_reason, StopReason::no_certificate);
  EXPECT_NE(r.reject, CertificateReject::none);
}

TEST(Fdfw, ExpiredDeadlineStopsImmediately) {
  const Graph g = test::path3();
  const ModelParams p = ModelParams::standard(g, 1);
  Rng rng(1);
  StopConfig stop;
  stop.deadline = Clock::now() - std::chrono::seconds(1);
  const SolveResult r = run_fdfw(g, p, random_start(rng, 3, 1, 1, StartMode::fdfw), {}, stop);
  EXPECT_EQ(r.stop_reason, StopReason::time_limit);
  EXPECT_EQ(r.iters, 0u);
}
