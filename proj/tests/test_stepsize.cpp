#include <gtest/gtest.h>

#include <cmath>

#include <sdclique/rng.hpp>
#include <sdclique/stepsize.hpp>

using namespace sdc;

namespace {

Cubic random_cubic(Rng& rng) {
  Cubic c;
  c.c0 = rng.uniform();
  c.c1 = 0.01 + 2 * rng.uniform(); // ascent direction
  c.c2 = 4 * rng.uniform() - 3;
  c.c3 = 2 * rng.uniform() - 1;
  return c;
}

// Largest |phi''| on [0, amax].
double curvature(const Cubic& c, double amax) {
  return std::max(std::abs(2 * c.c2), std::abs(2 * c.c2 + 6 * c.c3 * amax));
}

} // namespace

TEST(Stepsize, ParseAndPrint) {
  EXPECT_EQ(parse_step_rule("s1"), StepRule::s1_fixed);
  EXPECT_EQ(parse_step_rule("armijo"), StepRule::armijo);
  EXPECT_EQ(parse_step_rule("exact"), StepRule::exact);
  EXPECT_THROW(parse_step_rule("wolfe"), std::invalid_argument);
  EXPECT_EQ(to_string(StepRule::s1_fixed), "s1");
  EXPECT_EQ(parse_step_norm("l2"), StepNorm::l2);
  EXPECT_THROW(parse_step_norm("inf"), std::invalid_argument);
}

TEST(Stepsize, ConfigValidation) {
  StepsizeConfig c;
  EXPECT_NO_THROW(c.validate());
  c.C_const = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.c1 = 1.0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.gamma = 0.0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Stepsize, S1Step) {
  EXPECT_DOUBLE_EQ(s1_step(0.5, 2.0, 1.0, 2.0), 0.5);
  EXPECT_DOUBLE_EQ(s1_step(5.0, 2.0, 1.0, 2.0), 1.0);
  EXPECT_THROW(s1_step(0.0, 1.0, 1.0, 2.0), std::invalid_argument);
  EXPECT_THROW(s1_step(1.0, 0.0, 1.0, 2.0), std::invalid_argument);
}

TEST(Stepsize, ExactLineSearchMatchesGrid) {
  Rng rng(1);
  for (int t = 0; t < 500; ++t) {
    const Cubic c = random_cubic(rng);
    const double amax = 0.05 + 2 * rng.uniform();
    const double a = exact_line_search(c, amax);
    ASSERT_GE(a, 0.0);
    ASSERT_LE(a, amax);
    double grid_best = -1e300;
    const int steps = 20000;
    for (int k = 0; k <= steps; ++k)
      grid_best = std::max(grid_best, c(amax * k / steps));
    EXPECT_GE(c(a), grid_best - 1e-9);
  }
}

TEST(Stepsize, ExactLineSearchPrefersLargestMaximizer) {
  Cubic flat{1.0, 0.0, 0.0, 0.0};
  EXPECT_DOUBLE_EQ(exact_line_search(flat, 0.7), 0.7);
  // phi = a - a^2 has its maximum at 1/2.
  Cubic quad{0.0, 1.0, -1.0, 0.0};
  EXPECT_NEAR(exact_line_search(quad, 3.0), 0.5, 1e-15);
  EXPECT_DOUBLE_EQ(exact_line_search(quad, 0.25), 0.25);
  // Tiny cubic term next to a quadratic one takes the bisection path.
  Cubic nearly{0.0, 1.0, -1.0, 1e-17};
  EXPECT_NEAR(exact_line_search(nearly, 3.0), 0.5, 1e-9);
  EXPECT_THROW(exact_line_search(quad, 0.0), std::invalid_argument);
}

TEST(Stepsize, ArmijoReturnsFirstAcceptedTrial) {
  Rng rng(2);
  for (int t = 0; t < 500; ++t) {
    const Cubic c = random_cubic(rng);
    const double amax = 0.05 + 2 * rng.uniform();
    auto inc = [&](double a) { return c(a) - c.c0; };
    const double a = armijo(inc, c.c1, amax, 1e-4, 0.5);
    EXPECT_GE(inc(a), 1e-4 * a * c.c1);
    if (a < amax)
      EXPECT_LT(inc(a / 0.5), 1e-4 * (a / 0.5) * c.c1);
  }
}

TEST(Stepsize, ArmijoGivesUp) {
  auto never = [](double) { return -1.0; };
  EXPECT_THROW(armijo(never, 1.0, 1.0, 1e-4, 0.5, 10), std::runtime_error);
  EXPECT_THROW(armijo(never, 0.0, 1.0, 1e-4, 0.5), std::invalid_argument);
}

// With L bounding the curvature along d (|phi''| <= L |d|^2), exact line
// search and Armijo satisfy (S1)/(S2) with the stated constants.
TEST(Stepsize, SufficientIncreaseConstantsHold) {
  Rng rng(3);
  for (int t = 0; t < 2000; ++t) {
    const Cubic c = random_cubic(rng);
    const double amax = 0.05 + 2 * rng.uniform();
    const double dn2 = 0.1 + rng.uniform();
    const double L = std::max(curvature(c, amax) / dn2, 1e-3);

    const double ae = exact_line_search(c, amax);
    auto k = exact_constants(L);
    auto chk = verify_s1_s2(c.c1, dn2, amax, ae, c(ae) - c.c0, k.C_const, k.rho);
    EXPECT_TRUE(chk.s1 && chk.s2) << "exact trial " << t;

    const double aa = armijo([&](double a) { return c(a) - c.c0; }, c.c1, amax, 1e-4, 0.5);
    k = armijo_constants(L, 1e-4, 0.5);
    chk = verify_s1_s2(c.c1, dn2, amax, aa, c(aa) - c.c0, k.C_const, k.rho);
    EXPECT_TRUE(chk.s1 && chk.s2) << "armijo trial " << t;
  }
}

TEST(Stepsize, ChooseStepDispatchesOnNorm) {
  const Cubic c{0.0, 1.0, -1.0, 0.0};
  StepsizeConfig cfg;
  cfg.C_const = 2.0;
  cfg.norm = StepNorm::l1;
  EXPECT_DOUBLE_EQ(choose_step(cfg, c, 1.0, 2.0, 2.0, 1.0), 0.5); // 2 * 1 / 2^2
  cfg.norm = StepNorm::l2;
  EXPECT_DOUBLE_EQ(choose_step(cfg, c, 1.0, 2.0, 2.0, 1.0), 1.0); // 2 * 1 / 2
  cfg.rule = StepRule::exact;
  EXPECT_NEAR(choose_step(cfg, c, 1.0, 2.0, 2.0, 1.0), 0.5, 1e-15);
  cfg.rule = StepRule::armijo;
  EXPECT_DOUBLE_EQ(choose_step(cfg, c, 1.0, 2.0, 2.0, 1.0), 0.5);
}
