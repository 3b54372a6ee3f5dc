#include <gtest/gtest.h>

#include <sdclique/polytope.hpp>

#include "test_util.hpp"

using namespace sdc;

namespace {

double value_at(const std::vector<double>& gx, const std::vector<double>& gy, Vertex i,
                const std::vector<EdgeIndex>& ys) {
  double v = gx[i];
  for (EdgeIndex e : ys)
    v += gy[e];
  return v;
}

} // namespace

TEST(Polytope, FwVertexMaximizesOverEnumeratedVertices) {
  Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng.below(5), m = rng.below(8);
    const unsigned s = static_cast<unsigned>(rng.below(4));
    std::vector<double> gx(n), gy(m);
    for (auto& v : gx)
      v = rng.uniform() * 4 - 2;
    for (auto& v : gy)
      v = rng.uniform() * 4 - 2;
    const PolytopeVertex v = fw_vertex(gx, gy, s);
    EXPECT_LE(v.vy.size(), s);
    double best = -1e300;
    for (Vertex i = 0; i < n; ++i)
      for (const auto& ys : test::all_y_vertices(m, s))
        best = std::max(best, value_at(gx, gy, i, ys));
    EXPECT_NEAR(linear_value(gx, gy, v), best, 1e-12);
  }
}

TEST(Polytope, FwVertexTieRuleTakesSmallestIndex) {
  const std::vector<double> gx{1.0, 3.0, 3.0};
  const std::vector<double> gy{0.5, 0.5, 0.5, 0.2};
  const PolytopeVertex v = fw_vertex(gx, gy, 2);
  EXPECT_EQ(v.vx, 1u);
  EXPECT_EQ(v.vy, (std::vector<EdgeIndex>{0, 1}));
}

TEST(Polytope, FwVertexSkipsNonPositivePartials) {
  const std::vector<double> gx{1.0};
  const std::vector<double> gy{-1.0, 0.0, 2.0};
  EXPECT_EQ(fw_vertex(gx, gy, 3).vy, (std::vector<EdgeIndex>{2}));
}

TEST(Polytope, InFaceMinVertexMinimizesOverFaceVertices) {
  Rng rng(2);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng.below(5), m = 1 + rng.below(7);
    const unsigned s = 1 + static_cast<unsigned>(rng.below(3));
    FeasiblePoint z;
    z.s = s;
    z.x.assign(n, 0.0);
    // Random face: some x zero, some y at 0/1/free, budget maybe tight.
    double sx = 0;
    for (auto& v : z.x)
      if (rng.uniform() < 0.7)
        sx += v = rng.uniform();
    if (sx == 0)
      sx = z.x[0] = 1;
    for (auto& v : z.x)
      v /= sx;
    z.y.assign(m, 0.0);
    unsigned ones = 0;
    for (auto& v : z.y) {
      const double r = rng.uniform();
      if (r < 0.2 && ones + 1 < s) {
        v = 1.0;
        ++ones;
      } else if (r < 0.6) {
        v = 0.3 * rng.uniform() / static_cast<double>(m);
      }
    }
    if (rng.uniform() < 0.5) {
      double fsum = 0;
      for (double v : z.y)
        if (v > 0 && v < 1)
          fsum += v;
      if (fsum > 0 && m - ones >= s - ones)
        for (auto& v : z.y)
          if (v > 0 && v < 1)
            v *= static_cast<double>(s - ones) / fsum;
    }
    bool ok = true;
    for (double v : z.y)
      ok = ok && v <= 1.0;
    if (!ok || !is_feasible(z))
      continue;
    const FaceDescriptor f = minimal_face(z, 1e-12);
    std::vector<double> gx(n), gy(m);
    for (auto& v : gx)
      v = rng.uniform() * 4 - 2;
    for (auto& v : gy)
      v = rng.uniform() * 4 - 2;
    const PolytopeVertex v = in_face_min_vertex(gx, gy, f, s);

    // Face vertices: x in support, y ones superset of y_one, inside y_one u y_free,
    // exactly s ones when the budget binds.
    double best = 1e300;
    for (Vertex i : f.x_support)
      for (const auto& ys : test::all_y_vertices(m, s)) {
        bool inside = true;
        for (EdgeIndex e : f.y_one)
          inside = inside && std::find(ys.begin(), ys.end(), e) != ys.end();
        for (EdgeIndex e : ys)
          inside = inside && std::find(f.y_zero.begin(), f.y_zero.end(), e) == f.y_zero.end();
        if (f.sum_active && !f.y_free.empty())
          inside = inside && ys.size() == std::min<std::size_t>(s, f.y_one.size() + f.y_free.size());
        if (inside)
          best = std::min(best, value_at(gx, gy, i, ys));
      }
    EXPECT_NEAR(linear_value(gx, gy, v), best, 1e-12) << "trial " << t;
  }
}

TEST(Polytope, MinimalFaceClassifiesCoordinates) {
  FeasiblePoint z{{0.5, 0.5, 0.0}, {1.0, 0.0, 0.5, 0.5}, 2};
  const FaceDescriptor f = minimal_face(z, 1e-12);
  EXPECT_EQ(f.x_support, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(f.y_one, (std::vector<EdgeIndex>{0}));
  EXPECT_EQ(f.y_zero, (std::vector<EdgeIndex>{1}));
  EXPECT_EQ(f.y_free, (std::vector<EdgeIndex>{2, 3}));
  EXPECT_TRUE(f.sum_active);
  EXPECT_EQ(f.dimension(), 1u + 1u);
}

TEST(Polytope, MaxFeasibleStepMatchesBisection) {
  Rng rng(3);
  const Graph g = random_graph(7, 0.5, rng);
  for (int t = 0; t < 200; ++t) {
    const unsigned s = 1 + static_cast<unsigned>(rng.below(3));
    const FeasiblePoint z = test::random_point(rng, g, s, rng.uniform() < 0.5);
    // Direction toward or away from a random vertex.
    PolytopeVertex v;
    v.vx = static_cast<Vertex>(rng.below(g.n()));
    for (EdgeIndex e = 0; e < g.comp_count() && v.vy.size() < s; ++e)
      if (rng.uniform() < 0.4)
        v.vy.push_back(e);
    const double sigma = rng.uniform() < 0.5 ? 1.0 : -1.0;
    Direction d;
    d.dx.resize(g.n());
    d.dy.resize(g.comp_count());
    for (Vertex i = 0; i < g.n(); ++i)
      d.dx[i] = sigma * ((i == v.vx ? 1.0 : 0.0) - z.x[i]);
    for (EdgeIndex e = 0; e < g.comp_count(); ++e)
      d.dy[e] = sigma * ((std::find(v.vy.begin(), v.vy.end(), e) != v.vy.end() ? 1.0 : 0.0) - z.y[e]);
    double amax = 0;
    try {
      amax = max_feasible_step(z, d);
    } catch (const std::invalid_argument&) {
      continue; // infeasible or zero direction at a boundary
    }
    auto at = [&](double a) {
      FeasiblePoint w = z;
      for (Vertex i = 0; i < g.n(); ++i)
        w.x[i] += a * d.dx[i];
      for (EdgeIndex e = 0; e < g.comp_count(); ++e)
        w.y[e] += a * d.dy[e];
      return is_feasible(w, 1e-12);
    };
    EXPECT_TRUE(at(amax * (1 - 1e-9)));
    EXPECT_FALSE(at(amax * (1 + 1e-6) + 1e-9));
  }
}

TEST(Polytope, MaxFeasibleStepErrors) {
  FeasiblePoint z{{1.0, 0.0}, {}, 0};
  EXPECT_THROW(max_feasible_step(z, Direction{{0.0, 0.0}, {}}), std::invalid_argument);
  EXPECT_THROW(max_feasible_step(z, Direction{{1.0, -1.0}, {}}), std::invalid_argument);
  EXPECT_DOUBLE_EQ(max_feasible_step(z, Direction{{-1.0, 1.0}, {}}), 1.0);
}

TEST(Polytope, RandomStartsAreFeasible) {
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng.below(30), m = rng.below(40);
    const unsigned s = static_cast<unsigned>(rng.below(5));
    const FeasiblePoint a = random_start(rng, n, m, s, StartMode::fdfw);
    const FeasiblePoint b = random_start(rng, n, m, s, StartMode::fwdc);
    EXPECT_TRUE(is_feasible(a));
    EXPECT_TRUE(is_feasible(b));
    EXPECT_NEAR(a.x_sum(), 1.0, 1e-12);
    EXPECT_EQ(b.y_sum(), 0.0);
    if (s > 0 && m > 0)
      EXPECT_NEAR(a.y_sum(), 1.0, 1e-12);
    for (double v : a.x)
      EXPECT_GT(v, 0.0);
  }
}
