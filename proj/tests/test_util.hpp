#ifndef SDCLIQUE_TEST_UTIL_HPP
#define SDCLIQUE_TEST_UTIL_HPP

#include <algorithm>
#include <string>
#include <vector>

#include <sdclique/graph.hpp>
#include <sdclique/polytope.hpp>
#include <sdclique/rng.hpp>

namespace test {

inline std::string data_file(const std::string& name) { return std::string(SDC_DATA_DIR) + "/" + name; }

/// Path 1-2-3: one missing edge, so s=1 makes the whole graph a clique.
inline sdc::Graph path3() { return sdc::parse_dimacs("p edge 3 2\ne 1 2\ne 2 3\n"); }

inline sdc::Graph triangle() { return sdc::parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n"); }

/// Random feasible point with fractional x and y, sum(y) <= s.
inline sdc::FeasiblePoint random_point(sdc::Rng& rng, const sdc::Graph& g, unsigned s, bool tight = false) {
  sdc::FeasiblePoint z;
  z.s = s;
  z.x.resize(g.n());
  double sx = 0.0;
  for (auto& v : z.x)
    sx += v = rng.uniform();
  for (auto& v : z.x)
    v /= sx;
  z.y.assign(g.comp_count(), 0.0);
  if (s == 0 || g.comp_count() == 0)
    return z;
  double sy = 0.0;
  for (auto& v : z.y)
    sy += v = rng.uniform();
  // Scale so the sum is s (tight) or a random fraction of min(s, m),
  // keeping every entry at most 1.
  const double cap = std::min<double>(s, static_cast<double>(g.comp_count()));
  double target = tight ? cap : cap * rng.uniform();
  double biggest = 0.0;
  for (auto& v : z.y) {
    v *= target / sy;
    biggest = std::max(biggest, v);
  }
  if (biggest > 1.0)
    for (auto& v : z.y)
      v /= biggest;
  return z;
}

/// Every vertex of D_s as a sorted list of one-coordinates: all subsets of
/// size <= s.
inline std::vector<std::vector<sdc::EdgeIndex>> all_y_vertices(std::size_t m, unsigned s) {
  std::vector<std::vector<sdc::EdgeIndex>> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask)
    if (static_cast<unsigned>(__builtin_popcount(mask)) <= s) {
      std::vector<sdc::EdgeIndex> v;
      for (sdc::EdgeIndex e = 0; e < m; ++e)
        if (mask & (1u << e))
          v.push_back(e);
      out.push_back(v);
    }
  return out;
}

} // namespace test

#endif // SDCLIQUE_TEST_UTIL_HPP
