// Writes the benchmark graphs used by the bench harness and the acceptance
// suite. hamming, johnson, MANN_a9 and c-fat are rebuilt from their
// generator rules. The brock200 files are random surrogates with the same
// order, edge count and planted clique size as the originals.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <sdclique/graph.hpp>
#include <sdclique/rng.hpp>

namespace fs = std::filesystem;
using namespace sdc;

namespace {

Graph hamming(unsigned bits, unsigned dist) {
  const Vertex n = 1U << bits;
  std::vector<Edge> e;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (static_cast<unsigned>(std::popcount(a ^ b)) >= dist)
        e.push_back({a, b});
  return Graph(n, e);
}

// Words of length len and weight w, adjacent at Hamming distance >= dist.
Graph johnson(unsigned len, unsigned w, unsigned dist) {
  std::vector<unsigned> words;
  for (unsigned m = 0; m < (1U << len); ++m)
    if (static_cast<unsigned>(std::popcount(m)) == w)
      words.push_back(m);
  std::vector<Edge> e;
  for (Vertex a = 0; a < words.size(); ++a)
    for (Vertex b = a + 1; b < words.size(); ++b)
      if (static_cast<unsigned>(std::popcount(words[a] ^ words[b])) >= dist)
        e.push_back({a, b});
  return Graph(words.size(), e);
}

// Clique formulation of the covering problem for the affine plane of order 3
// (12 lines on 9 points). Complement: one triangle per line over its three
// (line, point) copies, plus a vertex per point joined to its four copies.
Graph mann_a9() {
  std::vector<std::array<unsigned, 3>> lines;
  auto pt = [](unsigned a, unsigned b) { return 3 * (a % 3) + (b % 3); };
  for (unsigned c = 0; c < 3; ++c) {
    lines.push_back({pt(c, 0), pt(c, 1), pt(c, 2)});
    lines.push_back({pt(0, c), pt(1, c), pt(2, c)});
    lines.push_back({pt(0, c), pt(1, c + 1), pt(2, c + 2)});
    lines.push_back({pt(0, c), pt(1, c + 2), pt(2, c + 4)});
  }
  const std::size_t n = 3 * lines.size() + 9;
  std::set<std::pair<Vertex, Vertex>> comp;
  for (Vertex l = 0; l < lines.size(); ++l)
    for (unsigned a = 0; a < 3; ++a) {
      for (unsigned b = a + 1; b < 3; ++b)
        comp.insert({3 * l + a, 3 * l + b});
      comp.insert({3 * l + a, static_cast<Vertex>(3 * lines.size() + lines[l][a])});
    }
  std::vector<Edge> e;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (!comp.contains({a, b}))
        e.push_back({a, b});
  return Graph(n, e);
}

// c-fat: k = floor(n / (c ln n)) clusters of near-equal size, each a clique
// joined completely to the two cyclically neighbouring clusters.
Graph c_fat(std::size_t n, double c) {
  const auto k = static_cast<std::size_t>(std::floor(static_cast<double>(n) / (c * std::log(static_cast<double>(n)))));
  std::vector<std::size_t> part(n);
  std::size_t v = 0;
  for (std::size_t p = 0; p < k; ++p) {
    const std::size_t size = n / k + (p < n % k ? 1 : 0);
    for (std::size_t i = 0; i < size; ++i)
      part[v++] = p;
  }
  std::vector<Edge> e;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      const std::size_t d = (part[b] + k - part[a]) % k;
      if (d == 0 || d == 1 || d == k - 1)
        e.push_back({a, b});
    }
  return Graph(n, e);
}

Graph planted(std::size_t n, std::size_t m, std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vertex> perm(n);
  for (Vertex i = 0; i < n; ++i)
    perm[i] = i;
  for (std::size_t i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.below(i + 1)]);
  std::set<std::pair<Vertex, Vertex>> es;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      es.insert(std::minmax(perm[a], perm[b]));
  while (es.size() < m) {
    const auto a = static_cast<Vertex>(rng.below(n)), b = static_cast<Vertex>(rng.below(n));
    if (a != b)
      es.insert(std::minmax(a, b));
  }
  std::vector<Edge> e;
  for (const auto& [a, b] : es)
    e.push_back({a, b});
  return Graph(n, e);
}

} // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_instances OUTDIR\n";
    return 1;
  }
  const fs::path out = argv[1];
  fs::create_directories(out);
  struct Item {
    std::string name;
    Graph g;
    std::string note;
  };
  std::vector<Item> items;
  items.push_back({"hamming6-2", hamming(6, 2), "words of length 6, edge at distance >= 2"});
  items.push_back({"johnson8-2-4", johnson(8, 2, 4), "weight-2 words of length 8, distance >= 4"});
  items.push_back({"johnson8-4-4", johnson(8, 4, 4), "weight-4 words of length 8, distance >= 4"});
  items.push_back({"MANN_a9", mann_a9(), "covering formulation of AG(2,3)"});
  items.push_back({"c-fat200-5", c_fat(200, 5.0), "c-fat rule, n=200, c=5"});
  const std::size_t brock_m[] = {14834, 9876, 12048, 13089};
  const std::size_t brock_k[] = {21, 12, 15, 17};
  for (int i = 0; i < 4; ++i)
    items.push_back({"brock200_" + std::to_string(i + 1), planted(200, brock_m[i], brock_k[i], 20240 + i),
                     "surrogate: G(200,m) with a planted clique of size " + std::to_string(brock_k[i])});

  std::ofstream manifest(out / "manifest.txt");
  for (const auto& it : items) {
    std::ofstream f(out / (it.name + ".clq"));
    f << to_dimacs(it.g, it.note);
    manifest << it.name << ".clq\n";
    std::cout << it.name << " n=" << it.g.n() << " m=" << it.g.edge_count() << '\n';
  }
  return 0;
}
