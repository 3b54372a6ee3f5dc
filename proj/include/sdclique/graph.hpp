#ifndef SDCLIQUE_GRAPH_HPP
#define SDCLIQUE_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sdc {

using Vertex = std::uint32_t;
using EdgeIndex = std::uint32_t;

inline constexpr EdgeIndex no_edge = std::numeric_limits<EdgeIndex>::max();

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct CompNeighbor {
  Vertex j;
  EdgeIndex e;
};

class parse_error : public std::runtime_error {
public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Undirected simple graph with its complement edge set indexed
/// lexicographically. Immutable once built.
class Graph {
public:
  Graph() = default;

  /// Duplicate and reversed pairs collapse; self-loops throw.
  Graph(std::size_t n, std::span<const Edge> edges) : n_(n) {
    words_ = (n + 63) / 64;
    bits_.assign(n * words_, 0);
    for (const auto& [a, b] : edges) {
      if (a >= n || b >= n)
        throw std::out_of_range("edge endpoint out of range");
      if (a == b)
        throw std::invalid_argument("self-loop on vertex " + std::to_string(a));
      set_bit(a, b);
      set_bit(b, a);
    }
    build_indices();
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t comp_count() const noexcept { return comp_edges_.size(); }

  bool adjacent(Vertex i, Vertex j) const noexcept {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Edge>& comp_edges() const noexcept { return comp_edges_; }
  const std::vector<Vertex>& neighbors(Vertex i) const noexcept { return nbrs_[i]; }
  const std::vector<CompNeighbor>& comp_neighbors(Vertex i) const noexcept { return comp_nbrs_[i]; }
  std::size_t degree(Vertex i) const noexcept { return nbrs_[i].size(); }

  /// Position of {i,j} in comp_edges(), or no_edge when {i,j} is an edge or i == j.
  EdgeIndex comp_index(Vertex i, Vertex j) const noexcept {
    if (i == j)
      return no_edge;
    if (i > j)
      std::swap(i, j);
    return comp_idx_[static_cast<std::size_t>(i) * n_ + j];
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  void set_bit(Vertex i, Vertex j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }

  void build_indices() {
    nbrs_.assign(n_, {});
    comp_nbrs_.assign(n_, {});
    comp_idx_.assign(n_ * n_, no_edge);
    for (Vertex i = 0; i < n_; ++i) {
      for (Vertex j = i + 1; j < n_; ++j) {
        if (adjacent(i, j)) {
          edges_.push_back({i, j});
          nbrs_[i].push_back(j);
          nbrs_[j].push_back(i);
        } else {
          auto e = static_cast<EdgeIndex>(comp_edges_.size());
          comp_edges_.push_back({i, j});
          comp_idx_[static_cast<std::size_t>(i) * n_ + j] = e;
          comp_nbrs_[i].push_back({j, e});
          comp_nbrs_[j].push_back({i, e});
        }
      }
    }
    for (auto& list : nbrs_)
      std::sort(list.begin(), list.end());
    for (auto& list : comp_nbrs_)
      std::sort(list.begin(), list.end(), [](auto a, auto b) { return a.j < b.j; });
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<std::vector<CompNeighbor>> comp_nbrs_;
  std::vector<Edge> edges_;
  std::vector<Edge> comp_edges_;
  std::vector<EdgeIndex> comp_idx_;
};

namespace detail {

inline bool parse_uint(const std::string& tok, std::size_t& out) {
  if (tok.empty() || tok.size() > 18)
    return false;
  std::size_t v = 0;
  for (char c : tok) {
    if (c < '0' || c > '9')
      return false;
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  out = v;
  return true;
}

} // namespace detail

/// Reads the DIMACS ASCII clique format (`p edge n m`, `e i j`, `c ...`).
/// Vertex ids are 1-based in the file and 0-based in the returned graph.
inline Graph parse_dimacs(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_problem = false;
  std::size_t n = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    std::istringstream ss(line);
    std::string kind;
    if (!(ss >> kind) || kind == "c")
      continue;
    std::vector<std::string> toks;
    for (std::string t; ss >> t;)
      toks.push_back(t);
    if (kind == "p") {
      if (have_problem)
        throw parse_error(lineno, "duplicate problem line");
      std::size_t m = 0;
      if (toks.size() != 3 || (toks[0] != "edge" && toks[0] != "col") || !detail::parse_uint(toks[1], n) ||
          !detail::parse_uint(toks[2], m))
        throw parse_error(lineno, "malformed problem line");
      have_problem = true;
      edges.reserve(m);
    } else if (kind == "e") {
      if (!have_problem)
        throw parse_error(lineno, "edge line before problem line");
      std::size_t a = 0, b = 0;
      if (toks.size() != 2 || !detail::parse_uint(toks[0], a) || !detail::parse_uint(toks[1], b))
        throw parse_error(lineno, "malformed edge line");
      if (a < 1 || a > n || b < 1 || b > n)
        throw parse_error(lineno, "vertex index out of [1:" + std::to_string(n) + "]");
      if (a == b)
        throw parse_error(lineno, "self-loop");
      edges.push_back({static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1)});
    } else {
      throw parse_error(lineno, "unknown line type '" + kind + "'");
    }
  }
  if (!have_problem)
    throw parse_error(lineno, "missing problem line");
  return Graph(n, edges);
}

inline Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

inline Graph load_dimacs(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open graph file: " + path);
  return parse_dimacs(in);
}

inline std::string to_dimacs(const Graph& g, const std::string& comment = {}) {
  std::ostringstream out;
  if (!comment.empty())
    out << "c " << comment << '\n';
  out << "p edge " << g.n() << ' ' << g.edge_count() << '\n';
  for (const auto& [a, b] : g.edges())
    out << "e " << a + 1 << ' ' << b + 1 << '\n';
  return out.str();
}

inline unsigned max_degree(const Graph& g) {
  std::size_t best = 0;
  for (Vertex i = 0; i < g.n(); ++i)
    best = std::max(best, g.degree(i));
  return static_cast<unsigned>(best);
}

/// Number of vertex pairs inside `c` that are not edges of g.
inline unsigned missing_edge_count(const Graph& g, std::span<const Vertex> c) {
  unsigned missing = 0;
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = a + 1; b < c.size(); ++b)
      if (c[a] != c[b] && !g.adjacent(c[a], c[b]))
        ++missing;
  return missing;
}

/// Uniform G(n,p) test helper driven by a caller-supplied uniform(0,1) source.
template <class Uniform>
Graph random_graph(std::size_t n, double p, Uniform&& u01) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (u01() < p)
        edges.push_back({i, j});
  return Graph(n, edges);
}

} // namespace sdc

#endif // SDCLIQUE_GRAPH_HPP
