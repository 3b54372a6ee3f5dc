#ifndef SDCLIQUE_IO_HPP
#define SDCLIQUE_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "driver.hpp"

// JSON encodings. Vertex ids are 1-based, as in DIMACS files.

namespace sdc {

inline constexpr int json_schema = 1;

inline nlohmann::json fake_edges_json(const Graph& g, const std::vector<EdgeIndex>& ones) {
  nlohmann::json out = nlohmann::json::array();
  for (EdgeIndex e : ones)
    out.push_back({g.comp_edges()[e].u + 1, g.comp_edges()[e].v + 1});
  return out;
}

inline nlohmann::json clique_json(const std::vector<Vertex>& c) {
  nlohmann::json out = nlohmann::json::array();
  for (Vertex v : c)
    out.push_back(v + 1);
  return out;
}

inline nlohmann::json certificate_json(const Graph& g, const ModelParams& p, const DefectiveCliqueCertificate& c) {
  return {{"schema", json_schema},
          {"clique", clique_json(c.clique)},
          {"fake_edges", fake_edges_json(g, c.y_vertex)},
          {"s", c.s},
          {"alpha", p.alpha},
          {"beta", p.beta},
          {"value", c.value},
          {"objective_check", c.objective_check}};
}

inline nlohmann::json result_json(const Graph& g, const ModelParams& p, const SolveResult& r,
                                  const std::string& instance) {
  nlohmann::json j = {{"schema", json_schema},
                      {"algo", std::string(to_string(r.algo))},
                      {"instance", instance},
                      {"s", r.s},
                      {"seed", r.seed},
                      {"clique_size", r.clique_size()},
                      {"objective", r.objective},
                      {"gap", r.gap},
                      {"iters", r.iters},
                      {"y_changes", r.y_changes},
                      {"time_ms", r.time_ms},
                      {"stop_reason", std::string(to_string(r.stop_reason))},
                      {"monotone", r.monotone}};
  if (r.certificate) {
    j["clique"] = clique_json(r.certificate->clique);
    j["fake_edges"] = fake_edges_json(g, r.certificate->y_vertex);
    j["certificate"] = certificate_json(g, p, *r.certificate);
  } else {
    j["clique"] = clique_json(r.candidate);
    j["fake_edges"] = nlohmann::json::array();
    j["reject_reason"] = std::string(to_string(r.reject));
  }
  return j;
}

/// A certificate as read from JSON, converted to 0-based indices.
struct ParsedCertificate {
  std::vector<Vertex> clique;
  std::vector<EdgeIndex> y_ones;
  unsigned s = 0;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> value;
};

class certificate_format_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Structural parse. Pairs that are graph edges are reported through
/// `bad_pair` rather than thrown, since that is an invariant violation of
/// the certificate rather than a malformed file.
inline ParsedCertificate parse_certificate(const Graph& g, const nlohmann::json& j, bool& bad_pair) {
  bad_pair = false;
  try {
    // Accept either a bare certificate or a solve result carrying one.
    const nlohmann::json& c = j.contains("certificate") ? j.at("certificate") : j;
    ParsedCertificate out;
    for (const auto& v : c.at("clique")) {
      const auto id = v.get<long long>();
      if (id < 1 || static_cast<std::size_t>(id) > g.n())
        throw certificate_format_error("clique vertex " + std::to_string(id) + " out of range");
      out.clique.push_back(static_cast<Vertex>(id - 1));
    }
    for (const auto& pr : c.at("fake_edges")) {
      if (!pr.is_array() || pr.size() != 2)
        throw certificate_format_error("fake edge must be a pair");
      const auto a = pr[0].get<long long>(), b = pr[1].get<long long>();
      if (a < 1 || b < 1 || static_cast<std::size_t>(a) > g.n() || static_cast<std::size_t>(b) > g.n())
        throw certificate_format_error("fake edge endpoint out of range");
      const EdgeIndex e = g.comp_index(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
      if (e == no_edge)
        bad_pair = true;
      else
        out.y_ones.push_back(e);
    }
    out.s = c.at("s").get<unsigned>();
    if (c.contains("alpha"))
      out.alpha = c.at("alpha").get<double>();
    if (c.contains("beta"))
      out.beta = c.at("beta").get<double>();
    if (c.contains("value"))
      out.value = c.at("value").get<double>();
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw certificate_format_error(e.what());
  }
}

} // namespace sdc

#endif // SDCLIQUE_IO_HPP
