#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <sdclique/io.hpp>
#include <sdclique/sdclique.hpp>

namespace fs = std::filesystem;
using namespace sdc;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_no_certificate = 2;
constexpr int exit_invalid = 3;

struct CommonOpts {
  std::string algo = "fwdc";
  double alpha = 1.0;
  std::string beta = "auto";
  std::string stepsize = "s1";
  std::string norm = "l1";
  double C = 2.0;
  double c1 = 1e-4;
  double gamma = 0.5;
  double eps = 1e-3;
  unsigned restarts = 100;
  double time_limit = 600.0;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::uint64_t max_iters = 1'000'000;
  bool trace = false;
};

void add_common(CLI::App* app, CommonOpts& o) {
  app->add_option("--algo", o.algo, "fdfw or fwdc")->check(CLI::IsMember({"fdfw", "fwdc"}))->capture_default_str();
  app->add_option("--alpha", o.alpha, "x regularization, in (0,2)")->capture_default_str();
  app->add_option("--beta", o.beta, "y regularization, or auto for 2/n^2")->capture_default_str();
  app->add_option("--stepsize", o.stepsize, "s1, armijo or exact")
      ->check(CLI::IsMember({"s1", "armijo", "exact"}))
      ->capture_default_str();
  app->add_option("--norm", o.norm, "norm of d in the s1 rule")->check(CLI::IsMember({"l1", "l2"}))->capture_default_str();
  app->add_option("--C", o.C, "constant of the s1 rule")->capture_default_str();
  app->add_option("--c1", o.c1, "Armijo sufficient increase constant")->capture_default_str();
  app->add_option("--gamma", o.gamma, "Armijo backtracking factor")->capture_default_str();
  app->add_option("--eps", o.eps, "FW gap tolerance")->capture_default_str();
  app->add_option("--restarts", o.restarts, "random starts per (graph, s)")->capture_default_str();
  app->add_option("--time-limit", o.time_limit, "seconds per (graph, s), all restarts included")->capture_default_str();
  app->add_option("--seed", o.seed, "base seed; run r uses a mix of (seed, r)")->capture_default_str();
  app->add_option("--threads", o.threads, "worker threads")->capture_default_str();
  app->add_option("--max-iters", o.max_iters, "iteration cap per run")->capture_default_str();
  app->add_flag("--trace", o.trace, "check per-iteration invariants; dump the trace of failing runs to stderr");
}

ExperimentConfig make_config(const CommonOpts& o) {
  ExperimentConfig c;
  c.algo = parse_algorithm(o.algo);
  c.alpha = o.alpha;
  if (o.beta != "auto") {
    std::size_t used = 0;
    double b = 0.0;
    try {
      b = std::stod(o.beta, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != o.beta.size())
      throw std::invalid_argument("--beta must be a number or auto");
    c.beta = b;
  }
  c.stepsize.rule = parse_step_rule(o.stepsize);
  c.stepsize.norm = parse_step_norm(o.norm);
  c.stepsize.C_const = o.C;
  c.stepsize.c1 = o.c1;
  c.stepsize.gamma = o.gamma;
  c.stop.eps_gap = o.eps;
  c.stop.max_iters = o.max_iters;
  c.restarts = o.restarts;
  c.time_limit_s = o.time_limit;
  c.seed = o.seed;
  c.threads = o.threads;
  if (o.trace) {
    c.instrument.enabled = true;
    c.instrument.trace = true;
    c.keep_results = true;
  }
  return c;
}

nlohmann::json record_json(const IterationRecord& r) {
  return {{"iter", r.iter},
          {"kind", r.kind == DirectionKind::fw ? "fw" : "in-face"},
          {"slope", r.slope},
          {"gap", r.gap},
          {"face_gap", r.face_gap},
          {"alpha_max", r.alpha_max},
          {"alpha", r.alpha},
          {"objective", r.objective},
          {"delta_h", r.delta_h},
          {"support", r.support},
          {"y_changed", r.y_changed}};
}

nlohmann::json diagnostics_json(const Diagnostics& d) {
  return {{"iterations_checked", d.iterations_checked},
          {"slope_gf_violations", d.slope_gf_violations},
          {"cap_violations", d.cap_violations},
          {"s1_violations", d.s1_violations},
          {"s2_violations", d.s2_violations},
          {"monotone_violations", d.monotone_violations},
          {"y_change_increase_violations", d.y_change_increase_violations},
          {"y_change_bound_violations", d.y_change_bound_violations},
          {"drift_rebuilds", d.drift_rebuilds}};
}

void dump_failing_traces(const InstanceStats& st, const std::string& name) {
  for (const auto& r : st.results) {
    if (r.diagnostics.total_violations() == 0)
      continue;
    std::cerr << "trace for " << name << " seed " << r.seed << " (" << r.diagnostics.total_violations()
              << " violations): " << diagnostics_json(r.diagnostics).dump() << '\n';
    for (const auto& rec : r.trace)
      std::cerr << record_json(rec).dump() << '\n';
  }
}

int cmd_solve(const std::string& path, unsigned s, const CommonOpts& o) {
  const Graph g = load_dimacs(path);
  ExperimentConfig cfg = make_config(o);
  cfg.s = s;
  cfg.keep_results = true;
  InstanceStats st = multistart(g, cfg);
  for (const auto& w : st.warnings)
    std::cerr << "warning: " << w << '\n';
  if (o.trace)
    dump_failing_traces(st, path);
  const ModelParams p = experiment_params(g, cfg, st.s_used);

  const SolveResult* pick = st.best ? &*st.best : nullptr;
  if (!pick)
    for (const auto& r : st.results)
      if (!pick || r.objective > pick->objective)
        pick = &r;
  nlohmann::json out = result_json(g, p, *pick, fs::path(path).stem().string());
  out["restarts"] = {{"completed", st.runs_completed},
                     {"uncertified", st.runs_uncertified},
                     {"incomplete", st.runs_incomplete},
                     {"max", st.max_clique_found},
                     {"mean", st.mean},
                     {"std", st.std}};
  if (o.trace)
    out["diagnostics"] = diagnostics_json(st.diagnostics);
  std::cout << out.dump(2) << '\n';
  return pick->certificate ? exit_ok : exit_no_certificate;
}

std::vector<fs::path> list_instances(const fs::path& where) {
  std::vector<fs::path> out;
  if (fs::is_directory(where)) {
    for (const auto& e : fs::directory_iterator(where))
      if (e.is_regular_file() && e.path().extension() == ".clq")
        out.push_back(e.path());
    std::sort(out.begin(), out.end());
  } else {
    std::ifstream in(where);
    if (!in)
      throw std::runtime_error("cannot open instance list: " + where.string());
    std::string line;
    while (std::getline(in, line)) {
      line.erase(std::remove(line.begin(), line.end(), '\r'), line.end());
      if (line.empty() || line[0] == '#')
        continue;
      fs::path p(line);
      out.push_back(p.is_absolute() ? p : where.parent_path() / p);
    }
  }
  if (out.empty())
    throw std::runtime_error("no instances found in " + where.string());
  return out;
}

std::vector<unsigned> parse_s_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size())
      throw std::invalid_argument("bad --s-list entry: '" + tok + "'");
    out.push_back(static_cast<unsigned>(v));
  }
  if (out.empty())
    throw std::invalid_argument("--s-list is empty");
  return out;
}

int cmd_bench(const std::string& instances, const std::string& s_list, const std::string& out_path,
              const CommonOpts& o) {
  const auto files = list_instances(instances);
  const auto ss = parse_s_list(s_list);
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file)
      throw std::runtime_error("cannot write " + out_path);
    out = &file;
  }
  *out << csv_header << '\n';
  for (const auto& f : files) {
    const Graph g = load_dimacs(f.string());
    const std::string name = f.stem().string();
    for (unsigned s : ss) {
      ExperimentConfig cfg = make_config(o);
      cfg.s = s;
      std::cerr << name << " s=" << s << " " << o.algo << " ..." << std::flush;
      InstanceStats st = multistart(g, cfg);
      for (const auto& w : st.warnings)
        std::cerr << " warning: " << w;
      std::cerr << " max " << st.max_clique_found << ", " << st.runs_completed << " runs\n";
      if (o.trace)
        dump_failing_traces(st, name);
      *out << csv_row(name, st.s_used, cfg.algo, st) << '\n' << std::flush;
    }
  }
  return exit_ok;
}

int cmd_oracle(const std::string& path, unsigned s) {
  const Graph g = load_dimacs(path);
  const OracleResult r = brute_force_max_defective(g, s);
  std::cout << nlohmann::json{{"schema", json_schema}, {"s", s}, {"size", r.size}, {"witness", clique_json(r.witness)}}
                   .dump(2)
            << '\n';
  return exit_ok;
}

int cmd_check(const std::string& graph_path, const std::string& cert_path) {
  const Graph g = load_dimacs(graph_path);
  std::ifstream in(cert_path);
  if (!in)
    throw std::runtime_error("cannot open certificate: " + cert_path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw certificate_format_error(e.what());
  }
  bool bad_pair = false;
  const ParsedCertificate c = parse_certificate(g, j, bad_pair);
  auto report = [](bool ok, const std::string& what) {
    std::cout << nlohmann::json{{"valid", ok}, {"violated", ok ? nlohmann::json(nullptr) : nlohmann::json(what)}}.dump()
              << '\n';
    if (!ok)
      std::cerr << "invalid certificate: " << what << '\n';
    return ok ? exit_ok : exit_invalid;
  };
  if (bad_pair)
    return report(false, "fake-edge-is-graph-edge");
  if (c.s > g.comp_count())
    return report(false, "s-exceeds-missing-edges");
  ModelParams p = ModelParams::standard(g, c.s);
  if (c.alpha)
    p.alpha = *c.alpha;
  if (c.beta)
    p.beta = *c.beta;
  const auto outcome = certify(g, p, c.clique, c.y_ones);
  if (!outcome)
    return report(false, std::string(to_string(outcome.reason)));
  if (c.value && std::abs(*c.value - outcome.certificate->value) > 1e-8)
    return report(false, "value-not-closed-form");
  return report(true, "");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"s-defective clique search with Frank-Wolfe variants"};
  app.require_subcommand(1);

  CommonOpts solve_o, bench_o;
  std::string graph, instances, s_list = "1", out, certificate;
  unsigned s = 1;

  auto* solve = app.add_subcommand("solve", "multistart solve of one graph; prints the best result as JSON");
  solve->add_option("--graph", graph, "DIMACS .clq file")->required();
  solve->add_option("--s", s, "defect budget")->capture_default_str();
  add_common(solve, solve_o);

  auto* bench = app.add_subcommand("bench", "CSV table over a directory or list of instances");
  bench->add_option("--instances", instances, "directory of .clq files or a list file")->required();
  bench->add_option("--s-list", s_list, "comma separated budgets")->capture_default_str();
  bench->add_option("--out", out, "CSV output path (default stdout)");
  add_common(bench, bench_o);

  auto* oracle = app.add_subcommand("oracle", "exact maximum s-defective clique, n <= 25");
  oracle->add_option("--graph", graph, "DIMACS .clq file")->required();
  oracle->add_option("--s", s, "defect budget")->capture_default_str();

  auto* check = app.add_subcommand("check", "validate a certificate against a graph");
  check->add_option("--graph", graph, "DIMACS .clq file")->required();
  check->add_option("--certificate", certificate, "certificate or solve output JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_error;
  }

  try {
    if (*solve)
      return cmd_solve(graph, s, solve_o);
    if (*bench)
      return cmd_bench(instances, s_list, out, bench_o);
    if (*oracle)
      return cmd_oracle(graph, s);
    if (*check)
      return cmd_check(graph, certificate);
  } catch (const certificate_format_error& e) {
    std::cerr << "malformed certificate: " << e.what() << '\n';
    return exit_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_error;
  }
  return exit_error;
}
