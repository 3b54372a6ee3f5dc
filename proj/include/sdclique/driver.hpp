#ifndef SDCLIQUE_DRIVER_HPP
#define SDCLIQUE_DRIVER_HPP

#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <exception>
#include <iomanip>
#include <locale>
#include <mutex>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "fdfw.hpp"
#include "fwdc.hpp"
#include "rng.hpp"

namespace sdc {

struct ExperimentConfig {
  Algorithm algo = Algorithm::fwdc;
  unsigned s = 1;
  unsigned restarts = 100;
  double time_limit_s = 600.0;
  std::uint64_t seed = 0;
  double alpha = 1.0;
  std::optional<double> beta; // empty: 2/n^2
  StepsizeConfig stepsize;
  StopConfig stop;
  unsigned threads = 1;
  Instrumentation instrument;
  bool keep_results = false;

  void validate() const {
    if (restarts < 1)
      throw std::invalid_argument("restarts must be at least 1");
    if (threads < 1)
      throw std::invalid_argument("threads must be at least 1");
    if (!(time_limit_s > 0.0))
      throw std::invalid_argument("time limit must be positive");
    stepsize.validate();
    stop.validate();
  }
};

struct RunSummary {
  unsigned run = 0;
  std::uint64_t seed = 0;
  bool completed = false;
  bool certified = false;
  bool gap_criterion_met = false;
  unsigned clique_size = 0;
  std::uint64_t iters = 0;
  std::uint64_t y_changes = 0;
  double time_s = 0.0;
  double objective = 0.0;
  StopReason stop_reason = StopReason::no_certificate;
  bool monotone = true;
};

struct InstanceStats {
  unsigned s_used = 0;
  unsigned max_clique_found = 0;
  double mean = 0.0;
  double std = 0.0;
  double mean_time_s = 0.0;
  double std_time_s = 0.0;
  unsigned runs_completed = 0;
  unsigned runs_uncertified = 0;
  unsigned runs_incomplete = 0;
  std::vector<RunSummary> per_run;
  std::optional<SolveResult> best;
  std::vector<SolveResult> results; // only with keep_results
  Diagnostics diagnostics;
  std::vector<std::string> warnings;
};

inline ModelParams experiment_params(const Graph& g, const ExperimentConfig& cfg, unsigned s) {
  ModelParams p = ModelParams::standard(g, s);
  p.alpha = cfg.alpha;
  if (cfg.beta)
    p.beta = *cfg.beta;
  return p;
}

/// One solve from the run-th random start.
inline SolveResult solve_once(const Graph& g, const ModelParams& p, const ExperimentConfig& cfg, unsigned run,
                              const StopConfig& stop) {
  const std::uint64_t seed = run_seed(cfg.seed, run);
  Rng rng(seed);
  const StartMode mode = cfg.algo == Algorithm::fdfw ? StartMode::fdfw : StartMode::fwdc;
  FeasiblePoint z0 = random_start(rng, g.n(), g.comp_count(), p.s, mode);
  SolveResult r = cfg.algo == Algorithm::fdfw ? run_fdfw(g, p, std::move(z0), cfg.stepsize, stop, cfg.instrument)
                                              : run_fwdc(g, p, std::move(z0), cfg.stepsize, stop, cfg.instrument);
  r.seed = seed;
  return r;
}

/// Mean and population standard deviation.
inline std::pair<double, double> mean_std(const std::vector<double>& v) {
  if (v.empty())
    return {0.0, 0.0};
  double m = 0.0;
  for (double a : v)
    m += a;
  m /= static_cast<double>(v.size());
  double var = 0.0;
  for (double a : v)
    var += (a - m) * (a - m);
  return {m, std::sqrt(var / static_cast<double>(v.size()))};
}

inline InstanceStats multistart(const Graph& g, const ExperimentConfig& cfg) {
  cfg.validate();
  InstanceStats st;
  unsigned s = cfg.s;
  if (s > g.comp_count()) {
    st.warnings.push_back("s=" + std::to_string(s) + " exceeds the " + std::to_string(g.comp_count()) +
                          " missing edges; clamped");
    s = static_cast<unsigned>(g.comp_count());
  }
  st.s_used = s;
  const ModelParams p = experiment_params(g, cfg, s);
  p.validate(g);

  const auto start = Clock::now();
  const auto deadline =
      start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(cfg.time_limit_s));
  StopConfig stop = cfg.stop;
  stop.deadline = stop.deadline ? std::min(*stop.deadline, deadline) : deadline;

  std::vector<std::optional<SolveResult>> slots(cfg.restarts);
  std::atomic<unsigned> next{0};
  std::mutex err_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    while (true) {
      const unsigned run = next.fetch_add(1);
      if (run >= cfg.restarts || Clock::now() >= *stop.deadline)
        return;
      try {
        slots[run] = solve_once(g, p, cfg, run, stop);
      } catch (...) {
        std::lock_guard lock(err_mutex);
        if (!failure)
          failure = std::current_exception();
        return;
      }
    }
  };
  if (cfg.threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < cfg.threads; ++t)
      pool.emplace_back(worker);
  }
  if (failure)
    std::rethrow_exception(failure);

  std::vector<double> sizes, times;
  for (unsigned run = 0; run < cfg.restarts; ++run) {
    if (!slots[run])
      continue;
    SolveResult& r = *slots[run];
    RunSummary sum;
    sum.run = run;
    sum.seed = r.seed;
    sum.certified = r.certificate.has_value();
    sum.gap_criterion_met = r.gap_criterion_met;
    sum.clique_size = r.clique_size();
    sum.iters = r.iters;
    sum.y_changes = r.y_changes;
    sum.time_s = r.time_ms / 1000.0;
    sum.objective = r.objective;
    sum.stop_reason = r.stop_reason;
    sum.monotone = r.monotone;
    // A run still going at the deadline is out of budget.
    sum.completed = r.stop_reason != StopReason::time_limit && r.time_ms / 1000.0 <= cfg.time_limit_s;
    st.per_run.push_back(sum);
    if (!sum.completed) {
      ++st.runs_incomplete;
      continue;
    }
    ++st.runs_completed;
    if (!sum.certified)
      ++st.runs_uncertified;
    st.diagnostics += r.diagnostics;
    sizes.push_back(sum.clique_size);
    times.push_back(sum.time_s);
    if (sum.certified && (!st.best || sum.clique_size > st.best->clique_size()))
      st.best = r;
    st.max_clique_found = std::max(st.max_clique_found, sum.clique_size);
    if (cfg.keep_results)
      st.results.push_back(std::move(r));
  }
  if (st.runs_completed == 0)
    throw std::runtime_error("no run completed within the time limit");
  std::tie(st.mean, st.std) = mean_std(sizes);
  std::tie(st.mean_time_s, st.std_time_s) = mean_std(times);
  return st;
}

// ---------------------------------------------------------------------------
// Verification oracles

struct OracleResult {
  unsigned size = 0;
  std::vector<Vertex> witness;
};

inline constexpr std::size_t oracle_max_n = 25;

/// Maximum s-defective clique by branch and bound over include/exclude
/// decisions, pruning on the missing-edge budget and the remaining vertices.
inline OracleResult brute_force_max_defective(const Graph& g, unsigned s) {
  const std::size_t n = g.n();
  if (n > oracle_max_n)
    throw std::invalid_argument("oracle is limited to " + std::to_string(oracle_max_n) +
                                " vertices; use the heuristic solvers for larger graphs");
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [a, b] : g.edges()) {
    adj[a] |= 1U << b;
    adj[b] |= 1U << a;
  }
  std::uint32_t best_mask = 0;
  unsigned best = 0;
  auto rec = [&](auto&& self, std::size_t idx, std::uint32_t cur, unsigned size, unsigned missing) -> void {
    if (size + (n - idx) <= best)
      return;
    if (idx == n) {
      best = size;
      best_mask = cur;
      return;
    }
    const auto v = static_cast<unsigned>(idx);
    const unsigned cost = size - static_cast<unsigned>(std::popcount(adj[v] & cur));
    if (missing + cost <= s)
      self(self, idx + 1, cur | (1U << v), size + 1, missing + cost);
    self(self, idx + 1, cur, size, missing);
  };
  rec(rec, 0, 0U, 0U, 0U);
  OracleResult out;
  out.size = best;
  for (Vertex v = 0; v < n; ++v)
    if (best_mask & (1U << v))
      out.witness.push_back(v);
  return out;
}

/// True iff no vertex outside C is adjacent to all of C in the augmented
/// graph G(y), where y defaults to the missing edges inside C.
inline bool is_maximal_defective(const Graph& g, unsigned s, std::span<const Vertex> clique,
                                 std::optional<std::span<const EdgeIndex>> y_ones = std::nullopt) {
  if (missing_edge_count(g, clique) > s)
    throw std::invalid_argument("is_maximal_defective: set is not an s-defective clique");
  std::vector<EdgeIndex> inside;
  if (!y_ones) {
    for (std::size_t a = 0; a < clique.size(); ++a)
      for (std::size_t b = a + 1; b < clique.size(); ++b) {
        const EdgeIndex e = g.comp_index(clique[a], clique[b]);
        if (e != no_edge)
          inside.push_back(e);
      }
    y_ones = std::span<const EdgeIndex>(inside);
  }
  return !extending_vertex(g, clique, *y_ones).has_value();
}

// ---------------------------------------------------------------------------
// CSV

inline constexpr const char* csv_header = "instance,s,algo,max,mean,std,mean_time_s,std_time_s,runs";

inline std::string csv_row(const std::string& instance, unsigned s, Algorithm algo, const InstanceStats& st) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << instance << ',' << s << ',' << to_string(algo) << ',' << st.max_clique_found << ',' << std::fixed
      << std::setprecision(4) << st.mean << ',' << st.std << ',' << std::setprecision(6) << st.mean_time_s << ','
      << st.std_time_s << ',' << st.runs_completed;
  return out.str();
}

} // namespace sdc

#endif // SDCLIQUE_DRIVER_HPP
