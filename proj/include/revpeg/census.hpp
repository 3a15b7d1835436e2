#pragma once

// Graph enumeration and the cross-checking census: the exhaustive oracle,
// the closed-form classifiers and the constructive solvers must all agree.

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "revpeg/certificates.hpp"
#include "revpeg/constructive.hpp"
#include "revpeg/graph.hpp"
#include "revpeg/oracle.hpp"

namespace revpeg {

/// Calls f(g) for every labelled connected graph on n vertices (n <= 8),
/// in increasing order of the edge-subset bitmask.
template <class F>
void for_each_connected_graph(int n, F&& f) {
  if (n < 1 || n > 8) throw PreconditionFailed("labelled enumeration supports 1..8 vertices");
  std::vector<Edge> all;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
  const std::uint64_t subsets = std::uint64_t{1} << all.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    if (static_cast<int>(std::popcount(mask)) < n - 1) continue;
    std::vector<Edge> es;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1u) es.push_back(all[i]);
    Graph g(n, std::move(es));
    if (is_connected(g)) f(g);
  }
}

/// Random labelled connected graph: a random recursive tree under a random
/// relabelling plus up to `max_extra` extra edges.
inline Graph random_connected_graph(std::mt19937_64& rng, int n, int max_extra) {
  std::vector<int> label(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) label[i] = i + 1;
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    es.emplace_back(label[v], label[pick(rng)]);
  }
  std::uniform_int_distribution<int> extra_count(0, max_extra);
  std::uniform_int_distribution<int> vertex(1, n);
  const int extra = extra_count(rng);
  for (int i = 0; i < extra; ++i) {
    Edge e(vertex(rng), vertex(rng));
    if (e.u != e.v && std::find(es.begin(), es.end(), e) == es.end()) es.push_back(e);
  }
  return Graph(n, std::move(es));
}

/// Random connected non-star graph with a vertex of degree >= 3.
inline Graph random_branching_graph(std::mt19937_64& rng, int n, int max_extra = 3) {
  if (n < 4) throw PreconditionFailed("branching graphs need n >= 4");
  for (;;) {
    Graph g = random_connected_graph(rng, n, max_extra);
    if (g.max_degree() >= 3 && !is_star(g)) return g;
  }
}

enum class GraphKind { Small, Path, Cycle, Star, Branching };

inline const char* to_string(GraphKind k) {
  switch (k) {
    case GraphKind::Small: return "small";
    case GraphKind::Path: return "path";
    case GraphKind::Cycle: return "cycle";
    case GraphKind::Star: return "star";
    case GraphKind::Branching: return "branching";
  }
  return "?";
}

inline GraphKind kind_of(const Graph& g) {
  if (g.order() < 2) return GraphKind::Small;
  if (is_path(g)) return GraphKind::Path;
  if (is_cycle(g)) return GraphKind::Cycle;
  if (is_star(g)) return GraphKind::Star;
  return GraphKind::Branching;
}

/// One-line description: "n=5 edges=1-3,2-3,3-4,4-5".
inline std::string compact(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " edges=";
  bool first = true;
  for (const Edge& e : g.edges()) {
    out << (first ? "" : ",") << e.u << '-' << e.v;
    first = false;
  }
  return out.str();
}

/// Closed-form classification for any connected graph on >= 2 vertices:
/// relabelled path/cycle tables, the star obstruction, or the weighting.
inline Classification closed_form_classification(const Graph& g) {
  switch (kind_of(g)) {
    case GraphKind::Path: return relabel(classify_path(g.order()).to_classification(), path_order(g));
    case GraphKind::Cycle: return relabel(classify_cycle(g.order()).to_classification(), cycle_order(g));
    case GraphKind::Star: {
      Classification c;
      c.matrix.resize(static_cast<std::size_t>(g.order()));
      return c;
    }
    case GraphKind::Branching: return classify_by_weighting(g);
    case GraphKind::Small: break;
  }
  throw PreconditionFailed("no closed form for graphs on fewer than 2 vertices");
}

struct GraphCheck {
  GraphKind kind = GraphKind::Small;
  bool oracle_ran = false;
  std::optional<Verdict> oracle_verdict;
  std::optional<Verdict> closed_verdict;
  std::size_t witnesses = 0;
  std::size_t max_unjumps = 0;
  double max_unjump_ratio = 0.0;  // unjumps / n^2
  std::vector<std::string> failures;
};

struct CheckOptions {
  OracleOptions oracle;
  bool check_targets = true;  // also route to a target on doubly free graphs
  double unjump_factor = 10.0;
};

/// Runs every applicable method on g and records each disagreement.
inline GraphCheck check_graph(const Graph& g, const CheckOptions& opts = {}) {
  GraphCheck out;
  out.kind = kind_of(g);
  if (out.kind == GraphKind::Small) return out;
  const int n = g.order();
  auto fail = [&](const std::string& msg) { out.failures.push_back(std::string(to_string(out.kind)) + " " + compact(g) + ": " + msg); };

  std::optional<Classification> oracle;
  if (oracle_fits(n, table_cost::kLabel, opts.oracle)) {
    oracle = classify(g, opts.oracle);
    out.oracle_ran = true;
    out.oracle_verdict = oracle->verdict;
  }
  const Classification closed = closed_form_classification(g);
  out.closed_verdict = closed.verdict;
  if (oracle) {
    if (oracle->verdict != closed.verdict)
      fail(std::string("oracle says ") + to_string(oracle->verdict) + ", closed form says " + to_string(closed.verdict));
    else if (oracle->matrix != closed.matrix)
      fail("oracle and closed-form start/end matrices differ");
  }
  if (out.kind == GraphKind::Branching) {
    if (oracle && oracle->verdict != Verdict::FreelySolvable && oracle->verdict != Verdict::DoublyFreelySolvable)
      fail(std::string("expected freely solvable, oracle says ") + to_string(oracle->verdict));
    const bool doubly = doubly_free_predicate(g);
    if (oracle && doubly != (oracle->verdict == Verdict::DoublyFreelySolvable))
      fail(std::string("doubly-free predicate is ") + (doubly ? "true" : "false") + " but oracle says " +
           to_string(oracle->verdict));
  }
  if (out.kind == GraphKind::Star) return out;

  const Classification& truth = oracle ? *oracle : closed;
  for (int h = 1; h <= n; ++h) {
    if (truth.ends_from(h).empty()) continue;
    try {
      const MoveSequence seq = solve_any(g, h);
      const Configuration end = replay(g, seq);
      ++out.witnesses;
      const auto& allowed = truth.ends_from(h);
      if (end.peg_count() != 1)
        fail("constructive witness from hole " + std::to_string(h) + " leaves " + std::to_string(end.peg_count()) + " pegs");
      else if (std::find(allowed.begin(), allowed.end(), end.first_peg()) == allowed.end())
        fail("constructive witness from hole " + std::to_string(h) + " ends on " + std::to_string(end.first_peg()) +
             ", outside the admissible end set");
      if (out.kind == GraphKind::Branching) {
        const std::size_t u = unjump_count(seq);
        out.max_unjumps = std::max(out.max_unjumps, u);
        const double ratio = static_cast<double>(u) / (static_cast<double>(n) * n);
        out.max_unjump_ratio = std::max(out.max_unjump_ratio, ratio);
        if (static_cast<double>(u) > opts.unjump_factor * n * n)
          fail("constructive witness from hole " + std::to_string(h) + " uses " + std::to_string(u) + " unjumps");
      }
      if (opts.check_targets && truth.verdict == Verdict::DoublyFreelySolvable) {
        const int target = h % n + 1;
        const MoveSequence to = solve_any(g, h, target);
        const Configuration fin = replay(g, to);
        ++out.witnesses;
        if (fin.peg_count() != 1 || fin.first_peg() != target)
          fail("targeted witness " + std::to_string(h) + "->" + std::to_string(target) + " misses the target");
      }
    } catch (const Error& e) {
      fail("hole " + std::to_string(h) + ": " + e.what());
    }
  }
  return out;
}

struct CensusOptions {
  int max_n = 6;          // exhaustive labelled enumeration for 2..max_n
  int samples = 0;        // seeded random branching graphs
  std::uint64_t seed = 1;
  int sample_min_n = 7;
  int sample_max_n = 14;
  unsigned threads = 1;
  CheckOptions check;
};

struct CensusReport {
  std::size_t graphs = 0;
  std::size_t exhaustive_graphs = 0;
  std::size_t sampled_graphs = 0;
  std::size_t oracle_checked = 0;
  std::size_t witnesses = 0;
  std::map<std::string, std::size_t> by_kind;
  std::map<std::string, std::size_t> by_verdict;
  std::size_t max_unjumps = 0;
  double max_unjump_ratio = 0.0;
  std::vector<std::string> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

/// Applies `work` to each index on a pool of threads; results land by index.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, unsigned threads, F&& work) {
  std::vector<T> out(count);
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next++; i < count; i = next++) out[i] = work(i);
  };
  const unsigned extra = threads > 1 ? threads - 1 : 0;
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < extra; ++t) pool.emplace_back(run);
  run();
  return out;
}

inline std::vector<Graph> census_graphs(const CensusOptions& opts, std::size_t* exhaustive = nullptr) {
  std::vector<Graph> graphs;
  for (int n = 2; n <= opts.max_n; ++n) for_each_connected_graph(n, [&](const Graph& g) { graphs.push_back(g); });
  if (exhaustive != nullptr) *exhaustive = graphs.size();
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> size(opts.sample_min_n, opts.sample_max_n);
  for (int i = 0; i < opts.samples; ++i) graphs.push_back(random_branching_graph(rng, size(rng)));
  return graphs;
}

inline CensusReport run_census(const CensusOptions& opts) {
  CensusReport r;
  const std::vector<Graph> graphs = census_graphs(opts, &r.exhaustive_graphs);
  r.graphs = graphs.size();
  r.sampled_graphs = r.graphs - r.exhaustive_graphs;
  auto checks = parallel_map<GraphCheck>(graphs.size(), opts.threads, [&](std::size_t i) {
    try {
      return check_graph(graphs[i], opts.check);
    } catch (const Error& e) {
      GraphCheck c;
      c.failures.push_back(compact(graphs[i]) + ": " + e.what());
      return c;
    }
  });
  for (const GraphCheck& c : checks) {
    ++r.by_kind[to_string(c.kind)];
    if (c.oracle_verdict) ++r.by_verdict[to_string(*c.oracle_verdict)];
    r.oracle_checked += c.oracle_ran ? 1 : 0;
    r.witnesses += c.witnesses;
    r.max_unjumps = std::max(r.max_unjumps, c.max_unjumps);
    r.max_unjump_ratio = std::max(r.max_unjump_ratio, c.max_unjump_ratio);
    r.counterexamples.insert(r.counterexamples.end(), c.failures.begin(), c.failures.end());
  }
  return r;
}

}  // namespace revpeg
