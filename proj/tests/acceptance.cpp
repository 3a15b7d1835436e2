// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "revpeg/revpeg.hpp"

using namespace revpeg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Ledger {
 public:
  void fail(const std::string& why) {
    if (failures_++ < 10) notes_ << (notes_.tellp() > 0 ? "; " : "") << why;
  }
  void check(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
  Outcome done(std::string summary) const {
    if (failures_ == 0) return {true, std::move(summary)};
    return {false, summary + " | " + std::to_string(failures_) + " failure(s): " + notes_.str()};
  }

 private:
  std::size_t failures_ = 0;
  std::ostringstream notes_;
};

std::string fmt(double v, int digits = 4) {
  std::ostringstream s;
  s.precision(digits);
  s << v;
  return s.str();
}

std::string peg_list(const Configuration& c) {
  std::string out = " {";
  for (int v : c.pegs()) out += (out.size() > 2 ? "," : "") + std::to_string(v);
  return out + "}";
}

// Shared by criteria 4, 5 and 8.
CensusReport exhaustive_report;
CensusReport sampled_report;

// ---------------------------------------------------------------------------

Outcome h_partition() {
  Ledger l;
  const auto p = equivalence_partition(h_graph());
  std::set<std::set<std::string>> got;
  for (const auto& block : p.blocks) {
    std::set<std::string> names;
    for (const Configuration& c : block) names.insert(h_letters(static_cast<HState>(c.bits())));
    got.insert(names);
  }
  const std::set<std::set<std::string>> want = {
      {"a", "b", "d", "e", "ac", "bc", "cd", "abe", "ade", "bde", "abcd", "abce", "acde", "bcde"},
      {"c", "ab", "ad", "ae", "bd", "be", "de", "abc", "acd", "ace", "bcd", "bce", "cde", "abde"},
      {"abcde"}, {"abd"}, {"ce"}, {""}};
  l.check(p.blocks.size() == 6, "expected 6 blocks, got " + std::to_string(p.blocks.size()));
  l.check(got == want, "blocks differ from the H class table");
  return l.done("6 blocks: 14 + 14 + 4 singletons");
}

Outcome star_obstruction() {
  Ledger l;
  std::size_t moves = 0;
  for (int n = 4; n <= 12; ++n) {
    const Graph g = star_graph(n);
    const Classification c = classify(g);
    l.check(c.verdict == Verdict::NotSolvable, "K_{1," + std::to_string(n - 1) + "} is " + to_string(c.verdict));
    const auto cert = verify_star_certificate(star_certificate(n));
    moves += cert.moves;
    l.check(cert.configurations == (std::size_t{1} << n), "not every configuration visited for n=" + std::to_string(n));
    l.check(cert.predicates_hold, "certificate predicate broken for n=" + std::to_string(n));
    l.check(cert.single_peg_unreachable, "leaf-peg counts of starts and ends overlap for n=" + std::to_string(n));
  }
  return l.done("n=4..12 NotSolvable, certificate checked on " + std::to_string(moves) + " moves");
}

Outcome line_tables() {
  Ledger l;
  OracleOptions opts;  // 2 GiB
  auto compare = [&](const std::string& name, const Graph& g, const PathCycleVerdict& v) {
    const Classification o = classify(g, opts);
    const Classification cf = v.to_classification();
    l.check(o.verdict == cf.verdict, name + " verdict " + to_string(o.verdict) + " vs " + to_string(cf.verdict));
    std::vector<int> starts;
    for (int h = 1; h <= g.order(); ++h)
      if (!o.ends_from(h).empty()) starts.push_back(h);
    l.check(starts == v.admissible_starts, name + " admissible starts differ");
    l.check(o.matrix == cf.matrix, name + " end-peg sets differ");
    return o;
  };
  for (int n = 2; n <= 18; ++n) {
    const Classification o = compare("P" + std::to_string(n), path_graph(n), classify_path(n));
    if (n == 6) {
      l.check(o.ends_from(2) == std::vector<int>{2, 5} && o.ends_from(5) == std::vector<int>{2, 5},
              "P6 starts 2 and 5 should both end on {2,5}");
      for (int h : {1, 3, 4, 6}) l.check(o.ends_from(h).empty(), "P6 hole " + std::to_string(h) + " should fail");
    }
    if (n == 7 || n == 11) l.check(o.verdict == Verdict::NotSolvable, "P" + std::to_string(n) + " should be NotSolvable");
  }
  for (int n = 3; n <= 18; ++n) {
    const Classification o = compare("C" + std::to_string(n), cycle_graph(n), classify_cycle(n));
    if (n == 5 || n == 7 || n == 11)
      l.check(o.verdict == Verdict::NotSolvable, "C" + std::to_string(n) + " should be NotSolvable");
    if (n == 6)
      for (int h = 1; h <= 6; ++h) {
        std::vector<int> want{h, (h + 2) % 6 + 1};
        std::sort(want.begin(), want.end());
        l.check(o.ends_from(h) == want, "C6 hole " + std::to_string(h) + " should end on {h, h+3}");
      }
    if (n == 8) l.check(o.verdict == Verdict::DoublyFreelySolvable, "C8 should be doubly freely solvable");
  }
  return l.done("P2..P18 and C3..C18 match the closed forms");
}

Outcome exhaustive_census() {
  Ledger l;
  CensusOptions opts;
  opts.max_n = 6;
  exhaustive_report = run_census(opts);
  const CensusReport& r = exhaustive_report;
  for (const auto& c : r.counterexamples) l.fail(c);
  const std::size_t branching = r.by_kind.count("branching") ? r.by_kind.at("branching") : 0;
  l.check(r.oracle_checked == r.graphs, "oracle skipped some graphs");
  l.check(branching > 0, "no branching graphs enumerated");
  return l.done(std::to_string(r.graphs) + " labelled graphs (" + std::to_string(branching) + " branching), " +
                std::to_string(r.witnesses) + " witnesses replayed, 0 counterexamples");
}

Outcome sampled_census() {
  Ledger l;
  CensusOptions opts;
  opts.max_n = 1;  // samples only
  opts.samples = 500;
  opts.seed = 20240601;
  opts.sample_min_n = 7;
  opts.sample_max_n = 14;
  sampled_report = run_census(opts);
  const CensusReport& r = sampled_report;
  for (const auto& c : r.counterexamples) l.fail(c);
  l.check(r.sampled_graphs == 500, "expected 500 samples");
  l.check(r.oracle_checked == 500, "oracle cross-check skipped some samples");
  l.check(r.by_kind.size() == 1 && r.by_kind.count("branching") == 1, "a sample was not a branching graph");
  return l.done("500 graphs, n in 7..14, seed " + std::to_string(opts.seed) + ", " + std::to_string(r.witnesses) +
                " witnesses replayed, oracle agreed on all");
}

Outcome invariant_suite() {
  Ledger l;
  std::mt19937_64 rng(777);
  std::size_t path_moves = 0, cycle_moves = 0, binary_moves = 0;
  // Returns the number of moves taken; a broken invariant is noted and ends the walk.
  auto walk = [&](const Graph& g, Configuration c, std::size_t steps, const std::function<bool(const Configuration&)>& same,
                  bool& broken) {
    std::size_t done = 0;
    while (done < steps) {
      auto moves = legal_moves(g, c);
      if (moves.empty()) return done;  // frozen configuration
      const Move m = moves[rng() % moves.size()];
      const Configuration before = c;
      c = apply_move(c, m);
      ++done;
      if (!same(c)) {
        if (!broken) l.fail("invariant changed on " + compact(g) + " at " + to_string(m) + " from pegs" + peg_list(before));
        broken = true;
        return done;
      }
    }
    return done;
  };
  auto random_config = [&](int n) { return Configuration(n, rng() & Configuration::full(n).bits()); };

  for (int n = 3; n <= 15; ++n) {
    const Graph g = path_graph(n);
    std::size_t moves = 0;
    bool broken = false;
    while (moves < static_cast<std::size_t>(n - 2) * 10000) {
      const Configuration c = random_config(n);
      const Quaternion w = path_weight(n, c);
      moves += walk(g, c, 2000, [&](const Configuration& d) { return path_weight(n, d) == w; }, broken);
    }
    path_moves += moves;
  }
  std::string cycle_broken;
  for (int n = 3; n <= 15; ++n) {
    const Graph g = cycle_graph(n);
    std::size_t moves = 0;
    bool broken = false;
    while (moves < static_cast<std::size_t>(n - 2) * 10000) {
      const Configuration c = random_config(n);
      const Quaternion w = lifted_cycle_weight(n, c);
      moves += walk(g, c, 2000, [&](const Configuration& d) { return lifted_cycle_weight(n, d) == w; }, broken);
    }
    cycle_moves += moves;
    if (broken) cycle_broken += (cycle_broken.empty() ? "" : ",") + std::to_string(n);
  }
  std::size_t weighted_graphs = 0;
  while (binary_moves < 100000) {
    const Graph g = random_branching_graph(rng, 5 + static_cast<int>(rng() % 16), 2);
    if (has_nonzero_mod3_link(g)) continue;
    ++weighted_graphs;
    int base = 1;
    while (g.degree(base) < 3) ++base;
    const BinaryWeighting w = binary_weighting(g, base);
    const Configuration c = random_config(g.order());
    const int t = total_binary_weight(w, c);
    bool broken = false;
    binary_moves += walk(g, c, 2000, [&](const Configuration& d) { return total_binary_weight(w, d) == t; }, broken);
  }
  return l.done("path weight " + std::to_string(path_moves) + " moves, lifted cycle weight " +
                std::to_string(cycle_moves) + " moves, binary weight " + std::to_string(binary_moves) + " moves on " +
                std::to_string(weighted_graphs) + " graphs" +
                (cycle_broken.empty() ? "" : ", lifted cycle weight not invariant on C_n for n=" + cycle_broken));
}

Outcome spot_values() {
  Ledger l;
  using Q = Quaternion;
  l.check(q_mul(q_mul(q_mul(Q::i(), Q::k()), Q::i()), Q::j()) == -Q::i(), "i*k*i*j != -i");
  l.check(path_weight(5, Configuration::from_pegs(5, {1, 3, 4, 5})) == -Q::i(), "P5 {1,3,4,5} weight != -i");
  for (int v = 1; v <= 7; ++v) {
    l.check(lifted_cycle_weight(7, Configuration::one_hole(7, v)) == Q::one(), "C7 one-hole weight != +1");
    l.check(lifted_cycle_weight(7, Configuration::single_peg(7, v)) == Q::minus_one(), "C7 single-peg weight != -1");
  }
  for (int v = 1; v <= 5; ++v)
    l.check(lifted_cycle_weight(5, Configuration::one_hole(5, v)) == Q::minus_one(), "C5 one-hole weight != -1");
  return l.done("i*k*i*j = -i; P5 {1,3,4,5} = -i; C7 starts +1, ends -1; C5 starts -1");
}

Outcome unjump_budget() {
  Ledger l;
  const double ratio = std::max(exhaustive_report.max_unjump_ratio, sampled_report.max_unjump_ratio);
  const std::size_t worst = std::max(exhaustive_report.max_unjumps, sampled_report.max_unjumps);
  l.check(exhaustive_report.witnesses > 0 && sampled_report.witnesses > 0, "criteria 4 and 5 produced no witnesses");
  l.check(ratio <= 10.0, "unjumps/n^2 reached " + fmt(ratio));
  return l.done("max unjumps/n^2 = " + fmt(ratio) + " (max " + std::to_string(worst) + " unjumps), bound 10");
}

// Jump-only reachability of a lone peg, written against the raw move rule.
bool jump_only_feasible(const Graph& g, int hole) {
  const int n = g.order();
  const std::uint64_t start = Configuration::one_hole(n, hole).bits();
  std::unordered_set<std::uint64_t> seen{start};
  std::vector<std::uint64_t> stack{start};
  while (!stack.empty()) {
    const std::uint64_t s = stack.back();
    stack.pop_back();
    if (std::popcount(s) == 1) return true;
    for (int y = 1; y <= n; ++y) {
      if (!(s >> (y - 1) & 1u)) continue;
      for (int x : g.neighbors(y))
        for (int z : g.neighbors(y)) {
          if (x == z || !(s >> (x - 1) & 1u) || (s >> (z - 1) & 1u)) continue;
          const std::uint64_t t = s ^ vertex_bit(x) ^ vertex_bit(y) ^ vertex_bit(z);
          if (seen.insert(t).second) stack.push_back(t);
        }
    }
  }
  return false;
}

Outcome min_unjump_sanity() {
  Ledger l;
  const auto p4 = min_unjumps(path_graph(4), 2);
  l.check(p4 && p4->count == 0, "P4 hole 2 should need 0 unjumps");
  bool paw_zero = false;
  for (int h = 1; h <= 4; ++h)
    if (auto r = min_unjumps(paw_graph(), h); r && r->count == 0) paw_zero = true;
  l.check(paw_zero, "paw has no pure-jump solution from any hole");
  std::size_t instances = 0, zero = 0;
  for (int n = 2; n <= 6; ++n)
    for_each_connected_graph(n, [&](const Graph& g) {
      for (int h = 1; h <= n; ++h) {
        ++instances;
        const auto r = min_unjumps(g, h);
        const bool pure = jump_only_feasible(g, h);
        zero += pure ? 1 : 0;
        if ((r && r->count == 0) != pure)
          l.fail(compact(g) + " hole " + std::to_string(h) + ": min_unjumps disagrees with jump-only search");
        if (r && replay(g, r->witness).peg_count() != 1) l.fail(compact(g) + " min-unjump witness does not end on one peg");
        if (r && unjump_count(r->witness) != static_cast<std::size_t>(r->count))
          l.fail(compact(g) + " min-unjump witness count mismatch");
      }
    });
  return l.done("P4 and paw need 0; " + std::to_string(instances) + " instances agree (" + std::to_string(zero) +
                " pure-jump solvable)");
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0 = no limit
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "H partition", 1.0, h_partition},
      {2, "stars not solvable + certificate", 10.0, star_obstruction},
      {3, "path and cycle tables", 300.0, line_tables},
      {4, "exhaustive census n <= 6", 600.0, exhaustive_census},
      {5, "500 sampled graphs n in 7..14", 0.0, sampled_census},
      {6, "invariant preservation", 0.0, invariant_suite},
      {7, "spot values", 0.0, spot_values},
      {8, "unjump budget", 0.0, unjump_budget},
      {9, "min-unjump sanity", 0.0, min_unjump_sanity},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      o.pass = false;
      o.detail += " | exceeded " + fmt(c.limit_s) + " s limit";
    }
    failed += o.pass ? 0 : 1;
    std::printf("criterion %d %s  %-34s %8.2f s  %s\n", c.id, o.pass ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
