#pragma once

// Exhaustive search over the 2^n configuration space. Every state is an
// index into flat tables; no hashing.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "revpeg/configuration.hpp"
#include "revpeg/error.hpp"
#include "revpeg/graph.hpp"

namespace revpeg {

enum class Verdict { NotSolvable, Solvable, FreelySolvable, DoublyFreelySolvable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::NotSolvable: return "NotSolvable";
    case Verdict::Solvable: return "Solvable";
    case Verdict::FreelySolvable: return "FreelySolvable";
    case Verdict::DoublyFreelySolvable: return "DoublyFreelySolvable";
  }
  return "?";
}

/// matrix[h-1] lists the vertices p (ascending) such that a lone peg on p is
/// reachable from the configuration with a single hole on h.
struct Classification {
  Verdict verdict = Verdict::NotSolvable;
  std::vector<std::vector<int>> matrix;

  const std::vector<int>& ends_from(int hole) const { return matrix.at(static_cast<std::size_t>(hole - 1)); }
};

/// Derives the verdict from a start-hole/end-peg matrix.
inline Verdict verdict_from_matrix(const std::vector<std::vector<int>>& matrix) {
  const auto n = matrix.size();
  bool any = false;
  bool all = !matrix.empty();
  bool full = !matrix.empty();
  for (const auto& row : matrix) {
    any = any || !row.empty();
    all = all && !row.empty();
    full = full && row.size() == n;
  }
  if (!any) return Verdict::NotSolvable;
  if (full) return Verdict::DoublyFreelySolvable;
  if (all) return Verdict::FreelySolvable;
  return Verdict::Solvable;
}

struct EquivalencePartition {
  /// Blocks ordered by their smallest member; members ascending by bit pattern.
  std::vector<std::vector<Configuration>> blocks;
};

struct OracleOptions {
  std::size_t memory_budget = std::size_t{2} << 30;  // 2 GiB
};

/// Largest vertex count the state tables are ever indexed for.
inline constexpr int kOracleMaxVertices = 30;

/// Bytes of table storage used per state by each search.
namespace table_cost {
inline constexpr double kVisited = 1.0 / 8.0;
inline constexpr double kLabel = 4.0;
inline constexpr double kParent = 12.0;     // parent record + queue slot
inline constexpr double kWeighted = 24.0;   // distance + parent record + deque slots
}  // namespace table_cost

inline std::size_t oracle_table_bytes(int n, double bytes_per_state) {
  return static_cast<std::size_t>(static_cast<double>(std::uint64_t{1} << n) * bytes_per_state);
}

/// Whether an n-vertex search with the given per-state cost fits the budget.
inline bool oracle_fits(int n, double bytes_per_state, const OracleOptions& opts = {}) {
  return n >= 1 && n <= kOracleMaxVertices && oracle_table_bytes(n, bytes_per_state) <= opts.memory_budget;
}

namespace detail {

inline void require_capacity(int n, double bytes_per_state, const OracleOptions& opts) {
  if (n > kOracleMaxVertices)
    throw CapacityExceeded("exhaustive search supports at most " + std::to_string(kOracleMaxVertices) +
                           " vertices, got " + std::to_string(n));
  if (!oracle_fits(n, bytes_per_state, opts))
    throw CapacityExceeded("state table for n=" + std::to_string(n) + " needs " +
                           std::to_string(oracle_table_bytes(n, bytes_per_state)) + " bytes, budget is " +
                           std::to_string(opts.memory_budget));
}

inline void require_solvable_input(const Graph& g, int hole) {
  if (!is_connected(g)) throw DisconnectedGraph();
  if (g.order() < 2) throw PreconditionFailed("solvability is undefined for fewer than 2 vertices");
  if (hole < 1 || hole > g.order()) throw PreconditionFailed("hole " + std::to_string(hole) + " out of range");
}

inline std::uint32_t one_hole_state(int n, int hole) {
  return static_cast<std::uint32_t>(((std::uint64_t{1} << n) - 1) & ~vertex_bit(hole));
}

/// Legal moves from a raw state in the deterministic (y, x, z, kind) order.
inline void sorted_moves(const std::vector<Triple>& triples, std::uint64_t state, std::vector<Move>& out) {
  out.clear();
  for (const Triple& t : triples)
    if (auto m = move_on(t, state)) out.push_back(*m);
  std::sort(out.begin(), out.end());
}

struct ParentRecord {
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t parent = kNone;
  std::uint8_t x = 0, y = 0, z = 0, kind = 0;

  Move move() const { return {x, y, z, static_cast<MoveKind>(kind)}; }
  void set(std::uint32_t p, const Move& m) {
    parent = p;
    x = static_cast<std::uint8_t>(m.x);
    y = static_cast<std::uint8_t>(m.y);
    z = static_cast<std::uint8_t>(m.z);
    kind = static_cast<std::uint8_t>(m.kind);
  }
};

inline MoveSequence rebuild(int n, std::uint32_t start, std::uint32_t goal, const std::vector<ParentRecord>& rec) {
  std::vector<Move> rev;
  for (std::uint32_t s = goal; s != start; s = rec[s].parent) rev.push_back(rec[s].move());
  return {Configuration(n, start), {rev.rbegin(), rev.rend()}};
}

/// Labels every state reachable from `seed` with `label`.
inline void flood(const std::vector<Triple>& triples, std::uint32_t seed, std::uint32_t label,
                  std::vector<std::uint32_t>& labels, std::vector<std::uint32_t>& stack) {
  labels[seed] = label;
  stack.assign(1, seed);
  while (!stack.empty()) {
    std::uint32_t u = stack.back();
    stack.pop_back();
    for (const Triple& t : triples) {
      if (std::popcount(u & t.ends) != 1) continue;
      auto v = static_cast<std::uint32_t>(u ^ t.mask);
      if (labels[v] == std::numeric_limits<std::uint32_t>::max()) {
        labels[v] = label;
        stack.push_back(v);
      }
    }
  }
}

}  // namespace detail

/// Every configuration reachable from c (c included), ascending by bit pattern.
/// Moves are invertible, so this is the equivalence class of c.
inline std::vector<Configuration> reachable_set(const Graph& g, const Configuration& c, const OracleOptions& opts = {}) {
  const int n = g.order();
  detail::require_capacity(n, table_cost::kVisited, opts);
  if (c.order() != n) throw ValidationError("configuration does not match graph order");
  const auto triples = path_triples(g);
  std::vector<std::uint64_t> seen((std::size_t{1} << n) / 64 + 1, 0);
  auto mark = [&](std::uint64_t s) {
    auto& w = seen[s >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (s & 63);
    if (w & bit) return false;
    w |= bit;
    return true;
  };
  std::vector<std::uint64_t> stack{c.bits()};
  mark(c.bits());
  std::vector<std::uint64_t> found;
  while (!stack.empty()) {
    std::uint64_t u = stack.back();
    stack.pop_back();
    found.push_back(u);
    for (const Triple& t : triples) {
      if (std::popcount(u & t.ends) != 1) continue;
      std::uint64_t v = u ^ t.mask;
      if (mark(v)) stack.push_back(v);
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<Configuration> out;
  out.reserve(found.size());
  for (auto s : found) out.emplace_back(n, s);
  return out;
}

/// Partition of all 2^n configurations into mutual-reachability classes.
inline EquivalencePartition equivalence_partition(const Graph& g, const OracleOptions& opts = {}) {
  const int n = g.order();
  detail::require_capacity(n, table_cost::kLabel + 8.0, opts);
  const auto triples = path_triples(g);
  const std::size_t states = std::size_t{1} << n;
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> labels(states, kUnset);
  std::vector<std::uint32_t> stack;
  std::uint32_t next = 0;
  for (std::size_t s = 0; s < states; ++s)
    if (labels[s] == kUnset) detail::flood(triples, static_cast<std::uint32_t>(s), next++, labels, stack);
  EquivalencePartition p;
  p.blocks.resize(next);
  for (std::size_t s = 0; s < states; ++s) p.blocks[labels[s]].emplace_back(n, s);
  return p;
}

struct SolveResult {
  std::vector<int> end_pegs;  // every reachable lone-peg position, ascending
  MoveSequence witness;       // shortest sequence to end_peg
  int end_peg = 0;
};

/// Breadth-first search from the one-hole start. The witness ends on `target`
/// when given (and reachable), otherwise on the smallest reachable end peg.
inline std::optional<SolveResult> solve_from(const Graph& g, int hole, const OracleOptions& opts = {},
                                             std::optional<int> target = std::nullopt) {
  detail::require_solvable_input(g, hole);
  const int n = g.order();
  detail::require_capacity(n, table_cost::kParent, opts);
  const auto triples = path_triples(g);
  const std::uint32_t start = detail::one_hole_state(n, hole);
  std::vector<detail::ParentRecord> rec(std::size_t{1} << n);
  std::vector<std::uint32_t> queue{start};
  rec[start].parent = start;
  std::vector<Move> moves;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t u = queue[head];
    detail::sorted_moves(triples, u, moves);
    for (const Move& m : moves) {
      auto v = static_cast<std::uint32_t>(u ^ m.mask());
      if (rec[v].parent == detail::ParentRecord::kNone) {
        rec[v].set(u, m);
        queue.push_back(v);
      }
    }
  }
  SolveResult r;
  for (int p = 1; p <= n; ++p)
    if (rec[vertex_bit(p)].parent != detail::ParentRecord::kNone) r.end_pegs.push_back(p);
  if (r.end_pegs.empty()) return std::nullopt;
  r.end_peg = r.end_pegs.front();
  if (target && std::find(r.end_pegs.begin(), r.end_pegs.end(), *target) != r.end_pegs.end()) r.end_peg = *target;
  r.witness = detail::rebuild(n, start, static_cast<std::uint32_t>(vertex_bit(r.end_peg)), rec);
  return r;
}

/// Start-hole/end-peg matrix and verdict. Holes whose starts fall in an
/// already-explored class reuse that class.
inline Classification classify(const Graph& g, const OracleOptions& opts = {}) {
  const int n = g.order();
  if (!is_connected(g)) throw DisconnectedGraph();
  if (n < 2) throw PreconditionFailed("classification needs at least 2 vertices");
  detail::require_capacity(n, table_cost::kLabel, opts);
  const auto triples = path_triples(g);
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> labels(std::size_t{1} << n, kUnset);
  std::vector<std::uint32_t> stack;
  std::uint32_t next = 0;
  Classification c;
  c.matrix.resize(static_cast<std::size_t>(n));
  for (int h = 1; h <= n; ++h) {
    const auto start = detail::one_hole_state(n, h);
    if (labels[start] == kUnset) detail::flood(triples, start, next++, labels, stack);
    for (int p = 1; p <= n; ++p)
      if (labels[vertex_bit(p)] == labels[start]) c.matrix[h - 1].push_back(p);
  }
  c.verdict = verdict_from_matrix(c.matrix);
  return c;
}

struct MinUnjumpResult {
  int count = 0;
  MoveSequence witness;
  int end_peg = 0;
};

/// Fewest unjumps over all sequences reaching a lone peg: 0-1 shortest path
/// with jumps costing 0 and unjumps costing 1.
inline std::optional<MinUnjumpResult> min_unjumps(const Graph& g, int hole, const OracleOptions& opts = {}) {
  detail::require_solvable_input(g, hole);
  const int n = g.order();
  detail::require_capacity(n, table_cost::kWeighted, opts);
  const auto triples = path_triples(g);
  const std::uint32_t start = detail::one_hole_state(n, hole);
  constexpr auto kInf = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(std::size_t{1} << n, kInf);
  std::vector<detail::ParentRecord> rec(std::size_t{1} << n);
  std::deque<std::uint32_t> dq{start};
  dist[start] = 0;
  rec[start].parent = start;
  std::vector<Move> moves;
  while (!dq.empty()) {
    const std::uint32_t u = dq.front();
    dq.pop_front();
    detail::sorted_moves(triples, u, moves);
    for (const Move& m : moves) {
      const std::uint32_t w = m.kind == MoveKind::Unjump ? 1 : 0;
      auto v = static_cast<std::uint32_t>(u ^ m.mask());
      if (dist[u] + w < dist[v]) {
        dist[v] = dist[u] + w;
        rec[v].set(u, m);
        if (w == 0)
          dq.push_front(v);
        else
          dq.push_back(v);
      }
    }
  }
  std::optional<MinUnjumpResult> best;
  for (int p = 1; p <= n; ++p) {
    const auto s = static_cast<std::uint32_t>(vertex_bit(p));
    if (dist[s] == kInf) continue;
    if (!best || dist[s] < static_cast<std::uint32_t>(best->count)) {
      best = MinUnjumpResult{static_cast<int>(dist[s]), {}, p};
    }
  }
  if (best) best->witness = detail::rebuild(n, start, static_cast<std::uint32_t>(vertex_bit(best->end_peg)), rec);
  return best;
}

/// Lone-peg positions reachable from the one-hole start using jumps only
/// (classical peg solitaire).
inline std::vector<int> jump_only_end_pegs(const Graph& g, int hole, const OracleOptions& opts = {}) {
  detail::require_solvable_input(g, hole);
  const int n = g.order();
  detail::require_capacity(n, 1.0, opts);
  const auto triples = path_triples(g);
  std::vector<char> seen(std::size_t{1} << n, 0);
  const std::uint32_t start = detail::one_hole_state(n, hole);
  std::vector<std::uint32_t> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    const std::uint32_t u = stack.back();
    stack.pop_back();
    for (const Triple& t : triples) {
      auto m = move_on(t, u);
      if (!m || m->kind != MoveKind::Jump) continue;
      auto v = static_cast<std::uint32_t>(u ^ t.mask);
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  std::vector<int> out;
  for (int p = 1; p <= n; ++p)
    if (seen[vertex_bit(p)]) out.push_back(p);
  return out;
}

}  // namespace revpeg
