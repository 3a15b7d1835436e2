#pragma once

// Explicit solutions without exhaustive search.
//
// General graphs are reduced to a spanning tree containing a copy of H (the
// claw with one subdivided edge, vertices a, b, c, d, e with edges ac, bc, cd,
// de). Pegs outside H are pulled in one at a time with the P4 move while the
// H restriction stays in one of its two 14-configuration classes. Paths and
// cycles use sweep routines on a line of vertices.

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "revpeg/certificates.hpp"
#include "revpeg/configuration.hpp"
#include "revpeg/error.hpp"
#include "revpeg/graph.hpp"
#include "revpeg/oracle.hpp"

namespace revpeg {

// ---------------------------------------------------------------------------
// H and its configuration classes

/// Five-bit H configuration: bit 0 = a, 1 = b, 2 = c, 3 = d, 4 = e.
using HState = std::uint8_t;

enum class HClass { A, B, Isolated, EmptyOrFull };

inline const char* to_string(HClass c) {
  switch (c) {
    case HClass::A: return "A";
    case HClass::B: return "B";
    case HClass::Isolated: return "Isolated";
    case HClass::EmptyOrFull: return "EmptyOrFull";
  }
  return "?";
}

/// "ace" -> pegs on a, c, e. The empty string is the empty configuration.
inline HState h_state(std::string_view letters) {
  HState s = 0;
  for (char ch : letters) {
    if (ch < 'a' || ch > 'e') throw ValidationError(std::string("bad H vertex letter '") + ch + "'");
    s |= static_cast<HState>(1u << (ch - 'a'));
  }
  return s;
}

inline std::string h_letters(HState s) {
  std::string out;
  for (int i = 0; i < 5; ++i)
    if (s & (1u << i)) out.push_back(static_cast<char>('a' + i));
  return out;
}

inline constexpr std::array<std::string_view, 14> kHClassA = {
    "a", "b", "d", "e", "ac", "bc", "cd", "abe", "ade", "bde", "abcd", "abce", "acde", "bcde"};
inline constexpr std::array<std::string_view, 14> kHClassB = {
    "c", "ab", "ad", "ae", "bd", "be", "de", "abc", "acd", "ace", "bcd", "bce", "cde", "abde"};

inline HClass h_class(HState s) {
  static const auto table = [] {
    std::array<HClass, 32> t{};
    t.fill(HClass::Isolated);
    for (auto w : kHClassA) t[h_state(w)] = HClass::A;
    for (auto w : kHClassB) t[h_state(w)] = HClass::B;
    t[0] = HClass::EmptyOrFull;
    t[31] = HClass::EmptyOrFull;
    return t;
  }();
  return table[s & 31u];
}

struct HEmbedding {
  int a = 0, b = 0, c = 0, d = 0, e = 0;

  std::array<int, 5> vertices() const { return {a, b, c, d, e}; }
  /// 0..4 for a..e, -1 when v is not in H.
  int role_of(int v) const {
    auto vs = vertices();
    for (int i = 0; i < 5; ++i)
      if (vs[i] == v) return i;
    return -1;
  }
  bool contains(int v) const { return role_of(v) >= 0; }
  int vertex(int role) const { return vertices()[static_cast<std::size_t>(role)]; }

  friend bool operator==(const HEmbedding&, const HEmbedding&) = default;
};

inline HState restrict_to_h(const HEmbedding& emb, const Configuration& c) {
  HState s = 0;
  auto vs = emb.vertices();
  for (int i = 0; i < 5; ++i)
    if (c.has_peg(vs[i])) s |= static_cast<HState>(1u << i);
  return s;
}

namespace detail {

/// Shortest within-H move list (labels 1..5 for a..e) turning `from` into `to`.
inline std::optional<std::vector<Move>> h_plan(HState from, HState to) {
  static const Graph h = h_graph();
  std::array<int, 32> prev{};
  std::array<Move, 32> via{};
  prev.fill(-1);
  prev[from] = from;
  std::deque<HState> q{from};
  while (!q.empty()) {
    HState u = q.front();
    q.pop_front();
    if (u == to) break;
    for (const Move& m : legal_moves(h, Configuration(5, u))) {
      auto v = static_cast<HState>(u ^ m.mask());
      if (prev[v] < 0) {
        prev[v] = u;
        via[v] = m;
        q.push_back(v);
      }
    }
  }
  if (prev[to] < 0) return std::nullopt;
  std::vector<Move> rev;
  for (HState s = to; s != from; s = static_cast<HState>(prev[s])) rev.push_back(via[s]);
  return std::vector<Move>(rev.rbegin(), rev.rend());
}

inline Move to_global(const HEmbedding& emb, const Move& local) {
  return {emb.vertex(local.x - 1), emb.vertex(local.y - 1), emb.vertex(local.z - 1), local.kind};
}

/// Applies moves one at a time, checking each against the working graph.
class Recorder {
 public:
  Recorder(const Graph& g, Configuration start) : g_(&g), seq_{start, {}}, cur_(start) {}

  void play(const Move& m) {
    if (!g_->has_edge(m.x, m.y) || !g_->has_edge(m.y, m.z))
      throw InvariantViolation(to_string(m) + " uses an edge outside the working graph");
    cur_ = apply_move(cur_, m);
    seq_.moves.push_back(m);
  }
  void play(std::span<const Move> ms) {
    for (const Move& m : ms) play(m);
  }

  const Configuration& current() const { return cur_; }
  MoveSequence take() && { return std::move(seq_); }

 private:
  const Graph* g_;
  MoveSequence seq_;
  Configuration cur_;
};

}  // namespace detail

/// Moves realising `target` on H from the current H restriction of c, using
/// only moves among H's five vertices. Found by search over the 32 H states.
inline std::pair<Configuration, MoveSequence> transform_within_h(const HEmbedding& emb, const Configuration& c,
                                                                HState target) {
  const HState src = restrict_to_h(emb, c);
  if (src != target && (h_class(src) != h_class(target) || (h_class(src) != HClass::A && h_class(src) != HClass::B)))
    throw NotSameClass("H configuration '" + h_letters(src) + "' (" + to_string(h_class(src)) + ") cannot reach '" +
                       h_letters(target) + "' (" + to_string(h_class(target)) + ")");
  auto plan = detail::h_plan(src, target);
  if (!plan) throw InvariantViolation("no within-H plan between configurations of one class");
  MoveSequence seq{c, {}};
  Configuration cur = c;
  for (const Move& local : *plan) {
    Move m = detail::to_global(emb, local);
    cur = apply_move(cur, m);
    seq.moves.push_back(m);
  }
  return {cur, std::move(seq)};
}

// ---------------------------------------------------------------------------
// P4 move

struct P4Result {
  Configuration config;
  std::array<Move, 2> moves;
};

/// Carries a lone peg (or lone hole) from one end of a four-vertex path to the
/// other: unjump then jump for a peg, jump then unjump for a hole.
inline P4Result p4_move(const Graph& g, const Configuration& c, std::array<int, 4> path) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (path[i] == path[j]) throw PreconditionFailed("P4 vertices must be distinct");
  for (int i = 0; i < 3; ++i)
    if (!g.has_edge(path[i], path[i + 1]))
      throw PreconditionFailed("P4 vertices " + std::to_string(path[i]) + "-" + std::to_string(path[i + 1]) +
                               " are not adjacent");
  int pegs = 0;
  for (int v : path) pegs += c.has_peg(v) ? 1 : 0;
  auto [p0, p1, p2, p3] = path;
  if (pegs == 1 || pegs == 3) {
    const bool lone = pegs == 1;  // lone peg vs lone hole
    if (c.has_peg(p3) == lone) std::swap(p0, p3), std::swap(p1, p2);
    if (c.has_peg(p0) == lone) {
      std::array<Move, 2> ms = lone ? std::array{Move::unjump(p2, p1, p0), Move::jump(p1, p2, p3)}
                                     : std::array{Move::jump(p2, p1, p0), Move::unjump(p1, p2, p3)};
      Configuration out = apply_move(apply_move(c, ms[0]), ms[1]);
      return {out, ms};
    }
  }
  throw PatternMismatch("P4 needs one peg (or one hole) on an endpoint and the opposite state elsewhere");
}

// ---------------------------------------------------------------------------
// Working tree and H embedding

struct WorkingTree {
  Graph tree;
  int root = 0;
};

/// Breadth-first spanning tree from the smallest vertex of degree >= 3. When
/// that tree is a star, one centre-leaf edge is swapped for a leaf-leaf edge.
inline WorkingTree find_spanning_tree(const Graph& g) {
  const int n = g.order();
  if (!is_connected(g)) throw DisconnectedGraph();
  if (n < 5) throw PreconditionFailed("working tree needs n >= 5");
  if (is_star(g)) throw PreconditionFailed("graph is a star");
  int root = 0;
  for (int v = 1; v <= n && root == 0; ++v)
    if (g.degree(v) >= 3) root = v;
  if (root == 0) throw PreconditionFailed("graph has no vertex of degree >= 3");

  const Bfs bfs = bfs_from(g, {root});
  std::vector<Edge> edges;
  for (int v = 1; v <= n; ++v)
    if (v != root) edges.emplace_back(bfs.parent[v], v);
  if (g.degree(root) == n - 1) {
    for (const Edge& e : g.edges()) {
      if (e.u == root || e.v == root) continue;
      std::erase(edges, Edge(root, e.v));
      edges.push_back(e);
      break;
    }
  }
  return {Graph(n, std::move(edges)), root};
}

/// First c (by label) of tree degree >= 3 with a path c-d-e; among those the
/// lexicographically smallest (a, b, d, e) with a < b.
inline HEmbedding find_h_embedding(const WorkingTree& t) {
  const Graph& g = t.tree;
  for (int c = 1; c <= g.order(); ++c) {
    if (g.degree(c) < 3) continue;
    std::optional<HEmbedding> best;
    auto key = [](const HEmbedding& h) { return std::array{h.a, h.b, h.d, h.e}; };
    for (int d : g.neighbors(c))
      for (int e : g.neighbors(d)) {
        if (e == c) continue;
        for (int a : g.neighbors(c))
          for (int b : g.neighbors(c)) {
            if (a >= b || a == d || b == d || a == e || b == e) continue;
            HEmbedding h{a, b, c, d, e};
            if (!best || key(h) < key(*best)) best = h;
          }
      }
    if (best) return *best;
  }
  throw NotFound("tree contains no copy of H");
}

namespace detail {

/// Tree path from v to the nearest H vertex: [v, ..., q] with q in H.
inline std::vector<int> path_to_h(const Bfs& bfs, int v) {
  std::vector<int> path{v};
  while (bfs.dist[path.back()] > 0) path.push_back(bfs.parent[path.back()]);
  return path;
}

inline Bfs bfs_from_h(const Graph& tree, const HEmbedding& emb) {
  auto vs = emb.vertices();
  return bfs_from(tree, {vs.begin(), vs.end()});
}

inline int pegs_outside(const HEmbedding& emb, const Configuration& c) {
  return c.peg_count() - std::popcount(static_cast<unsigned>(restrict_to_h(emb, c)));
}

enum Role { kA = 0, kB = 1, kC = 2, kD = 3, kE = 4 };

/// Staging configuration and landing continuation for absorbing a peg that
/// sits `dist` (1..3) steps from H vertex `role`.
struct Staging {
  std::string_view stage;
  std::vector<int> continuation;  // roles appended after the attachment vertex
};

inline Staging staging_for(int role, HClass cls, int dist) {
  auto cont = [dist](std::vector<int> two) {
    two.resize(static_cast<std::size_t>(3 - dist));
    return two;
  };
  const bool a = cls == HClass::A;
  switch (role) {
    case kA:
      return a ? Staging{"b", cont({kC, kD})} : Staging{"de", cont({kC, kB})};
    case kC:
      if (a) return {"b", cont({kD, kE})};
      return dist == 2 ? Staging{"be", {kA}} : Staging{"ab", cont({kD, kE})};
    case kD:
      return a ? Staging{"b", cont({kC, kA})} : Staging{"be", cont({kC, kA})};
    case kE:
      if (a) return {"b", cont({kD, kC})};
      return dist == 2 ? Staging{"c", {kD}} : Staging{"ab", cont({kD, kC})};
    default:
      throw InvariantViolation("unexpected attachment role");
  }
}

/// Landing continuation for a hole entering H at `role` from `dist` steps out.
inline std::vector<int> hole_entry_for(int role, int dist) {
  std::vector<int> two;
  switch (role) {
    case kA:
    case kB: two = {kC, kD}; break;
    case kC: two = dist == 2 ? std::vector<int>{kA} : std::vector<int>{kD, kE}; break;
    case kD: two = {kC, kA}; break;
    default: two = {kD, kC}; break;
  }
  two.resize(static_cast<std::size_t>(3 - dist));
  return two;
}

/// Walks a lone peg or hole along `path` in hops of three until it is at most
/// three steps from the end. Returns the index reached.
inline std::size_t hop_along(Recorder& rec, const Graph& g, const std::vector<int>& path) {
  std::size_t i = 0;
  while (path.size() - 1 - i > 3) {
    auto r = p4_move(g, rec.current(), {path[i], path[i + 1], path[i + 2], path[i + 3]});
    rec.play(r.moves);
    i += 3;
  }
  return i;
}

}  // namespace detail

/// Moves the single hole of an otherwise full configuration onto H.
inline std::pair<Configuration, MoveSequence> shift_hole_onto_h(const WorkingTree& t, const HEmbedding& emb,
                                                               const Configuration& c) {
  const int n = t.tree.order();
  if (c.peg_count() != n - 1) throw PreconditionFailed("expected exactly one hole");
  const int hole = Configuration(n, ~c.bits() & Configuration::full(n).bits()).first_peg();
  detail::Recorder rec(t.tree, c);
  if (emb.contains(hole)) {
    auto cur = rec.current();
    return {cur, std::move(rec).take()};
  }
  const Bfs bfs = detail::bfs_from_h(t.tree, emb);
  std::vector<int> path = detail::path_to_h(bfs, hole);
  const std::size_t i = detail::hop_along(rec, t.tree, path);
  const int dist = static_cast<int>(path.size() - 1 - i);
  std::vector<int> last(path.begin() + static_cast<std::ptrdiff_t>(i), path.end());
  for (int role : detail::hole_entry_for(emb.role_of(path.back()), dist)) last.push_back(emb.vertex(role));
  auto r = p4_move(t.tree, rec.current(), {last[0], last[1], last[2], last[3]});
  rec.play(r.moves);
  auto cur = rec.current();
  return {cur, std::move(rec).take()};
}

/// Pulls the peg outside H that is closest to H (ties: smallest label) into H,
/// keeping the H restriction in class A or B.
inline std::pair<Configuration, MoveSequence> absorb_nearest_peg(const WorkingTree& t, const HEmbedding& emb,
                                                                const Configuration& c) {
  const Bfs bfs = detail::bfs_from_h(t.tree, emb);
  int peg = 0;
  for (int v : c.pegs())
    if (bfs.dist[v] > 0 && (peg == 0 || bfs.dist[v] < bfs.dist[peg])) peg = v;
  if (peg == 0) throw PreconditionFailed("no peg outside H");
  const HClass before = h_class(restrict_to_h(emb, c));
  if (before != HClass::A && before != HClass::B)
    throw PreconditionFailed("H configuration is not in class A or B");

  detail::Recorder rec(t.tree, c);
  std::vector<int> path = detail::path_to_h(bfs, peg);
  const std::size_t i = detail::hop_along(rec, t.tree, path);
  const int dist = static_cast<int>(path.size() - 1 - i);

  HEmbedding h = emb;
  int role = h.role_of(path.back());
  if (role == detail::kB) {
    std::swap(h.a, h.b);
    role = detail::kA;
  }
  const detail::Staging st = detail::staging_for(role, before, dist);
  rec.play(transform_within_h(h, rec.current(), h_state(st.stage)).second.moves);

  std::vector<int> last(path.begin() + static_cast<std::ptrdiff_t>(i), path.end());
  for (int r : st.continuation) last.push_back(h.vertex(r));
  auto r = p4_move(t.tree, rec.current(), {last[0], last[1], last[2], last[3]});
  rec.play(r.moves);

  const Configuration out = rec.current();
  const HClass after = h_class(restrict_to_h(emb, out));
  if ((after != HClass::A && after != HClass::B) ||
      detail::pegs_outside(emb, out) != detail::pegs_outside(emb, c) - 1)
    throw InvariantViolation("absorbing the peg on " + std::to_string(peg) + " left H in class " + to_string(after));
  return {out, std::move(rec).take()};
}

// ---------------------------------------------------------------------------
// Lines: paths and cycles

namespace detail {

/// `line` is a path in g of even length with all pegs on it except line[1]
/// (and nothing off it). Jump-only sweep leaving one peg on line[m-2].
inline void sweep_even(Recorder& rec, std::span<const int> line) {
  const std::size_t m = line.size();
  for (std::size_t t = 0; t + 2 < m; t += 2) {
    rec.play(Move::jump(line[t + 3], line[t + 2], line[t + 1]));
    rec.play(Move::jump(line[t], line[t + 1], line[t + 2]));
  }
}

/// Moves the lone hole at line[from] to line[to] in P4 hops (|from-to| % 3 == 0).
inline void shift_hole_on_line(Recorder& rec, const Graph& g, std::span<const int> line, std::size_t from,
                               std::size_t to) {
  while (from != to) {
    const std::size_t next = from > to ? from - 3 : from + 3;
    const std::size_t step = from > to ? static_cast<std::size_t>(-1) : 1;
    auto r = p4_move(g, rec.current(), {line[from], line[from + step], line[from + 2 * step], line[next]});
    rec.play(r.moves);
    from = next;
  }
}

/// `line` has length divisible by 3 and odd, hole on line[2]: jump into the
/// hole, shift the new hole at line[1] to line[m-2], then sweep the even tail
/// from the far end. Ends on line[2].
inline void solve_odd_triple(Recorder& rec, const Graph& g, std::span<const int> line) {
  const std::size_t m = line.size();
  rec.play(Move::jump(line[0], line[1], line[2]));
  shift_hole_on_line(rec, g, line, 1, m - 2);
  std::vector<int> tail(line.rbegin(), line.rend() - 1);  // line[m-1] .. line[1]
  sweep_even(rec, tail);
}

/// Solves a path graph whose vertices in order are `order`, from `hole`.
inline MoveSequence solve_line_path(const Graph& g, const std::vector<int>& order, int hole) {
  const int n = static_cast<int>(order.size());
  const auto pos = static_cast<std::size_t>(std::find(order.begin(), order.end(), hole) - order.begin());
  const int label = static_cast<int>(pos) + 1;
  if (!classify_path(n).admits(label))
    throw NotSolvableStart("P_" + std::to_string(n) + " cannot be solved from a hole on position " +
                           std::to_string(label));
  Recorder rec(g, Configuration::one_hole(g.order(), hole));
  if (n == 2) return std::move(rec).take();
  if (n % 2 == 0) {
    // Canonical holes: position 2 (sweep ends on n-1) or n-1 (ends on 2).
    if (label % 3 == 2) {
      shift_hole_on_line(rec, g, order, pos, 1);
      sweep_even(rec, order);
    } else {
      std::vector<int> rev(order.rbegin(), order.rend());
      shift_hole_on_line(rec, g, rev, static_cast<std::size_t>(n) - 1 - pos, 1);
      sweep_even(rec, rev);
    }
  } else {
    // n odd and divisible by 3: canonical holes on positions 3 and n-2.
    if (label % 3 == 0) {
      shift_hole_on_line(rec, g, order, pos, 2);
      solve_odd_triple(rec, g, order);
    } else {
      std::vector<int> rev(order.rbegin(), order.rend());
      shift_hole_on_line(rec, g, rev, static_cast<std::size_t>(n) - 1 - pos, 2);
      solve_odd_triple(rec, g, rev);
    }
  }
  return std::move(rec).take();
}

/// Solves a cycle graph whose vertices in cyclic order are `order`.
inline MoveSequence solve_line_cycle(const Graph& g, const std::vector<int>& order, int hole) {
  const int n = static_cast<int>(order.size());
  if (!classify_cycle(n).solvable) throw NotSolvableStart("C_" + std::to_string(n) + " is not solvable");
  const auto pos = static_cast<std::size_t>(std::find(order.begin(), order.end(), hole) - order.begin());
  const std::size_t back = n % 2 == 0 ? 1 : 2;  // hole lands on line[1] or line[2]
  std::vector<int> line;
  for (int i = 0; i < n; ++i)
    line.push_back(order[(pos + static_cast<std::size_t>(n) - back + static_cast<std::size_t>(i)) % static_cast<std::size_t>(n)]);
  Recorder rec(g, Configuration::one_hole(g.order(), hole));
  if (n % 2 == 0)
    sweep_even(rec, line);
  else
    solve_odd_triple(rec, g, line);
  return std::move(rec).take();
}

/// Search-based solution on a triangle with a pendant edge inside g (n = 4).
inline MoveSequence solve_paw(const Graph& g, int hole) {
  const int n = g.order();
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      for (int w = v + 1; w <= n; ++w) {
        if (!g.has_edge(u, v) || !g.has_edge(u, w) || !g.has_edge(v, w)) continue;
        int p = 1;
        while (p == u || p == v || p == w) ++p;
        for (int x : {u, v, w}) {
          if (!g.has_edge(x, p)) continue;
          Graph paw(n, {{u, v}, {u, w}, {v, w}, {x, p}});
          auto r = solve_from(paw, hole);
          if (!r) throw InvariantViolation("triangle with pendant edge not solvable from hole " + std::to_string(hole));
          return r->witness;
        }
      }
  throw PreconditionFailed("no triangle with a pendant edge");
}

}  // namespace detail

inline MoveSequence solve_path(int n, int hole) {
  const Graph g = path_graph(n);
  if (hole < 1 || hole > n) throw PreconditionFailed("hole out of range");
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  return detail::solve_line_path(g, order, hole);
}

inline MoveSequence solve_cycle(int n, int hole) {
  const Graph g = cycle_graph(n);
  if (hole < 1 || hole > n) throw PreconditionFailed("hole out of range");
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  return detail::solve_line_cycle(g, order, hole);
}

// ---------------------------------------------------------------------------
// General graphs

/// Single-peg solution for a connected non-star graph with a vertex of
/// degree >= 3.
inline MoveSequence solve_constructive(const Graph& g, int hole) {
  detail::require_branching_graph(g);
  const int n = g.order();
  if (hole < 1 || hole > n) throw PreconditionFailed("hole out of range");
  if (n > kMaxVertices) throw CapacityExceeded("configuration capacity is " + std::to_string(kMaxVertices));
  if (n == 4) return detail::solve_paw(g, hole);

  const WorkingTree t = find_spanning_tree(g);
  const HEmbedding emb = find_h_embedding(t);
  detail::Recorder rec(t.tree, Configuration::one_hole(n, hole));
  if (!emb.contains(hole)) rec.play(shift_hole_onto_h(t, emb, rec.current()).second.moves);
  while (detail::pegs_outside(emb, rec.current()) > 0)
    rec.play(absorb_nearest_peg(t, emb, rec.current()).second.moves);
  const HClass cls = h_class(restrict_to_h(emb, rec.current()));
  if (cls != HClass::A && cls != HClass::B) throw InvariantViolation("H left outside classes A and B");
  rec.play(transform_within_h(emb, rec.current(), h_state(cls == HClass::A ? "a" : "c")).second.moves);
  return std::move(rec).take();
}

/// Every copy of H in g (a < b), in lexicographic (c, d, e, a, b) order.
inline std::vector<HEmbedding> all_h_embeddings(const Graph& g) {
  std::vector<HEmbedding> out;
  for (int c = 1; c <= g.order(); ++c) {
    if (g.degree(c) < 3) continue;
    for (int d : g.neighbors(c))
      for (int e : g.neighbors(d)) {
        if (e == c) continue;
        for (int a : g.neighbors(c))
          for (int b : g.neighbors(c))
            if (a < b && a != d && b != d && a != e && b != e) out.push_back({a, b, c, d, e});
      }
  }
  return out;
}

/// Moves a lone peg from `from` to `to` using P4 moves along paths of g and
/// transfers among a, b, d, e inside copies of H (those four lone-peg states
/// share class A). Breadth-first over vertices; nullopt when unreachable.
inline std::optional<std::vector<Move>> route_single_peg(const Graph& g, int from, int to) {
  const int n = g.order();
  const auto sz = static_cast<std::size_t>(n) + 1;
  std::vector<int> prev(sz, 0);
  std::vector<std::vector<Move>> via(sz);
  std::vector<std::vector<std::pair<HEmbedding, int>>> h_roles(sz);
  for (const HEmbedding& h : all_h_embeddings(g))
    for (int role : {0, 1, 3, 4}) h_roles[h.vertex(role)].push_back({h, role});

  prev[from] = from;
  std::deque<int> q{from};
  auto offer = [&](int x, int w, std::vector<Move> moves) {
    if (prev[w] != 0) return;
    prev[w] = x;
    via[w] = std::move(moves);
    q.push_back(w);
  };
  while (!q.empty() && prev[to] == 0) {
    const int x = q.front();
    q.pop_front();
    const Configuration lone = Configuration::single_peg(n, x);
    for (int y : g.neighbors(x))
      for (int z : g.neighbors(y)) {
        if (z == x) continue;
        for (int w : g.neighbors(z)) {
          if (w == x || w == y) continue;
          auto r = p4_move(g, lone, {x, y, z, w});
          offer(x, w, {r.moves.begin(), r.moves.end()});
        }
      }
    for (const auto& [h, role] : h_roles[x]) {
      for (int other : {0, 1, 3, 4}) {
        if (other == role) continue;
        auto plan = detail::h_plan(static_cast<HState>(1u << role), static_cast<HState>(1u << other));
        if (!plan) continue;
        std::vector<Move> ms;
        for (const Move& m : *plan) ms.push_back(detail::to_global(h, m));
        offer(x, h.vertex(other), std::move(ms));
      }
    }
  }
  if (prev[to] == 0) return std::nullopt;
  std::vector<int> chain;
  for (int v = to; v != from; v = prev[v]) chain.push_back(v);
  std::vector<Move> out;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) out.insert(out.end(), via[*it].begin(), via[*it].end());
  return out;
}

/// Single-peg solution ending on `target`, for doubly freely solvable graphs.
/// Solves to one peg, then routes that peg to the target; the routing covers
/// the class switch through a second copy of H.
inline MoveSequence solve_constructive_to(const Graph& g, int hole, int target) {
  detail::require_branching_graph(g);
  if (target < 1 || target > g.order()) throw PreconditionFailed("target out of range");
  if (!has_nonzero_mod3_link(g))
    throw NotDoublyFree("every path between vertices of degree >= 3 has length divisible by 3");
  MoveSequence seq = solve_constructive(g, hole);
  const int end = replay(g, seq).first_peg();
  auto route = route_single_peg(g, end, target);
  if (!route) throw InvariantViolation("no single-peg route from " + std::to_string(end) + " to " + std::to_string(target));
  seq.moves.insert(seq.moves.end(), route->begin(), route->end());
  return seq;
}

/// Dispatches any connected graph to the matching construction: paths and
/// cycles (any labelling) to the line routines, everything else with a vertex
/// of degree >= 3 to the H-absorption procedure. With a target, the final peg
/// is routed there afterwards.
inline MoveSequence solve_any(const Graph& g, int hole, std::optional<int> target = std::nullopt) {
  if (!is_connected(g)) throw DisconnectedGraph();
  if (g.order() < 2) throw PreconditionFailed("solvability is undefined for fewer than 2 vertices");
  if (hole < 1 || hole > g.order()) throw PreconditionFailed("hole out of range");
  MoveSequence seq;
  if (is_path(g)) {
    seq = detail::solve_line_path(g, path_order(g), hole);
  } else if (is_cycle(g)) {
    seq = detail::solve_line_cycle(g, cycle_order(g), hole);
  } else if (is_star(g)) {
    throw NotSolvableStart("stars on 4 or more vertices are not solvable");
  } else {
    return target ? solve_constructive_to(g, hole, *target) : solve_constructive(g, hole);
  }
  if (target) {
    const int end = replay(g, seq).first_peg();
    auto route = route_single_peg(g, end, *target);
    if (!route)
      throw TargetUnreachable("a lone peg on " + std::to_string(end) + " cannot be moved to " + std::to_string(*target));
    seq.moves.insert(seq.moves.end(), route->begin(), route->end());
  }
  return seq;
}

}  // namespace revpeg
