#pragma once

// Algebraic invariants that certify impossibility or constrain end positions
// without searching, plus the closed-form path and cycle classifiers.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "revpeg/configuration.hpp"
#include "revpeg/error.hpp"
#include "revpeg/graph.hpp"
#include "revpeg/oracle.hpp"
#include "revpeg/quaternion.hpp"

namespace revpeg {

// ---------------------------------------------------------------------------
// Quaternion weights on paths and lifted cycles

/// i, j, k for labels congruent to 1, 2, 0 mod 3.
inline Quaternion label_weight(int x) {
  switch (x % 3) {
    case 1: return Quaternion::i();
    case 2: return Quaternion::j();
    default: return Quaternion::k();
  }
}

/// Product of the label weights of the pegged vertices, smallest label first.
inline Quaternion path_weight(int n, const Configuration& c) {
  if (c.order() != n) throw ValidationError("configuration does not match P_" + std::to_string(n));
  Quaternion w = Quaternion::one();
  for (int x : c.pegs()) w *= label_weight(x);
  return w;
}

/// Weight of the configuration repeated three times around C_{3n}: a peg on x
/// becomes pegs on x, x+n and x+2n.
inline Quaternion lifted_cycle_weight(int n, const Configuration& c) {
  if (c.order() != n) throw ValidationError("configuration does not match C_" + std::to_string(n));
  Quaternion w = Quaternion::one();
  for (int label = 1; label <= 3 * n; ++label)
    if (c.has_peg((label - 1) % n + 1)) w *= label_weight(label);
  return w;
}

// ---------------------------------------------------------------------------
// Star parity

/// The two facts that rule out K_{1,n-1}: every move keeps the number of pegs
/// on leaves fixed and toggles the centre (vertex 1 of star_graph).
struct StarCertificate {
  int n = 0;
  int center = 1;

  int leaf_pegs(const Configuration& c) const { return c.peg_count() - (c.has_peg(center) ? 1 : 0); }

  bool preserves_leaf_pegs(const Configuration& before, const Move& m) const {
    return leaf_pegs(before) == leaf_pegs(apply_move(before, m));
  }
  bool toggles_center(const Configuration& before, const Move& m) const {
    return before.has_peg(center) != apply_move(before, m).has_peg(center);
  }
};

inline StarCertificate star_certificate(int n) {
  if (n < 4) throw PreconditionFailed("star certificate needs n >= 4");
  return StarCertificate{n, 1};
}

struct StarCertificateCheck {
  std::size_t configurations = 0;
  std::size_t moves = 0;
  bool predicates_hold = true;
  std::vector<int> start_leaf_pegs;       // leaf-peg counts of one-hole starts
  std::vector<int> single_peg_leaf_pegs;  // leaf-peg counts of lone-peg states
  bool single_peg_unreachable = false;
};

/// Checks both predicates on every legal move of every configuration of
/// K_{1,n-1}, then compares the invariant leaf-peg counts of starts and ends.
inline StarCertificateCheck verify_star_certificate(const StarCertificate& cert) {
  const Graph g = star_graph(cert.n);
  StarCertificateCheck out;
  const std::uint64_t states = std::uint64_t{1} << cert.n;
  for (std::uint64_t s = 0; s < states; ++s) {
    Configuration c(cert.n, s);
    ++out.configurations;
    for (const Move& m : legal_moves(g, c)) {
      ++out.moves;
      if (!cert.preserves_leaf_pegs(c, m) || !cert.toggles_center(c, m)) out.predicates_hold = false;
    }
  }
  std::vector<char> start_seen(static_cast<std::size_t>(cert.n) + 1, 0);
  std::vector<char> end_seen(static_cast<std::size_t>(cert.n) + 1, 0);
  for (int v = 1; v <= cert.n; ++v) {
    start_seen[cert.leaf_pegs(Configuration::one_hole(cert.n, v))] = 1;
    end_seen[cert.leaf_pegs(Configuration::single_peg(cert.n, v))] = 1;
  }
  bool overlap = false;
  for (int k = 0; k <= cert.n; ++k) {
    if (start_seen[k]) out.start_leaf_pegs.push_back(k);
    if (end_seen[k]) out.single_peg_leaf_pegs.push_back(k);
    overlap = overlap || (start_seen[k] && end_seen[k]);
  }
  out.single_peg_unreachable = out.predicates_hold && !overlap;
  return out;
}

// ---------------------------------------------------------------------------
// Mod-3 structure between vertices of degree >= 3

namespace detail {

/// Depth-first walk over simple paths from `source`. visit(w, length) is
/// called for every simple path source..w (including the empty path) and for
/// every closing edge back to source (w == source, length >= 3). Returning
/// true from visit stops the search.
inline bool for_each_simple_path(const Graph& g, int source, const std::function<bool(int, int)>& visit) {
  std::vector<char> on_path(static_cast<std::size_t>(g.order()) + 1, 0);
  on_path[source] = 1;
  std::function<bool(int, int)> dfs = [&](int u, int len) -> bool {
    if (visit(u, len)) return true;
    for (int w : g.neighbors(u)) {
      if (w == source && len >= 2) {
        if (visit(source, len + 1)) return true;
        continue;
      }
      if (on_path[w]) continue;
      on_path[w] = 1;
      bool stop = dfs(w, len + 1);
      on_path[w] = 0;
      if (stop) return true;
    }
    return false;
  };
  return dfs(source, 0);
}

inline void require_branching_graph(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraph();
  if (g.max_degree() < 3) throw PreconditionFailed("graph has no vertex of degree >= 3");
  if (is_star(g)) throw PreconditionFailed("graph is a star");
}

}  // namespace detail

/// True iff two vertices of degree >= 3 (not necessarily distinct) are joined
/// by a simple path whose length is not a multiple of 3. A cycle through a
/// single vertex of degree >= 3 counts as a path from it to itself.
inline bool has_nonzero_mod3_link(const Graph& g) {
  for (int a = 1; a <= g.order(); ++a) {
    if (g.degree(a) < 3) continue;
    bool found = detail::for_each_simple_path(g, a, [&](int w, int len) {
      return g.degree(w) >= 3 && len > 0 && len % 3 != 0;
    });
    if (found) return true;
  }
  return false;
}

/// Whether a connected non-star graph with a vertex of degree >= 3 is doubly
/// freely solvable.
inline bool doubly_free_predicate(const Graph& g) {
  detail::require_branching_graph(g);
  return has_nonzero_mod3_link(g);
}

/// 0/1 vertex weights: weight 0 iff some simple path from `base` has length
/// divisible by 3. Every three-vertex path then carries exactly two weight-1
/// vertices, so the mod-2 total over pegs is invariant under every move.
struct BinaryWeighting {
  int base = 0;
  std::vector<int> weight;  // weight[v-1]

  int at(int v) const { return weight.at(static_cast<std::size_t>(v - 1)); }
};

inline BinaryWeighting binary_weighting(const Graph& g, int base) {
  if (base < 1 || base > g.order() || g.degree(base) < 3)
    throw PreconditionFailed("weighting base must be a vertex of degree >= 3");
  if (has_nonzero_mod3_link(g))
    throw IllDefined("some path between vertices of degree >= 3 has length not divisible by 3");
  const int n = g.order();
  std::vector<unsigned> residues(static_cast<std::size_t>(n) + 1, 0);
  int complete = 0;
  detail::for_each_simple_path(g, base, [&](int w, int len) {
    auto& r = residues[w];
    if (r == 7u) return false;
    r |= 1u << (len % 3);
    if (r == 7u) ++complete;
    return complete == n;
  });
  BinaryWeighting bw{base, std::vector<int>(static_cast<std::size_t>(n))};
  for (int v = 1; v <= n; ++v) bw.weight[v - 1] = (residues[v] & 1u) ? 0 : 1;
  for (const Triple& t : path_triples(g)) {
    if (bw.at(t.x) + bw.at(t.y) + bw.at(t.z) != 2)
      throw IllDefined("path " + std::to_string(t.x) + "-" + std::to_string(t.y) + "-" + std::to_string(t.z) +
                       " does not carry exactly two weight-1 vertices");
  }
  return bw;
}

inline int total_binary_weight(const BinaryWeighting& w, const Configuration& c) {
  int total = 0;
  for (int v : c.pegs()) total ^= w.at(v);
  return total;
}

/// Start-hole/end-peg matrix of a connected non-star graph with a vertex of
/// degree >= 3, from the weighting alone: either every end is reachable, or
/// the end must match the start's total binary weight.
inline Classification classify_by_weighting(const Graph& g) {
  detail::require_branching_graph(g);
  const int n = g.order();
  Classification c;
  c.matrix.resize(static_cast<std::size_t>(n));
  if (has_nonzero_mod3_link(g)) {
    for (auto& row : c.matrix)
      for (int p = 1; p <= n; ++p) row.push_back(p);
  } else {
    int base = 1;
    while (g.degree(base) < 3) ++base;
    const BinaryWeighting w = binary_weighting(g, base);
    for (int h = 1; h <= n; ++h) {
      const int start = total_binary_weight(w, Configuration::one_hole(n, h));
      for (int p = 1; p <= n; ++p)
        if (w.at(p) == start) c.matrix[h - 1].push_back(p);
    }
  }
  c.verdict = verdict_from_matrix(c.matrix);
  return c;
}

// ---------------------------------------------------------------------------
// Closed-form path and cycle classification (labels 1..n in order)

struct PathCycleVerdict {
  int n = 0;
  Verdict level = Verdict::NotSolvable;
  bool solvable = false;
  std::vector<int> admissible_starts;
  std::map<int, std::vector<int>> end_pegs;

  Classification to_classification() const {
    Classification c;
    c.verdict = level;
    c.matrix.resize(static_cast<std::size_t>(n));
    for (const auto& [start, ends] : end_pegs) c.matrix[start - 1] = ends;
    return c;
  }
  bool admits(int hole) const { return end_pegs.count(hole) != 0; }
};

namespace detail {

inline std::vector<int> residue_class(int n, int r) {
  std::vector<int> out;
  for (int x = 1; x <= n; ++x)
    if (x % 3 == r) out.push_back(x);
  return out;
}

inline void finish(PathCycleVerdict& v) {
  for (const auto& [start, ends] : v.end_pegs) v.admissible_starts.push_back(start);
  v.solvable = !v.end_pegs.empty();
}

}  // namespace detail

/// Start holes and end pegs of P_n. Positions are determined mod 3 by the
/// quaternion weight and every admissible class is realised.
inline PathCycleVerdict classify_path(int n) {
  if (n < 2) throw PreconditionFailed("path classification needs n >= 2");
  PathCycleVerdict v;
  v.n = n;
  if (n == 2) {
    v.end_pegs = {{1, {2}}, {2, {1}}};
    v.level = Verdict::FreelySolvable;
    detail::finish(v);
    return v;
  }
  // (start residue, end residue) pairs by n mod 6.
  std::vector<std::pair<int, int>> pairs;
  switch (n % 6) {
    case 0: pairs = {{2, 2}}; break;
    case 2: pairs = {{1, 2}, {2, 1}}; break;
    case 3: pairs = {{1, 1}, {0, 0}}; break;
    case 4: pairs = {{2, 0}, {0, 2}}; break;
    default: break;
  }
  for (auto [rs, re] : pairs)
    for (int h : detail::residue_class(n, rs)) v.end_pegs[h] = detail::residue_class(n, re);
  v.level = pairs.empty() ? Verdict::NotSolvable : Verdict::Solvable;
  detail::finish(v);
  return v;
}

inline PathCycleVerdict classify_cycle(int n) {
  if (n < 3) throw PreconditionFailed("cycle classification needs n >= 3");
  PathCycleVerdict v;
  v.n = n;
  switch (n % 6) {
    case 0:
    case 3:
      for (int h = 1; h <= n; ++h) v.end_pegs[h] = detail::residue_class(n, h % 3);
      v.level = Verdict::FreelySolvable;
      break;
    case 2:
    case 4:
      for (int h = 1; h <= n; ++h)
        for (int p = 1; p <= n; ++p) v.end_pegs[h].push_back(p);
      v.level = Verdict::DoublyFreelySolvable;
      break;
    default:
      v.level = Verdict::NotSolvable;
      break;
  }
  detail::finish(v);
  return v;
}

/// Relabels a closed-form matrix stated on 1..n onto an arbitrary labelled
/// path or cycle; order[i] is the graph vertex playing label i+1.
inline Classification relabel(const Classification& c, const std::vector<int>& order) {
  Classification out;
  out.verdict = c.verdict;
  out.matrix.resize(c.matrix.size());
  for (std::size_t i = 0; i < c.matrix.size(); ++i) {
    auto& row = out.matrix[static_cast<std::size_t>(order[i] - 1)];
    for (int p : c.matrix[i]) row.push_back(order[static_cast<std::size_t>(p - 1)]);
    std::sort(row.begin(), row.end());
  }
  return out;
}

}  // namespace revpeg
