#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "revpeg/error.hpp"
#include "revpeg/graph.hpp"

namespace revpeg {

inline constexpr int kMaxVertices = 64;

inline std::uint64_t vertex_bit(int v) { return std::uint64_t{1} << (v - 1); }

/// Peg/hole state of every vertex, one bit per vertex (bit v-1 is vertex v).
class Configuration {
 public:
  Configuration() = default;

  Configuration(int n, std::uint64_t pegs) : bits_(pegs), n_(n) {
    if (n < 1 || n > kMaxVertices)
      throw CapacityExceeded("configuration supports 1.." + std::to_string(kMaxVertices) +
                             " vertices, got " + std::to_string(n));
    if (n < kMaxVertices && (pegs >> n) != 0)
      throw ValidationError("peg bits set above vertex " + std::to_string(n));
  }

  static Configuration from_pegs(int n, std::span<const int> pegs) {
    std::uint64_t bits = 0;
    for (int v : pegs) {
      if (v < 1 || v > n) throw ValidationError("peg vertex " + std::to_string(v) + " out of range");
      bits |= vertex_bit(v);
    }
    return Configuration(n, bits);
  }
  static Configuration from_pegs(int n, std::initializer_list<int> pegs) {
    return from_pegs(n, std::span<const int>(pegs.begin(), pegs.size()));
  }

  static Configuration full(int n) {
    Configuration c(n, 0);
    c.bits_ = n == kMaxVertices ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return c;
  }

  /// Pegs everywhere except `hole`.
  static Configuration one_hole(int n, int hole) {
    check_vertex(n, hole);
    Configuration c = full(n);
    c.bits_ &= ~vertex_bit(hole);
    return c;
  }

  static Configuration single_peg(int n, int peg) {
    check_vertex(n, peg);
    return Configuration(n, vertex_bit(peg));
  }

  int order() const noexcept { return n_; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool has_peg(int v) const noexcept { return (bits_ >> (v - 1)) & 1u; }
  int peg_count() const noexcept { return std::popcount(bits_); }

  std::vector<int> pegs() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  /// Lowest-numbered peg, or 0 when empty.
  int first_peg() const noexcept { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

  Configuration toggled(std::uint64_t mask) const {
    Configuration c = *this;
    c.bits_ ^= mask;
    return c;
  }

  friend auto operator<=>(const Configuration&, const Configuration&) = default;

 private:
  static void check_vertex(int n, int v) {
    if (v < 1 || v > n) throw ValidationError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
  }

  std::uint64_t bits_ = 0;
  int n_ = 0;
};

enum class MoveKind : std::uint8_t { Jump, Unjump };

inline const char* to_string(MoveKind k) { return k == MoveKind::Jump ? "jump" : "unjump"; }

/// A jump moves the peg on x over the peg on y into the hole on z.
/// An unjump moves the peg on z back to x over the holes, creating a peg on y.
struct Move {
  int x = 0;
  int y = 0;
  int z = 0;
  MoveKind kind = MoveKind::Jump;

  static Move jump(int x, int y, int z) { return {x, y, z, MoveKind::Jump}; }
  static Move unjump(int x, int y, int z) { return {x, y, z, MoveKind::Unjump}; }

  std::uint64_t mask() const { return vertex_bit(x) | vertex_bit(y) | vertex_bit(z); }

  /// The move that undoes this one.
  Move inverse() const {
    return kind == MoveKind::Jump ? unjump(x, y, z) : jump(x, y, z);
  }

  friend bool operator==(const Move&, const Move&) = default;
  /// Deterministic order: (y, x, z, kind).
  friend auto operator<=>(const Move& a, const Move& b) {
    return std::tie(a.y, a.x, a.z, a.kind) <=> std::tie(b.y, b.x, b.z, b.kind);
  }
};

inline std::string to_string(const Move& m) {
  return std::string(m.kind == MoveKind::Jump ? "Jump(" : "Unjump(") + std::to_string(m.x) + "," +
         std::to_string(m.y) + "," + std::to_string(m.z) + ")";
}

struct MoveSequence {
  Configuration start;
  std::vector<Move> moves;
};

inline std::size_t unjump_count(const MoveSequence& s) {
  return static_cast<std::size_t>(std::count_if(s.moves.begin(), s.moves.end(), [](const Move& m) {
    return m.kind == MoveKind::Unjump;
  }));
}

/// A path x-y-z on three vertices with x < z; every legal move lives on one.
struct Triple {
  int x;
  int y;
  int z;
  std::uint64_t ends;  // bits of x and z
  std::uint64_t mask;  // bits of x, y and z
};

/// All three-vertex paths of g, ordered by (y, x, z).
inline std::vector<Triple> path_triples(const Graph& g) {
  std::vector<Triple> out;
  for (int y = 1; y <= g.order(); ++y) {
    const auto& nb = g.neighbors(y);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        int x = nb[i];
        int z = nb[j];
        out.push_back({x, y, z, vertex_bit(x) | vertex_bit(z), vertex_bit(x) | vertex_bit(y) | vertex_bit(z)});
      }
  }
  return out;
}

/// The single legal move on triple t in state `pegs`, if any.
///
/// A triple admits a move exactly when its endpoints differ: with a peg in the
/// middle the peg endpoint jumps, with a hole in the middle the peg endpoint
/// unjumps toward the hole endpoint.
inline std::optional<Move> move_on(const Triple& t, std::uint64_t pegs) {
  const bool px = pegs & vertex_bit(t.x);
  const bool pz = pegs & vertex_bit(t.z);
  if (px == pz) return std::nullopt;
  const bool py = pegs & vertex_bit(t.y);
  const int peg_end = px ? t.x : t.z;
  const int hole_end = px ? t.z : t.x;
  if (py) return Move::jump(peg_end, t.y, hole_end);
  return Move::unjump(hole_end, t.y, peg_end);
}

/// True iff the peg/hole pattern of c permits m (edges are not checked).
inline bool pattern_allows(const Configuration& c, const Move& m) {
  if (m.x == m.y || m.y == m.z || m.x == m.z) return false;
  const int n = c.order();
  for (int v : {m.x, m.y, m.z})
    if (v < 1 || v > n) return false;
  if (m.kind == MoveKind::Jump) return c.has_peg(m.x) && c.has_peg(m.y) && !c.has_peg(m.z);
  return !c.has_peg(m.x) && !c.has_peg(m.y) && c.has_peg(m.z);
}

/// Every legal jump and unjump in c, sorted by (y, x, z, kind).
inline std::vector<Move> legal_moves(const Graph& g, const Configuration& c) {
  std::vector<Move> out;
  for (const Triple& t : path_triples(g))
    if (auto m = move_on(t, c.bits())) out.push_back(*m);
  std::sort(out.begin(), out.end());
  return out;
}

/// Applies m to c. Throws IllegalMove when the peg/hole pattern is wrong.
inline Configuration apply_move(const Configuration& c, const Move& m) {
  if (!pattern_allows(c, m)) throw IllegalMove(to_string(m) + " does not match the peg/hole pattern");
  return c.toggled(m.mask());
}

/// Applies every move of s in order, checking edges and peg/hole patterns.
/// Returns the final configuration; throws IllegalMoveAt on the first bad move.
inline Configuration replay(const Graph& g, const MoveSequence& s) {
  if (s.start.order() != g.order())
    throw ValidationError("start configuration has " + std::to_string(s.start.order()) +
                          " vertices, graph has " + std::to_string(g.order()));
  Configuration cur = s.start;
  for (std::size_t i = 0; i < s.moves.size(); ++i) {
    const Move& m = s.moves[i];
    if (!g.has_edge(m.x, m.y) || !g.has_edge(m.y, m.z) || m.x == m.z)
      throw IllegalMoveAt(i, to_string(m) + " is not a path in the graph");
    if (!pattern_allows(cur, m)) throw IllegalMoveAt(i, to_string(m) + " does not match the peg/hole pattern");
    cur = cur.toggled(m.mask());
  }
  return cur;
}

}  // namespace revpeg
