#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <deque>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "revpeg/error.hpp"

namespace revpeg {

/// Undirected edge, stored with u < v. Vertices are 1-indexed.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 1..n.
///
/// The edge list is kept sorted and the adjacency lists are sorted, so two
/// graphs built from the same edge set in any order compare equal.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) + 1) {
    if (n < 1) throw ValidationError("graph must have at least one vertex");
  }

  Graph(int n, std::vector<Edge> edges) : Graph(n) {
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Edge& e = edges[i];
      if (e.u < 1 || e.v > n)
        throw ValidationError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                              " has an endpoint outside 1.." + std::to_string(n));
      if (e.u == e.v) throw ValidationError("self-loop on vertex " + std::to_string(e.u));
      if (i > 0 && edges[i - 1] == e)
        throw ValidationError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    edges_ = std::move(edges);
  }

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(int u, int v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  int max_degree() const {
    int best = 0;
    for (int v = 1; v <= n_; ++v) best = std::max(best, degree(v));
    return best;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// ---------------------------------------------------------------------------
// Structure queries

inline bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n == 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

inline bool is_tree(const Graph& g) {
  return static_cast<int>(g.size()) == g.order() - 1 && is_connected(g);
}

/// K_{1,n-1} for n >= 3 (any labeling). P2 and P1 are not treated as stars.
inline bool is_star(const Graph& g) {
  return g.order() >= 3 && is_tree(g) && g.max_degree() == g.order() - 1;
}

inline bool is_path(const Graph& g) { return is_tree(g) && g.max_degree() <= 2; }

inline bool is_cycle(const Graph& g) {
  if (g.order() < 3 || static_cast<int>(g.size()) != g.order() || !is_connected(g)) return false;
  for (int v = 1; v <= g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

/// Vertices of a path graph in order, starting from the smaller-labelled end.
inline std::vector<int> path_order(const Graph& g) {
  if (!is_path(g)) throw PreconditionFailed("graph is not a path");
  if (g.order() == 1) return {1};
  int start = 0;
  for (int v = 1; v <= g.order(); ++v) {
    if (g.degree(v) == 1) {
      start = v;
      break;
    }
  }
  std::vector<int> order{start};
  int prev = 0;
  int cur = start;
  while (static_cast<int>(order.size()) < g.order()) {
    for (int w : g.neighbors(cur)) {
      if (w != prev) {
        prev = cur;
        cur = w;
        break;
      }
    }
    order.push_back(cur);
  }
  return order;
}

/// Vertices of a cycle graph in cyclic order starting at 1, heading to 1's
/// smaller neighbour.
inline std::vector<int> cycle_order(const Graph& g) {
  if (!is_cycle(g)) throw PreconditionFailed("graph is not a cycle");
  std::vector<int> order{1};
  int prev = 1;
  int cur = g.neighbors(1).front();
  while (cur != 1) {
    order.push_back(cur);
    const auto& nb = g.neighbors(cur);
    int next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return order;
}

/// Breadth-first distances from a set of sources; -1 for unreachable.
/// parent[v] is the neighbour of v one step closer to the sources (0 at sources).
struct Bfs {
  std::vector<int> dist;
  std::vector<int> parent;
};

inline Bfs bfs_from(const Graph& g, const std::vector<int>& sources) {
  const auto sz = static_cast<std::size_t>(g.order()) + 1;
  Bfs r{std::vector<int>(sz, -1), std::vector<int>(sz, 0)};
  std::deque<int> q;
  for (int s : sources) {
    r.dist[s] = 0;
    q.push_back(s);
  }
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int w : g.neighbors(u)) {
      if (r.dist[w] < 0) {
        r.dist[w] = r.dist[u] + 1;
        r.parent[w] = u;
        q.push_back(w);
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Named families

inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw ValidationError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(1, n);
  return Graph(n, std::move(e));
}

/// K_{1,n-1} with centre 1.
inline Graph star_graph(int n) {
  if (n < 2) throw ValidationError("star needs at least 2 vertices");
  std::vector<Edge> e;
  for (int i = 2; i <= n; ++i) e.emplace_back(1, i);
  return Graph(n, std::move(e));
}

/// DS(L,R): centre edge 1-2, leaves 3..L+2 on vertex 1 and L+3..L+R+2 on vertex 2.
inline Graph double_star(int left, int right) {
  if (left < 0 || right < 0) throw ValidationError("double star leaf counts must be non-negative");
  std::vector<Edge> e{{1, 2}};
  for (int i = 0; i < left; ++i) e.emplace_back(1, 3 + i);
  for (int i = 0; i < right; ++i) e.emplace_back(2, 3 + left + i);
  return Graph(left + right + 2, std::move(e));
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

/// Claw with one subdivided edge: a=1, b=2, c=3, d=4, e=5.
inline Graph h_graph() { return Graph(5, {{1, 3}, {2, 3}, {3, 4}, {4, 5}}); }

/// Triangle 1-2-3 with pendant vertex 4 on 3.
inline Graph paw_graph() { return Graph(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}}); }

// ---------------------------------------------------------------------------
// Text format

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::optional<int> to_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

inline std::optional<Graph> parse_family(std::string_view spec) {
  if (spec == "H") return h_graph();
  if (spec == "paw") return paw_graph();
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  auto name = spec.substr(0, colon);
  auto arg = spec.substr(colon + 1);
  auto need = [&](std::optional<int> v) {
    if (!v || *v < 1) throw ParseError(1, "bad argument in family spec '" + std::string(spec) + "'");
    return *v;
  };
  if (name == "path") return path_graph(need(to_int(arg)));
  if (name == "cycle") return cycle_graph(need(to_int(arg)));
  if (name == "star") return star_graph(need(to_int(arg)));
  if (name == "complete") return complete_graph(need(to_int(arg)));
  if (name == "doublestar") {
    auto comma = arg.find(',');
    if (comma == std::string_view::npos)
      throw ParseError(1, "doublestar expects 'doublestar:L,R'");
    auto l = to_int(arg.substr(0, comma));
    auto r = to_int(arg.substr(comma + 1));
    if (!l || !r || *l < 0 || *r < 0) throw ParseError(1, "bad doublestar leaf counts");
    return double_star(*l, *r);
  }
  return std::nullopt;
}

}  // namespace detail

/// Parses a named family ("path:5", "cycle:6", "star:4", "doublestar:2,3",
/// "complete:4", "paw", "H") or the edge-list format: a header line "n m"
/// followed by m lines "u v". Blank lines and '#' comments are skipped.
inline Graph parse_graph(std::string_view text) {
  auto trimmed = detail::trim(text);
  if (auto fam = detail::parse_family(trimmed)) return *fam;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  std::optional<std::pair<int, int>> header;
  std::vector<Edge> edges;
  int header_line = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    std::istringstream ls{std::string(line)};
    long long a = 0;
    long long b = 0;
    std::string extra;
    if (!(ls >> a >> b) || (ls >> extra))
      throw ParseError(line_no, "expected two integers, got '" + std::string(line) + "'");
    if (!header) {
      if (a < 1 || b < 0) throw ParseError(line_no, "header must be 'n m' with n >= 1, m >= 0");
      header = {static_cast<int>(a), static_cast<int>(b)};
      header_line = line_no;
      continue;
    }
    if (static_cast<int>(edges.size()) == header->second)
      throw ParseError(line_no, "more edge lines than the header's m=" + std::to_string(header->second));
    if (a < 1 || b < 1 || a > header->first || b > header->first)
      throw ValidationError("line " + std::to_string(line_no) + ": vertex out of range 1.." +
                            std::to_string(header->first));
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (!header) throw ParseError(line_no + 1, "missing 'n m' header");
  if (static_cast<int>(edges.size()) != header->second)
    throw ParseError(line_no + 1, "header line " + std::to_string(header_line) + " declares m=" +
                                      std::to_string(header->second) + " but found " +
                                      std::to_string(edges.size()) + " edges");
  return Graph(header->first, std::move(edges));
}

/// Edge-list text with edges sorted lexicographically.
inline std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace revpeg
