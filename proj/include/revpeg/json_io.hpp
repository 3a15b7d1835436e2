#pragma once

// JSON shapes shared by the CLI and by witness files.
//
//   move:           {"kind": "jump"|"unjump", "x": 1, "y": 2, "z": 3}
//   move sequence:  {"start": [pegs...], "moves": [move...]}
//                   (a bare list of moves is accepted when the start is given separately)
//   classification: {"graph": "<edge list>", "verdict": "...", "matrix": {"<hole>": [pegs...]},
//                    "witnesses": {"<hole>": move sequence}}   (witnesses optional)

#include <map>
#include <optional>
#include <string>

#include "json.hpp"
#include "revpeg/certificates.hpp"
#include "revpeg/configuration.hpp"
#include "revpeg/graph.hpp"
#include "revpeg/oracle.hpp"

namespace revpeg {

using nlohmann::json;

inline json to_json(const Move& m) {
  return {{"kind", to_string(m.kind)}, {"x", m.x}, {"y", m.y}, {"z", m.z}};
}

inline Move move_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("move must be an object");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind != "jump" && kind != "unjump") throw ValidationError("move kind must be 'jump' or 'unjump'");
  return {j.at("x").get<int>(), j.at("y").get<int>(), j.at("z").get<int>(),
          kind == "jump" ? MoveKind::Jump : MoveKind::Unjump};
}

/// With `trace_graph`, also emits the configuration after every move.
inline json to_json(const MoveSequence& s, const Graph* trace_graph = nullptr) {
  json moves = json::array();
  for (const Move& m : s.moves) moves.push_back(to_json(m));
  json out = {{"start", s.start.pegs()}, {"moves", std::move(moves)}};
  if (trace_graph != nullptr) {
    json trace = json::array();
    Configuration cur = s.start;
    for (const Move& m : s.moves) {
      cur = apply_move(cur, m);
      trace.push_back(cur.pegs());
    }
    out["trace"] = std::move(trace);
  }
  return out;
}

/// Reads a move sequence on n vertices. The start comes from "start" (peg
/// list) or "hole" in the object, else from `hole` for a bare move list.
inline MoveSequence sequence_from_json(const json& j, int n, std::optional<int> hole = std::nullopt) {
  const json* moves = nullptr;
  std::optional<Configuration> start;
  if (j.is_array()) {
    moves = &j;
  } else if (j.is_object()) {
    moves = &j.at("moves");
    if (j.contains("start")) start = Configuration::from_pegs(n, j.at("start").get<std::vector<int>>());
    else if (j.contains("hole")) start = Configuration::one_hole(n, j.at("hole").get<int>());
  } else {
    throw ValidationError("witness must be an object or a list of moves");
  }
  if (!start) {
    if (!hole) throw ValidationError("witness has no start; pass a hole");
    start = Configuration::one_hole(n, *hole);
  }
  MoveSequence s{*start, {}};
  for (const json& m : *moves) s.moves.push_back(move_from_json(m));
  return s;
}

inline json matrix_to_json(const std::vector<std::vector<int>>& matrix) {
  json out = json::object();
  for (std::size_t h = 0; h < matrix.size(); ++h) out[std::to_string(h + 1)] = matrix[h];
  return out;
}

inline json to_json(const Graph& g, const Classification& c, const std::map<int, MoveSequence>* witnesses = nullptr) {
  json out = {{"graph", serialize_graph(g)}, {"verdict", to_string(c.verdict)}, {"matrix", matrix_to_json(c.matrix)}};
  if (witnesses != nullptr) {
    json w = json::object();
    for (const auto& [h, s] : *witnesses) w[std::to_string(h)] = to_json(s);
    out["witnesses"] = std::move(w);
  }
  return out;
}

inline json to_json(const PathCycleVerdict& v) {
  json ends = json::object();
  for (const auto& [h, e] : v.end_pegs) ends[std::to_string(h)] = e;
  return {{"n", v.n},
          {"verdict", to_string(v.level)},
          {"solvable", v.solvable},
          {"admissible_starts", v.admissible_starts},
          {"end_pegs", std::move(ends)}};
}

inline json to_json(const BinaryWeighting& w) {
  json weights = json::object();
  for (std::size_t v = 0; v < w.weight.size(); ++v) weights[std::to_string(v + 1)] = w.weight[v];
  return {{"base", w.base}, {"weights", std::move(weights)}};
}

}  // namespace revpeg
