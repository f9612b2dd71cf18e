#include "clarcube/json_io.hpp"

#include <algorithm>

#include "clarcube/errors.hpp"

namespace clarcube {

namespace {

nlohmann::json bigints(const std::vector<BigInt>& values) {
  auto arr = nlohmann::json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

nlohmann::json vertex_json(LatticeVertex p) { return nlohmann::json::array({p.u, p.v}); }

LatticeVertex vertex_from(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw ParseError("vertex must be [u, v]");
  return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

nlohmann::json poly_to_json(const IntPolynomial& p) { return {{"coeffs", bigints(p.coeffs())}}; }

nlohmann::json shifted_to_json(const ShiftedCoefficients& s) { return {{"shifted", bigints(s.b)}}; }

IntPolynomial poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw ParseError("polynomial JSON needs a \"coeffs\" array");
  std::vector<BigInt> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (c.is_string()) {
      try {
        coeffs.emplace_back(c.get<std::string>());
      } catch (const std::exception&) {
        throw ParseError("bad coefficient '" + c.get<std::string>() + "'");
      }
    } else if (c.is_number_integer()) {
      coeffs.emplace_back(c.get<long long>());
    } else {
      throw ParseError("coefficient must be a decimal string or integer");
    }
  }
  return IntPolynomial(std::move(coeffs));
}

nlohmann::json edges_to_json(const HexagonalSystem& system, const EdgeSet& edges) {
  std::vector<std::pair<LatticeVertex, LatticeVertex>> list;
  for (int e : edges.to_vector()) {
    const Edge edge = system.edges()[static_cast<std::size_t>(e)];
    list.emplace_back(system.vertices()[static_cast<std::size_t>(edge.a)],
                      system.vertices()[static_cast<std::size_t>(edge.b)]);
  }
  std::sort(list.begin(), list.end());
  auto arr = nlohmann::json::array();
  for (auto [p, q] : list) arr.push_back({vertex_json(p), vertex_json(q)});
  return arr;
}

nlohmann::json cover_to_json(const HexagonalSystem& system, const ClarCover& cover) {
  auto hexagons = nlohmann::json::array();
  for (int h : cover.hexagons) {
    const HexCell c = system.hexagons()[static_cast<std::size_t>(h)].cell;
    hexagons.push_back({c.q, c.r});
  }
  return {{"hexagons", std::move(hexagons)}, {"edges", edges_to_json(system, cover.isolated_edges)}};
}

ClarCover cover_from_json(const HexagonalSystem& system, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("hexagons") || !j.contains("edges"))
    throw ParseError("cover JSON needs \"hexagons\" and \"edges\"");
  ClarCover cover{{}, EdgeSet(system.edge_count()), system.fingerprint()};
  for (const auto& h : j["hexagons"]) {
    if (!h.is_array() || h.size() != 2) throw ParseError("hexagon must be [q, r]");
    const HexCell cell{h[0].get<int>(), h[1].get<int>()};
    auto idx = system.hexagon_index(cell);
    if (!idx) throw ParseError("unknown hexagon cell");
    cover.hexagons.push_back(*idx);
  }
  std::sort(cover.hexagons.begin(), cover.hexagons.end());
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edge must be [[u, v], [u2, v2]]");
    auto a = system.vertex_index(vertex_from(e[0]));
    auto b = system.vertex_index(vertex_from(e[1]));
    const int idx = (a && b) ? system.edge_between(*a, *b) : -1;
    if (idx < 0) throw ParseError("unknown edge");
    cover.isolated_edges.insert(idx);
  }
  return cover;
}

nlohmann::json graph_to_json(const SimpleGraph& g) {
  auto edges = nlohmann::json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

SimpleGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("graph JSON must be an object");
  const char* key = j.contains("n") ? "n" : (j.contains("vertices") ? "vertices" : nullptr);
  if (!key || !j[key].is_number_unsigned()) throw ParseError("graph JSON needs a vertex count \"n\"");
  if (!j.contains("edges") || !j["edges"].is_array()) throw ParseError("graph JSON needs an \"edges\" array");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() < 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("edge must start with two integer endpoints");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  try {
    return SimpleGraph(j[key].get<std::size_t>(), edges);
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what());
  }
}

nlohmann::json resonance_to_json(const HexagonalSystem& system, const ResonanceGraph& graph) {
  auto edges = nlohmann::json::array();
  for (const auto& e : graph.edges) {
    const HexCell c = system.hexagons()[static_cast<std::size_t>(e.hexagon)].cell;
    edges.push_back({e.a, e.b, std::to_string(c.q) + " " + std::to_string(c.r)});
  }
  return {{"vertices", graph.vertex_count()}, {"edges", std::move(edges)}};
}

}  // namespace clarcube
