#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clarcube/cube.hpp"
#include "clarcube/hexsys.hpp"
#include "clarcube/matching.hpp"

namespace clarcube {

struct ResonanceNeighbor {
  int vertex = 0;
  int hexagon = 0;
};

struct ResonanceEdge {
  int a = 0;  // a < b
  int b = 0;
  int hexagon = 0;
  friend auto operator<=>(const ResonanceEdge&, const ResonanceEdge&) = default;
};

/// R(H): one vertex per perfect matching (ids follow the canonical
/// enumeration), an edge labelled h whenever two matchings differ exactly on
/// the edges of hexagon h.
struct ResonanceGraph {
  std::vector<PerfectMatching> matchings;
  std::vector<std::vector<ResonanceNeighbor>> adjacency;  // sorted by vertex
  std::vector<ResonanceEdge> edges;                       // sorted

  std::size_t vertex_count() const noexcept { return matchings.size(); }
  std::size_t edge_count() const noexcept { return edges.size(); }
  /// Neighbor reached by flipping `hexagon`, or -1.
  int neighbor_via(int vertex, int hexagon) const;
  std::optional<int> edge_label(int a, int b) const;
  SimpleGraph to_simple_graph() const;
};

ResonanceGraph build_resonance_graph(const HexagonalSystem& system,
                                     std::size_t cap = kDefaultMatchingCap);

struct Arc {
  int from = 0;
  int to = 0;
  int hexagon = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Orientation of R(H): M -> M' when the shared hexagon is a proper sextet
/// of M and an improper one of M'.
struct DirectedResonanceGraph {
  std::size_t vertex_count = 0;
  std::vector<Arc> arcs;

  std::vector<std::vector<int>> out_neighbors() const;
  std::vector<std::size_t> in_degrees() const;
};

/// Throws VerificationError if an edge's hexagon is not alternating with
/// opposite classes at its two ends.
DirectedResonanceGraph orient(const HexagonalSystem& system, const ResonanceGraph& graph);

std::optional<std::vector<int>> find_directed_cycle(const DirectedResonanceGraph& graph);

/// Topological order (Kahn, smallest id first); throws CycleFoundError with a
/// concrete cycle otherwise.
std::vector<int> assert_acyclic(const DirectedResonanceGraph& graph);

/// DOT text: vertices m<id>, edges labelled with the hexagon cell "(q,r)".
std::string to_dot(const HexagonalSystem& system, const ResonanceGraph& graph);
std::string to_dot(const HexagonalSystem& system, const DirectedResonanceGraph& graph);
/// Writes DOT text to `path` and returns it. Throws std::runtime_error on I/O failure.
std::string export_dot(const std::string& dot, const std::string& path);

/// Induced hypercubes of R(H) generated from their sources: every matching
/// together with any subset of its proper sextets spans one cube. Throws
/// VerificationError when a flip required by the construction is missing.
HypercubeLevels enumerate_hypercubes_from_sources(const ResonanceGraph& graph,
                                                  const DirectedResonanceGraph& oriented,
                                                  std::size_t cap = kDefaultCubeCap);

}  // namespace clarcube
