#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "clarcube/poly.hpp"

namespace clarcube {

inline constexpr std::size_t kDefaultCubeCap = 1'000'000;
inline constexpr std::size_t kDefaultMedianBound = 300;
inline constexpr std::size_t kDefaultIsomorphismBound = 2000;
inline constexpr int kDefaultFibonacciBound = 20;

/// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : adjacency_(n) {}
  /// Throws std::invalid_argument on loops, repeated edges or out-of-range ids.
  SimpleGraph(std::size_t n, std::span<const std::pair<int, int>> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::span<const int> neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  bool adjacent(int a, int b) const;

  /// Edge list with a < b, sorted.
  std::vector<std::pair<int, int>> edges() const;
  bool connected() const;
  /// BFS distances from `source`; -1 for unreachable vertices.
  std::vector<int> distances_from(int source) const;

 private:
  std::vector<std::vector<int>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Vertex set of an induced subgraph isomorphic to Q_dim.
struct HypercubeEmbedding {
  std::vector<int> vertices;  // sorted
  int dim = 0;
  friend auto operator<=>(const HypercubeEmbedding&, const HypercubeEmbedding&) = default;
};

/// Induced hypercubes grouped by dimension: levels[d] holds every Q_d.
using HypercubeLevels = std::vector<std::vector<HypercubeEmbedding>>;

/// True when `vertices` induces a subgraph isomorphic to Q_dim, checked by
/// building a binary labeling from the minimum vertex.
bool induces_hypercube(const SimpleGraph& g, std::span<const int> vertices, int dim);

/// Every induced hypercube, deduplicated by vertex set, each level sorted.
/// Level d is grown from level d-1 by extending each Q_(d-1) across a
/// neighbor of its minimum vertex. Throws ResourceLimitError past `cap` cubes.
HypercubeLevels enumerate_induced_hypercubes(const SimpleGraph& g,
                                             std::size_t cap = kDefaultCubeCap);

IntPolynomial cube_polynomial(const HypercubeLevels& levels);
IntPolynomial cube_polynomial(const SimpleGraph& g, std::size_t cap = kDefaultCubeCap);

/// Hypercubes whose vertex set lies in no other induced hypercube.
std::vector<HypercubeEmbedding> maximal_hypercubes(const HypercubeLevels& levels);
std::vector<HypercubeEmbedding> maximal_hypercubes(const SimpleGraph& g,
                                                   std::size_t cap = kDefaultCubeCap);

struct MedianCheck {
  bool is_median = true;
  /// A triple with zero or several medians.
  std::optional<std::array<int, 3>> witness;
};

/// Brute-force median test over all vertex triples. Throws ValidationError on
/// a disconnected graph and ResourceLimitError above `max_vertices`.
MedianCheck is_median_graph(const SimpleGraph& g, std::size_t max_vertices = kDefaultMedianBound);

/// Gamma_n: binary strings of length n without "11", in numeric order,
/// adjacent at Hamming distance 1. Vertex i is the i-th such string.
SimpleGraph fibonacci_cube(int n, int max_n = kDefaultFibonacciBound);
/// Binary strings of fibonacci_cube(n) in vertex order.
std::vector<unsigned> fibonacci_strings(int n);

SimpleGraph hypercube_graph(int n);

/// Backtracking isomorphism test with color-refinement pruning. Throws
/// ResourceLimitError when either graph exceeds `max_vertices`.
bool graph_isomorphic(const SimpleGraph& a, const SimpleGraph& b,
                      std::size_t max_vertices = kDefaultIsomorphismBound);

}  // namespace clarcube
