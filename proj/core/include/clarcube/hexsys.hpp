#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace clarcube {

/// Axial coordinates of a hexagonal lattice cell.
struct HexCell {
  int q = 0;
  int r = 0;
  friend auto operator<=>(const HexCell&, const HexCell&) = default;
};

/// Lattice vertex in scaled Cartesian units (horizontal sqrt(3)/2, vertical 1/2).
struct LatticeVertex {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const LatticeVertex&, const LatticeVertex&) = default;
};

/// Undirected edge between vertex indices, a < b.
struct Edge {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Center of a cell under the fixed embedding: (2q + r, 3r).
LatticeVertex cell_center(HexCell cell);

/// Ring vertices of a cell in cyclic order, starting at the upper-right corner
/// and running clockwise. Ring edge i joins ring[i] and ring[(i+1) % 6]; edge 0
/// is the right vertical edge and edge 3 the left one.
std::array<LatticeVertex, 6> cell_ring(HexCell cell);

struct Hexagon {
  HexCell cell;
  std::array<int, 6> ring{};   // vertex indices
  std::array<int, 6> edges{};  // edge indices, edges[i] = {ring[i], ring[i+1]}
  int left_vertical = -1;
  int right_vertical = -1;
};

/// A (generalized) hexagonal system embedded in the integer lattice.
/// Immutable once built.
class HexagonalSystem {
 public:
  HexagonalSystem() = default;

  /// Builds a benzenoid from a cell set. Duplicates collapse. Throws
  /// ValidationError for an empty or disconnected cell set. A cell set whose
  /// rings enclose a hole is accepted but flagged generalized.
  static HexagonalSystem from_cells(std::vector<HexCell> cells);

  std::span<const HexCell> cells() const noexcept { return cells_; }
  std::span<const LatticeVertex> vertices() const noexcept { return vertices_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Hexagon> hexagons() const noexcept { return hexagons_; }
  std::span<const int> neighbors(int vertex) const noexcept { return adjacency_[vertex]; }
  bool generalized() const noexcept { return generalized_; }
  bool empty() const noexcept { return vertices_.empty(); }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::optional<int> vertex_index(LatticeVertex p) const;
  /// Index of the edge joining two vertex indices, or -1.
  int edge_between(int a, int b) const;
  std::optional<int> hexagon_index(HexCell cell) const;

  bool is_vertical(int edge) const;

  /// Hash of the vertex and edge sets; equal systems share a fingerprint.
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  /// Copy with every listed vertex and incident edge removed. Hexagons
  /// survive when their full ring does. The result is generalized.
  HexagonalSystem without_vertices(std::span<const int> removed) const;

  /// Reflection across a vertical axis (u -> -u).
  HexagonalSystem mirrored() const;

  friend bool operator==(const HexagonalSystem& a, const HexagonalSystem& b) {
    return a.vertices_ == b.vertices_ && a.edge_coords() == b.edge_coords() &&
           a.cells_ == b.cells_ && a.generalized_ == b.generalized_;
  }

 private:
  HexagonalSystem(std::vector<HexCell> cells, std::vector<LatticeVertex> vertices,
                  std::vector<std::pair<LatticeVertex, LatticeVertex>> edges, bool generalized);

  std::vector<std::pair<LatticeVertex, LatticeVertex>> edge_coords() const;

  std::vector<HexCell> cells_;
  std::vector<LatticeVertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Hexagon> hexagons_;
  std::vector<std::vector<int>> adjacency_;
  std::unordered_map<std::uint64_t, int> edge_lookup_;
  std::uint64_t fingerprint_ = 0;
  bool generalized_ = false;
};

/// Parses the `.hex` cell-list format: one "q r" pair per line, '#' starts a
/// comment, blank lines are ignored.
HexagonalSystem parse_hex_file(std::string_view text);

/// Serializes cells sorted by (q, r), one per line.
std::string serialize_hex(const HexagonalSystem& system);

/// Removes a hexagon's six vertices. Throws std::invalid_argument when the
/// hexagon is not part of the system.
HexagonalSystem delete_hexagon(const HexagonalSystem& system, HexCell hexagon);

/// Removes the vertices of pairwise disjoint hexagons. Throws
/// std::invalid_argument when two hexagons share a vertex or one is missing.
HexagonalSystem delete_sextet_pattern(const HexagonalSystem& system,
                                      std::span<const HexCell> pattern);

/// Named systems: benzene, naphthalene, anthracene, phenanthrene,
/// triphenylene, pyrene, coronene, linear (n), zigzag (n), random_cata (n, seed).
HexagonalSystem catalog(std::string_view name, std::optional<int> n = std::nullopt,
                        std::uint64_t seed = 0);

/// Catalog names that take no size argument.
std::vector<std::string> fixed_catalog_names();

/// Chain of n cells with seeded random linear/angular annelations; retries
/// up to 1000 times when the chain touches itself.
HexagonalSystem random_catafusene(int n, std::uint64_t seed);

}  // namespace clarcube
