#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "clarcube/edge_set.hpp"
#include "clarcube/hexsys.hpp"
#include "clarcube/matching.hpp"
#include "clarcube/poly.hpp"

namespace clarcube {

inline constexpr std::size_t kDefaultCoverCap = 100000;

/// Spanning subgraph whose components are chosen hexagons and isolated edges.
struct ClarCover {
  std::vector<int> hexagons;  // sorted hexagon indices, pairwise vertex-disjoint
  EdgeSet isolated_edges;
  std::uint64_t host = 0;     // fingerprint of the system it covers

  std::size_t hexagon_count() const noexcept { return hexagons.size(); }
  friend bool operator==(const ClarCover&, const ClarCover&) = default;
  friend auto operator<=>(const ClarCover& a, const ClarCover& b) {
    if (auto c = a.hexagons <=> b.hexagons; c != 0) return c;
    return a.isolated_edges <=> b.isolated_edges;
  }
};

struct ClarOptions {
  std::size_t max_covers = kDefaultCoverCap;
  std::size_t max_matchings = kDefaultMatchingCap;
};

/// covers[k] holds every Clar cover with k hexagons.
using ClarCoverLevels = std::vector<std::vector<ClarCover>>;

/// Visits every set of pairwise vertex-disjoint hexagons (including the empty
/// set) in lexicographic order of sorted hexagon indices.
void for_each_disjoint_hexagon_set(const HexagonalSystem& system,
                                   const std::function<void(const std::vector<int>&)>& visit);

/// Vertex mask of the union of the given hexagons' rings.
std::vector<bool> hexagon_vertex_mask(const HexagonalSystem& system, const std::vector<int>& hexagons);

/// Every Clar cover grouped by hexagon count: each disjoint hexagon set
/// combined with each perfect matching of what remains.
ClarCoverLevels enumerate_clar_covers(const HexagonalSystem& system, const ClarOptions& options = {});

/// zeta(H, x). The empty system gives 1; a system without a perfect matching gives 0.
IntPolynomial zz_polynomial(const HexagonalSystem& system, const ClarOptions& options = {});

/// Degree of zeta. Throws NotKekuleanError when there is no Clar cover.
std::size_t clar_number(const HexagonalSystem& system, const ClarOptions& options = {});

/// Sextet patterns with `size` hexagons: disjoint hexagon sets whose removal
/// leaves a graph with a perfect matching.
std::vector<std::vector<int>> sextet_patterns(const HexagonalSystem& system, std::size_t size,
                                              const ClarOptions& options = {});

/// Counts sextet patterns by size.
IntPolynomial sextet_polynomial(const HexagonalSystem& system, const ClarOptions& options = {});

/// All edges of the cover: hexagon rings plus isolated edges.
EdgeSet clar_cover_edges(const HexagonalSystem& system, const ClarCover& cover);

bool is_valid_clar_cover(const HexagonalSystem& system, const ClarCover& cover);

/// C <= C2: the hexagons of C belong to C2 and both agree on every edge
/// outside the hexagons of C2. Throws std::invalid_argument for covers of
/// another system.
bool clar_cover_leq(const HexagonalSystem& system, const ClarCover& lhs, const ClarCover& rhs);

/// True when no unchosen hexagon alternates along the cover's isolated edges.
bool is_maximal_clar_cover(const HexagonalSystem& system, const ClarCover& cover);

std::vector<ClarCover> maximal_clar_covers(const HexagonalSystem& system, const ClarOptions& options = {});
std::vector<ClarCover> maximal_clar_covers(const HexagonalSystem& system, const ClarCoverLevels& covers);

}  // namespace clarcube
