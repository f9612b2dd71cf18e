#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "clarcube/edge_set.hpp"
#include "clarcube/hexsys.hpp"

namespace clarcube {

inline constexpr std::size_t kDefaultMatchingCap = 100000;

/// A Kekule structure. `id` is the position in the canonical enumeration.
struct PerfectMatching {
  int id = 0;
  EdgeSet edges;
};

enum class SextetClass { Proper, Improper };

struct AlternatingHexagon {
  int hexagon = 0;  // index into HexagonalSystem::hexagons()
  SextetClass kind = SextetClass::Proper;
};

/// Visits the perfect matchings of the system restricted to vertices not
/// marked in `excluded` (empty mask means none excluded), in canonical order:
/// always match the lowest uncovered vertex, trying neighbors in ascending
/// order. The visitor returns false to stop early.
void for_each_perfect_matching(const HexagonalSystem& system, const std::vector<bool>& excluded,
                               const std::function<bool(const EdgeSet&)>& visit);

/// All perfect matchings in canonical order. The empty graph has one empty
/// matching. Throws ResourceLimitError past `cap`.
std::vector<PerfectMatching> enumerate_perfect_matchings(const HexagonalSystem& system,
                                                         std::size_t cap = kDefaultMatchingCap);

/// Perfect-matching count of the system minus `excluded` vertices.
std::uint64_t count_perfect_matchings(const HexagonalSystem& system,
                                      const std::vector<bool>& excluded = {},
                                      std::size_t cap = kDefaultMatchingCap);

EdgeSet hexagon_edge_set(const HexagonalSystem& system, int hexagon);

/// Proper/Improper when the matching restricts to a perfect matching of the
/// hexagon's ring, nullopt otherwise.
std::optional<SextetClass> classify_hexagon(const HexagonalSystem& system, const EdgeSet& matching,
                                            int hexagon);

std::vector<AlternatingHexagon> alternating_hexagons(const HexagonalSystem& system,
                                                     const EdgeSet& matching);

/// a(H, i): number of perfect matchings with exactly i proper sextets.
std::vector<std::uint64_t> proper_sextet_histogram(const HexagonalSystem& system,
                                                   std::size_t cap = kDefaultMatchingCap);

}  // namespace clarcube
