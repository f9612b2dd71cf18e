#include "clarcube/clar.hpp"

#include <algorithm>
#include <stdexcept>

#include "clarcube/errors.hpp"

namespace clarcube {

namespace {

void disjoint_sets(const HexagonalSystem& system, std::size_t start, std::vector<int>& chosen,
                   std::vector<bool>& used, const std::function<void(const std::vector<int>&)>& visit) {
  visit(chosen);
  const auto hexagons = system.hexagons();
  for (std::size_t h = start; h < hexagons.size(); ++h) {
    const auto& ring = hexagons[h].ring;
    if (std::any_of(ring.begin(), ring.end(), [&](int v) { return used[static_cast<std::size_t>(v)]; }))
      continue;
    for (int v : ring) used[static_cast<std::size_t>(v)] = true;
    chosen.push_back(static_cast<int>(h));
    disjoint_sets(system, h + 1, chosen, used, visit);
    chosen.pop_back();
    for (int v : ring) used[static_cast<std::size_t>(v)] = false;
  }
}

}  // namespace

void for_each_disjoint_hexagon_set(const HexagonalSystem& system,
                                   const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> chosen;
  std::vector<bool> used(system.vertex_count(), false);
  disjoint_sets(system, 0, chosen, used, visit);
}

std::vector<bool> hexagon_vertex_mask(const HexagonalSystem& system, const std::vector<int>& hexagons) {
  std::vector<bool> mask(system.vertex_count(), false);
  for (int h : hexagons)
    for (int v : system.hexagons()[static_cast<std::size_t>(h)].ring) mask[static_cast<std::size_t>(v)] = true;
  return mask;
}

ClarCoverLevels enumerate_clar_covers(const HexagonalSystem& system, const ClarOptions& options) {
  ClarCoverLevels levels;
  std::size_t total = 0;
  for_each_disjoint_hexagon_set(system, [&](const std::vector<int>& hexagons) {
    std::size_t per_set = 0;
    for_each_perfect_matching(system, hexagon_vertex_mask(system, hexagons), [&](const EdgeSet& m) {
      if (++per_set > options.max_matchings)
        throw ResourceLimitError("perfect matching enumeration exceeded cap", options.max_matchings);
      if (++total > options.max_covers)
        throw ResourceLimitError("Clar cover enumeration exceeded cap", options.max_covers);
      if (levels.size() <= hexagons.size()) levels.resize(hexagons.size() + 1);
      levels[hexagons.size()].push_back({hexagons, m, system.fingerprint()});
      return true;
    });
  });
  return levels;
}

IntPolynomial zz_polynomial(const HexagonalSystem& system, const ClarOptions& options) {
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
  for_each_disjoint_hexagon_set(system, [&](const std::vector<int>& hexagons) {
    const auto n = count_perfect_matchings(system, hexagon_vertex_mask(system, hexagons), options.max_matchings);
    if (n == 0) return;
    total += n;
    if (total > options.max_covers)
      throw ResourceLimitError("Clar cover count exceeded cap", options.max_covers);
    if (counts.size() <= hexagons.size()) counts.resize(hexagons.size() + 1, 0);
    counts[hexagons.size()] += n;
  });
  return IntPolynomial::from_counts(counts);
}

std::size_t clar_number(const HexagonalSystem& system, const ClarOptions& options) {
  const auto zeta = zz_polynomial(system, options);
  if (zeta.is_zero()) throw NotKekuleanError();
  return static_cast<std::size_t>(zeta.degree());
}

std::vector<std::vector<int>> sextet_patterns(const HexagonalSystem& system, std::size_t size,
                                              const ClarOptions& options) {
  std::vector<std::vector<int>> out;
  for_each_disjoint_hexagon_set(system, [&](const std::vector<int>& hexagons) {
    if (hexagons.size() != size) return;
    bool matchable = false;
    for_each_perfect_matching(system, hexagon_vertex_mask(system, hexagons), [&](const EdgeSet&) {
      matchable = true;
      return false;
    });
    if (matchable) out.push_back(hexagons);
    if (out.size() > options.max_covers)
      throw ResourceLimitError("sextet pattern enumeration exceeded cap", options.max_covers);
  });
  return out;
}

IntPolynomial sextet_polynomial(const HexagonalSystem& system, const ClarOptions& options) {
  std::vector<std::uint64_t> counts;
  for_each_disjoint_hexagon_set(system, [&](const std::vector<int>& hexagons) {
    bool matchable = false;
    for_each_perfect_matching(system, hexagon_vertex_mask(system, hexagons), [&](const EdgeSet&) {
      matchable = true;
      return false;
    });
    if (!matchable) return;
    if (counts.size() <= hexagons.size()) counts.resize(hexagons.size() + 1, 0);
    ++counts[hexagons.size()];
  });
  (void)options;
  return IntPolynomial::from_counts(counts);
}

EdgeSet clar_cover_edges(const HexagonalSystem& system, const ClarCover& cover) {
  EdgeSet all = cover.isolated_edges;
  for (int h : cover.hexagons) all |= hexagon_edge_set(system, h);
  return all;
}

bool is_valid_clar_cover(const HexagonalSystem& system, const ClarCover& cover) {
  if (cover.host != system.fingerprint()) return false;
  if (cover.isolated_edges.universe() != system.edge_count()) return false;
  if (!std::is_sorted(cover.hexagons.begin(), cover.hexagons.end())) return false;
  std::vector<int> owner(system.vertex_count(), 0);
  for (int h : cover.hexagons) {
    if (h < 0 || static_cast<std::size_t>(h) >= system.hexagons().size()) return false;
    for (int v : system.hexagons()[static_cast<std::size_t>(h)].ring) ++owner[static_cast<std::size_t>(v)];
  }
  for (int e : cover.isolated_edges.to_vector()) {
    const Edge edge = system.edges()[static_cast<std::size_t>(e)];
    ++owner[static_cast<std::size_t>(edge.a)];
    ++owner[static_cast<std::size_t>(edge.b)];
  }
  return std::all_of(owner.begin(), owner.end(), [](int c) { return c == 1; });
}

bool clar_cover_leq(const HexagonalSystem& system, const ClarCover& lhs, const ClarCover& rhs) {
  if (lhs.host != system.fingerprint() || rhs.host != system.fingerprint())
    throw std::invalid_argument("clar_cover_leq: covers belong to different systems");
  if (!std::includes(rhs.hexagons.begin(), rhs.hexagons.end(), lhs.hexagons.begin(), lhs.hexagons.end()))
    return false;
  EdgeSet inside(system.edge_count());
  for (int h : rhs.hexagons) inside |= hexagon_edge_set(system, h);
  // Outside the rings of rhs both covers consist of isolated edges only.
  return (lhs.isolated_edges - inside) == rhs.isolated_edges;
}

bool is_maximal_clar_cover(const HexagonalSystem& system, const ClarCover& cover) {
  for (std::size_t h = 0; h < system.hexagons().size(); ++h) {
    if (std::binary_search(cover.hexagons.begin(), cover.hexagons.end(), static_cast<int>(h))) continue;
    if ((hexagon_edge_set(system, static_cast<int>(h)) & cover.isolated_edges).size() == 3) {
      // Three isolated edges inside a 6-cycle are necessarily alternate.
      return false;
    }
  }
  return true;
}

std::vector<ClarCover> maximal_clar_covers(const HexagonalSystem& system, const ClarCoverLevels& covers) {
  std::vector<ClarCover> out;
  for (const auto& level : covers)
    for (const auto& c : level)
      if (is_maximal_clar_cover(system, c)) out.push_back(c);
  return out;
}

std::vector<ClarCover> maximal_clar_covers(const HexagonalSystem& system, const ClarOptions& options) {
  return maximal_clar_covers(system, enumerate_clar_covers(system, options));
}

}  // namespace clarcube
