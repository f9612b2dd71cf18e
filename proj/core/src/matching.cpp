#include "clarcube/matching.hpp"

#include "clarcube/errors.hpp"

namespace clarcube {

namespace {

class MatchingSearch {
 public:
  MatchingSearch(const HexagonalSystem& system, const std::vector<bool>& excluded,
                 const std::function<bool(const EdgeSet&)>& visit)
      : system_(system), covered_(system.vertex_count(), false), current_(system.edge_count()), visit_(visit) {
    if (!excluded.empty()) covered_ = excluded;
  }

  void run() { search(0); }

 private:
  // Returns false once the visitor asked to stop.
  bool search(std::size_t from) {
    while (from < covered_.size() && covered_[from]) ++from;
    if (from == covered_.size()) return visit_(current_);
    const int v = static_cast<int>(from);
    covered_[from] = true;
    for (int w : system_.neighbors(v)) {
      if (covered_[static_cast<std::size_t>(w)]) continue;
      const int e = system_.edge_between(v, w);
      covered_[static_cast<std::size_t>(w)] = true;
      current_.insert(e);
      const bool keep_going = search(from + 1);
      current_.erase(e);
      covered_[static_cast<std::size_t>(w)] = false;
      if (!keep_going) {
        covered_[from] = false;
        return false;
      }
    }
    covered_[from] = false;
    return true;
  }

  const HexagonalSystem& system_;
  std::vector<bool> covered_;
  EdgeSet current_;
  const std::function<bool(const EdgeSet&)>& visit_;
};

}  // namespace

void for_each_perfect_matching(const HexagonalSystem& system, const std::vector<bool>& excluded,
                               const std::function<bool(const EdgeSet&)>& visit) {
  MatchingSearch(system, excluded, visit).run();
}

std::vector<PerfectMatching> enumerate_perfect_matchings(const HexagonalSystem& system,
                                                         std::size_t cap) {
  std::vector<PerfectMatching> out;
  for_each_perfect_matching(system, {}, [&](const EdgeSet& m) {
    if (out.size() >= cap) throw ResourceLimitError("perfect matching enumeration exceeded cap", cap);
    out.push_back({static_cast<int>(out.size()), m});
    return true;
  });
  return out;
}

std::uint64_t count_perfect_matchings(const HexagonalSystem& system,
                                      const std::vector<bool>& excluded, std::size_t cap) {
  std::uint64_t count = 0;
  for_each_perfect_matching(system, excluded, [&](const EdgeSet&) {
    if (count >= cap) throw ResourceLimitError("perfect matching count exceeded cap", cap);
    ++count;
    return true;
  });
  return count;
}

EdgeSet hexagon_edge_set(const HexagonalSystem& system, int hexagon) {
  EdgeSet s(system.edge_count());
  for (int e : system.hexagons()[static_cast<std::size_t>(hexagon)].edges) s.insert(e);
  return s;
}

std::optional<SextetClass> classify_hexagon(const HexagonalSystem& system, const EdgeSet& matching,
                                            int hexagon) {
  const Hexagon& h = system.hexagons()[static_cast<std::size_t>(hexagon)];
  bool even = true;
  bool odd = true;
  for (std::size_t i = 0; i < 6; ++i) {
    const bool in = matching.contains(h.edges[i]);
    if ((i % 2 == 0) != in) even = false;
    if ((i % 2 == 1) != in) odd = false;
  }
  if (!even && !odd) return std::nullopt;
  // Ring edge 0 is the right vertical, edge 3 the left one; exactly one is matched.
  return matching.contains(h.right_vertical) ? SextetClass::Proper : SextetClass::Improper;
}

std::vector<AlternatingHexagon> alternating_hexagons(const HexagonalSystem& system,
                                                     const EdgeSet& matching) {
  std::vector<AlternatingHexagon> out;
  for (std::size_t h = 0; h < system.hexagons().size(); ++h) {
    if (auto kind = classify_hexagon(system, matching, static_cast<int>(h)))
      out.push_back({static_cast<int>(h), *kind});
  }
  return out;
}

std::vector<std::uint64_t> proper_sextet_histogram(const HexagonalSystem& system, std::size_t cap) {
  std::vector<std::uint64_t> hist;
  for (const auto& m : enumerate_perfect_matchings(system, cap)) {
    std::size_t proper = 0;
    for (const auto& a : alternating_hexagons(system, m.edges))
      if (a.kind == SextetClass::Proper) ++proper;
    if (hist.size() <= proper) hist.resize(proper + 1, 0);
    ++hist[proper];
  }
  return hist;
}

}  // namespace clarcube
