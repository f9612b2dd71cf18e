#include "clarcube/hexsys.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "clarcube/errors.hpp"

namespace clarcube {

namespace {

constexpr std::array<LatticeVertex, 6> kRingOffsets{
    {{1, 1}, {1, -1}, {0, -2}, {-1, -1}, {-1, 1}, {0, 2}}};

// Cyclic order; turning by +-1 gives an angular annelation.
constexpr std::array<HexCell, 6> kDirections{{{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}}};

constexpr int kRandomRetries = 1000;

HexCell step(HexCell c, int dir) {
  return {c.q + kDirections[static_cast<std::size_t>(dir)].q,
          c.r + kDirections[static_cast<std::size_t>(dir)].r};
}

bool cells_adjacent(HexCell a, HexCell b) {
  for (int d = 0; d < 6; ++d)
    if (step(a, d) == b) return true;
  return false;
}

std::string cell_str(HexCell c) {
  return "(" + std::to_string(c.q) + "," + std::to_string(c.r) + ")";
}

std::uint64_t edge_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

void fnv_mix(std::uint64_t& h, std::int64_t x) {
  for (int i = 0; i < 8; ++i) {
    h ^= static_cast<std::uint64_t>(x >> (8 * i)) & 0xffU;
    h *= 0x100000001b3ULL;
  }
}

HexCell mirror_cell(HexCell c) { return {-c.q - c.r, c.r}; }

}  // namespace

LatticeVertex cell_center(HexCell cell) { return {2 * cell.q + cell.r, 3 * cell.r}; }

std::array<LatticeVertex, 6> cell_ring(HexCell cell) {
  const LatticeVertex c = cell_center(cell);
  std::array<LatticeVertex, 6> ring;
  for (std::size_t i = 0; i < 6; ++i) ring[i] = {c.u + kRingOffsets[i].u, c.v + kRingOffsets[i].v};
  return ring;
}

HexagonalSystem::HexagonalSystem(std::vector<HexCell> cells, std::vector<LatticeVertex> vertices,
                                 std::vector<std::pair<LatticeVertex, LatticeVertex>> edges,
                                 bool generalized)
    : vertices_(std::move(vertices)), generalized_(generalized) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());

  std::set<Edge> edge_set;
  for (auto [p, q] : edges) {
    auto a = vertex_index(p);
    auto b = vertex_index(q);
    if (!a || !b) throw ValidationError("edge endpoint missing from vertex set");
    if (*a == *b) throw ValidationError("loop edge");
    edge_set.insert({std::min(*a, *b), std::max(*a, *b)});
  }
  edges_.assign(edge_set.begin(), edge_set.end());
  adjacency_.assign(vertices_.size(), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge e = edges_[i];
    adjacency_[static_cast<std::size_t>(e.a)].push_back(e.b);
    adjacency_[static_cast<std::size_t>(e.b)].push_back(e.a);
    edge_lookup_.emplace(edge_key(e.a, e.b), static_cast<int>(i));
  }
  for (auto& nb : adjacency_) {
    std::sort(nb.begin(), nb.end());
    if (nb.size() > 3) throw ValidationError("vertex of degree > 3");
  }

  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  for (HexCell cell : cells) {
    Hexagon h;
    h.cell = cell;
    const auto ring = cell_ring(cell);
    bool intact = true;
    for (std::size_t i = 0; i < 6 && intact; ++i) {
      auto idx = vertex_index(ring[i]);
      if (!idx) {
        intact = false;
        break;
      }
      h.ring[i] = *idx;
    }
    for (std::size_t i = 0; i < 6 && intact; ++i) {
      h.edges[i] = edge_between(h.ring[i], h.ring[(i + 1) % 6]);
      if (h.edges[i] < 0) intact = false;
    }
    if (!intact) continue;
    h.right_vertical = h.edges[0];
    h.left_vertical = h.edges[3];
    hexagons_.push_back(h);
    cells_.push_back(cell);
  }

  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (auto p : vertices_) {
    fnv_mix(hash, p.u);
    fnv_mix(hash, p.v);
  }
  for (auto e : edges_) {
    fnv_mix(hash, e.a);
    fnv_mix(hash, e.b);
  }
  fingerprint_ = hash;
}

HexagonalSystem HexagonalSystem::from_cells(std::vector<HexCell> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  if (cells.empty()) throw ValidationError("hexagonal system needs at least one cell");

  // Cell connectivity by BFS over lattice neighbors.
  std::set<HexCell> remaining(cells.begin(), cells.end());
  std::vector<HexCell> component_reps;
  while (!remaining.empty()) {
    const HexCell start = *remaining.begin();
    component_reps.push_back(start);
    std::queue<HexCell> todo;
    todo.push(start);
    remaining.erase(start);
    while (!todo.empty()) {
      const HexCell c = todo.front();
      todo.pop();
      for (int d = 0; d < 6; ++d) {
        auto it = remaining.find(step(c, d));
        if (it != remaining.end()) {
          todo.push(*it);
          remaining.erase(it);
        }
      }
    }
  }
  if (component_reps.size() > 1) {
    std::string msg = "disconnected cell set; cells in different parts:";
    for (HexCell c : component_reps) msg += " " + cell_str(c);
    throw ValidationError(msg);
  }

  std::vector<LatticeVertex> vertices;
  std::vector<std::pair<LatticeVertex, LatticeVertex>> edges;
  for (HexCell c : cells) {
    const auto ring = cell_ring(c);
    for (std::size_t i = 0; i < 6; ++i) {
      vertices.push_back(ring[i]);
      edges.emplace_back(std::min(ring[i], ring[(i + 1) % 6]), std::max(ring[i], ring[(i + 1) % 6]));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  const std::size_t cell_count = cells.size();
  HexagonalSystem system(std::move(cells), std::move(vertices), std::move(edges), false);
  // A hole adds a bounded face that is not a cell, breaking |E| = |V| + #cells - 1.
  if (system.edge_count() != system.vertex_count() + cell_count - 1) system.generalized_ = true;
  return system;
}

std::optional<int> HexagonalSystem::vertex_index(LatticeVertex p) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
  if (it == vertices_.end() || *it != p) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

int HexagonalSystem::edge_between(int a, int b) const {
  auto it = edge_lookup_.find(edge_key(a, b));
  return it == edge_lookup_.end() ? -1 : it->second;
}

std::optional<int> HexagonalSystem::hexagon_index(HexCell cell) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), cell);
  if (it == cells_.end() || *it != cell) return std::nullopt;
  return static_cast<int>(it - cells_.begin());
}

bool HexagonalSystem::is_vertical(int edge) const {
  const Edge e = edges_[static_cast<std::size_t>(edge)];
  const auto p = vertices_[static_cast<std::size_t>(e.a)];
  const auto q = vertices_[static_cast<std::size_t>(e.b)];
  return p.u == q.u && std::abs(p.v - q.v) == 2;
}

std::vector<std::pair<LatticeVertex, LatticeVertex>> HexagonalSystem::edge_coords() const {
  std::vector<std::pair<LatticeVertex, LatticeVertex>> out;
  out.reserve(edges_.size());
  for (auto e : edges_)
    out.emplace_back(vertices_[static_cast<std::size_t>(e.a)], vertices_[static_cast<std::size_t>(e.b)]);
  return out;
}

HexagonalSystem HexagonalSystem::without_vertices(std::span<const int> removed) const {
  std::vector<bool> gone(vertices_.size(), false);
  for (int v : removed) gone.at(static_cast<std::size_t>(v)) = true;
  std::vector<LatticeVertex> vertices;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (!gone[i]) vertices.push_back(vertices_[i]);
  std::vector<std::pair<LatticeVertex, LatticeVertex>> edges;
  for (auto e : edges_) {
    if (gone[static_cast<std::size_t>(e.a)] || gone[static_cast<std::size_t>(e.b)]) continue;
    edges.emplace_back(vertices_[static_cast<std::size_t>(e.a)], vertices_[static_cast<std::size_t>(e.b)]);
  }
  return HexagonalSystem(cells_, std::move(vertices), std::move(edges), true);
}

HexagonalSystem HexagonalSystem::mirrored() const {
  std::vector<HexCell> cells;
  for (HexCell c : cells_) cells.push_back(mirror_cell(c));
  std::vector<LatticeVertex> vertices;
  for (auto p : vertices_) vertices.push_back({-p.u, p.v});
  std::vector<std::pair<LatticeVertex, LatticeVertex>> edges;
  for (auto [p, q] : edge_coords()) edges.emplace_back(LatticeVertex{-p.u, p.v}, LatticeVertex{-q.u, q.v});
  return HexagonalSystem(std::move(cells), std::move(vertices), std::move(edges), generalized_);
}

HexagonalSystem parse_hex_file(std::string_view text) {
  std::vector<HexCell> cells;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::istringstream in{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.size() != 2) throw ParseError("expected two integers \"q r\"", line_no);
    int coords[2];
    for (int i = 0; i < 2; ++i) {
      const auto& tok = tokens[static_cast<std::size_t>(i)];
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), coords[i]);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("not an integer: '" + tok + "'", line_no);
    }
    cells.push_back({coords[0], coords[1]});
    if (end == text.size()) break;
  }
  return HexagonalSystem::from_cells(std::move(cells));
}

std::string serialize_hex(const HexagonalSystem& system) {
  std::string out;
  for (HexCell c : system.cells()) out += std::to_string(c.q) + " " + std::to_string(c.r) + "\n";
  return out;
}

HexagonalSystem delete_hexagon(const HexagonalSystem& system, HexCell hexagon) {
  const HexCell pattern[] = {hexagon};
  return delete_sextet_pattern(system, pattern);
}

HexagonalSystem delete_sextet_pattern(const HexagonalSystem& system,
                                      std::span<const HexCell> pattern) {
  if (pattern.empty()) return system;
  std::vector<int> removed;
  std::set<int> seen;
  for (HexCell cell : pattern) {
    auto idx = system.hexagon_index(cell);
    if (!idx) throw std::invalid_argument("hexagon " + cell_str(cell) + " is not in the system");
    for (int v : system.hexagons()[static_cast<std::size_t>(*idx)].ring) {
      if (!seen.insert(v).second)
        throw std::invalid_argument("sextet pattern hexagons overlap at " + cell_str(cell));
      removed.push_back(v);
    }
  }
  return system.without_vertices(removed);
}

HexagonalSystem random_catafusene(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_cata requires n >= 1");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kRandomRetries; ++attempt) {
    std::vector<HexCell> chain{{0, 0}};
    int dir = 0;
    bool ok = true;
    for (int i = 1; i < n && ok; ++i) {
      if (i > 1) dir = (dir + static_cast<int>(rng() % 3) + 5) % 6;
      const HexCell next = step(chain.back(), dir);
      for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
        if (chain[j] == next || cells_adjacent(chain[j], next)) {
          ok = false;
          break;
        }
      }
      chain.push_back(next);
    }
    if (ok) return HexagonalSystem::from_cells(std::move(chain));
  }
  throw std::runtime_error("random_cata: no self-avoiding chain after " +
                           std::to_string(kRandomRetries) + " retries");
}

std::vector<std::string> fixed_catalog_names() {
  return {"benzene", "naphthalene", "anthracene", "phenanthrene", "triphenylene", "pyrene", "coronene"};
}

HexagonalSystem catalog(std::string_view name, std::optional<int> n, std::uint64_t seed) {
  static const std::map<std::string, std::vector<HexCell>, std::less<>> fixed{
      {"benzene", {{0, 0}}},
      {"naphthalene", {{0, 0}, {1, 0}}},
      {"anthracene", {{0, 0}, {1, 0}, {2, 0}}},
      {"phenanthrene", {{0, 0}, {1, 0}, {1, 1}}},
      {"triphenylene", {{0, 0}, {1, 0}, {-1, 1}, {0, -1}}},
      {"pyrene", {{0, 0}, {1, 0}, {0, 1}, {1, -1}}},
      {"coronene", {{0, 0}, {1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}}},
  };
  if (auto it = fixed.find(name); it != fixed.end()) return HexagonalSystem::from_cells(it->second);

  const bool sized = name == "linear" || name == "zigzag" || name == "random_cata";
  if (!sized) throw std::invalid_argument("unknown catalog name '" + std::string(name) + "'");
  if (!n) throw std::invalid_argument("catalog '" + std::string(name) + "' requires n");
  if (*n < 1) throw std::invalid_argument("catalog n must be positive");

  if (name == "random_cata") return random_catafusene(*n, seed);
  std::vector<HexCell> cells{{0, 0}};
  int dir = 0;
  for (int i = 1; i < *n; ++i) {
    // zigzag alternates the two angular turns, so no cell is linearly annelated
    if (name == "zigzag" && i > 1) dir = (i % 2 == 0) ? 5 : 0;
    cells.push_back(step(cells.back(), dir));
  }
  return HexagonalSystem::from_cells(std::move(cells));
}

}  // namespace clarcube
