#include "clarcube/cube.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "clarcube/errors.hpp"

namespace clarcube {

SimpleGraph::SimpleGraph(std::size_t n, std::span<const std::pair<int, int>> edges) : adjacency_(n) {
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a));
    adjacency_[static_cast<std::size_t>(a)].push_back(b);
    adjacency_[static_cast<std::size_t>(b)].push_back(a);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& nb = adjacency_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::invalid_argument("parallel edge at vertex " + std::to_string(v));
  }
  edge_count_ = edges.size();
}

bool SimpleGraph::adjacent(int a, int b) const {
  const auto& nb = adjacency_[static_cast<std::size_t>(a)];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t v = 0; v < adjacency_.size(); ++v)
    for (int w : adjacency_[v])
      if (static_cast<int>(v) < w) out.emplace_back(static_cast<int>(v), w);
  return out;
}

std::vector<int> SimpleGraph::distances_from(int source) const {
  std::vector<int> dist(adjacency_.size(), -1);
  std::queue<int> todo;
  dist[static_cast<std::size_t>(source)] = 0;
  todo.push(source);
  while (!todo.empty()) {
    const int v = todo.front();
    todo.pop();
    for (int w : neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        todo.push(w);
      }
    }
  }
  return dist;
}

bool SimpleGraph::connected() const {
  if (adjacency_.empty()) return true;
  const auto dist = distances_from(0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool induces_hypercube(const SimpleGraph& g, std::span<const int> vertices, int dim) {
  if (dim < 0 || dim > 30) return false;
  const std::size_t size = std::size_t{1} << dim;
  if (vertices.size() != size) return false;
  std::vector<int> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  const auto local = [&](int v) -> int {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    return (it != sorted.end() && *it == v) ? static_cast<int>(it - sorted.begin()) : -1;
  };

  // Induced adjacency in local ids; every vertex must have degree dim.
  std::vector<std::vector<int>> adj(size);
  for (std::size_t i = 0; i < size; ++i) {
    for (int w : g.neighbors(sorted[i]))
      if (int j = local(w); j >= 0) adj[i].push_back(j);
    if (adj[i].size() != static_cast<std::size_t>(dim)) return false;
  }

  // Label by BFS from vertex 0: neighbors of the root get single bits, every
  // other vertex the union of its predecessors' labels.
  std::vector<int> dist(size, -1);
  std::vector<unsigned> label(size, 0);
  std::vector<int> order{0};
  dist[0] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int v = order[head];
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        order.push_back(w);
      }
    }
  }
  if (order.size() != size) return false;
  int next_bit = 0;
  for (int v : order) {
    if (dist[static_cast<std::size_t>(v)] == 1) {
      label[static_cast<std::size_t>(v)] = 1U << next_bit++;
    } else if (dist[static_cast<std::size_t>(v)] > 1) {
      for (int w : adj[static_cast<std::size_t>(v)])
        if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(v)] - 1)
          label[static_cast<std::size_t>(v)] |= label[static_cast<std::size_t>(w)];
      if (std::popcount(label[static_cast<std::size_t>(v)]) != dist[static_cast<std::size_t>(v)]) return false;
    }
  }
  std::vector<bool> used(size, false);
  for (unsigned l : label) {
    if (l >= size || used[l]) return false;
    used[l] = true;
  }
  for (std::size_t i = 0; i < size; ++i)
    for (int j : adj[i])
      if (std::popcount(label[i] ^ label[static_cast<std::size_t>(j)]) != 1) return false;
  return true;
}

namespace {

// Extends a Q_(d-1) vertex set S across the edge (min S, w) to every
// Q_d candidate S u phi(S) with phi an adjacency-preserving matching.
class CubeExtender {
 public:
  CubeExtender(const SimpleGraph& g, const std::vector<int>& base, int first_image)
      : g_(g), base_(base) {
    const std::size_t n = base_.size();
    image_.assign(n, -1);
    // BFS order inside the induced base cube, rooted at the minimum vertex.
    std::vector<bool> seen(n, false);
    order_.push_back(0);
    seen[0] = true;
    for (std::size_t head = 0; head < order_.size(); ++head) {
      const int v = base_[static_cast<std::size_t>(order_[head])];
      for (int w : g_.neighbors(v)) {
        const int j = local(w);
        if (j >= 0 && !seen[static_cast<std::size_t>(j)]) {
          seen[static_cast<std::size_t>(j)] = true;
          order_.push_back(j);
        }
      }
    }
    image_[0] = first_image;
    used_.insert(first_image);
  }

  template <typename Emit>
  void run(Emit&& emit) {
    if (order_.size() != base_.size()) return;
    extend(1, emit);
  }

 private:
  int local(int v) const {
    auto it = std::lower_bound(base_.begin(), base_.end(), v);
    return (it != base_.end() && *it == v) ? static_cast<int>(it - base_.begin()) : -1;
  }
  bool in_base(int v) const { return local(v) >= 0; }

  template <typename Emit>
  void extend(std::size_t pos, Emit& emit) {
    if (pos == order_.size()) {
      std::vector<int> verts = base_;
      verts.insert(verts.end(), image_.begin(), image_.end());
      std::sort(verts.begin(), verts.end());
      emit(std::move(verts));
      return;
    }
    const int li = order_[pos];
    const int s = base_[static_cast<std::size_t>(li)];
    std::vector<int> mapped_images;
    for (int w : g_.neighbors(s)) {
      const int j = local(w);
      if (j >= 0 && image_[static_cast<std::size_t>(j)] >= 0) mapped_images.push_back(image_[static_cast<std::size_t>(j)]);
    }
    for (int cand : g_.neighbors(s)) {
      if (in_base(cand) || used_.count(cand)) continue;
      bool ok = true;
      for (int m : mapped_images)
        if (!g_.adjacent(cand, m)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      image_[static_cast<std::size_t>(li)] = cand;
      used_.insert(cand);
      extend(pos + 1, emit);
      used_.erase(cand);
      image_[static_cast<std::size_t>(li)] = -1;
    }
  }

  const SimpleGraph& g_;
  const std::vector<int>& base_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::set<int> used_;
};

}  // namespace

HypercubeLevels enumerate_induced_hypercubes(const SimpleGraph& g, std::size_t cap) {
  HypercubeLevels levels;
  std::size_t total = 0;
  const auto bump = [&](std::size_t k) {
    total += k;
    if (total > cap) throw ResourceLimitError("induced hypercube enumeration exceeded cap", cap);
  };

  if (g.vertex_count() == 0) return levels;
  levels.emplace_back();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) levels[0].push_back({{static_cast<int>(v)}, 0});
  bump(levels[0].size());

  std::vector<HypercubeEmbedding> edges;
  for (auto [a, b] : g.edges()) edges.push_back({{a, b}, 1});
  if (edges.empty()) return levels;
  bump(edges.size());
  levels.push_back(std::move(edges));

  for (int dim = 2;; ++dim) {
    std::set<std::vector<int>> found;
    for (const auto& cube : levels[static_cast<std::size_t>(dim - 1)]) {
      const int root = cube.vertices.front();
      for (int w : g.neighbors(root)) {
        if (std::binary_search(cube.vertices.begin(), cube.vertices.end(), w)) continue;
        CubeExtender(g, cube.vertices, w).run([&](std::vector<int> verts) {
          if (found.count(verts)) return;
          if (!induces_hypercube(g, verts, dim)) return;
          found.insert(std::move(verts));
          bump(1);
        });
      }
    }
    if (found.empty()) break;
    std::vector<HypercubeEmbedding> level;
    level.reserve(found.size());
    for (const auto& verts : found) level.push_back({verts, dim});
    levels.push_back(std::move(level));
  }
  return levels;
}

IntPolynomial cube_polynomial(const HypercubeLevels& levels) {
  std::vector<std::size_t> counts;
  for (const auto& level : levels) counts.push_back(level.size());
  return IntPolynomial::from_counts(counts);
}

IntPolynomial cube_polynomial(const SimpleGraph& g, std::size_t cap) {
  return cube_polynomial(enumerate_induced_hypercubes(g, cap));
}

std::vector<HypercubeEmbedding> maximal_hypercubes(const HypercubeLevels& levels) {
  std::vector<HypercubeEmbedding> out;
  for (std::size_t d = 0; d < levels.size(); ++d) {
    if (d + 1 == levels.size()) {
      out.insert(out.end(), levels[d].begin(), levels[d].end());
      break;
    }
    // A cube below a larger one is always a facet of some cube one level up.
    std::map<int, std::vector<const HypercubeEmbedding*>> by_vertex;
    for (const auto& up : levels[d + 1])
      for (int v : up.vertices) by_vertex[v].push_back(&up);
    for (const auto& cube : levels[d]) {
      bool covered = false;
      if (auto it = by_vertex.find(cube.vertices.front()); it != by_vertex.end()) {
        for (const auto* up : it->second) {
          if (std::includes(up->vertices.begin(), up->vertices.end(), cube.vertices.begin(),
                            cube.vertices.end())) {
            covered = true;
            break;
          }
        }
      }
      if (!covered) out.push_back(cube);
    }
  }
  return out;
}

std::vector<HypercubeEmbedding> maximal_hypercubes(const SimpleGraph& g, std::size_t cap) {
  return maximal_hypercubes(enumerate_induced_hypercubes(g, cap));
}

MedianCheck is_median_graph(const SimpleGraph& g, std::size_t max_vertices) {
  const std::size_t n = g.vertex_count();
  if (n > max_vertices)
    throw ResourceLimitError("median check: graph has " + std::to_string(n) + " vertices", max_vertices);
  if (!g.connected()) throw ValidationError("median check requires a connected graph");

  std::vector<std::vector<int>> dist(n);
  for (std::size_t v = 0; v < n; ++v) dist[v] = g.distances_from(static_cast<int>(v));

  // Interval I(a,b) as a bitset, stored for a < b.
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> interval(n * n * words, 0);
  const auto slot = [&](std::size_t a, std::size_t b) { return (a * n + b) * words; };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t x = 0; x < n; ++x)
        if (dist[a][x] + dist[x][b] == dist[a][b]) interval[slot(a, b) + x / 64] |= std::uint64_t{1} << (x % 64);

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        std::size_t medians = 0;
        for (std::size_t w = 0; w < words; ++w)
          medians += static_cast<std::size_t>(
              std::popcount(interval[slot(a, b) + w] & interval[slot(a, c) + w] & interval[slot(b, c) + w]));
        if (medians != 1)
          return {false, std::array<int, 3>{static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)}};
      }
    }
  }
  return {true, std::nullopt};
}

std::vector<unsigned> fibonacci_strings(int n) {
  std::vector<unsigned> out;
  for (unsigned x = 0; x < (1U << n); ++x)
    if ((x & (x >> 1)) == 0) out.push_back(x);
  return out;
}

SimpleGraph fibonacci_cube(int n, int max_n) {
  if (n < 0) throw std::invalid_argument("fibonacci_cube: n must be >= 0");
  if (n > max_n) throw ResourceLimitError("fibonacci_cube: n = " + std::to_string(n) + " too large",
                                          static_cast<std::size_t>(max_n));
  const auto strings = fibonacci_strings(n);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < strings.size(); ++i) {
    for (int bit = 0; bit < n; ++bit) {
      const unsigned other = strings[i] ^ (1U << bit);
      if (other < strings[i]) continue;
      auto it = std::lower_bound(strings.begin(), strings.end(), other);
      if (it != strings.end() && *it == other)
        edges.emplace_back(static_cast<int>(i), static_cast<int>(it - strings.begin()));
    }
  }
  return SimpleGraph(strings.size(), edges);
}

SimpleGraph hypercube_graph(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("hypercube_graph: n out of range");
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < (1 << n); ++x)
    for (int bit = 0; bit < n; ++bit)
      if (!(x & (1 << bit))) edges.emplace_back(x, x | (1 << bit));
  return SimpleGraph(std::size_t{1} << n, edges);
}

namespace {

// Color refinement run on the disjoint union so both graphs share a palette.
std::pair<std::vector<int>, std::vector<int>> refine_colors(const SimpleGraph& a, const SimpleGraph& b) {
  const std::size_t na = a.vertex_count();
  const std::size_t n = na + b.vertex_count();
  const auto nbrs = [&](std::size_t v) {
    std::vector<std::size_t> out;
    if (v < na) {
      for (int w : a.neighbors(static_cast<int>(v))) out.push_back(static_cast<std::size_t>(w));
    } else {
      for (int w : b.neighbors(static_cast<int>(v - na))) out.push_back(na + static_cast<std::size_t>(w));
    }
    return out;
  };
  std::vector<int> color(n, 0);
  std::size_t classes = 1;
  for (;;) {
    std::map<std::pair<int, std::vector<int>>, int> palette;
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<int> nc;
      for (auto w : nbrs(v)) nc.push_back(color[w]);
      std::sort(nc.begin(), nc.end());
      sig[v] = {color[v], std::move(nc)};
      palette.emplace(sig[v], 0);
    }
    int next = 0;
    for (auto& [key, id] : palette) id = next++;
    std::vector<int> refined(n);
    for (std::size_t v = 0; v < n; ++v) refined[v] = palette[sig[v]];
    color = std::move(refined);
    if (palette.size() == classes) break;
    classes = palette.size();
  }
  return {std::vector<int>(color.begin(), color.begin() + static_cast<long>(na)),
          std::vector<int>(color.begin() + static_cast<long>(na), color.end())};
}

class IsoSearch {
 public:
  IsoSearch(const SimpleGraph& a, const SimpleGraph& b, std::vector<int> ca, std::vector<int> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)),
        map_(a.vertex_count(), -1), inv_(b.vertex_count(), -1) {}

  bool run() { return extend(0); }

 private:
  // Next vertex: most already-mapped neighbors, then rarest color.
  int pick() const {
    int best = -1;
    long best_score = -1;
    for (std::size_t v = 0; v < map_.size(); ++v) {
      if (map_[v] >= 0) continue;
      long mapped = 0;
      for (int w : a_.neighbors(static_cast<int>(v)))
        if (map_[static_cast<std::size_t>(w)] >= 0) ++mapped;
      const long score = mapped * 1'000'000 - static_cast<long>(v);
      if (score > best_score) {
        best_score = score;
        best = static_cast<int>(v);
      }
    }
    return best;
  }

  bool consistent(int v, int c) const {
    for (int w : a_.neighbors(v)) {
      const int img = map_[static_cast<std::size_t>(w)];
      if (img >= 0 && !b_.adjacent(c, img)) return false;
    }
    for (int x : b_.neighbors(c)) {
      const int pre = inv_[static_cast<std::size_t>(x)];
      if (pre >= 0 && !a_.adjacent(v, pre)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == map_.size()) return true;
    const int v = pick();
    for (std::size_t c = 0; c < inv_.size(); ++c) {
      if (inv_[c] >= 0 || cb_[c] != ca_[static_cast<std::size_t>(v)]) continue;
      if (!consistent(v, static_cast<int>(c))) continue;
      map_[static_cast<std::size_t>(v)] = static_cast<int>(c);
      inv_[c] = v;
      if (extend(depth + 1)) return true;
      map_[static_cast<std::size_t>(v)] = -1;
      inv_[c] = -1;
    }
    return false;
  }

  const SimpleGraph& a_;
  const SimpleGraph& b_;
  std::vector<int> ca_, cb_;
  std::vector<int> map_, inv_;
};

}  // namespace

bool graph_isomorphic(const SimpleGraph& a, const SimpleGraph& b, std::size_t max_vertices) {
  if (a.vertex_count() > max_vertices || b.vertex_count() > max_vertices)
    throw ResourceLimitError("graph isomorphism input too large", max_vertices);
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;

  auto [ca, cb] = refine_colors(a, b);
  auto ha = ca, hb = cb;
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  if (ha != hb) return false;
  return IsoSearch(a, b, std::move(ca), std::move(cb)).run();
}

}  // namespace clarcube
