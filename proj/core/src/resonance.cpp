#include "clarcube/resonance.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

#include "clarcube/errors.hpp"

namespace clarcube {

namespace {

std::string cell_label(const HexagonalSystem& system, int hexagon) {
  const HexCell c = system.hexagons()[static_cast<std::size_t>(hexagon)].cell;
  return "(" + std::to_string(c.q) + "," + std::to_string(c.r) + ")";
}

}  // namespace

int ResonanceGraph::neighbor_via(int vertex, int hexagon) const {
  for (const auto& n : adjacency[static_cast<std::size_t>(vertex)])
    if (n.hexagon == hexagon) return n.vertex;
  return -1;
}

std::optional<int> ResonanceGraph::edge_label(int a, int b) const {
  for (const auto& n : adjacency[static_cast<std::size_t>(a)])
    if (n.vertex == b) return n.hexagon;
  return std::nullopt;
}

SimpleGraph ResonanceGraph::to_simple_graph() const {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(edges.size());
  for (const auto& e : edges) pairs.emplace_back(e.a, e.b);
  return SimpleGraph(vertex_count(), pairs);
}

ResonanceGraph build_resonance_graph(const HexagonalSystem& system, std::size_t cap) {
  ResonanceGraph graph;
  graph.matchings = enumerate_perfect_matchings(system, cap);
  graph.adjacency.assign(graph.matchings.size(), {});

  std::unordered_map<EdgeSet, int, EdgeSetHash> index;
  for (const auto& m : graph.matchings) index.emplace(m.edges, m.id);
  std::vector<EdgeSet> hex_edges;
  for (std::size_t h = 0; h < system.hexagons().size(); ++h)
    hex_edges.push_back(hexagon_edge_set(system, static_cast<int>(h)));

  // Flip each alternating hexagon instead of comparing all pairs.
  for (const auto& m : graph.matchings) {
    for (const auto& alt : alternating_hexagons(system, m.edges)) {
      auto it = index.find(m.edges ^ hex_edges[static_cast<std::size_t>(alt.hexagon)]);
      if (it == index.end())
        throw VerificationError("flipping an alternating hexagon left the matching set");
      graph.adjacency[static_cast<std::size_t>(m.id)].push_back({it->second, alt.hexagon});
      if (m.id < it->second) graph.edges.push_back({m.id, it->second, alt.hexagon});
    }
  }
  for (auto& nb : graph.adjacency)
    std::sort(nb.begin(), nb.end(), [](const auto& x, const auto& y) { return x.vertex < y.vertex; });
  std::sort(graph.edges.begin(), graph.edges.end());
  return graph;
}

std::vector<std::vector<int>> DirectedResonanceGraph::out_neighbors() const {
  std::vector<std::vector<int>> out(vertex_count);
  for (const auto& a : arcs) out[static_cast<std::size_t>(a.from)].push_back(a.to);
  for (auto& o : out) std::sort(o.begin(), o.end());
  return out;
}

std::vector<std::size_t> DirectedResonanceGraph::in_degrees() const {
  std::vector<std::size_t> in(vertex_count, 0);
  for (const auto& a : arcs) ++in[static_cast<std::size_t>(a.to)];
  return in;
}

DirectedResonanceGraph orient(const HexagonalSystem& system, const ResonanceGraph& graph) {
  DirectedResonanceGraph out;
  out.vertex_count = graph.vertex_count();
  for (const auto& e : graph.edges) {
    const auto ka = classify_hexagon(system, graph.matchings[static_cast<std::size_t>(e.a)].edges, e.hexagon);
    const auto kb = classify_hexagon(system, graph.matchings[static_cast<std::size_t>(e.b)].edges, e.hexagon);
    if (!ka || !kb || *ka == *kb)
      throw VerificationError("edge m" + std::to_string(e.a) + "-m" + std::to_string(e.b) +
                              " has no consistent sextet orientation");
    if (*ka == SextetClass::Proper) {
      out.arcs.push_back({e.a, e.b, e.hexagon});
    } else {
      out.arcs.push_back({e.b, e.a, e.hexagon});
    }
  }
  std::sort(out.arcs.begin(), out.arcs.end());
  return out;
}

std::optional<std::vector<int>> find_directed_cycle(const DirectedResonanceGraph& graph) {
  const auto out = graph.out_neighbors();
  const std::size_t n = graph.vertex_count;
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<int> parent(n, -1);
  for (std::size_t root = 0; root < n; ++root) {
    if (state[root]) continue;
    // Iterative DFS with explicit edge cursors.
    std::vector<std::pair<int, std::size_t>> stack{{static_cast<int>(root), 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, cursor] = stack.back();
      const auto& nb = out[static_cast<std::size_t>(v)];
      if (cursor == nb.size()) {
        state[static_cast<std::size_t>(v)] = 2;
        stack.pop_back();
        continue;
      }
      const int w = nb[cursor++];
      if (state[static_cast<std::size_t>(w)] == 1) {
        std::vector<int> cycle{w};
        for (int x = v; x != w; x = parent[static_cast<std::size_t>(x)]) cycle.push_back(x);
        std::reverse(cycle.begin() + 1, cycle.end());
        return cycle;
      }
      if (state[static_cast<std::size_t>(w)] == 0) {
        state[static_cast<std::size_t>(w)] = 1;
        parent[static_cast<std::size_t>(w)] = v;
        stack.emplace_back(w, 0);
      }
    }
  }
  return std::nullopt;
}

std::vector<int> assert_acyclic(const DirectedResonanceGraph& graph) {
  const auto out = graph.out_neighbors();
  auto in = graph.in_degrees();
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (std::size_t v = 0; v < graph.vertex_count; ++v)
    if (in[v] == 0) ready.push(static_cast<int>(v));
  std::vector<int> order;
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int w : out[static_cast<std::size_t>(v)])
      if (--in[static_cast<std::size_t>(w)] == 0) ready.push(w);
  }
  if (order.size() != graph.vertex_count) {
    auto cycle = find_directed_cycle(graph);
    throw CycleFoundError(cycle.value_or(std::vector<int>{}));
  }
  return order;
}

std::string to_dot(const HexagonalSystem& system, const ResonanceGraph& graph) {
  std::ostringstream os;
  os << "graph resonance {\n";
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) os << "  m" << v << ";\n";
  for (const auto& e : graph.edges)
    os << "  m" << e.a << " -- m" << e.b << " [label=\"" << cell_label(system, e.hexagon) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const HexagonalSystem& system, const DirectedResonanceGraph& graph) {
  std::ostringstream os;
  os << "digraph resonance {\n";
  for (std::size_t v = 0; v < graph.vertex_count; ++v) os << "  m" << v << ";\n";
  for (const auto& a : graph.arcs)
    os << "  m" << a.from << " -> m" << a.to << " [label=\"" << cell_label(system, a.hexagon) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string export_dot(const std::string& dot, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << dot;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
  return dot;
}

HypercubeLevels enumerate_hypercubes_from_sources(const ResonanceGraph& graph,
                                                  const DirectedResonanceGraph& oriented,
                                                  std::size_t cap) {
  std::vector<std::vector<int>> out_labels(graph.vertex_count());
  for (const auto& a : oriented.arcs) out_labels[static_cast<std::size_t>(a.from)].push_back(a.hexagon);

  HypercubeLevels levels;
  std::size_t total = 0;
  for (std::size_t source = 0; source < graph.vertex_count(); ++source) {
    const auto& labels = out_labels[source];
    if (labels.size() >= 31) throw ResourceLimitError("source out-degree too large", 30);
    const unsigned subsets = 1U << labels.size();
    // vertex_of[J] = source with the sextets in J flipped.
    std::vector<int> vertex_of(subsets, -1);
    vertex_of[0] = static_cast<int>(source);
    for (unsigned j = 1; j < subsets; ++j) {
      const unsigned low = static_cast<unsigned>(std::countr_zero(j));
      const int from = vertex_of[j & (j - 1)];
      vertex_of[j] = graph.neighbor_via(from, labels[low]);
      if (vertex_of[j] < 0)
        throw VerificationError("m" + std::to_string(source) + ": proper sextets do not span a cube");
    }
    for (unsigned chosen = 0; chosen < subsets; ++chosen) {
      const int dim = std::popcount(chosen);
      std::vector<int> verts;
      // Enumerate the submasks of `chosen`.
      for (unsigned sub = chosen;; sub = (sub - 1) & chosen) {
        verts.push_back(vertex_of[sub]);
        if (sub == 0) break;
      }
      std::sort(verts.begin(), verts.end());
      if (levels.size() <= static_cast<std::size_t>(dim)) levels.resize(static_cast<std::size_t>(dim) + 1);
      levels[static_cast<std::size_t>(dim)].push_back({std::move(verts), dim});
      if (++total > cap) throw ResourceLimitError("source hypercube enumeration exceeded cap", cap);
    }
  }
  for (auto& level : levels) std::sort(level.begin(), level.end());
  return levels;
}

}  // namespace clarcube
