#pragma once

// Slow reference implementations that work straight from the definitions.
// They share no search code with the library and are only usable on small
// inputs.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

#include "clarcube/cube.hpp"
#include "clarcube/hexsys.hpp"

namespace oracle {

using clarcube::HexagonalSystem;

inline std::vector<std::pair<int, int>> edge_list(const HexagonalSystem& h) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : h.edges()) out.emplace_back(e.a, e.b);
  return out;
}

// Every subset of |V|/2 edges that touches each vertex once.
inline std::vector<std::vector<int>> perfect_matchings(const HexagonalSystem& h) {
  const auto edges = edge_list(h);
  const std::size_t nv = h.vertex_count();
  std::vector<std::vector<int>> found;
  if (nv % 2) return found;
  const std::size_t k = nv / 2;
  const std::size_t ne = edges.size();
  if (k > ne) return found;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  if (k == 0) return {{}};
  while (true) {
    std::vector<int> used(nv, 0);
    bool ok = true;
    for (int e : pick) {
      if (used[edges[e].first]++ || used[edges[e].second]++) {
        ok = false;
        break;
      }
    }
    if (ok) found.push_back(pick);
    // next combination
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && pick[i] == static_cast<int>(ne - k) + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return found;
}

// Clar covers as spanning subgraphs: every edge subset whose components are
// single edges or hexagon faces. Result maps hexagon count to cover count.
// Exponential in |E|; meant for |E| <= 22.
inline std::map<int, std::uint64_t> clar_cover_counts(const HexagonalSystem& h) {
  const auto edges = edge_list(h);
  const std::size_t ne = edges.size();
  const std::size_t nv = h.vertex_count();
  std::set<std::vector<int>> faces;
  for (const auto& hex : h.hexagons()) {
    std::vector<int> ring(hex.ring.begin(), hex.ring.end());
    std::sort(ring.begin(), ring.end());
    faces.insert(ring);
  }
  std::map<int, std::uint64_t> counts;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ne); ++mask) {
    std::vector<std::vector<int>> adj(nv);
    for (std::size_t e = 0; e < ne; ++e) {
      if (mask >> e & 1) {
        adj[edges[e].first].push_back(edges[e].second);
        adj[edges[e].second].push_back(edges[e].first);
      }
    }
    bool ok = true;
    for (std::size_t v = 0; v < nv && ok; ++v) ok = adj[v].size() == 1 || adj[v].size() == 2;
    if (!ok) continue;
    std::vector<bool> seen(nv, false);
    int hexes = 0;
    for (std::size_t s = 0; s < nv && ok; ++s) {
      if (seen[s]) continue;
      std::vector<int> comp;
      std::vector<int> stack{static_cast<int>(s)};
      seen[s] = true;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        for (int w : adj[v])
          if (!seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
      }
      std::sort(comp.begin(), comp.end());
      if (comp.size() == 2) {
        ok = adj[comp[0]].size() == 1;
      } else if (comp.size() == 6) {
        ok = faces.count(comp) && std::all_of(comp.begin(), comp.end(), [&](int v) { return adj[v].size() == 2; });
        ++hexes;
      } else {
        ok = false;
      }
    }
    if (ok) ++counts[hexes];
  }
  return counts;
}

// Sets of pairwise disjoint hexagons whose complement has a perfect matching.
inline std::map<int, std::uint64_t> sextet_counts(const HexagonalSystem& h) {
  const auto& hexes = h.hexagons();
  std::map<int, std::uint64_t> counts;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << hexes.size()); ++mask) {
    std::vector<int> removed;
    std::vector<int> cover(h.vertex_count(), 0);
    bool disjoint = true;
    for (std::size_t i = 0; i < hexes.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      for (int v : hexes[i].ring) {
        if (cover[v]++) disjoint = false;
        removed.push_back(v);
      }
    }
    if (!disjoint) continue;
    const auto rest = h.without_vertices(removed);
    if (!perfect_matchings(rest).empty()) ++counts[std::popcount(mask)];
  }
  return counts;
}

inline std::vector<int> bfs(const std::vector<std::vector<int>>& adj, int s) {
  std::vector<int> d(adj.size(), -1);
  std::queue<int> q;
  d[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (d[w] < 0) {
        d[w] = d[v] + 1;
        q.push(w);
      }
  }
  return d;
}

inline std::vector<std::vector<int>> adjacency(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

// Every triple has exactly one vertex on a geodesic between each pair.
inline bool is_median(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  const auto adj = adjacency(n, edges);
  std::vector<std::vector<int>> d;
  for (std::size_t v = 0; v < n; ++v) d.push_back(bfs(adj, static_cast<int>(v)));
  if (n == 0 || std::count(d[0].begin(), d[0].end(), -1)) return false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        int medians = 0;
        for (std::size_t m = 0; m < n; ++m)
          medians += d[a][m] + d[m][b] == d[a][b] && d[b][m] + d[m][c] == d[b][c] && d[a][m] + d[m][c] == d[a][c];
        if (medians != 1) return false;
      }
  return true;
}

// Induced subgraphs isomorphic to Q_d, found by checking every vertex subset
// of size 2^d against every bijection to {0,1}^d. Returns counts per d.
inline std::vector<std::uint64_t> hypercube_counts(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  std::set<std::pair<int, int>> eset;
  for (auto [a, b] : edges) eset.insert({std::min(a, b), std::max(a, b)});
  auto adjacent = [&](int a, int b) { return eset.count({std::min(a, b), std::max(a, b)}) > 0; };
  std::vector<std::uint64_t> counts;
  for (int d = 0; (std::size_t{1} << d) <= n; ++d) {
    const std::size_t size = std::size_t{1} << d;
    std::uint64_t found = 0;
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      // degree filter before the permutation search
      bool plausible = true;
      for (int v : pick) {
        int deg = 0;
        for (int w : pick) deg += v != w && adjacent(v, w);
        if (deg != d) plausible = false;
      }
      if (plausible) {
        std::vector<int> perm = pick;
        bool iso = false;
        do {
          bool ok = true;
          for (std::size_t x = 0; x < size && ok; ++x)
            for (std::size_t y = x + 1; y < size && ok; ++y)
              ok = adjacent(perm[x], perm[y]) == (std::popcount(x ^ y) == 1);
          iso = ok;
        } while (!iso && std::next_permutation(perm.begin(), perm.end()));
        found += iso;
      }
      int i = static_cast<int>(size) - 1;
      while (i >= 0 && pick[i] == static_cast<int>(n - size) + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (std::size_t j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (found == 0) break;
    counts.push_back(found);
  }
  return counts;
}

}  // namespace oracle
