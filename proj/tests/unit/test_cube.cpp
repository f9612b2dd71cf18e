#include <gtest/gtest.h>

#include <random>

#include "clarcube/cube.hpp"
#include "clarcube/errors.hpp"
#include "clarcube/resonance.hpp"
#include "oracles/oracles.hpp"

using namespace clarcube;

namespace {

using Edges = std::vector<std::pair<int, int>>;

SimpleGraph make(std::size_t n, const Edges& e) { return SimpleGraph(n, e); }
SimpleGraph path(int n) {
  Edges e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make(n, e);
}
SimpleGraph cycle(int n) {
  Edges e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return make(n, e);
}

std::vector<std::uint64_t> level_sizes(const HypercubeLevels& levels) {
  std::vector<std::uint64_t> out;
  for (const auto& l : levels) out.push_back(l.size());
  return out;
}

// Random connected graph: a spanning tree plus extra edges.
SimpleGraph random_graph(std::mt19937& rng, int n, int extra) {
  std::set<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) e.insert({static_cast<int>(rng() % v), v});
  for (int i = 0; i < extra; ++i) {
    int a = rng() % n, b = rng() % n;
    if (a != b) e.insert({std::min(a, b), std::max(a, b)});
  }
  return make(n, Edges(e.begin(), e.end()));
}

}  // namespace

TEST(Cube, SmallGraphs) {
  EXPECT_EQ(level_sizes(enumerate_induced_hypercubes(make(1, {}))), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(level_sizes(enumerate_induced_hypercubes(cycle(4))), (std::vector<std::uint64_t>{4, 4, 1}));
  EXPECT_EQ(level_sizes(enumerate_induced_hypercubes(hypercube_graph(3))), (std::vector<std::uint64_t>{8, 12, 6, 1}));
  EXPECT_EQ(cube_polynomial(make(2, {{0, 1}})), (IntPolynomial{2, 1}));
  EXPECT_EQ(cube_polynomial(hypercube_graph(3)), (IntPolynomial{2, 1} * IntPolynomial{2, 1} * IntPolynomial{2, 1}));
  // K_{1,3} with an extra vertex: no squares
  EXPECT_EQ(cube_polynomial(make(4, {{0, 1}, {0, 2}, {0, 3}})), (IntPolynomial{4, 3}));
}

TEST(Cube, ResonanceGolden) {
  EXPECT_EQ(cube_polynomial(build_resonance_graph(catalog("pyrene")).to_simple_graph()), (IntPolynomial{6, 6, 1}));
  EXPECT_EQ(cube_polynomial(build_resonance_graph(catalog("coronene")).to_simple_graph()),
            (IntPolynomial{20, 32, 15, 2}));
}

TEST(Cube, AgreesWithSubsetOracle) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 9);
    const auto g = random_graph(rng, n, static_cast<int>(rng() % 12));
    EXPECT_EQ(level_sizes(enumerate_induced_hypercubes(g)), oracle::hypercube_counts(n, g.edges()));
  }
  for (const char* name : {"pyrene", "triphenylene", "coronene", "phenanthrene"}) {
    const auto g = build_resonance_graph(catalog(name)).to_simple_graph();
    EXPECT_EQ(level_sizes(enumerate_induced_hypercubes(g)), oracle::hypercube_counts(g.vertex_count(), g.edges()))
        << name;
  }
  // C6 has no square even though it has 4-vertex paths
  EXPECT_EQ(level_sizes(enumerate_induced_hypercubes(cycle(6))), oracle::hypercube_counts(6, cycle(6).edges()));
  // K4 minus nothing: 4-cycles exist but are not induced
  const auto k4 = make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(level_sizes(enumerate_induced_hypercubes(k4)), (std::vector<std::uint64_t>{4, 6}));
}

TEST(Cube, EmbeddingsAreInduced) {
  const auto g = hypercube_graph(4);
  for (const auto& level : enumerate_induced_hypercubes(g))
    for (const auto& c : level) {
      EXPECT_TRUE(std::is_sorted(c.vertices.begin(), c.vertices.end()));
      EXPECT_TRUE(induces_hypercube(g, c.vertices, c.dim));
    }
  const std::vector<int> not_square{0, 1, 2, 4};
  EXPECT_FALSE(induces_hypercube(g, not_square, 2));
}

TEST(Cube, Maximal) {
  EXPECT_EQ(maximal_hypercubes(make(2, {{0, 1}})).size(), 1U);
  const auto p3 = maximal_hypercubes(path(3));
  EXPECT_EQ(p3.size(), 2U);
  for (const auto& c : p3) EXPECT_EQ(c.dim, 1);
  const auto c4 = maximal_hypercubes(cycle(4));
  ASSERT_EQ(c4.size(), 1U);
  EXPECT_EQ(c4[0].dim, 2);
}

TEST(Cube, Median) {
  EXPECT_TRUE(is_median_graph(path(3)).is_median);
  const auto k3 = is_median_graph(cycle(3));
  EXPECT_FALSE(k3.is_median);
  ASSERT_TRUE(k3.witness);
  auto w = *k3.witness;
  std::sort(w.begin(), w.end());
  EXPECT_EQ(w, (std::array<int, 3>{0, 1, 2}));
  EXPECT_FALSE(is_median_graph(cycle(6)).is_median);
  EXPECT_TRUE(is_median_graph(hypercube_graph(3)).is_median);
  EXPECT_THROW(is_median_graph(make(2, {})), ValidationError);
  EXPECT_THROW(is_median_graph(hypercube_graph(9), 300), ResourceLimitError);

  std::mt19937 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const auto g = random_graph(rng, n, static_cast<int>(rng() % 5));
    EXPECT_EQ(is_median_graph(g).is_median, oracle::is_median(n, g.edges()));
  }
  for (int n = 1; n <= 7; ++n) {
    const auto g = fibonacci_cube(n);
    EXPECT_TRUE(oracle::is_median(g.vertex_count(), g.edges()));
    EXPECT_TRUE(is_median_graph(g).is_median);
  }
}

TEST(Cube, Fibonacci) {
  const auto g1 = fibonacci_cube(1);
  EXPECT_EQ(g1.vertex_count(), 2U);
  EXPECT_EQ(g1.edge_count(), 1U);
  const auto g3 = fibonacci_cube(3);
  EXPECT_EQ(g3.vertex_count(), 5U);
  EXPECT_EQ(g3.edge_count(), 5U);
  const auto g4 = fibonacci_cube(4);
  EXPECT_EQ(g4.vertex_count(), 8U);
  EXPECT_EQ(g4.edge_count(), 10U);
  EXPECT_EQ(cube_polynomial(g4), (IntPolynomial{8, 10, 3}));
  for (unsigned s : fibonacci_strings(6)) EXPECT_EQ(s & (s >> 1), 0U);
  EXPECT_EQ(fibonacci_cube(0).vertex_count(), 1U);
  EXPECT_THROW(fibonacci_cube(21), ResourceLimitError);
  EXPECT_TRUE(enumerate_induced_hypercubes(make(0, {})).empty());
}

TEST(Cube, Isomorphism) {
  EXPECT_TRUE(graph_isomorphic(make(2, {{0, 1}}), fibonacci_cube(1)));
  EXPECT_FALSE(graph_isomorphic(path(3), cycle(3)));
  EXPECT_TRUE(graph_isomorphic(build_resonance_graph(catalog("zigzag", 4)).to_simple_graph(), fibonacci_cube(4)));
  EXPECT_FALSE(graph_isomorphic(build_resonance_graph(catalog("linear", 4)).to_simple_graph(), fibonacci_cube(3)));
  // same degree sequence, different graphs: C6 vs two triangles
  const auto two_triangles = make(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_FALSE(graph_isomorphic(cycle(6), two_triangles));

  // relabelled copies
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 10);
    const auto g = random_graph(rng, n, static_cast<int>(rng() % 10));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Edges e;
    for (auto [a, b] : g.edges()) e.emplace_back(perm[a], perm[b]);
    EXPECT_TRUE(graph_isomorphic(g, make(n, e)));
  }
}

TEST(Cube, GraphValidation) {
  EXPECT_THROW(make(2, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(make(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(make(2, {{0, 2}}), std::invalid_argument);
}

TEST(Cube, Cap) { EXPECT_THROW(enumerate_induced_hypercubes(hypercube_graph(5), 50), ResourceLimitError); }
