#include <gtest/gtest.h>

#include "clarcube/bijection.hpp"
#include "clarcube/errors.hpp"
#include "oracles/oracles.hpp"

using namespace clarcube;

namespace {

void expect_all_pass(const VerificationReport& r) {
  for (const auto& c : r.to_json()["checks"]) EXPECT_TRUE(c["pass"].get<bool>()) << c.dump();
  EXPECT_TRUE(r.passed());
}

const CheckResult& check(const VerificationReport& r, const std::string& name) {
  const auto* c = r.find(name);
  if (!c) throw std::runtime_error("missing check " + name);
  return *c;
}

std::vector<ClarCover> flat(const ClarCoverLevels& levels) {
  std::vector<ClarCover> out;
  for (const auto& l : levels) out.insert(out.end(), l.begin(), l.end());
  return out;
}

}  // namespace

TEST(Bijection, ForwardExamples) {
  const auto benzene = catalog("benzene");
  const auto g = build_resonance_graph(benzene);
  const auto covers = enumerate_clar_covers(benzene);
  const auto img = clar_cover_to_hypercube(benzene, g, covers[1][0]);
  EXPECT_EQ(img.vertices, (std::vector<int>{0, 1}));
  EXPECT_EQ(img.dim, 1);
  for (const auto& m : covers[0]) {
    const auto single = clar_cover_to_hypercube(benzene, g, m);
    ASSERT_EQ(single.vertices.size(), 1U);
    EXPECT_EQ(g.matchings[single.vertices[0]].edges, m.isolated_edges);
  }

  const auto pyrene = catalog("pyrene");
  const auto pg = build_resonance_graph(pyrene);
  const auto two = enumerate_clar_covers(pyrene)[2][0];
  const auto sq = clar_cover_to_hypercube(pyrene, pg, two);
  EXPECT_EQ(sq.vertices.size(), 4U);
  EXPECT_TRUE(induces_hypercube(pg.to_simple_graph(), sq.vertices, 2));

  auto bad = two;
  bad.hexagons.pop_back();
  EXPECT_THROW(clar_cover_to_hypercube(pyrene, pg, bad), std::invalid_argument);
}

TEST(Bijection, InverseExamples) {
  const auto benzene = catalog("benzene");
  const auto g = build_resonance_graph(benzene);
  const auto sextet = hypercube_to_clar_cover(benzene, g, {{0, 1}, 1});
  EXPECT_EQ(sextet, enumerate_clar_covers(benzene)[1][0]);
  for (const auto& m : g.matchings) {
    const auto c = hypercube_to_clar_cover(benzene, g, {{m.id}, 0});
    EXPECT_TRUE(c.hexagons.empty());
    EXPECT_EQ(c.isolated_edges, m.edges);
  }

  const auto pyrene = catalog("pyrene");
  const auto pg = build_resonance_graph(pyrene);
  const auto cubes = enumerate_induced_hypercubes(pg.to_simple_graph());
  ASSERT_EQ(cubes.size(), 3U);
  ASSERT_EQ(cubes[2].size(), 1U);
  EXPECT_EQ(hypercube_to_clar_cover(pyrene, pg, cubes[2][0]), enumerate_clar_covers(pyrene)[2][0]);

  // two non-adjacent matchings: both are sources
  const auto n = catalog("anthracene");
  const auto ng = build_resonance_graph(n);
  int a = -1, b = -1;
  for (std::size_t x = 0; x < ng.vertex_count() && a < 0; ++x)
    for (std::size_t y = x + 1; y < ng.vertex_count(); ++y)
      if (!ng.edge_label(static_cast<int>(x), static_cast<int>(y))) {
        a = static_cast<int>(x);
        b = static_cast<int>(y);
        break;
      }
  ASSERT_GE(a, 0);
  EXPECT_THROW(hypercube_to_clar_cover(n, ng, {{a, b}, 1}), VerificationError);
}

TEST(Bijection, RoundTripOnRandomCatafusenes) {
  for (std::uint64_t seed = 30; seed < 40; ++seed) {
    const auto h = random_catafusene(5 + static_cast<int>(seed % 3), seed);
    const auto g = build_resonance_graph(h);
    for (const auto& c : flat(enumerate_clar_covers(h)))
      EXPECT_EQ(hypercube_to_clar_cover(h, g, clar_cover_to_hypercube(h, g, c)), c);
  }
}

TEST(Bijection, Identity) {
  for (const char* name : {"benzene", "pyrene", "coronene"}) {
    const auto r = verify_identity(catalog(name), name);
    expect_all_pass(r);
  }
  const auto r = verify_identity(catalog("coronene"), "coronene");
  const auto& w = check(r, "identity.zz_equals_cube_polynomial").witness;
  EXPECT_EQ(w["zz"], "2x^3 + 15x^2 + 32x + 20");
  EXPECT_EQ(w["cube"], "2x^3 + 15x^2 + 32x + 20");
}

TEST(Bijection, Poset) {
  const auto benzene = verify_poset_isomorphism(catalog("benzene"), "benzene");
  expect_all_pass(benzene);
  EXPECT_EQ(check(benzene, "poset.order_preserved").witness["elements"], 3);

  const auto naph = verify_poset_isomorphism(catalog("naphthalene"), "naphthalene");
  expect_all_pass(naph);
  EXPECT_EQ(check(naph, "poset.maximal_correspondence").witness["maximal_covers"], 2);
  EXPECT_EQ(check(naph, "poset.maximal_correspondence").witness["maximal_cubes"], 2);

  const auto pyrene = verify_poset_isomorphism(catalog("pyrene"), "pyrene");
  expect_all_pass(pyrene);
  EXPECT_EQ(check(pyrene, "poset.order_preserved").witness["elements"], 13);

  VerifyOptions small;
  small.poset_cap = 10;
  EXPECT_THROW(verify_poset_isomorphism(catalog("pyrene"), "pyrene", small), ResourceLimitError);
}

TEST(Bijection, Orientation) {
  for (const char* name : {"benzene", "pyrene", "coronene", "triphenylene"}) expect_all_pass(verify_orientation(catalog(name), name));
}

TEST(Bijection, DerivativeExamples) {
  expect_all_pass(verify_derivative(catalog("benzene"), "benzene", 1));
  expect_all_pass(verify_derivative(catalog("naphthalene"), "naphthalene", 1));

  const auto coronene = catalog("coronene");
  const auto r = verify_derivative(coronene, "coronene", 1);
  expect_all_pass(r);
  EXPECT_EQ(check(r, "derivative.s1.pattern_sum").witness["derivative"], "6x^2 + 30x + 32");

  // right side computed independently from the spanning-subgraph oracle on
  // each single-hexagon deletion of pyrene
  const auto pyrene = catalog("pyrene");
  std::map<int, std::uint64_t> sum;
  for (const auto& hex : pyrene.hexagons())
    for (auto [k, v] : oracle::clar_cover_counts(delete_hexagon(pyrene, hex.cell))) sum[k] += v;
  std::vector<std::uint64_t> c;
  for (auto [k, v] : sum) {
    c.resize(std::max<std::size_t>(c.size(), k + 1));
    c[k] = v;
  }
  EXPECT_EQ(derivative(zz_polynomial(pyrene)), IntPolynomial::from_counts(c));

  for (unsigned s = 1; s <= 4; ++s) expect_all_pass(verify_derivative(coronene, "coronene", s));
  EXPECT_THROW(verify_derivative(coronene, "coronene", 5), std::invalid_argument);
  EXPECT_THROW(verify_derivative(coronene, "coronene", 0), std::invalid_argument);
}

TEST(Bijection, DerivativeNeedsFactorial) {
  // Without the s! factor the unordered pattern sum undercounts for s >= 2.
  const auto h = catalog("coronene");
  IntPolynomial plain;
  for (const auto& pattern : sextet_patterns(h, 2)) {
    std::vector<HexCell> cells;
    for (int i : pattern) cells.push_back(h.hexagons()[i].cell);
    plain += zz_polynomial(delete_sextet_pattern(h, cells));
  }
  const auto second = derivative(zz_polynomial(h), 2);
  EXPECT_NE(second, plain);
  EXPECT_EQ(second, plain * BigInt(2));
}

TEST(Bijection, Fibonacene) {
  for (int n = 1; n <= 8; ++n) expect_all_pass(verify_fibonacene(n));
  EXPECT_EQ(zz_polynomial(catalog("zigzag", 1)), (IntPolynomial{2, 1}));
  EXPECT_EQ(zz_polynomial(catalog("zigzag", 3)), (IntPolynomial{5, 5, 1}));
  EXPECT_EQ(zz_polynomial(catalog("zigzag", 4)), (IntPolynomial{8, 10, 3}));

  const auto r = verify_fibonacene(1);
  const auto& w = check(r, "fibonacene.closed_form").witness;
  EXPECT_FALSE(w["binomial_n_minus_k"]["matches"].get<bool>());
  EXPECT_TRUE(w["binomial_n_minus_k_plus_1"]["matches"].get<bool>());
  EXPECT_EQ(fibonacene_formula(1, true), (IntPolynomial{1}));
  EXPECT_EQ(fibonacene_formula(1, false), (IntPolynomial{2, 1}));

  EXPECT_THROW(verify_fibonacene(0), std::invalid_argument);
  EXPECT_THROW(verify_fibonacene(9), std::invalid_argument);
}

TEST(Bijection, MedianAndExpansion) {
  const auto pyrene = verify_median_and_expansion(catalog("pyrene"), "pyrene");
  expect_all_pass(pyrene);
  EXPECT_EQ(check(pyrene, "expansion.shifted_positive_with_unit_constant").witness["shifted"],
            nlohmann::json({"1", "4", "1"}));
  const auto coronene = verify_median_and_expansion(catalog("coronene"), "coronene");
  expect_all_pass(coronene);
  EXPECT_EQ(check(coronene, "expansion.equals_proper_sextet_histogram").witness["proper_histogram"],
            nlohmann::json({"1", "8", "9", "2"}));
  const auto benzene = verify_median_and_expansion(catalog("benzene"), "benzene");
  expect_all_pass(benzene);
  EXPECT_EQ(check(benzene, "expansion.shifted_positive_with_unit_constant").witness["shifted"],
            nlohmann::json({"1", "1"}));
  const auto& uni = check(coronene, "expansion.unimodality_logged").witness;
  EXPECT_TRUE(uni["unimodal"].get<bool>());
}

TEST(Bijection, Roots) {
  for (const char* name : {"benzene", "naphthalene", "pyrene", "coronene", "triphenylene"})
    expect_all_pass(verify_roots(catalog(name), name));
  const auto r = verify_roots(catalog("naphthalene"), "naphthalene");
  const auto& roots = check(r, "roots.rational_roots_have_form").witness["roots"];
  ASSERT_EQ(roots.size(), 1U);
  EXPECT_EQ(roots[0]["root"], "-3/2");
  EXPECT_EQ(roots[0]["t"], "2");
}

TEST(Bijection, NonKekuleanSubset) {
  const std::vector<int> drop{0};
  const auto odd = catalog("naphthalene").without_vertices(drop);
  const auto r = verify_all(odd, "odd");
  expect_all_pass(r);
  EXPECT_EQ(r.find("median.resonance_graph_is_median"), nullptr);
  EXPECT_EQ(r.find("roots.none_in_minus_one_to_infinity"), nullptr);
  EXPECT_NE(r.find("poset.order_preserved"), nullptr);
  EXPECT_THROW(verify_roots(odd, "odd"), NotKekuleanError);
}

TEST(Bijection, ReportJsonIsStable) {
  const auto a = verify_all(catalog("pyrene"), "pyrene").to_json(false).dump();
  const auto b = verify_all(catalog("pyrene"), "pyrene").to_json(false).dump();
  EXPECT_EQ(a, b);
  const auto j = nlohmann::json::parse(a);
  std::vector<std::string> names;
  for (const auto& c : j["checks"]) names.push_back(c["name"]);
  EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
}
