#include <gtest/gtest.h>

#include "clarcube/errors.hpp"
#include "clarcube/json_io.hpp"
#include "clarcube/report.hpp"

using namespace clarcube;
using nlohmann::json;

TEST(JsonIo, Polynomial) {
  const IntPolynomial p{6, 6, 1};
  EXPECT_EQ(poly_to_json(p).dump(), R"({"coeffs":["6","6","1"]})");
  EXPECT_EQ(poly_from_json(poly_to_json(p)), p);
  EXPECT_EQ(poly_from_json(json::parse(R"({"coeffs":[20, "32", 15, 2]})")), (IntPolynomial{20, 32, 15, 2}));
  const IntPolynomial big(std::vector<BigInt>{BigInt("123456789012345678901234567890")});
  EXPECT_EQ(poly_from_json(poly_to_json(big)), big);
  EXPECT_EQ(shifted_to_json(to_shifted(p)).dump(), R"({"shifted":["1","4","1"]})");
  EXPECT_THROW(poly_from_json(json::parse(R"({"c":[]})")), ParseError);
  EXPECT_THROW(poly_from_json(json::parse(R"({"coeffs":["x"]})")), ParseError);
}

TEST(JsonIo, CoverRoundTrip) {
  const auto h = catalog("pyrene");
  for (const auto& level : enumerate_clar_covers(h))
    for (const auto& c : level) EXPECT_EQ(cover_from_json(h, cover_to_json(h, c)), c);
  EXPECT_THROW(cover_from_json(h, json::parse(R"({"hexagons":[[9,9]],"edges":[]})")), ParseError);
}

TEST(JsonIo, Graph) {
  const auto g = hypercube_graph(3);
  const auto back = graph_from_json(graph_to_json(g));
  EXPECT_EQ(back.edges(), g.edges());
  const auto h = catalog("pyrene");
  const auto r = build_resonance_graph(h);
  const auto from_res = graph_from_json(resonance_to_json(h, r));
  EXPECT_EQ(from_res.edges(), r.to_simple_graph().edges());
  EXPECT_THROW(graph_from_json(json::parse(R"({"n":2,"edges":[[0,0]]})")), ParseError);
  EXPECT_THROW(graph_from_json(json::parse(R"({"edges":[]})")), ParseError);
}

TEST(Report, FailingChecksNeedWitness) {
  VerificationReport r("x");
  EXPECT_THROW(r.add({"bad", false, nullptr, 0.0}), std::logic_error);
  r.run("throws", []() -> std::pair<bool, json> { throw std::runtime_error("boom"); });
  ASSERT_NE(r.find("throws"), nullptr);
  EXPECT_FALSE(r.find("throws")->pass);
  EXPECT_EQ(r.find("throws")->witness["error"], "boom");
  r.run("ok", []() -> std::pair<bool, json> { return {true, nullptr}; });
  EXPECT_FALSE(r.passed());
  const auto j = r.to_json(false);
  EXPECT_EQ(j["system"], "x");
  EXPECT_EQ(j["checks"][0]["name"], "ok");
  EXPECT_EQ(j["checks"][0]["ms"], 0.0);
}
