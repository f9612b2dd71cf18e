// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "clarcube/bijection.hpp"
#include "clarcube/errors.hpp"

using namespace clarcube;

namespace {

struct Entry {
  std::string label;
  HexagonalSystem system;
};

std::vector<Entry> full_catalog() {
  std::vector<Entry> out;
  for (const auto& name : fixed_catalog_names()) out.push_back({name, catalog(name)});
  for (int n = 1; n <= 8; ++n) out.push_back({"linear(" + std::to_string(n) + ")", catalog("linear", n)});
  for (int n = 1; n <= 8; ++n) out.push_back({"zigzag(" + std::to_string(n) + ")", catalog("zigzag", n)});
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const int n = 3 + static_cast<int>(seed - 1) % 6;
    out.push_back({"random_cata(" + std::to_string(n) + ")#" + std::to_string(seed), random_catafusene(n, seed)});
  }
  return out;
}

std::vector<Entry> random_part(const std::vector<Entry>& all) {
  std::vector<Entry> out;
  for (const auto& e : all)
    if (e.label.rfind("random_cata", 0) == 0) out.push_back(e);
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

int failures = 0;

void report(const std::string& id, const std::string& what, const std::function<std::string()>& body) {
  // body returns "" on success or a failure description
  std::string problem;
  const auto start = std::chrono::steady_clock::now();
  try {
    problem = body();
  } catch (const std::exception& e) {
    problem = std::string("exception: ") + e.what();
  }
  const double s = seconds_since(start);
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", s);
  if (problem.empty()) {
    std::cout << "PASS " << id << " " << what << " [" << timing << "]\n";
  } else {
    ++failures;
    std::cout << "FAIL " << id << " " << what << " [" << timing << "]: " << problem << "\n";
  }
  std::cout.flush();
}

std::string failing_checks(const std::string& label, const VerificationReport& r) {
  std::string out;
  for (const auto& c : r.to_json()["checks"])
    if (!c["pass"].get<bool>()) out += label + ":" + c["name"].get<std::string>() + " " + c["witness"].dump() + "; ";
  return out;
}

std::vector<std::size_t> sizes(const HypercubeLevels& levels) {
  std::vector<std::size_t> out;
  for (const auto& l : levels) out.push_back(l.size());
  return out;
}

}  // namespace

int main() {
  const auto catalog_entries = full_catalog();

  report("AC1", "golden values for pyrene and coronene", [] {
    std::string problem;
    struct Golden {
      const char* name;
      IntPolynomial zz;
      std::vector<BigInt> shifted;
    };
    for (const auto& g : {Golden{"pyrene", {6, 6, 1}, {1, 4, 1}}, Golden{"coronene", {20, 32, 15, 2}, {1, 8, 9, 2}}}) {
      const auto start = std::chrono::steady_clock::now();
      const auto zeta = zz_polynomial(catalog(g.name));
      const auto b = to_shifted(zeta);
      const double s = seconds_since(start);
      if (zeta != g.zz) problem += std::string(g.name) + " zz " + zeta.to_string() + "; ";
      if (b.b != g.shifted) problem += std::string(g.name) + " shifted mismatch; ";
      if (s >= 1.0) problem += std::string(g.name) + " took " + std::to_string(s) + "s; ";
    }
    std::ostringstream out, err;
    clarcube::cli::run({"clarcube", "zz", "--name", "pyrene", "--format", "json"}, out, err);
    if (out.str() != "{\"coeffs\":[\"6\",\"6\",\"1\"]}\n") problem += "cli pyrene json: " + out.str();
    std::ostringstream out2, err2;
    clarcube::cli::run({"clarcube", "zz", "--name", "coronene", "--basis", "shifted"}, out2, err2);
    if (out2.str() != "shifted [1, 8, 9, 2]\n") problem += "cli coronene shifted: " + out2.str();
    return problem;
  });

  report("AC2", "zz(H) == C(R(H)) coefficientwise on the catalog", [&] {
    std::string problem;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& e : catalog_entries) {
      const auto zeta = zz_polynomial(e.system);
      const auto cube = cube_polynomial(build_resonance_graph(e.system).to_simple_graph());
      if (zeta != cube) problem += e.label + ": " + zeta.to_string() + " vs " + cube.to_string() + "; ";
    }
    if (seconds_since(start) >= 120.0) problem += "catalog took over 2 minutes";
    return problem;
  });

  report("AC3", "inverse-then-forward is the identity on every induced hypercube; level counts agree", [&] {
    std::string problem;
    for (const auto& e : catalog_entries) {
      const auto g = build_resonance_graph(e.system);
      const auto cubes = enumerate_induced_hypercubes(g.to_simple_graph());
      const auto covers = enumerate_clar_covers(e.system);
      std::vector<std::size_t> cover_sizes;
      for (const auto& l : covers) cover_sizes.push_back(l.size());
      if (cover_sizes != sizes(cubes)) problem += e.label + ": level counts differ; ";
      for (const auto& level : cubes)
        for (const auto& q : level) {
          const auto c = hypercube_to_clar_cover(e.system, g, q);
          if (clar_cover_to_hypercube(e.system, g, c) != q) problem += e.label + ": roundtrip broke; ";
        }
    }
    return problem;
  });

  report("AC4", "orientation acyclic; each induced hypercube has one source and one sink", [&] {
    std::string problem;
    for (const auto& e : catalog_entries) {
      const auto g = build_resonance_graph(e.system);
      const auto d = orient(e.system, g);
      std::vector<int> order;
      try {
        order = assert_acyclic(d);
      } catch (const CycleFoundError&) {
        problem += e.label + ": cycle; ";
        continue;
      }
      std::vector<std::size_t> pos(order.size());
      for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
      for (const auto& a : d.arcs)
        if (pos[a.from] >= pos[a.to]) problem += e.label + ": bad topological order; ";
      std::set<std::pair<int, int>> arcs;
      for (const auto& a : d.arcs) arcs.insert({a.from, a.to});
      for (const auto& level : enumerate_induced_hypercubes(g.to_simple_graph()))
        for (const auto& q : level) {
          int sources = 0, sinks = 0;
          for (int v : q.vertices) {
            bool in = false, out = false;
            for (int w : q.vertices) {
              in = in || arcs.count({w, v});
              out = out || arcs.count({v, w});
            }
            sources += !in;
            sinks += !out;
          }
          if (sources != 1 || sinks != 1) problem += e.label + ": cube with " + std::to_string(sources) + " sources; ";
        }
    }
    return problem;
  });

  report("AC5", "proper-sextet histogram equals the (x+1)-expansion of zz", [&] {
    std::string problem;
    for (const auto& e : catalog_entries) {
      const auto hist = proper_sextet_histogram(e.system);
      std::vector<BigInt> a(hist.begin(), hist.end());
      while (!a.empty() && a.back() == 0) a.pop_back();
      if (a != to_shifted(zz_polynomial(e.system)).b) problem += e.label + "; ";
    }
    return problem;
  });

  report("AC6", "poset isomorphism and maximal elements on systems with <= 500 covers", [&] {
    std::string problem;
    int checked = 0;
    for (const auto& e : catalog_entries) {
      BigInt total = 0;
      const auto zeta = zz_polynomial(e.system);
      for (const auto& c : zeta.coeffs()) total += c;
      if (total > 500) continue;
      ++checked;
      problem += failing_checks(e.label, verify_poset_isomorphism(e.system, e.label));
    }
    if (checked == 0) problem += "no system checked";
    return problem;
  });

  report("AC7", "derivative identity for s=1 and s=2 (Cl >= 2)", [&] {
    std::string problem;
    for (const auto& e : catalog_entries) {
      problem += failing_checks(e.label, verify_derivative(e.system, e.label, 1));
      if (clar_number(e.system) >= 2) problem += failing_checks(e.label, verify_derivative(e.system, e.label, 2));
    }
    return problem;
  });

  report("AC8", "no roots in [-1, inf); a root in [-2, -1) when K >= 2; rational roots are -(t+1)/t", [&] {
    std::string problem;
    for (const auto& e : catalog_entries) problem += failing_checks(e.label, verify_roots(e.system, e.label));
    return problem;
  });

  report("AC9", "R(zigzag(n)) ~ Gamma_n and zz = C(Gamma_n) for n=1..8; closed form documented", [] {
    std::string problem;
    for (int n = 1; n <= 8; ++n) {
      const auto r = verify_fibonacene(n);
      problem += failing_checks("zigzag(" + std::to_string(n) + ")", r);
      const auto* form = r.find("fibonacene.closed_form");
      if (!form || !form->witness.contains("binomial_n_minus_k") || !form->witness.contains("binomial_n_minus_k_plus_1"))
        problem += "closed-form witness missing for n=" + std::to_string(n) + "; ";
    }
    return problem;
  });

  report("AC10", "median graph (<= 300 matchings), zz(-1) = 1, monotone tail, unimodality logged", [&] {
    std::string problem;
    for (const auto& e : catalog_entries) {
      const auto zeta = zz_polynomial(e.system);
      if (evaluate(zeta, Rational(-1)) != 1) problem += e.label + ": zz(-1) != 1; ";
      if (zeta.coeff(0) > 300) continue;
      const auto r = verify_median_and_expansion(e.system, e.label);
      problem += failing_checks(e.label, r);
      if (!r.find("expansion.unimodality_logged")) problem += e.label + ": unimodality not logged; ";
    }
    return problem;
  });

  report("AC11", "source-based hypercube enumeration equals the generic enumerator on 20 random systems", [&] {
    std::string problem;
    const auto randoms = random_part(catalog_entries);
    if (randoms.size() != 20) problem += "expected 20 random systems; ";
    for (const auto& e : randoms) {
      const auto g = build_resonance_graph(e.system);
      const auto fast = enumerate_hypercubes_from_sources(g, orient(e.system, g));
      const auto generic = enumerate_induced_hypercubes(g.to_simple_graph());
      if (fast != generic) problem += e.label + "; ";
    }
    return problem;
  });

  return failures == 0 ? 0 : 1;
}
