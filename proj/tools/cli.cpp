#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include "clarcube/bijection.hpp"
#include "clarcube/errors.hpp"
#include "clarcube/json_io.hpp"

namespace clarcube::cli {

namespace {

using nlohmann::json;

struct Config {
  std::string input;
  std::string name;
  std::optional<int> n;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string basis = "std";
  std::string out;
  std::size_t max_matchings = kDefaultMatchingCap;
  std::size_t max_covers = kDefaultCoverCap;
  std::size_t max_cubes = kDefaultCubeCap;
  bool timing = false;

  std::string dot;
  bool oriented = false;
  std::string graph;
  unsigned s = 1;

  ClarOptions clar() const { return {max_covers, max_matchings}; }
  VerifyOptions verify() const {
    VerifyOptions v;
    v.clar = clar();
    v.max_cubes = max_cubes;
    return v;
  }
  bool as_json() const { return format == "json"; }
};

// Thrown for bad flag combinations detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Input {
  HexagonalSystem system;
  std::string label;
};

Input load_system(const Config& cfg) {
  if (cfg.input.empty() == cfg.name.empty()) throw UsageError("give exactly one of --input FILE or --name NAME");
  if (!cfg.input.empty()) return {parse_hex_file(read_file(cfg.input)), cfg.input};

  std::string name = cfg.name;
  std::optional<int> n = cfg.n;
  static const std::regex sized(R"(([a-z_]+)\((\d+)\))");
  if (std::smatch m; std::regex_match(cfg.name, m, sized)) {
    name = m[1];
    n = std::stoi(m[2]);
  }
  std::string label = name;
  if (n) label += "(" + std::to_string(*n) + ")";
  if (name == "random_cata") label += "#" + std::to_string(cfg.seed);
  return {catalog(name, n, cfg.seed), label};
}

class Output {
 public:
  Output(const Config& cfg, std::ostream& fallback) : stream_(&fallback) {
    if (!cfg.out.empty()) {
      file_.open(cfg.out, std::ios::binary);
      if (!file_) throw UsageError("cannot write '" + cfg.out + "'");
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::string join(const std::vector<BigInt>& values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + values[i].str();
  return s + "]";
}

void emit_polynomial(const Config& cfg, const IntPolynomial& p, std::ostream& out) {
  if (cfg.basis == "shifted") {
    const auto shifted = to_shifted(p);
    if (cfg.as_json())
      out << shifted_to_json(shifted).dump() << '\n';
    else
      out << "shifted " << join(shifted.b) << '\n';
  } else if (cfg.as_json()) {
    out << poly_to_json(p).dump() << '\n';
  } else {
    out << p.to_string() << '\n';
  }
}

int emit_report(const Config& cfg, const VerificationReport& report, std::ostream& out) {
  if (cfg.as_json()) {
    out << report.to_json(cfg.timing).dump() << '\n';
  } else {
    const auto j = report.to_json(cfg.timing);
    out << "system " << j["system"].get<std::string>() << '\n';
    for (const auto& c : j["checks"]) {
      out << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>();
      if (!c["pass"].get<bool>()) out << ' ' << c["witness"].dump();
      if (cfg.timing) out << " (" << c["ms"].get<double>() << " ms)";
      out << '\n';
    }
    out << (report.passed() ? "all checks passed" : "verification FAILED") << '\n';
  }
  return report.passed() ? 0 : 1;
}

int cmd_info(const Config& cfg, std::ostream& out) {
  const auto in = load_system(cfg);
  const auto& h = in.system;
  const auto kekule = count_perfect_matchings(h, {}, cfg.max_matchings);
  json j{{"system", in.label},
         {"hexagons", h.hexagons().size()},
         {"vertices", h.vertex_count()},
         {"edges", h.edge_count()},
         {"generalized", h.generalized()},
         {"kekule", std::to_string(kekule)}};
  j["clar_number"] = kekule ? json(clar_number(h, cfg.clar())) : json(nullptr);
  if (cfg.as_json()) {
    out << j.dump() << '\n';
  } else {
    out << "system      " << in.label << '\n'
        << "hexagons    " << h.hexagons().size() << '\n'
        << "vertices    " << h.vertex_count() << '\n'
        << "edges       " << h.edge_count() << '\n'
        << "generalized " << (h.generalized() ? "yes" : "no") << '\n'
        << "kekule      " << kekule << '\n'
        << "clar number " << (kekule ? std::to_string(clar_number(h, cfg.clar())) : "none") << '\n';
  }
  return 0;
}

int cmd_kekule(const Config& cfg, std::ostream& out) {
  const auto in = load_system(cfg);
  const auto k = count_perfect_matchings(in.system, {}, cfg.max_matchings);
  if (cfg.as_json())
    out << json{{"kekule", std::to_string(k)}}.dump() << '\n';
  else
    out << k << '\n';
  return 0;
}

int cmd_resonance(const Config& cfg, std::ostream& out) {
  const auto in = load_system(cfg);
  const auto graph = build_resonance_graph(in.system, cfg.max_matchings);
  if (!cfg.dot.empty()) {
    const std::string dot = cfg.oriented ? to_dot(in.system, orient(in.system, graph)) : to_dot(in.system, graph);
    export_dot(dot, cfg.dot);
  }
  if (cfg.as_json()) {
    out << resonance_to_json(in.system, graph).dump() << '\n';
  } else {
    out << "vertices " << graph.vertex_count() << '\n' << "edges " << graph.edge_count() << '\n';
    for (const auto& e : graph.edges) {
      const HexCell c = in.system.hexagons()[static_cast<std::size_t>(e.hexagon)].cell;
      out << e.a << ' ' << e.b << " (" << c.q << ',' << c.r << ")\n";
    }
  }
  return 0;
}

int cmd_cube(const Config& cfg, std::ostream& out) {
  if (!cfg.graph.empty()) {
    if (!cfg.input.empty() || !cfg.name.empty()) throw UsageError("--graph excludes --input and --name");
    json j;
    try {
      j = json::parse(read_file(cfg.graph));
    } catch (const json::parse_error& e) {
      throw ParseError(e.what());
    }
    emit_polynomial(cfg, cube_polynomial(graph_from_json(j), cfg.max_cubes), out);
    return 0;
  }
  const auto in = load_system(cfg);
  const auto graph = build_resonance_graph(in.system, cfg.max_matchings);
  emit_polynomial(cfg, cube_polynomial(graph.to_simple_graph(), cfg.max_cubes), out);
  return 0;
}

int cmd_roots(const Config& cfg, std::ostream& out) {
  const auto in = load_system(cfg);
  const auto zeta = zz_polynomial(in.system, cfg.clar());
  if (zeta.is_zero()) throw NotKekuleanError();
  const auto above = count_real_roots(zeta, RealInterval{Rational(-1), std::nullopt, true, false});
  const auto below = count_real_roots(zeta, Rational(-2), Rational(-1), true, false);
  const auto roots = rational_roots(zeta);
  if (cfg.as_json()) {
    auto list = json::array();
    for (const auto& r : roots) list.push_back({{"root", r.value.str()}, {"t", r.t ? json(r.t->str()) : json(nullptr)}});
    out << json{{"system", in.label},
                {"zz", poly_to_json(zeta)},
                {"rational_roots", list},
                {"count_minus_one_to_infinity", above},
                {"count_minus_two_to_minus_one", below}}
               .dump()
        << '\n';
  } else {
    out << "zz " << zeta.to_string() << '\n';
    out << "rational roots";
    if (roots.empty()) out << " none";
    for (const auto& r : roots) out << ' ' << r.value.str() << (r.t ? " (t=" + r.t->str() + ")" : std::string());
    out << '\n'
        << "real roots in [-1, inf): " << above << '\n'
        << "real roots in [-2, -1): " << below << '\n';
  }
  return 0;
}

int cmd_catalog(const Config& cfg, std::ostream& out) {
  auto names = fixed_catalog_names();
  names.insert(names.end(), {"linear(n)", "zigzag(n)", "random_cata(n)"});
  if (cfg.as_json()) {
    out << json(names).dump() << '\n';
  } else {
    for (const auto& n : names) out << n << '\n';
  }
  return 0;
}

void add_common(CLI::App* cmd, Config& cfg, bool needs_system) {
  cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", cfg.out, "Write results to FILE instead of stdout");
  if (!needs_system) return;
  auto* input = cmd->add_option("--input", cfg.input, "Hexagonal system file (.hex)");
  auto* name = cmd->add_option("--name", cfg.name, "Catalog name, e.g. pyrene or linear(4)");
  input->excludes(name);
  cmd->add_option("--n", cfg.n, "Size for linear, zigzag and random_cata");
  cmd->add_option("--seed", cfg.seed, "Seed for random_cata");
  cmd->add_option("--max-matchings", cfg.max_matchings, "Cap on perfect matchings");
  cmd->add_option("--max-covers", cfg.max_covers, "Cap on Clar covers");
  cmd->add_option("--max-cubes", cfg.max_cubes, "Cap on induced hypercubes");
}

void add_basis(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--basis", cfg.basis, "Coefficients in x or in (x+1)")->check(CLI::IsMember({"std", "shifted"}));
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Clar covering polynomials, resonance graphs and cube polynomials"};
  app.require_subcommand(1);

  auto* info = app.add_subcommand("info", "Sizes, Kekule count and Clar number");
  add_common(info, cfg, true);
  auto* kekule = app.add_subcommand("kekule", "Number of perfect matchings");
  add_common(kekule, cfg, true);
  auto* zz = app.add_subcommand("zz", "Clar covering polynomial");
  add_common(zz, cfg, true);
  add_basis(zz, cfg);
  auto* sextet = app.add_subcommand("sextet", "Sextet polynomial");
  add_common(sextet, cfg, true);
  add_basis(sextet, cfg);
  auto* resonance = app.add_subcommand("resonance", "Resonance graph");
  add_common(resonance, cfg, true);
  resonance->add_option("--dot", cfg.dot, "Write the graph as DOT to PATH");
  resonance->add_flag("--oriented", cfg.oriented, "DOT output uses the sextet orientation");
  auto* cube = app.add_subcommand("cube", "Cube polynomial of the resonance graph or of a JSON graph");
  add_common(cube, cfg, true);
  add_basis(cube, cfg);
  cube->add_option("--graph", cfg.graph, "Graph JSON {\"n\": N, \"edges\": [[i, j], ...]}");
  auto* verify = app.add_subcommand("verify", "Run every verification check");
  add_common(verify, cfg, true);
  verify->add_flag("--timing", cfg.timing, "Record per-check wall time");
  auto* roots = app.add_subcommand("roots", "Rational roots and real-root counts");
  add_common(roots, cfg, true);
  auto* deriv = app.add_subcommand("derivative-check", "Check the derivative identity of order s");
  add_common(deriv, cfg, true);
  deriv->add_option("--s", cfg.s, "Derivative order")->check(CLI::PositiveNumber);
  deriv->add_flag("--timing", cfg.timing, "Record per-check wall time");
  auto* fib = app.add_subcommand("fibonacci", "Fibonacene checks against the Fibonacci cube");
  add_common(fib, cfg, false);
  fib->add_option("--n", cfg.n, "Number of hexagons")->required();
  fib->add_flag("--timing", cfg.timing, "Record per-check wall time");
  auto* cat = app.add_subcommand("catalog", "List catalog names");
  add_common(cat, cfg, false);

  std::vector<const char*> args;
  for (const auto& a : argv) args.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(args.size()), args.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Output sink(cfg, out);
    std::ostream& o = *sink;
    if (info->parsed()) return cmd_info(cfg, o);
    if (kekule->parsed()) return cmd_kekule(cfg, o);
    if (zz->parsed()) {
      emit_polynomial(cfg, zz_polynomial(load_system(cfg).system, cfg.clar()), o);
      return 0;
    }
    if (sextet->parsed()) {
      emit_polynomial(cfg, sextet_polynomial(load_system(cfg).system, cfg.clar()), o);
      return 0;
    }
    if (resonance->parsed()) return cmd_resonance(cfg, o);
    if (cube->parsed()) return cmd_cube(cfg, o);
    if (verify->parsed()) {
      const auto in = load_system(cfg);
      const auto options = cfg.verify();
      BigInt covers = 0;
      const auto zeta = zz_polynomial(in.system, options.clar);
      for (const auto& c : zeta.coeffs()) covers += c;
      if (covers > options.poset_cap)
        err << "note: " << covers << " Clar covers exceed " << options.poset_cap << ", poset checks skipped\n";
      if (zeta.coeff(0) > options.median_bound)
        err << "note: " << zeta.coeff(0) << " perfect matchings exceed " << options.median_bound
            << ", median check skipped\n";
      return emit_report(cfg, verify_all(in.system, in.label, options), o);
    }
    if (roots->parsed()) return cmd_roots(cfg, o);
    if (deriv->parsed()) {
      const auto in = load_system(cfg);
      return emit_report(cfg, verify_derivative(in.system, in.label, cfg.s, cfg.verify()), o);
    }
    if (fib->parsed()) return emit_report(cfg, verify_fibonacene(*cfg.n, cfg.verify()), o);
    if (cat->parsed()) return cmd_catalog(cfg, o);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace clarcube::cli
