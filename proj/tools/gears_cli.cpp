// gears: command-line front end.
//
// Exit codes: 0 success, 1 I/O, 2 validation, 3 numerical non-convergence,
// 4 a verification that was asked for failed.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gears/gears.hpp"

namespace {

using namespace gears;

constexpr int kOk = 0;
constexpr int kVerificationFailed = static_cast<int>(ErrorKind::verification);

// --- small parsers ---------------------------------------------------------

// Real-valued length: a number, `pi`, `sqrt(x)`, or products/quotients of
// those, e.g. `pi/2` or `3*sqrt(2)`.
double parse_length(const std::string& text) {
  std::size_t pos = 0;
  auto fail = [&]() -> double { throw validation_error("cannot read length '" + text + "'"); };
  auto factor = [&]() -> double {
    if (text.compare(pos, 2, "pi") == 0) {
      pos += 2;
      return std::numbers::pi;
    }
    if (text.compare(pos, 5, "sqrt(") == 0) {
      const auto close = text.find(')', pos);
      if (close == std::string::npos) return fail();
      const std::string inner = text.substr(pos + 5, close - pos - 5);
      pos = close + 1;
      std::size_t used = 0;
      const double v = std::stod(inner, &used);
      if (used != inner.size() || v < 0) return fail();
      return std::sqrt(v);
    }
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(text.substr(pos), &used);
    } catch (const std::exception&) {
      return fail();
    }
    pos += used;
    return v;
  };
  double value = factor();
  while (pos < text.size()) {
    const char op = text[pos++];
    const double rhs = factor();
    if (op == '*') {
      value *= rhs;
    } else if (op == '/') {
      value /= rhs;
    } else {
      return fail();
    }
  }
  return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, sep);) out.push_back(item);
  return out;
}

std::vector<double> parse_lengths(const std::string& list) {
  std::vector<double> out;
  for (const auto& item : split(list, ',')) out.push_back(parse_length(item));
  if (out.empty()) throw validation_error("--lengths is empty");
  return out;
}

// `t`/`h` or `0`/`1` per tooth.
std::vector<ToothEnd> parse_pattern(const std::string& s) {
  std::vector<ToothEnd> out;
  for (char c : s) {
    if (c == 't' || c == '0') {
      out.push_back(ToothEnd::tail);
    } else if (c == 'h' || c == '1') {
      out.push_back(ToothEnd::head);
    } else if (c != ',') {
      throw validation_error("attachment pattern uses t/h or 0/1, got '" + s + "'");
    }
  }
  return out;
}

ScanParams apply_params(ScanParams p, const std::vector<std::string>& overrides) {
  const std::map<std::string, double ScanParams::*> fields = {
      {"k_max", &ScanParams::k_max},       {"step", &ScanParams::step},         {"refine_tol", &ScanParams::refine_tol},
      {"rank_tol", &ScanParams::rank_tol}, {"mult_tol", &ScanParams::mult_tol}, {"dedup_gap", &ScanParams::dedup_gap}};
  for (const auto& kv : overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw validation_error("--params expects key=value, got '" + kv + "'");
    const auto key = kv.substr(0, eq);
    const auto it = fields.find(key);
    if (it == fields.end()) throw validation_error("unknown scan parameter '" + key + "'");
    p.*(it->second) = parse_length(kv.substr(eq + 1));
  }
  p.check();
  return p;
}

// --- output ----------------------------------------------------------------

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw io_error("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void write_json(const std::string& path, const Json& j) {
  Output out(path);
  out.stream() << j.dump(2) << "\n";
}

void write_graph_file(const std::string& path, const MetricGraph& g) {
  Output out(path);
  write_graph(out.stream(), g);
}

// --- shared option groups --------------------------------------------------

struct GearOptions {
  std::string lengths;
  std::string pattern;
  bool dual = false;

  void attach(CLI::App* cmd, bool with_dual) {
    cmd->add_option("--lengths", lengths, "comma-separated side lengths, e.g. 1,2,3 or 1,sqrt(2),pi/2");
    cmd->add_option("--pattern", pattern, "tooth attachment per side in the primal gear (t/h), default all t");
    if (with_dual) cmd->add_flag("--dual", dual, "use the dual gear");
  }

  GearSpec spec() const {
    GearSpec s = make_gear_spec(parse_lengths(lengths), dual ? Variant::dual : Variant::primal);
    if (!pattern.empty()) s.pattern = parse_pattern(pattern);
    check_gear_spec(s);
    return s;
  }
};

Fig3Variant parse_fig3(const std::string& v) {
  if (v == "a") return Fig3Variant::a;
  if (v == "b") return Fig3Variant::b;
  throw validation_error("--fig3 takes a or b");
}

// --- subcommands -----------------------------------------------------------

struct BuildCmd {
  GearOptions gear;
  int n = 0;
  std::string fig3;
  std::string out;
  bool digraph = false;

  int run() const {
    if (!fig3.empty()) {
      const auto [left, right] = build_fig3_pair(parse_fig3(fig3), parse_lengths(gear.lengths));
      const std::string prefix = out.empty() ? "fig3" + fig3 : out;
      write_graph_file(prefix + "-left.graph", left);
      write_graph_file(prefix + "-right.graph", right);
      return kOk;
    }
    const GearSpec spec = gear.spec();
    if (n != 0 && n != spec.n()) {
      throw validation_error("--n " + std::to_string(n) + " does not match " + std::to_string(spec.n()) + " lengths");
    }
    Output o(out);
    if (digraph) {
      write_digraph(o.stream(), gear_to_digraph(spec));
    } else {
      write_graph(o.stream(), build_gear(spec));
    }
    return kOk;
  }
};

struct SpectrumCmd {
  std::string graph;
  double w = 1.0;
  double k_max = 10.0;
  std::vector<std::string> params;
  std::string out;

  int run(unsigned jobs) const {
    const MetricGraph g = load_graph(graph);
    ScanParams p;
    p.k_max = k_max;
    p.jobs = jobs;
    p = apply_params(p, params);
    const Spectrum s = scan_spectrum(g, VertexConditions{w}, p);
    Output o(out);
    write_spectrum_csv(o.stream(), s);
    return kOk;
  }
};

struct CompareCmd {
  std::string graph1, graph2;
  GearOptions gear;
  std::string fig3;
  double w = 1.0;
  double k_max = 10.0;
  double tol = 1e-8;
  bool transplant = false;
  std::vector<std::string> params;
  std::string out;

  int run(unsigned jobs) const {
    MetricGraph g1, g2;
    if (!graph1.empty() || !graph2.empty()) {
      if (graph1.empty() || graph2.empty()) throw validation_error("compare needs both --graph1 and --graph2");
      g1 = load_graph(graph1);
      g2 = load_graph(graph2);
    } else if (!fig3.empty()) {
      std::tie(g1, g2) = build_fig3_pair(parse_fig3(fig3), parse_lengths(gear.lengths));
    } else {
      const GearSpec spec = gear.spec();
      g1 = build_gear(spec);
      g2 = build_gear(dual_gear(spec));
    }
    ScanParams p;
    p.k_max = k_max;
    p.jobs = jobs;
    p = apply_params(p, params);
    const VertexConditions cond{w};
    const Spectrum s1 = scan_spectrum(g1, cond, p), s2 = scan_spectrum(g2, cond, p);
    const SpectrumComparison cmp = compare_spectra(s1, s2, tol);
    Json j = {{"w", w}, {"k_max", p.k_max}, {"count1", s1.count()}, {"count2", s2.count()}};
    j["comparison"] = to_json(cmp);
    bool ok = cmp.matched();
    if (transplant) {
      Json cases = Json::array();
      bool tok = true;
      for (const auto& c : transplant_suite(g1, g2, cond, s1, p, tol)) {
        cases.push_back(to_json(c));
        tok = tok && c.vertex_residual < tol && c.isometry_error < tol && c.round_trip_error < 1e-10;
      }
      j["transplant"] = {{"ok", tok}, {"cases", cases}};
      ok = ok && tok;
    }
    j["ok"] = ok;
    write_json(out, j);
    return ok ? kOk : kVerificationFailed;
  }
};

struct MarkovCmd {
  GearOptions gear;
  std::string graph;
  std::string w = "1";
  std::string mode = "rational";
  std::string out;

  int run() const {
    const MetricGraph g = graph.empty() ? build_gear(gear.spec()) : load_graph(graph);
    const CombinatorialGraph cg = subdivide(g);
    Json j = {{"vertices", cg.vertex_count}, {"mode", mode}};
    std::vector<double> spectrum;
    if (mode == "rational") {
      const auto ms = markov_matrix<Rational>(cg, parse_rational(w));
      j["w"] = to_string(ms.w);
      j["detailed_balance_exact"] = detailed_balance_defect(ms) == 0;
      j["charpoly"] = to_json(characteristic_polynomial_exact(ms));
      spectrum = markov_spectrum(ms);
    } else if (mode == "float") {
      const auto ms = markov_matrix<double>(cg, parse_length(w));
      j["w"] = ms.w;
      j["detailed_balance_defect"] = detailed_balance_defect(ms);
      spectrum = markov_spectrum(ms);
    } else {
      throw validation_error("--mode is rational or float");
    }
    j["bipartite"] = bipartite_signs(cg).has_value();
    j["spectrum"] = spectrum;
    write_json(out, j);
    return kOk;
  }
};

struct ConjugateCmd {
  GearOptions gear;
  std::string w = "1";
  std::string mode = "rational";
  std::string out;

  int run() const {
    if (mode != "rational" && mode != "float") throw validation_error("--mode is rational or float");
    const ConjugatorReport r = conjugator_report(gear.spec(), w, mode == "rational");
    Json j = to_json(r);
    j["ok"] = r.ok();
    write_json(out, j);
    return r.ok() ? kOk : kVerificationFailed;
  }
};

Digraph digraph_input(const std::string& path, bool fig6, bool dual) {
  if (!path.empty()) return load_digraph(path);
  if (fig6) return dual ? fig6_dual_digraph() : fig6_digraph();
  throw validation_error("give digraph files or --fig6");
}

struct ZetaCmd {
  std::string g1, g2;
  bool fig6 = false;
  int trials = 20;
  std::optional<std::uint64_t> seed;
  std::string slice = "eta";
  std::string expect = "equivalent";
  std::string dump;
  std::string out;

  int run() const {
    if (!seed) throw validation_error("zeta needs --seed");
    if (slice != "eta" && slice != "full") throw validation_error("--slice is eta or full");
    const Digraph a = digraph_input(g1, fig6, false), b = digraph_input(g2, fig6, true);
    const ZetaVerdict v = zeta_equivalent(a, b, trials, *seed, slice == "eta" ? ZetaSlice::eta : ZetaSlice::full);
    if (!dump.empty()) {
      Output o(dump);
      o.stream() << char_poly_symbolic(pencil(a)).dump();
    }
    Json j = to_json(v);
    write_json(out, j);
    if (expect == "any") return kOk;
    if (expect != "equivalent" && expect != "distinguished") throw validation_error("--expect is equivalent, distinguished or any");
    return (expect == "equivalent") == v.equivalent ? kOk : kVerificationFailed;
  }
};

struct ZetaConjugatorCmd {
  std::string g1, g2;
  int trials = 20;
  std::uint64_t seed = 7;
  std::string out;

  int run() const {
    const Digraph a = digraph_input(g1, true, false), b = digraph_input(g2, true, true);
    const TCheck c = verify_T(a, b, trials, seed);
    Json j = to_json(c);
    j["seed"] = seed;
    j["ok"] = c.ok();
    write_json(out, j);
    return c.ok() ? kOk : kVerificationFailed;
  }
};

struct IsomorphicCmd {
  std::string g1, g2;
  bool fig6 = false;
  std::string out;

  int run() const {
    const Digraph a = digraph_input(g1, fig6, false), b = digraph_input(g2, fig6, true);
    const auto phi = digraph_isomorphic(a, b);
    Json j = {{"isomorphic", phi.has_value()}};
    if (phi) j["witness"] = *phi;
    write_json(out, j);
    return kOk;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual gear graphs: spectra, transplantation, walks and zeta polynomials"};
  app.require_subcommand(1);
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for spectral scans")->check(CLI::Range(1u, 256u));

  BuildCmd build;
  auto* c_build = app.add_subcommand("build", "write a gear, its dual, a merged-edge pair or a digraph");
  build.gear.attach(c_build, true);
  c_build->add_option("--n", build.n, "number of sides (checked against --lengths)");
  c_build->add_option("--fig3", build.fig3, "write merged-edge pair a or b; --out is a file prefix");
  c_build->add_flag("--digraph", build.digraph, "write the subdivided digraph with outward teeth");
  c_build->add_option("--out", build.out, "output file (default stdout)");

  SpectrumCmd spectrum;
  auto* c_spec = app.add_subcommand("spectrum", "eigenvalues of a metric graph as CSV");
  c_spec->add_option("--graph", spectrum.graph, "graph file")->required();
  c_spec->add_option("--w", spectrum.w, "tooth weight");
  c_spec->add_option("--k-max", spectrum.k_max, "largest wavenumber");
  c_spec->add_option("--params", spectrum.params, "scan overrides key=value");
  c_spec->add_option("--out", spectrum.out, "output CSV (default stdout)");

  CompareCmd compare;
  auto* c_cmp = app.add_subcommand("compare", "compare two spectra (a gear and its dual by default)");
  c_cmp->add_option("--graph1", compare.graph1, "first graph file");
  c_cmp->add_option("--graph2", compare.graph2, "second graph file");
  compare.gear.attach(c_cmp, false);
  c_cmp->add_option("--fig3", compare.fig3, "compare merged-edge pair a or b");
  c_cmp->add_option("--w", compare.w, "tooth weight");
  c_cmp->add_option("--k-max", compare.k_max, "largest wavenumber");
  c_cmp->add_option("--tol", compare.tol, "relative tolerance");
  c_cmp->add_flag("--transplant", compare.transplant, "also transplant every eigenfunction");
  c_cmp->add_option("--params", compare.params, "scan overrides key=value");
  c_cmp->add_option("--out", compare.out, "output JSON (default stdout)");

  MarkovCmd markov;
  auto* c_mk = app.add_subcommand("markov", "walk matrix spectrum and characteristic polynomial");
  markov.gear.attach(c_mk, true);
  c_mk->add_option("--graph", markov.graph, "graph file with integer lengths");
  c_mk->add_option("--w", markov.w, "tooth weight, e.g. 3/2");
  c_mk->add_option("--mode", markov.mode, "rational or float");
  c_mk->add_option("--out", markov.out, "output JSON (default stdout)");

  ConjugateCmd conj;
  auto* c_conj = app.add_subcommand("conjugate", "build and check C = T + J+ + J- for a gear and its dual");
  conj.gear.attach(c_conj, false);
  c_conj->add_option("--w", conj.w, "tooth weight, e.g. 3/2");
  c_conj->add_option("--mode", conj.mode, "rational or float");
  c_conj->add_option("--out", conj.out, "output JSON (default stdout)");

  ZetaCmd zeta;
  auto* c_zeta = app.add_subcommand("zeta", "randomised identity test of det L_G(z)");
  c_zeta->add_option("--g1", zeta.g1, "first digraph file");
  c_zeta->add_option("--g2", zeta.g2, "second digraph file");
  c_zeta->add_flag("--fig6", zeta.fig6, "use the two built-in 12-vertex reference digraphs");
  c_zeta->add_option("--trials", zeta.trials, "random evaluation points");
  c_zeta->add_option("--seed", zeta.seed, "master seed (required)");
  c_zeta->add_option("--slice", zeta.slice, "eta (y = 0, default) or full");
  c_zeta->add_option("--expect", zeta.expect, "equivalent, distinguished or any");
  c_zeta->add_option("--dump", zeta.dump, "also write the expanded polynomial of the first digraph");
  c_zeta->add_option("--out", zeta.out, "output JSON (default stdout)");

  ZetaConjugatorCmd zc;
  auto* c_zc = app.add_subcommand("zeta-conjugator", "check the explicit 12x12 intertwiner and its determinant");
  c_zc->add_option("--g1", zc.g1, "digraph G (default: built-in reference)");
  c_zc->add_option("--g2", zc.g2, "digraph G~ (default: built-in reference)");
  c_zc->add_option("--trials", zc.trials, "random points for the numeric cross-check");
  c_zc->add_option("--seed", zc.seed, "seed for those points");
  c_zc->add_option("--out", zc.out, "output JSON (default stdout)");

  IsomorphicCmd iso;
  auto* c_iso = app.add_subcommand("isomorphic", "search for a digraph isomorphism");
  c_iso->add_option("--g1", iso.g1, "first digraph file");
  c_iso->add_option("--g2", iso.g2, "second digraph file");
  c_iso->add_flag("--fig6", iso.fig6, "use the two built-in 12-vertex reference digraphs");
  c_iso->add_option("--out", iso.out, "output JSON (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ErrorKind::validation);
  }

  try {
    if (*c_build) return build.run();
    if (*c_spec) return spectrum.run(jobs);
    if (*c_cmp) return compare.run(jobs);
    if (*c_mk) return markov.run();
    if (*c_conj) return conj.run();
    if (*c_zeta) return zeta.run();
    if (*c_zc) return zc.run();
    if (*c_iso) return iso.run();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::validation);
  }
  return kOk;
}
