#pragma once

// JSON views of the library's result types. Exact integers are written as
// decimal strings so nothing is rounded on the way out.

#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "gears/markov.hpp"
#include "gears/quantum.hpp"
#include "gears/transplant.hpp"
#include "gears/zeta.hpp"

namespace gears {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace detail

inline Json to_json(const Spectrum& s) {
  Json values = Json::array();
  for (const auto& e : s.values) values.push_back({{"k", e.k}, {"lambda", e.lambda}, {"multiplicity", e.multiplicity}});
  return {{"k_max", s.k_max}, {"count", s.count()}, {"values", values}};
}

inline Json to_json(const SpectrumPair& p) {
  return {{"lambda1", detail::finite_or_null(p.lambda1)},
          {"lambda2", detail::finite_or_null(p.lambda2)},
          {"multiplicity1", p.mult1},
          {"multiplicity2", p.mult2},
          {"rel_gap", p.rel_gap}};
}

inline Json to_json(const SpectrumComparison& c) {
  Json pairs = Json::array(), bad = Json::array();
  for (const auto& p : c.pairs) pairs.push_back(to_json(p));
  for (const auto& p : c.multiplicity_mismatches) bad.push_back(to_json(p));
  return {{"matched", c.matched()}, {"tol", c.tol}, {"max_rel_gap", c.max_rel_gap}, {"pairs", pairs}, {"mismatches", bad}};
}

inline Json to_json(const TransplantCase& c) {
  return {{"k", c.k},
          {"multiplicity", c.multiplicity},
          {"assignment", c.pattern},
          {"vertex_residual", c.vertex_residual},
          {"eigen_residual", c.eigen_residual},
          {"isometry_rel_error", c.isometry_error},
          {"round_trip_error", c.round_trip_error}};
}

inline Json to_json(const ExactCharPoly& p) {
  Json num = Json::array();
  for (const auto& c : p.numerator) num.push_back(c.str());
  return {{"numerator", num}, {"denominator", p.denominator.str()}};
}

inline Json to_json(const CrosscheckReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"expected_k", e.expected_k}, {"found_k", e.found_k}, {"rel_gap", e.rel_gap}, {"source", e.source}});
  }
  return {{"ok", r.ok()},          {"k_max", r.k_max},         {"expected_count", r.expected_count},
          {"quantum_count", r.quantum_count}, {"max_rel_gap", r.max_rel_gap}, {"tol", r.tol},
          {"problems", r.problems}, {"entries", entries}};
}

struct ConjugatorReport {
  int n = 0;
  std::vector<std::string> lengths;
  std::string w;
  std::string mode;  ///< "rational" or "float"
  double conj_residual = 0.0;
  double sigma_min_C = 0.0;
  bool charpoly_equal = false;
  std::size_t rank_T = 0;
  bool bipartite = false;

  bool ok() const { return conj_residual <= (mode == "rational" ? 0.0 : 1e-10) && sigma_min_C > 1e-8 && charpoly_equal; }
};

inline Json to_json(const ConjugatorReport& r) {
  return {{"n", r.n},
          {"lengths", r.lengths},
          {"w", r.w},
          {"mode", r.mode},
          {"conj_residual", r.conj_residual},
          {"sigma_min_C", r.sigma_min_C},
          {"charpoly_equal", r.charpoly_equal},
          {"rank_T", r.rank_T},
          {"bipartite", r.bipartite}};
}

inline Json to_json(const PrimeFieldPoint& pt) {
  Json o = Json::object();
  for (std::size_t i = 0; i < 6; ++i) o[kSymbolNames[i]] = std::to_string(pt.z[i]);
  return o;
}

inline Json to_json(const ZetaVerdict& v) {
  Json o = {{"n", v.n},
            {"trials", v.trials},
            {"prime", std::to_string(v.prime)},
            {"seed", v.seed},
            {"slice", to_string(v.slice)},
            {"verdict", v.verdict()},
            {"failure_bound", v.failure_bound}};
  if (v.distinguishing_point) o["distinguishing_point"] = to_json(*v.distinguishing_point);
  if (!v.note.empty()) o["note"] = v.note;
  return o;
}

inline Json to_json(const TCheck& c) {
  return {{"intertwines_eta", c.intertwines_eta},
          {"intertwines_full", c.intertwines_full},
          {"residual_terms", c.residual_terms},
          {"residual_terms_eta", c.residual_terms_eta},
          {"det_T_matches", c.det_matches},
          {"det_T", c.det_T.dump()},
          {"det_T_at_1_1_2", c.det_T_at_112.str()},
          {"point_trials", c.point_trials},
          {"points_agree_eta", c.points_agree_eta}};
}

/// Builds a gear and its dual from integer lengths, subdivides both and
/// checks the walk conjugator. In rational mode `w_text` is parsed exactly
/// and the residual is an exact zero test; in float mode the char-poly
/// comparison becomes a sorted-eigenvalue comparison to 1e-10.
inline ConjugatorReport conjugator_report(const GearSpec& spec, const std::string& w_text, bool rational) {
  const MetricGraph g = build_gear(spec), gd = build_gear(dual_gear(spec));
  const CombinatorialGraph cg = subdivide(g), cgd = subdivide(gd);
  ConjugatorReport r;
  r.n = spec.n();
  for (double l : spec.lengths) r.lengths.push_back(std::to_string(std::lround(l)));
  r.mode = rational ? "rational" : "float";
  const Rational w = parse_rational(w_text);
  r.w = to_string(w);
  if (rational) {
    const auto ms = markov_matrix<Rational>(cg, w), msd = markov_matrix<Rational>(cgd, w);
    const auto conj = build_conjugator(ms, msd);
    r.conj_residual = to_double(conjugation_residual(ms, msd, conj.C));
    r.sigma_min_C = smallest_singular_value(conj.C);
    r.charpoly_equal = characteristic_polynomial_exact(ms) == characteristic_polynomial_exact(msd);
    r.rank_T = numerical_rank(conj.T.map<double>([](const Rational& x) { return to_double(x); }));
    r.bipartite = conj.bipartite;
  } else {
    const double wd = to_double(w);
    const auto ms = markov_matrix<double>(cg, wd), msd = markov_matrix<double>(cgd, wd);
    const auto conj = build_conjugator(ms, msd);
    r.conj_residual = conjugation_residual(ms, msd, conj.C);
    r.sigma_min_C = smallest_singular_value(conj.C);
    const auto s1 = markov_spectrum(ms), s2 = markov_spectrum(msd);
    double gap = 0.0;
    for (std::size_t i = 0; i < s1.size(); ++i) gap = std::max(gap, std::abs(s1[i] - s2[i]));
    r.charpoly_equal = s1.size() == s2.size() && gap < 1e-10;
    r.rank_T = numerical_rank(conj.T);
    r.bipartite = conj.bipartite;
  }
  return r;
}

}  // namespace gears
