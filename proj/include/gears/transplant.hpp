#pragma once

// Eigenderivative transplantation between mutually dual gears.
//
// With restrictions p_i (side i) and t_i (tooth i) of an eigenfunction f on
// a gear, the transplant on the dual gear is
//
//   p~_i = p_i' + w t_i',   t~_i = p_i' - t_i'        (standard)
//   p~_i = p_i' - t_i',     t~_i = p_i' + w t_i'      (swapped)
//
// chosen per index i. Sides and teeth keep their parameterisation, so the
// map acts coefficient-wise in the cos/sin basis.

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "gears/error.hpp"
#include "gears/graph.hpp"
#include "gears/quantum.hpp"

namespace gears {

struct TransplantMap {
  std::vector<bool> swapped;  ///< per side/tooth index
  double w = 1.0;
  double k = 0.0;

  std::string pattern() const {
    std::string s;
    for (bool b : swapped) s += b ? 'S' : 'N';
    return s;
  }
};

/// Edge ids of (side i, tooth i) for every gear index i.
inline std::vector<std::array<int, 2>> gear_edge_pairs(const MetricGraph& g) {
  std::vector<std::array<int, 2>> pairs;
  for (const auto& e : g.edges) {
    if (e.cls != EdgeClass::polygon && e.cls != EdgeClass::tooth) continue;
    if (e.index < 0) throw validation_error("gear edge without side/tooth index");
    if (static_cast<std::size_t>(e.index) >= pairs.size()) pairs.resize(static_cast<std::size_t>(e.index) + 1, {-1, -1});
    pairs[static_cast<std::size_t>(e.index)][e.cls == EdgeClass::polygon ? 0 : 1] = e.id;
  }
  for (const auto& p : pairs) {
    if (p[0] < 0 || p[1] < 0) throw validation_error("every gear index needs one side and one tooth");
  }
  return pairs;
}

namespace detail {

// (p~, t~) = B (p', t')
inline std::array<double, 4> forward_matrix(bool swapped, double w) {
  return swapped ? std::array<double, 4>{1.0, -1.0, 1.0, w} : std::array<double, 4>{1.0, w, 1.0, -1.0};
}

inline std::array<double, 4> inverse2(const std::array<double, 4>& m) {
  const double det = m[0] * m[3] - m[1] * m[2];
  return {m[3] / det, -m[1] / det, -m[2] / det, m[0] / det};
}

/// Applies `mat` (scaled by `factor`) to the derivative coefficients of f,
/// index by index, writing onto an edge layout taken from `pairs`.
inline Eigenfunction apply_to_derivatives(const Eigenfunction& f, const std::vector<std::array<int, 2>>& pairs,
                                          const std::vector<bool>& swapped, double w, double factor, bool invert) {
  const Eigenfunction d = derivative(f);
  Eigenfunction out{f.k, std::vector<double>(f.coeffs.size(), 0.0)};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto mat = forward_matrix(swapped[i], w);
    if (invert) mat = inverse2(mat);
    const auto [side, tooth] = pairs[i];
    for (int c = 0; c < 2; ++c) {
      const double dp = d.coeffs[2 * static_cast<std::size_t>(side) + static_cast<std::size_t>(c)];
      const double dt = d.coeffs[2 * static_cast<std::size_t>(tooth) + static_cast<std::size_t>(c)];
      out.coeffs[2 * static_cast<std::size_t>(side) + static_cast<std::size_t>(c)] = factor * (mat[0] * dp + mat[1] * dt);
      out.coeffs[2 * static_cast<std::size_t>(tooth) + static_cast<std::size_t>(c)] = factor * (mat[2] * dp + mat[3] * dt);
    }
  }
  return out;
}

}  // namespace detail

/// Transplants f (on `gear`) to the dual gear with a fixed assignment.
inline Eigenfunction transplant(const MetricGraph& gear, const Eigenfunction& f, const TransplantMap& map) {
  if (!(f.k > 0.0)) throw validation_error("transplantation needs lambda > 0; it annihilates constants");
  const auto pairs = gear_edge_pairs(gear);
  if (map.swapped.size() != pairs.size()) throw validation_error("assignment size does not match the gear");
  return detail::apply_to_derivatives(f, pairs, map.swapped, map.w, 1.0, false);
}

/// Inverse of `transplant` on lambda-eigenfunctions: since -f'' = lambda f,
/// (p, t) = -(1/lambda) B^{-1} (p~', t~'); for the standard B this is
/// -(1/(lambda(1+w))) [[1, w], [1, -1]] applied to the derivatives.
inline Eigenfunction inverse_transplant(const MetricGraph& dual, const Eigenfunction& ft, const TransplantMap& map) {
  if (!(ft.k > 0.0)) throw validation_error("inverse transplantation needs lambda > 0");
  const auto pairs = gear_edge_pairs(dual);
  if (map.swapped.size() != pairs.size()) throw validation_error("assignment size does not match the gear");
  return detail::apply_to_derivatives(ft, pairs, map.swapped, map.w, -1.0 / ft.lambda(), true);
}

struct TransplantResult {
  Eigenfunction function;
  TransplantMap map;
  double vertex_residual = 0.0;
};

/// Transplants f and picks the assignment whose image satisfies the dual's
/// vertex conditions. The all-standard pattern is tried first; otherwise
/// every pattern is tried (n <= 16) and the best one is kept. Throws when
/// none reaches `tol`.
inline TransplantResult transplant_checked(const MetricGraph& gear, const MetricGraph& dual, const VertexConditions& cond,
                                           const Eigenfunction& f, double tol = 1e-8) {
  const auto n = gear_edge_pairs(gear).size();
  TransplantResult best;
  best.vertex_residual = std::numeric_limits<double>::infinity();
  auto attempt = [&](std::vector<bool> swapped) {
    TransplantMap map{std::move(swapped), cond.w, f.k};
    Eigenfunction ft = transplant(gear, f, map);
    const double r = vertex_residual(dual, cond, ft);
    if (r < best.vertex_residual) best = {std::move(ft), std::move(map), r};
  };
  attempt(std::vector<bool>(n, false));
  if (best.vertex_residual > tol && n <= 16) {
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<bool> swapped(n);
      for (std::size_t i = 0; i < n; ++i) swapped[i] = (mask >> i) & 1U;
      attempt(std::move(swapped));
    }
  }
  if (best.vertex_residual > tol) {
    throw Error(ErrorKind::verification, "no tilde assignment satisfies the dual vertex conditions (residual " +
                                             format_real(best.vertex_residual) + ")");
  }
  return best;
}

/// max |f'' + lambda f| over edges and `samples` points per edge, relative
/// to max(1, lambda) times the largest edge amplitude.
inline double check_eigen_equation(const MetricGraph& g, const Eigenfunction& f, double lambda, int samples = 16) {
  double scale = 0.0;
  for (int e = 0; e < f.edge_count(); ++e) scale = std::max(scale, std::hypot(f.a(e), f.b(e)));
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (const auto& e : g.edges) {
    for (int s = 0; s <= samples; ++s) {
      const double x = e.length * s / samples;
      const double r = evaluate_second_derivative(g, f, e.id, x) + lambda * evaluate(g, f, e.id, x);
      worst = std::max(worst, std::abs(r));
    }
  }
  return worst / (std::max(1.0, lambda) * scale);
}

struct IsometryCheck {
  double lhs = 0.0;  ///< ||f~||_w^2
  double rhs = 0.0;  ///< lambda (1 + w) ||f||_w^2
  double rel_error = 0.0;
};

inline IsometryCheck check_isometry(const MetricGraph& gear, const MetricGraph& dual, const VertexConditions& cond,
                                    const Eigenfunction& f, const Eigenfunction& ft) {
  IsometryCheck c;
  c.lhs = weighted_norm_sq(dual, cond, ft);
  c.rhs = f.lambda() * (1.0 + cond.w) * weighted_norm_sq(gear, cond, f);
  const double scale = std::max(std::abs(c.lhs), std::abs(c.rhs));
  c.rel_error = scale == 0.0 ? 0.0 : std::abs(c.lhs - c.rhs) / scale;
  return c;
}

/// Transplant checks for every basis function of one eigenspace.
struct TransplantCase {
  double k = 0.0;
  int multiplicity = 0;
  std::string pattern;
  double vertex_residual = 0.0;   ///< worst over the basis
  double eigen_residual = 0.0;    ///< f~'' + lambda f~ on the dual
  double isometry_error = 0.0;    ///< relative
  double round_trip_error = 0.0;  ///< inverse(transplant(f)) - f, relative to max |coeff|
};

inline double round_trip_error(const Eigenfunction& f, const Eigenfunction& back) {
  double scale = 0.0, diff = 0.0;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    scale = std::max(scale, std::abs(f.coeffs[i]));
    diff = std::max(diff, std::abs(f.coeffs[i] - back.coeffs[i]));
  }
  return scale == 0.0 ? diff : diff / scale;
}

/// Runs the transplant, its inverse and the norm identity on every nonzero
/// eigenvalue of `spectrum` (computed on `gear`).
inline std::vector<TransplantCase> transplant_suite(const MetricGraph& gear, const MetricGraph& dual,
                                                    const VertexConditions& cond, const Spectrum& spectrum,
                                                    const ScanParams& params = {}, double tol = 1e-8) {
  std::vector<TransplantCase> out;
  for (const auto& ev : spectrum.values) {
    if (ev.k <= 0.0) continue;
    TransplantCase c;
    c.k = ev.k;
    c.multiplicity = ev.multiplicity;
    for (const auto& f : eigenfunction_basis(gear, cond, ev.k, params)) {
      const TransplantResult r = transplant_checked(gear, dual, cond, f, tol);
      c.pattern = r.map.pattern();
      c.vertex_residual = std::max(c.vertex_residual, r.vertex_residual);
      c.eigen_residual = std::max(c.eigen_residual, check_eigen_equation(dual, r.function, f.lambda()));
      c.isometry_error = std::max(c.isometry_error, check_isometry(gear, dual, cond, f, r.function).rel_error);
      c.round_trip_error = std::max(c.round_trip_error, round_trip_error(f, inverse_transplant(dual, r.function, r.map)));
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace gears
