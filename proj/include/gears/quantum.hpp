#pragma once

// Eigenvalues and eigenfunctions of weighted metric graphs.
//
// On every edge an eigenfunction with wavenumber k > 0 is written as
// f_e(x) = a_e cos(kx) + b_e sin(kx). Continuity and weighted Kirchhoff
// conditions at the vertices give a square linear system in (a_e, b_e)
// whose null space is the eigenspace of lambda = k^2. This basis stays valid
// at Dirichlet eigenvalues (sin(k l_e) = 0), unlike the vertex-value form.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "gears/error.hpp"
#include "gears/graph.hpp"
#include "gears/io.hpp"

namespace gears {

/// Continuity plus weighted Kirchhoff: sum over incident edges of
/// weight * outward derivative = 0. Tooth edges carry the extra factor w.
struct VertexConditions {
  double w = 1.0;

  double weight(const Edge& e) const { return e.weight * (e.cls == EdgeClass::tooth ? w : 1.0); }
};

struct ScanParams {
  double k_max = 10.0;
  double step = 0.01;
  double refine_tol = 1e-12;
  double rank_tol = 1e-9;
  double mult_tol = 1e-8;
  double dedup_gap = 1e-9;
  unsigned jobs = 1;

  void check() const {
    if (!(k_max > 0 && step > 0 && refine_tol > 0 && rank_tol > 0 && mult_tol > 0 && dedup_gap > 0)) {
      throw validation_error("scan parameters must all be positive");
    }
    if (jobs == 0) throw validation_error("jobs must be at least 1");
  }
};

struct Eigenvalue {
  double k = 0.0;
  double lambda = 0.0;
  int multiplicity = 1;
};

struct Spectrum {
  std::vector<Eigenvalue> values;
  double k_max = 0.0;

  /// Eigenvalues repeated by multiplicity, ascending.
  std::vector<double> expanded() const {
    std::vector<double> out;
    for (const auto& e : values) out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.lambda);
    return out;
  }

  int count() const {
    int c = 0;
    for (const auto& e : values) c += e.multiplicity;
    return c;
  }
};

/// Coefficients (a_e, b_e) interleaved, one pair per edge. For k = 0 the
/// edge function is a_e + b_e x.
struct Eigenfunction {
  double k = 0.0;
  std::vector<double> coeffs;

  double a(int e) const { return coeffs[2 * static_cast<std::size_t>(e)]; }
  double b(int e) const { return coeffs[2 * static_cast<std::size_t>(e) + 1]; }
  double lambda() const { return k * k; }
  int edge_count() const { return static_cast<int>(coeffs.size() / 2); }
};

namespace detail {

struct EdgeEnd {
  int edge;
  bool at_head;
};

inline std::vector<std::vector<EdgeEnd>> incidence(const MetricGraph& g) {
  std::vector<std::vector<EdgeEnd>> ends(static_cast<std::size_t>(g.vertex_count));
  for (const auto& e : g.edges) {
    ends[static_cast<std::size_t>(e.tail)].push_back({e.id, false});
    ends[static_cast<std::size_t>(e.head)].push_back({e.id, true});
  }
  return ends;
}

}  // namespace detail

/// Row-normalised secular matrix, 2m x 2m. Per vertex of degree d: d-1
/// continuity rows and one weighted-Kirchhoff row.
inline Eigen::MatrixXd secular_matrix(const MetricGraph& g, const VertexConditions& cond, double k) {
  if (!(k > 0.0)) throw validation_error("secular matrix needs k > 0");
  const int m = g.edge_count();
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  const auto ends = detail::incidence(g);

  auto value_row = [&](Eigen::Ref<Eigen::RowVectorXd> row, const detail::EdgeEnd& end, double sign) {
    const double l = g.edges[static_cast<std::size_t>(end.edge)].length;
    if (end.at_head) {
      row(2 * end.edge) += sign * std::cos(k * l);
      row(2 * end.edge + 1) += sign * std::sin(k * l);
    } else {
      row(2 * end.edge) += sign;
    }
  };
  // Outward derivative: f'(0) at the tail, -f'(l) at the head.
  auto outward_row = [&](Eigen::Ref<Eigen::RowVectorXd> row, const detail::EdgeEnd& end, double weight) {
    const double l = g.edges[static_cast<std::size_t>(end.edge)].length;
    if (end.at_head) {
      row(2 * end.edge) += weight * k * std::sin(k * l);
      row(2 * end.edge + 1) -= weight * k * std::cos(k * l);
    } else {
      row(2 * end.edge + 1) += weight * k;
    }
  };

  int r = 0;
  for (const auto& at : ends) {
    for (std::size_t j = 1; j < at.size(); ++j) {
      Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(2 * m);
      value_row(row, at[0], 1.0);
      value_row(row, at[j], -1.0);
      s.row(r++) = row;
    }
    if (!at.empty()) {
      Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(2 * m);
      for (const auto& end : at) outward_row(row, end, cond.weight(g.edges[static_cast<std::size_t>(end.edge)]));
      s.row(r++) = row;
    }
  }
  for (int i = 0; i < r; ++i) {
    const double norm = s.row(i).norm();
    if (norm > 0) s.row(i) /= norm;
  }
  return s;
}

struct RankIndicator {
  double sigma_min = 0.0;
  std::vector<double> sigmas;  ///< descending
};

inline RankIndicator rank_indicator(const MetricGraph& g, const VertexConditions& cond, double k) {
  const Eigen::MatrixXd s = secular_matrix(g, cond, k);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(s);
  const auto& sv = svd.singularValues();
  RankIndicator out;
  out.sigmas.assign(sv.data(), sv.data() + sv.size());
  out.sigma_min = out.sigmas.empty() ? 0.0 : out.sigmas.back();
  return out;
}

namespace detail {

inline double sigma_min_at(const MetricGraph& g, const VertexConditions& cond, double k) {
  return rank_indicator(g, cond, k).sigma_min;
}

/// Golden-section minimisation of sigma_min on [lo, hi].
inline double golden_minimise(const MetricGraph& g, const VertexConditions& cond, double lo, double hi, double tol) {
  constexpr double inv_phi = 0.6180339887498949;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = sigma_min_at(g, cond, c), fd = sigma_min_at(g, cond, d);
  for (int it = 0; it < 400; ++it) {
    if (hi - lo < tol) return fc < fd ? c : d;
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = sigma_min_at(g, cond, c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = sigma_min_at(g, cond, d);
    }
  }
  throw numerical_error("golden-section refinement did not converge near k = " + format_real(0.5 * (lo + hi)));
}

template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn fn) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t workers = std::min<std::size_t>(jobs, count);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

inline std::vector<std::size_t> local_minima(const std::vector<double>& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (v[i] < v[i - 1] && v[i] <= v[i + 1]) out.push_back(i);
  }
  return out;
}

}  // namespace detail

/// Spectrum up to k_max. lambda = 0 is inserted analytically (constants).
/// Cells of the step grid that may hold a root are re-sampled at step/16;
/// local minima of sigma_min there are refined by golden section and
/// accepted when sigma_min < rank_tol; the multiplicity is the
/// number of singular values below mult_tol * sigma_max. Grid evaluations
/// may run on `jobs` threads; the result does not depend on it.
inline Spectrum scan_spectrum(const MetricGraph& g, const VertexConditions& cond, const ScanParams& params) {
  params.check();
  if (const auto problems = validate_metric(g); !problems.empty()) {
    throw validation_error("cannot scan an invalid graph: " + problems.front());
  }
  if (!(cond.w > 0)) throw validation_error("tooth weight must be positive");

  const auto points = static_cast<std::size_t>(std::ceil(params.k_max / params.step - 1e-9));
  std::vector<double> ks(points);
  for (std::size_t i = 0; i < points; ++i) ks[i] = std::min(params.k_max, static_cast<double>(i + 1) * params.step);
  std::vector<double> sig(points);
  detail::parallel_for(points, params.jobs, [&](std::size_t i) { sig[i] = detail::sigma_min_at(g, cond, ks[i]); });

  struct Root {
    double k;
    int mult;
  };
  std::vector<Root> roots;
  auto try_accept = [&](double k) -> RankIndicator {
    const auto ri = rank_indicator(g, cond, k);
    if (ri.sigma_min < params.rank_tol) {
      const double cut = params.mult_tol * ri.sigmas.front();
      const auto mult = std::count_if(ri.sigmas.begin(), ri.sigmas.end(), [&](double s) { return s < cut; });
      roots.push_back({k, std::max<int>(1, static_cast<int>(mult))});
    }
    return ri;
  };

  // sigma_min has slope at most L, so a root inside cell [k_i, k_i+1]
  // forces sig_i + sig_i+1 <= L * step. L is taken as twice the steepest
  // slope seen on the grid. Every cell that could hold a root, and every
  // cell next to a coarse dip, is re-sampled at step/16; that catches roots
  // that share a dip or sit on a monotone stretch of the coarse curve.
  constexpr int fine = 16;
  double slope = 0.0;
  for (std::size_t i = 0; i + 1 < points; ++i) slope = std::max(slope, std::abs(sig[i + 1] - sig[i]) / params.step);
  std::vector<bool> flagged(points > 0 ? points - 1 : 0, false);
  for (std::size_t i = 0; i + 1 < points; ++i) flagged[i] = sig[i] + sig[i + 1] <= 2.0 * slope * params.step;
  for (std::size_t i : detail::local_minima(sig)) flagged[i - 1] = flagged[i] = true;
  std::vector<std::pair<std::size_t, std::size_t>> runs;  // inclusive ranges of flagged cells
  for (std::size_t i = 0; i < flagged.size(); ++i) {
    if (!flagged[i]) continue;
    if (!runs.empty() && runs.back().second + 1 == i) {
      runs.back().second = i;
    } else {
      runs.emplace_back(i, i);
    }
  }
  std::vector<std::vector<double>> refined(runs.size());
  detail::parallel_for(runs.size(), params.jobs, [&](std::size_t r) {
    // One extra cell either side so minima on a run boundary are interior.
    const std::size_t lo = runs[r].first > 0 ? runs[r].first - 1 : 0;
    const std::size_t hi = std::min(runs[r].second + 2, points - 1);
    std::vector<double> fk, fs;
    for (std::size_t i = lo; i < hi; ++i) {
      for (int j = 0; j < fine; ++j) {
        fk.push_back(ks[i] + (ks[i + 1] - ks[i]) * j / fine);
        fs.push_back(j == 0 ? sig[i] : detail::sigma_min_at(g, cond, fk.back()));
      }
    }
    fk.push_back(ks[hi]);
    fs.push_back(sig[hi]);
    for (std::size_t j : detail::local_minima(fs)) {
      refined[r].push_back(detail::golden_minimise(g, cond, fk[j - 1], fk[j + 1], params.refine_tol));
    }
  });
  for (const auto& group : refined) {
    for (double k : group) {
      const auto ri = try_accept(k);
      // A second near-zero singular value that is not counted as multiplicity
      // hints at a neighbour closer than the fine grid; probe once more.
      if (ri.sigma_min < params.rank_tol && ri.sigmas.size() > 1) {
        const double second = ri.sigmas[ri.sigmas.size() - 2];
        const double cut = params.mult_tol * ri.sigmas.front();
        if (second >= cut && second < 1e-3 * ri.sigmas.front()) {
          constexpr int finer = 64;
          const double h = params.step / fine;
          std::vector<double> fk, fs;
          for (int j = -finer; j <= finer; ++j) {
            const double kk = k + h * j / finer;
            if (kk <= 0 || kk > params.k_max) continue;
            fk.push_back(kk);
            fs.push_back(detail::sigma_min_at(g, cond, kk));
          }
          for (std::size_t j : detail::local_minima(fs)) {
            if (std::abs(fk[j] - k) < 2 * h / finer) continue;
            try_accept(detail::golden_minimise(g, cond, fk[j - 1], fk[j + 1], params.refine_tol));
          }
        }
      }
    }
  }
  // Roots sitting on the upper end of the grid.
  if (points >= 2 && sig[points - 1] < sig[points - 2]) {
    if (sig[points - 1] < params.rank_tol) {
      try_accept(ks[points - 1]);
    } else {
      try_accept(detail::golden_minimise(g, cond, ks[points - 2], ks[points - 1], params.refine_tol));
    }
  }

  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.k < b.k; });
  Spectrum spec;
  spec.k_max = params.k_max;
  spec.values.push_back({0.0, 0.0, 1});
  for (const auto& r : roots) {
    if (r.k > params.k_max) continue;
    auto& last = spec.values.back();
    if (spec.values.size() > 1 && r.k - last.k < params.dedup_gap) {
      last.multiplicity = std::max(last.multiplicity, r.mult);
      continue;
    }
    spec.values.push_back({r.k, r.k * r.k, r.mult});
  }
  return spec;
}

/// Orthonormal (in coefficient space) basis of the eigenspace at k.
inline std::vector<Eigenfunction> eigenfunction_basis(const MetricGraph& g, const VertexConditions& cond, double k,
                                                      const ScanParams& params = {}) {
  const Eigen::MatrixXd s = secular_matrix(g, cond, k);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(s, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const Eigen::Index n = sv.size();
  if (n == 0 || sv(n - 1) >= params.rank_tol) {
    throw validation_error("k = " + format_real(k) + " is not an eigenvalue (sigma_min = " +
                           format_real(n ? sv(n - 1) : 0.0) + ")");
  }
  std::vector<Eigenfunction> basis;
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    if (sv(i) >= params.mult_tol * sv(0) && !basis.empty()) break;
    Eigenfunction f{k, std::vector<double>(static_cast<std::size_t>(s.cols()))};
    for (Eigen::Index j = 0; j < s.cols(); ++j) f.coeffs[static_cast<std::size_t>(j)] = svd.matrixV()(j, i);
    basis.push_back(std::move(f));
  }
  return basis;
}

/// The constant function with value c.
inline Eigenfunction constant_function(const MetricGraph& g, double c = 1.0) {
  Eigenfunction f{0.0, std::vector<double>(2 * static_cast<std::size_t>(g.edge_count()), 0.0)};
  for (int e = 0; e < g.edge_count(); ++e) f.coeffs[2 * static_cast<std::size_t>(e)] = c;
  return f;
}

namespace detail {

inline void check_point(const MetricGraph& g, int edge, double x) {
  if (edge < 0 || edge >= g.edge_count()) throw validation_error("edge id out of range");
  const double l = g.edges[static_cast<std::size_t>(edge)].length;
  if (x < 0.0 || x > l) throw validation_error("x = " + format_real(x) + " outside [0, " + format_real(l) + "]");
}

}  // namespace detail

inline double evaluate(const MetricGraph& g, const Eigenfunction& f, int edge, double x) {
  detail::check_point(g, edge, x);
  if (f.k == 0.0) return f.a(edge) + f.b(edge) * x;
  return f.a(edge) * std::cos(f.k * x) + f.b(edge) * std::sin(f.k * x);
}

inline double evaluate_derivative(const MetricGraph& g, const Eigenfunction& f, int edge, double x) {
  detail::check_point(g, edge, x);
  if (f.k == 0.0) return f.b(edge);
  return f.k * (-f.a(edge) * std::sin(f.k * x) + f.b(edge) * std::cos(f.k * x));
}

inline double evaluate_second_derivative(const MetricGraph& g, const Eigenfunction& f, int edge, double x) {
  detail::check_point(g, edge, x);
  if (f.k == 0.0) return 0.0;
  return -f.k * f.k * (f.a(edge) * std::cos(f.k * x) + f.b(edge) * std::sin(f.k * x));
}

/// Coefficients of f' in the same cos/sin basis.
inline Eigenfunction derivative(const Eigenfunction& f) {
  Eigenfunction d{f.k, std::vector<double>(f.coeffs.size())};
  for (int e = 0; e < f.edge_count(); ++e) {
    d.coeffs[2 * static_cast<std::size_t>(e)] = f.k * f.b(e);
    d.coeffs[2 * static_cast<std::size_t>(e) + 1] = -f.k * f.a(e);
  }
  return d;
}

namespace detail {

// Integrals over [0, l] of cos(s x) and sin(s x); stable for small s.
inline double int_cos(double s, double l) { return std::abs(s) < 1e-300 ? l : std::sin(s * l) / s; }
inline double int_sin(double s, double l) {
  if (std::abs(s) < 1e-300) return 0.0;
  const double h = std::sin(0.5 * s * l);
  return 2.0 * h * h / s;
}
// Integrals of x cos(k x) and x sin(k x) over [0, l], k > 0.
inline double int_x_cos(double k, double l) { return l * std::sin(k * l) / k + (std::cos(k * l) - 1.0) / (k * k); }
inline double int_x_sin(double k, double l) { return -l * std::cos(k * l) / k + std::sin(k * l) / (k * k); }

/// Integral over [0, l] of the product of two edge functions.
inline double edge_product_integral(double k1, double a1, double b1, double k2, double a2, double b2, double l) {
  if (k1 == 0.0 && k2 == 0.0) return a1 * a2 * l + (a1 * b2 + a2 * b1) * l * l / 2.0 + b1 * b2 * l * l * l / 3.0;
  if (k1 == 0.0 || k2 == 0.0) {
    if (k1 != 0.0) return edge_product_integral(k2, a2, b2, k1, a1, b1, l);
    // (a1 + b1 x)(a2 cos + b2 sin)
    return a1 * (a2 * int_cos(k2, l) + b2 * int_sin(k2, l)) + b1 * (a2 * int_x_cos(k2, l) + b2 * int_x_sin(k2, l));
  }
  const double dm = k1 - k2, dp = k1 + k2;
  const double cc = 0.5 * (int_cos(dm, l) + int_cos(dp, l));
  const double ss = 0.5 * (int_cos(dm, l) - int_cos(dp, l));
  const double cs = 0.5 * (int_sin(dp, l) - int_sin(dm, l));  // cos(k1 x) sin(k2 x)
  const double sc = 0.5 * (int_sin(dp, l) + int_sin(dm, l));  // sin(k1 x) cos(k2 x)
  return a1 * a2 * cc + b1 * b2 * ss + a1 * b2 * cs + b1 * a2 * sc;
}

}  // namespace detail

/// <f, h>_w with tooth edges weighted by w, in closed form.
inline double weighted_inner(const MetricGraph& g, const VertexConditions& cond, const Eigenfunction& f,
                             const Eigenfunction& h) {
  double acc = 0.0;
  for (const auto& e : g.edges) {
    acc += cond.weight(e) *
           detail::edge_product_integral(f.k, f.a(e.id), f.b(e.id), h.k, h.a(e.id), h.b(e.id), e.length);
  }
  return acc;
}

inline double weighted_norm_sq(const MetricGraph& g, const VertexConditions& cond, const Eigenfunction& f) {
  return weighted_inner(g, cond, f, f);
}

/// Worst violation of continuity and weighted Kirchhoff at the vertices,
/// measured with evaluate / evaluate_derivative and divided by the largest
/// edge amplitude (derivatives additionally by k).
inline double vertex_residual(const MetricGraph& g, const VertexConditions& cond, const Eigenfunction& f) {
  double scale = 0.0;
  for (int e = 0; e < f.edge_count(); ++e) scale = std::max(scale, std::hypot(f.a(e), f.b(e)));
  if (scale == 0.0) return 0.0;
  const double dscale = f.k > 0 ? f.k : 1.0;
  double worst = 0.0;
  const auto ends = detail::incidence(g);
  for (const auto& at : ends) {
    if (at.empty()) continue;
    auto value = [&](const detail::EdgeEnd& end) {
      const auto& e = g.edges[static_cast<std::size_t>(end.edge)];
      return evaluate(g, f, e.id, end.at_head ? e.length : 0.0);
    };
    const double v0 = value(at[0]);
    double flux = 0.0;
    for (const auto& end : at) {
      worst = std::max(worst, std::abs(value(end) - v0) / scale);
      const auto& e = g.edges[static_cast<std::size_t>(end.edge)];
      const double d = evaluate_derivative(g, f, e.id, end.at_head ? e.length : 0.0);
      flux += cond.weight(e) * (end.at_head ? -d : d);
    }
    worst = std::max(worst, std::abs(flux) / (dscale * scale));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Spectrum comparison

struct SpectrumPair {
  double lambda1 = 0.0, lambda2 = 0.0;
  int mult1 = 0, mult2 = 0;
  double rel_gap = 0.0;
};

struct SpectrumComparison {
  double max_rel_gap = 0.0;
  std::vector<SpectrumPair> pairs;
  std::vector<SpectrumPair> multiplicity_mismatches;  ///< includes unmatched values (multiplicity 0 on one side)
  double tol = 0.0;

  bool matched() const { return multiplicity_mismatches.empty() && max_rel_gap <= tol; }
};

inline double relative_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

/// Greedy in-order pairing. Two values pair when their relative gap is at
/// most tol; a value without partner is reported as a mismatch together
/// with its relative gap to the nearest value on the other side.
inline SpectrumComparison compare_spectra(const Spectrum& s1, const Spectrum& s2, double tol) {
  if (s1.k_max != s2.k_max) throw validation_error("spectra were scanned with different k_max");
  SpectrumComparison out;
  out.tol = tol;
  const auto& a = s1.values;
  const auto& b = s2.values;
  auto nearest_gap = [](double x, const std::vector<Eigenvalue>& other) {
    double best = other.empty() ? 1.0 : std::numeric_limits<double>::infinity();
    for (const auto& o : other) best = std::min(best, relative_gap(x, o.lambda));
    return best;
  };
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (i < a.size() && j < b.size() && relative_gap(a[i].lambda, b[j].lambda) <= tol) {
      SpectrumPair p{a[i].lambda, b[j].lambda, a[i].multiplicity, b[j].multiplicity,
                     relative_gap(a[i].lambda, b[j].lambda)};
      out.max_rel_gap = std::max(out.max_rel_gap, p.rel_gap);
      if (p.mult1 != p.mult2) out.multiplicity_mismatches.push_back(p);
      out.pairs.push_back(p);
      ++i;
      ++j;
    } else if (j >= b.size() || (i < a.size() && a[i].lambda < b[j].lambda)) {
      SpectrumPair p{a[i].lambda, std::numeric_limits<double>::quiet_NaN(), a[i].multiplicity, 0,
                     nearest_gap(a[i].lambda, b)};
      out.max_rel_gap = std::max(out.max_rel_gap, p.rel_gap);
      out.multiplicity_mismatches.push_back(p);
      ++i;
    } else {
      SpectrumPair p{std::numeric_limits<double>::quiet_NaN(), b[j].lambda, 0, b[j].multiplicity,
                     nearest_gap(b[j].lambda, a)};
      out.max_rel_gap = std::max(out.max_rel_gap, p.rel_gap);
      out.multiplicity_mismatches.push_back(p);
      ++j;
    }
  }
  return out;
}

inline void write_spectrum_csv(std::ostream& out, const Spectrum& s) {
  out << "k,lambda,multiplicity\n";
  for (const auto& e : s.values) out << format_real(e.k) << ',' << format_real(e.lambda) << ',' << e.multiplicity << "\n";
}

}  // namespace gears
