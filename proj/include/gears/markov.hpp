#pragma once

// Weighted random walks on unit-subdivided gears.
//
// Every routine is a template over the scalar: `double` for the floating
// mode and `Rational` for the exact one. Tooth edges carry weight w, all
// other edges weight 1, and d(v) is the weighted degree.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <queue>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>

#include "gears/error.hpp"
#include "gears/graph.hpp"
#include "gears/linalg.hpp"
#include "gears/quantum.hpp"
#include "gears/rational.hpp"
#include "gears/transplant.hpp"

namespace gears {

template <class S>
struct MarkovSystem {
  CombinatorialGraph graph;
  DenseMatrix<S> weights;  ///< symmetric weighted adjacency
  DenseMatrix<S> M;        ///< row-stochastic, M[u][v] = weights[u][v] / d[u]
  std::vector<S> d;
  S w = S(1);

  int size() const { return graph.vertex_count; }
};

namespace detail {

template <class S>
S scalar_abs(const S& v) {
  return v < S(0) ? S(-v) : v;
}

inline double to_real(double v) { return v; }
inline double to_real(const Rational& v) { return to_double(v); }

}  // namespace detail

template <class S>
MarkovSystem<S> markov_matrix(const CombinatorialGraph& cg, const S& w) {
  if (!(w > S(0))) throw validation_error("tooth weight w must be positive");
  const auto n = static_cast<std::size_t>(cg.vertex_count);
  MarkovSystem<S> ms;
  ms.graph = cg;
  ms.w = w;
  ms.weights = DenseMatrix<S>(n, n);
  for (const auto& e : cg.edges) {
    const S wt = e.cls == EdgeClass::tooth ? w : S(1);
    const auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
    ms.weights(u, v) += wt;
    if (u != v) ms.weights(v, u) += wt;
  }
  ms.d.assign(n, S(0));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) ms.d[u] += ms.weights(u, v);
  ms.M = DenseMatrix<S>(n, n);
  for (std::size_t u = 0; u < n; ++u) {
    if (ms.d[u] == S(0)) throw validation_error("isolated vertex in combinatorial graph");
    for (std::size_t v = 0; v < n; ++v) ms.M(u, v) = ms.weights(u, v) / ms.d[u];
  }
  return ms;
}

/// Floating copy of an exact system.
inline MarkovSystem<double> to_float(const MarkovSystem<Rational>& ms) {
  MarkovSystem<double> out;
  out.graph = ms.graph;
  out.w = to_double(ms.w);
  out.weights = ms.weights.map<double>([](const Rational& r) { return to_double(r); });
  out.M = ms.M.map<double>([](const Rational& r) { return to_double(r); });
  for (const auto& v : ms.d) out.d.push_back(to_double(v));
  return out;
}

/// Largest |d_u M[u][v] - d_v M[v][u]|; zero in exact mode.
template <class S>
S detailed_balance_defect(const MarkovSystem<S>& ms) {
  S worst(0);
  const auto n = static_cast<std::size_t>(ms.size());
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      worst = std::max(worst, detail::scalar_abs(S(ms.d[u] * ms.M(u, v) - ms.d[v] * ms.M(v, u))));
    }
  return worst;
}

/// Eigenvalues of M, ascending, with repetition. Computed from the
/// symmetric matrix diag(d)^{1/2} M diag(d)^{-1/2} by Jacobi rotations.
template <class S>
std::vector<double> markov_spectrum(const MarkovSystem<S>& ms) {
  const auto n = static_cast<std::size_t>(ms.size());
  DenseMatrix<double> sym(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      sym(u, v) = detail::to_real(ms.weights(u, v)) /
                  std::sqrt(detail::to_real(ms.d[u]) * detail::to_real(ms.d[v]));
    }
  return jacobi_eigen(sym).values;
}

struct GroupedEigenvalue {
  double value = 0.0;
  int multiplicity = 0;
};

inline std::vector<GroupedEigenvalue> group_eigenvalues(const std::vector<double>& sorted, double tol = 1e-9) {
  std::vector<GroupedEigenvalue> out;
  for (double v : sorted) {
    if (!out.empty() && std::abs(v - out.back().value) <= tol) {
      ++out.back().multiplicity;
    } else {
      out.push_back({v, 1});
    }
  }
  return out;
}

/// det(xI - M) as N(x) / D with N an integer polynomial (coefficients in
/// ascending powers) and D a positive integer.
struct ExactCharPoly {
  std::vector<BigInt> numerator;
  BigInt denominator = 1;

  /// Monic rational coefficients, ascending powers, leading 1 last.
  std::vector<Rational> coefficients() const {
    std::vector<Rational> c;
    for (const auto& a : numerator) c.emplace_back(a, denominator);
    return c;
  }

  bool operator==(const ExactCharPoly& o) const { return coefficients() == o.coefficients(); }
};

namespace detail {

// Exact coefficients of the integer polynomial through (x_i, y_i),
// x_i = 0..N, by Newton divided differences.
inline std::vector<BigInt> interpolate_integer_poly(const std::vector<BigInt>& values) {
  const std::size_t m = values.size();
  std::vector<Rational> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(level));
      if (i == level) break;
    }
  // Expand sum dd[i] * prod_{j<i} (x - j), Horner style from the top.
  std::vector<Rational> poly{dd[m - 1]};
  for (std::size_t i = m - 1; i-- > 0;) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t a = 0; a < poly.size(); ++a) {
      next[a + 1] += poly[a];
      next[a] -= poly[a] * Rational(static_cast<long>(i));
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  std::vector<BigInt> out;
  for (const auto& c : poly) {
    if (denominator(c) != 1) throw numerical_error("characteristic polynomial interpolation is not integral");
    out.push_back(numerator(c));
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace detail

/// Characteristic polynomial of M over the rationals. Uses M = D^{-1} W, so
/// det(xI - M) = det(xD - W) / det(D); after clearing the denominators of w
/// the numerator is an integer polynomial, found from Bareiss determinants
/// at x = 0..N and exact interpolation.
inline ExactCharPoly characteristic_polynomial_exact(const MarkovSystem<Rational>& ms) {
  const auto n = static_cast<std::size_t>(ms.size());
  BigInt scale = 1;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) scale = boost::multiprecision::lcm(scale, denominator(ms.weights(u, v)));
  auto to_int = [&](const Rational& r) { return BigInt(numerator(r) * (scale / denominator(r))); };
  DenseMatrix<BigInt> W(n, n);
  std::vector<BigInt> D(n);
  for (std::size_t u = 0; u < n; ++u) {
    BigInt sum = 0;
    for (std::size_t v = 0; v < n; ++v) {
      W(u, v) = to_int(ms.weights(u, v));
      sum += W(u, v);
    }
    D[u] = sum;
  }
  std::vector<BigInt> values;
  for (std::size_t x = 0; x <= n; ++x) {
    DenseMatrix<BigInt> A(n, n);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) A(u, v) = -W(u, v);
      A(u, u) += BigInt(static_cast<long>(x)) * D[u];
    }
    values.push_back(bareiss_determinant(std::move(A)));
  }
  ExactCharPoly p;
  p.numerator = detail::interpolate_integer_poly(values);
  p.denominator = 1;
  for (const auto& du : D) p.denominator *= du;
  const BigInt g = [&] {
    BigInt acc = p.denominator;
    for (const auto& c : p.numerator) acc = boost::multiprecision::gcd(acc, c);
    return acc;
  }();
  if (g > 1) {
    for (auto& c : p.numerator) c /= g;
    p.denominator /= g;
  }
  return p;
}

/// Outward derivative f'_{[v, v']}(v) = -M[f](v) + f(v').
template <class S>
S combinatorial_derivative(const MarkovSystem<S>& ms, const std::vector<S>& f, int v, int v2) {
  const auto n = static_cast<std::size_t>(ms.size());
  if (v < 0 || v2 < 0 || v >= ms.size() || v2 >= ms.size()) throw validation_error("vertex out of range");
  const auto a = static_cast<std::size_t>(v), b = static_cast<std::size_t>(v2);
  if (ms.weights(a, b) == S(0)) throw validation_error("combinatorial derivative needs adjacent vertices");
  S mf(0);
  for (std::size_t u = 0; u < n; ++u) mf += ms.M(a, u) * f[u];
  return f[b] - mf;
}

/// Weighted sum of outward derivatives at v; the walk makes it vanish.
template <class S>
S derivative_balance(const MarkovSystem<S>& ms, const std::vector<S>& f, int v) {
  const auto n = static_cast<std::size_t>(ms.size());
  S sum(0);
  for (std::size_t u = 0; u < n; ++u) {
    if (ms.weights(static_cast<std::size_t>(v), u) == S(0)) continue;
    sum += ms.weights(static_cast<std::size_t>(v), u) * combinatorial_derivative(ms, f, v, static_cast<int>(u));
  }
  return sum;
}

namespace detail {

template <class S>
std::vector<S> apply(const DenseMatrix<S>& m, const std::vector<S>& f) {
  return m * f;
}

// Derivative at slot j of a path, taken along the path direction; at the
// final slot it is the negated outward derivative towards the previous one.
template <class S>
S slot_derivative(const std::vector<S>& f, const std::vector<S>& mf, const std::vector<int>& path, std::size_t j) {
  const std::size_t l = path.size() - 1;
  const auto at = [&](std::size_t s) { return static_cast<std::size_t>(path[s]); };
  if (j < l) return f[at(j + 1)] - mf[at(j)];
  return mf[at(l)] - f[at(l - 1)];
}

template <class S>
bool close_enough(const S& a, const S& b, const S& scale) {
  if constexpr (std::is_same_v<S, double>) {
    return std::abs(a - b) <= 1e-12 * std::max(1.0, scale);
  } else {
    (void)scale;
    return a == b;
  }
}

}  // namespace detail

/// Combinatorial transplant of f from `primal` to `dual` (both subdivided
/// gears with matching edge ids). Slot j of dual side i receives
/// p_i' + w t_i', slot j of dual tooth i receives p_i' - t_i'; `swapped`
/// exchanges the two rows for an index. Throws when two slots that meet at
/// one dual vertex disagree.
template <class S>
std::vector<S> combinatorial_transplant(const MarkovSystem<S>& primal, const MarkovSystem<S>& dual,
                                        const std::vector<S>& f, const std::vector<bool>& swapped = {}) {
  if (static_cast<int>(f.size()) != primal.size()) throw validation_error("vertex function has the wrong size");
  const auto pairs = gear_edge_pairs(primal.graph.source);
  const auto dual_pairs = gear_edge_pairs(dual.graph.source);
  if (pairs != dual_pairs) throw validation_error("primal and dual gears must share side/tooth edge ids");
  if (!swapped.empty() && swapped.size() != pairs.size()) throw validation_error("assignment size does not match the gear");
  const std::vector<S> mf = detail::apply(primal.M, f);
  S scale(0);
  for (const auto& v : f) scale = std::max(scale, detail::scalar_abs(v));

  std::vector<std::optional<S>> out(static_cast<std::size_t>(dual.size()));
  auto put = [&](int vertex, const S& value) {
    auto& slot = out[static_cast<std::size_t>(vertex)];
    if (!slot) {
      slot = value;
    } else if (!detail::close_enough(*slot, value, scale)) {
      throw Error(ErrorKind::verification, "combinatorial transplant is inconsistent at dual vertex " + std::to_string(vertex));
    }
  };
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto side = static_cast<std::size_t>(pairs[i][0]), tooth = static_cast<std::size_t>(pairs[i][1]);
    const auto& ps = primal.graph.paths[side];
    const auto& pt = primal.graph.paths[tooth];
    const auto& ds = dual.graph.paths[side];
    const auto& dt = dual.graph.paths[tooth];
    if (ps.size() != pt.size() || ds.size() != ps.size() || dt.size() != ps.size()) {
      throw validation_error("side and tooth must have equal integer length");
    }
    const bool sw = !swapped.empty() && swapped[i];
    for (std::size_t j = 0; j < ps.size(); ++j) {
      const S p = detail::slot_derivative(f, mf, ps, j);
      const S t = detail::slot_derivative(f, mf, pt, j);
      const S plus_w = p + primal.w * t;
      const S minus = p - t;
      put(ds[j], sw ? minus : plus_w);
      put(dt[j], sw ? plus_w : minus);
    }
  }
  std::vector<S> result;
  result.reserve(out.size());
  for (std::size_t v = 0; v < out.size(); ++v) {
    if (!out[v]) throw validation_error("dual vertex " + std::to_string(v) + " is not covered by any slot");
    result.push_back(*out[v]);
  }
  return result;
}

/// Matrix of the combinatorial transplant: column j is the image of the
/// indicator of vertex j.
template <class S>
DenseMatrix<S> transplantation_matrix(const MarkovSystem<S>& primal, const MarkovSystem<S>& dual) {
  const auto n = static_cast<std::size_t>(primal.size());
  DenseMatrix<S> T(static_cast<std::size_t>(dual.size()), n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<S> e(n, S(0));
    e[j] = S(1);
    T.set_column(j, combinatorial_transplant(primal, dual, e));
  }
  return T;
}

/// +-1 two-colouring with vertex 0 coloured +1, or nothing if the graph
/// has an odd cycle.
inline std::optional<std::vector<int>> bipartite_signs(const CombinatorialGraph& cg) {
  const auto adj = cg.adjacency();
  std::vector<int> s(static_cast<std::size_t>(cg.vertex_count), 0);
  for (int start = 0; start < cg.vertex_count; ++start) {
    if (s[static_cast<std::size_t>(start)] != 0) continue;
    s[static_cast<std::size_t>(start)] = 1;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        auto& sv = s[static_cast<std::size_t>(v)];
        if (sv == 0) {
          sv = -s[static_cast<std::size_t>(u)];
          q.push(v);
        } else if (sv == s[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  return s;
}

template <class S>
struct Conjugator {
  DenseMatrix<S> T;
  DenseMatrix<S> J_plus;
  DenseMatrix<S> J_minus;
  DenseMatrix<S> C;
  bool bipartite = false;
};

/// C = T + J+ + J-, with J+ = 1 d^T and, for bipartite gears,
/// J- = s~ (s o d)^T. J+ carries constants to constants and J- carries the
/// sign vector to the dual sign vector, which fills exactly the kernel of T.
template <class S>
Conjugator<S> build_conjugator(const MarkovSystem<S>& primal, const MarkovSystem<S>& dual) {
  const auto n = static_cast<std::size_t>(primal.size());
  if (dual.size() != primal.size()) throw validation_error("primal and dual must have the same vertex count");
  Conjugator<S> c;
  c.T = transplantation_matrix(primal, dual);
  c.J_plus = DenseMatrix<S>(n, n);
  c.J_minus = DenseMatrix<S>(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) c.J_plus(u, v) = primal.d[v];
  const auto s = bipartite_signs(primal.graph);
  const auto st = bipartite_signs(dual.graph);
  if (s.has_value() != st.has_value()) throw validation_error("primal and dual disagree on bipartiteness");
  c.bipartite = s.has_value();
  if (c.bipartite) {
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) c.J_minus(u, v) = S((*st)[u] * (*s)[v]) * primal.d[v];
  }
  c.C = c.T + c.J_plus + c.J_minus;
  return c;
}

/// max |M~ C - C M| entrywise.
template <class S>
S conjugation_residual(const MarkovSystem<S>& primal, const MarkovSystem<S>& dual, const DenseMatrix<S>& C) {
  const DenseMatrix<S> r = dual.M * C - C * primal.M;
  S worst(0);
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) worst = std::max(worst, detail::scalar_abs(r(i, j)));
  return worst;
}

template <class S>
double smallest_singular_value(const DenseMatrix<S>& m) {
  Eigen::MatrixXd a(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = detail::to_real(m(i, j));
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& sv = svd.singularValues();
  return sv.size() == 0 ? 0.0 : sv(sv.size() - 1);
}

inline std::size_t numerical_rank(const DenseMatrix<double>& m, double tol = 1e-9) {
  Eigen::MatrixXd a(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& sv = svd.singularValues();
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * std::max(1.0, sv(0))) ++r;
  return r;
}

/// Comparison of a unit gear's quantum spectrum against what its walk
/// predicts. Values are wavenumbers k; matching uses relative gaps on k^2.
struct CrosscheckEntry {
  double expected_k = 0.0;
  double found_k = 0.0;
  double rel_gap = 0.0;
  std::string source;  ///< "markov" or "circle"
};

struct CrosscheckReport {
  double k_max = 0.0;
  std::vector<CrosscheckEntry> entries;
  int expected_count = 0;
  int quantum_count = 0;
  double max_rel_gap = 0.0;
  double tol = 1e-8;
  std::vector<std::string> problems;

  bool ok() const { return problems.empty() && expected_count == quantum_count && max_rel_gap <= tol; }
};

/// Expected nonzero wavenumbers up to k_max: arccos branches of every
/// eigenvalue mu of M other than +-1, and k = j pi with multiplicity 2 when
/// j times the polygon perimeter is even (eigenfunctions of the polygon
/// circle vanishing at integer points, together with the +-1 eigenvectors).
inline std::vector<std::pair<double, std::string>> expected_wavenumbers(const MarkovSystem<double>& ms, double k_max,
                                                                        double edge_tol = 1e-9) {
  constexpr double pi = std::numbers::pi;
  std::vector<std::pair<double, std::string>> out;
  for (double mu : markov_spectrum(ms)) {
    if (std::abs(std::abs(mu) - 1.0) < 1e-9) continue;
    const double theta = std::acos(std::clamp(mu, -1.0, 1.0));
    for (int j = 0;; ++j) {
      const double k1 = theta + 2 * pi * j, k2 = 2 * pi * (j + 1) - theta;
      if (k1 > k_max + edge_tol) break;
      out.emplace_back(k1, "markov");
      if (k2 <= k_max + edge_tol) out.emplace_back(k2, "markov");
    }
  }
  long perimeter = 0;
  for (const auto& e : ms.graph.source.edges) {
    if (e.cls == EdgeClass::polygon) perimeter += std::lround(e.length);
  }
  for (int j = 1; j * pi <= k_max + edge_tol; ++j) {
    if ((static_cast<long>(j) * perimeter) % 2 == 0) {
      out.emplace_back(j * pi, "circle");
      out.emplace_back(j * pi, "circle");
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline CrosscheckReport crosscheck_quantum(const MarkovSystem<double>& ms, const Spectrum& quantum, double k_max,
                                           double tol = 1e-8) {
  CrosscheckReport rep;
  rep.k_max = k_max;
  rep.tol = tol;
  const auto expected = expected_wavenumbers(ms, k_max);
  std::vector<double> found;
  for (const auto& ev : quantum.values) {
    if (ev.lambda <= 0.0) continue;
    if (ev.k > k_max + 1e-9) continue;
    for (int m = 0; m < ev.multiplicity; ++m) found.push_back(ev.k);
  }
  rep.expected_count = static_cast<int>(expected.size());
  rep.quantum_count = static_cast<int>(found.size());
  const std::size_t common = std::min(expected.size(), found.size());
  for (std::size_t i = 0; i < common; ++i) {
    const double a = expected[i].first, b = found[i];
    CrosscheckEntry entry{a, b, relative_gap(a * a, b * b), expected[i].second};
    rep.max_rel_gap = std::max(rep.max_rel_gap, entry.rel_gap);
    if (entry.rel_gap > tol) rep.problems.push_back("value mismatch near k = " + format_real(a));
    rep.entries.push_back(entry);
  }
  if (expected.size() != found.size()) {
    rep.problems.push_back("count mismatch: expected " + std::to_string(expected.size()) + ", quantum " +
                           std::to_string(found.size()));
  }
  return rep;
}

}  // namespace gears
