#pragma once

// Generalised characteristic polynomials of digraphs,
//
//   L_G(z) = x I + y J + alpha A + beta A^T + gamma D_out + delta D_in,
//
// evaluated over a prime field for identity testing, expanded exactly by
// interpolation, and the explicit 12 x 12 intertwiner for the balanced
// 3-gear digraphs.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gears/error.hpp"
#include "gears/graph.hpp"
#include "gears/linalg.hpp"
#include "gears/rational.hpp"

namespace gears {

// ---------------------------------------------------------------------------
// Prime field arithmetic

inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

/// Further 61-bit primes, used only when exact coefficients need more room
/// than one modulus gives (Chinese remaindering).
inline constexpr std::array<std::uint64_t, 3> kCrtPrimes = {kPrime, 2305843009213693921ULL, 2305843009213693907ULL};

struct ModField {
  std::uint64_t p = kPrime;

  std::uint64_t reduce(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(v % static_cast<std::int64_t>(p));
    return static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(p) : m);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1U) r = mul(r, a);
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) throw numerical_error("inverse of zero in prime field");
    return pow(a, p - 2);
  }
};

/// Determinant mod p by Gaussian elimination; `m` is consumed.
inline std::uint64_t det_mod(DenseMatrix<std::uint64_t> m, const ModField& f) {
  const std::size_t n = m.rows();
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(piv, j));
      det = f.sub(0, det);
    }
    det = f.mul(det, m(c, c));
    const std::uint64_t inv = f.inv(m(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      const std::uint64_t factor = f.mul(m(r, c), inv);
      for (std::size_t j = c; j < n; ++j) m(r, j) = f.sub(m(r, j), f.mul(factor, m(c, j)));
    }
  }
  return det;
}

// ---------------------------------------------------------------------------
// Pencil

enum Symbol { sym_x = 0, sym_y, sym_alpha, sym_beta, sym_gamma, sym_delta };
inline constexpr std::array<const char*, 6> kSymbolNames = {"x", "y", "alpha", "beta", "gamma", "delta"};

struct Pencil {
  int n = 0;
  DenseMatrix<long> A;      ///< arc multiplicities
  std::vector<long> d_out;  ///< row sums of A
  std::vector<long> d_in;   ///< column sums of A

  /// Integer coefficient matrix of one symbol.
  DenseMatrix<long> coefficient(Symbol s) const {
    const auto m = static_cast<std::size_t>(n);
    DenseMatrix<long> out(m, m, 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        switch (s) {
          case sym_x: out(i, j) = i == j; break;
          case sym_y: out(i, j) = 1; break;
          case sym_alpha: out(i, j) = A(i, j); break;
          case sym_beta: out(i, j) = A(j, i); break;
          case sym_gamma: out(i, j) = i == j ? d_out[i] : 0; break;
          case sym_delta: out(i, j) = i == j ? d_in[i] : 0; break;
        }
      }
    return out;
  }
};

inline Pencil pencil(const Digraph& g) {
  Pencil p;
  p.n = g.vertex_count;
  const auto m = static_cast<std::size_t>(p.n);
  p.A = DenseMatrix<long>(m, m, 0);
  for (const auto& [u, v] : g.arcs) {
    if (u < 0 || v < 0 || u >= p.n || v >= p.n) throw validation_error("arc endpoint out of range");
    p.A(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) += 1;
  }
  p.d_out.assign(m, 0);
  p.d_in.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      p.d_out[i] += p.A(i, j);
      p.d_in[j] += p.A(i, j);
    }
  return p;
}

/// Six field elements (x, y, alpha, beta, gamma, delta), reduced mod p.
struct PrimeFieldPoint {
  std::array<std::uint64_t, 6> z{};

  std::uint64_t operator[](Symbol s) const { return z[static_cast<std::size_t>(s)]; }
};

inline DenseMatrix<std::uint64_t> pencil_at(const Pencil& pen, const PrimeFieldPoint& pt, const ModField& f) {
  const auto m = static_cast<std::size_t>(pen.n);
  DenseMatrix<std::uint64_t> L(m, m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::uint64_t v = pt[sym_y] % f.p;
      v = f.add(v, f.mul(pt[sym_alpha] % f.p, f.reduce(pen.A(i, j))));
      v = f.add(v, f.mul(pt[sym_beta] % f.p, f.reduce(pen.A(j, i))));
      if (i == j) {
        v = f.add(v, pt[sym_x] % f.p);
        v = f.add(v, f.mul(pt[sym_gamma] % f.p, f.reduce(pen.d_out[i])));
        v = f.add(v, f.mul(pt[sym_delta] % f.p, f.reduce(pen.d_in[i])));
      }
      L(i, j) = v;
    }
  return L;
}

/// det(L_G(pt)) mod p.
inline std::uint64_t eval_det(const Pencil& pen, const PrimeFieldPoint& pt, std::uint64_t p = kPrime) {
  const ModField f{p};
  return det_mod(pencil_at(pen, pt, f), f);
}

// ---------------------------------------------------------------------------
// Identity testing

/// Which polynomial is compared: the restriction to y = 0 (the one tied to
/// the reversing zeta function) or the full pencil determinant.
enum class ZetaSlice { eta, full };

inline const char* to_string(ZetaSlice s) { return s == ZetaSlice::eta ? "eta" : "full"; }

struct ZetaVerdict {
  int n = 0;
  int trials = 0;
  std::uint64_t prime = kPrime;
  std::uint64_t seed = 0;
  ZetaSlice slice = ZetaSlice::eta;
  bool equivalent = false;
  int trials_run = 0;
  /// Schwartz-Zippel bound n/p on the chance that one random point misses a
  /// difference; the chance that all trials miss is at most its power.
  double failure_bound = 0.0;
  std::optional<PrimeFieldPoint> distinguishing_point;
  std::string note;

  std::string verdict() const { return equivalent ? "equivalent-with-bound" : "distinguished"; }
};

/// Point for trial `t`: a SplitMix-style derivation from the master seed so
/// that each trial is reproducible on its own.
inline PrimeFieldPoint trial_point(std::uint64_t seed, int t, ZetaSlice slice) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(t)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::uint64_t> dist(0, kPrime - 1);
  PrimeFieldPoint pt;
  for (auto& v : pt.z) v = dist(rng);
  if (slice == ZetaSlice::eta) pt.z[sym_y] = 0;
  return pt;
}

inline ZetaVerdict zeta_equivalent(const Digraph& g1, const Digraph& g2, int trials, std::uint64_t seed,
                                   ZetaSlice slice = ZetaSlice::eta) {
  if (trials < 1) throw validation_error("zeta test needs at least one trial");
  ZetaVerdict v;
  v.n = std::max(g1.vertex_count, g2.vertex_count);
  v.trials = trials;
  v.seed = seed;
  v.slice = slice;
  v.failure_bound = static_cast<double>(v.n) / static_cast<double>(kPrime);
  if (g1.vertex_count != g2.vertex_count) {
    v.note = "vertex counts differ, so the determinants have different degrees";
    return v;
  }
  const Pencil p1 = pencil(g1), p2 = pencil(g2);
  for (int t = 0; t < trials; ++t) {
    const PrimeFieldPoint pt = trial_point(seed, t, slice);
    ++v.trials_run;
    if (eval_det(p1, pt) != eval_det(p2, pt)) {
      v.distinguishing_point = pt;
      return v;
    }
  }
  v.equivalent = true;
  return v;
}

// ---------------------------------------------------------------------------
// Sparse polynomials in (x, y, alpha, beta, gamma, delta)

using Exponent = std::array<int, 6>;

class SparsePolynomial {
 public:
  SparsePolynomial() = default;
  explicit SparsePolynomial(const BigInt& c) {
    if (c != 0) terms_[Exponent{}] = c;
  }

  static SparsePolynomial monomial(const BigInt& c, const Exponent& e) {
    SparsePolynomial p;
    if (c != 0) p.terms_[e] = c;
    return p;
  }
  static SparsePolynomial variable(Symbol s) {
    Exponent e{};
    e[static_cast<std::size_t>(s)] = 1;
    return monomial(1, e);
  }

  const std::map<Exponent, BigInt>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
    return a;
  }
  SparsePolynomial& operator+=(const SparsePolynomial& b) { return *this = *this + b; }
  SparsePolynomial& operator-=(const SparsePolynomial& b) { return *this = *this - b; }

  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    SparsePolynomial r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e;
        for (std::size_t i = 0; i < 6; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  bool operator==(const SparsePolynomial&) const = default;

  /// -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3] + e[4] + e[5]);
    return d;
  }

  bool is_homogeneous(int degree) const {
    for (const auto& [e, c] : terms_)
      if (e[0] + e[1] + e[2] + e[3] + e[4] + e[5] != degree) return false;
    return true;
  }

  int degree_in(Symbol s) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(s)]);
    return d;
  }

  /// Terms not involving `s`, i.e. the restriction s = 0.
  SparsePolynomial restrict_zero(Symbol s) const {
    SparsePolynomial r;
    for (const auto& [e, c] : terms_)
      if (e[static_cast<std::size_t>(s)] == 0) r.terms_.emplace(e, c);
    return r;
  }

  /// Renames variables: variable i becomes variable perm[i].
  SparsePolynomial permute(const std::array<Symbol, 6>& perm) const {
    SparsePolynomial r;
    for (const auto& [e, c] : terms_) {
      Exponent f{};
      for (std::size_t i = 0; i < 6; ++i) f[static_cast<std::size_t>(perm[i])] += e[i];
      r.add_term(f, c);
    }
    return r;
  }

  std::uint64_t evaluate_mod(const PrimeFieldPoint& pt, std::uint64_t p = kPrime) const {
    const ModField f{p};
    std::uint64_t acc = 0;
    for (const auto& [e, c] : terms_) {
      BigInt cm = c % p;
      if (cm < 0) cm += p;
      std::uint64_t term = static_cast<std::uint64_t>(cm);
      for (std::size_t i = 0; i < 6; ++i) term = f.mul(term, f.pow(pt.z[i] % p, static_cast<std::uint64_t>(e[i])));
      acc = f.add(acc, term);
    }
    return acc;
  }

  BigInt evaluate(const std::array<long, 6>& v) const {
    BigInt acc = 0;
    for (const auto& [e, c] : terms_) {
      BigInt term = c;
      for (std::size_t i = 0; i < 6; ++i)
        for (int k = 0; k < e[i]; ++k) term *= v[i];
      acc += term;
    }
    return acc;
  }

  /// One line per term, `coeff x^a y^b alpha^c beta^d gamma^e delta^f`,
  /// exponent tuples in descending lexicographic order.
  std::string dump() const {
    std::ostringstream out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      out << it->second.str();
      for (std::size_t i = 0; i < 6; ++i) out << ' ' << kSymbolNames[i] << '^' << it->first[i];
      out << '\n';
    }
    return out.str();
  }

 private:
  std::map<Exponent, BigInt> terms_;
};

namespace detail {

// Monomial coefficients of the polynomial of degree < values.size() taking
// values[i] at i = 0, 1, 2, ... (Newton form, then expansion).
inline std::vector<std::uint64_t> interpolate_mod(std::vector<std::uint64_t> dd, const ModField& f) {
  const std::size_t m = dd.size();
  for (std::size_t level = 1; level < m; ++level) {
    const std::uint64_t inv = f.inv(level % f.p);
    for (std::size_t i = m - 1; i >= level; --i) {
      dd[i] = f.mul(f.sub(dd[i], dd[i - 1]), inv);
      if (i == level) break;
    }
  }
  std::vector<std::uint64_t> poly{dd[m - 1]};
  for (std::size_t i = m - 1; i-- > 0;) {
    std::vector<std::uint64_t> next(poly.size() + 1, 0);
    for (std::size_t a = 0; a < poly.size(); ++a) {
      next[a + 1] = f.add(next[a + 1], poly[a]);
      next[a] = f.sub(next[a], f.mul(poly[a], i % f.p));
    }
    next[0] = f.add(next[0], dd[i]);
    poly = std::move(next);
  }
  poly.resize(m);
  return poly;
}

// In-place conversion of a dense tensor of values on the grid
// {0..dims[0]-1} x ... into monomial coefficients, one axis at a time.
inline void interpolate_tensor(std::vector<std::uint64_t>& data, const std::vector<std::size_t>& dims, const ModField& f) {
  std::size_t stride = 1;
  for (std::size_t axis = dims.size(); axis-- > 0;) {
    const std::size_t len = dims[axis];
    const std::size_t block = stride * len;
    for (std::size_t base = 0; base < data.size(); base += block)
      for (std::size_t off = 0; off < stride; ++off) {
        std::vector<std::uint64_t> line(len);
        for (std::size_t k = 0; k < len; ++k) line[k] = data[base + off + k * stride];
        line = interpolate_mod(std::move(line), f);
        for (std::size_t k = 0; k < len; ++k) data[base + off + k * stride] = line[k];
      }
    stride = block;
  }
}

// Symmetric lift of residues to integers in (-P/2, P/2].
inline BigInt crt_lift(const std::vector<std::uint64_t>& residues, const std::vector<std::uint64_t>& primes) {
  BigInt value = 0, modulus = 1;
  for (std::size_t k = 0; k < primes.size(); ++k) {
    const BigInt pk = primes[k];
    // value + modulus * t == residue (mod pk)
    BigInt diff = (BigInt(residues[k]) - value % pk) % pk;
    if (diff < 0) diff += pk;
    const ModField f{primes[k]};
    const std::uint64_t inv = f.inv(static_cast<std::uint64_t>(modulus % pk));
    const std::uint64_t t = f.mul(static_cast<std::uint64_t>(diff), inv);
    value += modulus * t;
    modulus *= pk;
  }
  if (value > modulus / 2) value -= modulus;
  return value;
}

// Primes whose product exceeds 2 * bound.
inline std::vector<std::uint64_t> primes_for_bound(const BigInt& bound) {
  std::vector<std::uint64_t> chosen;
  BigInt prod = 1;
  for (auto p : kCrtPrimes) {
    chosen.push_back(p);
    prod *= p;
    if (prod > 2 * bound) return chosen;
  }
  throw numerical_error("coefficient bound exceeds the available moduli");
}

}  // namespace detail

/// Full det(L_G(z)) with exact integer coefficients, n <= 12.
///
/// The determinant is homogeneous of degree n and affine in y (J has rank
/// one), so x is set to 1, y is interpolated on {0, 1} and alpha..delta on
/// {0..n}; the result is re-homogenised with powers of x. Coefficients are
/// bounded by the product of the rows' absolute coefficient sums, which
/// decides how many primes are combined.
inline SparsePolynomial char_poly_symbolic(const Pencil& pen) {
  if (pen.n > 12) throw validation_error("symbolic expansion is limited to n <= 12");
  if (pen.n < 1) throw validation_error("pencil has no vertices");
  const auto m = static_cast<std::size_t>(pen.n);
  BigInt bound = 1;
  for (std::size_t i = 0; i < m; ++i) bound *= BigInt(1 + pen.n + 2 * (pen.d_out[i] + pen.d_in[i]));
  const auto primes = detail::primes_for_bound(bound);

  const std::size_t side = m + 1;
  const std::vector<std::size_t> dims{2, side, side, side, side};
  const std::size_t total = 2 * side * side * side * side;
  std::vector<std::vector<std::uint64_t>> per_prime;
  for (auto p : primes) {
    const ModField f{p};
    std::vector<std::uint64_t> data(total);
    std::size_t idx = 0;
    for (std::uint64_t y = 0; y < 2; ++y)
      for (std::uint64_t a = 0; a < side; ++a)
        for (std::uint64_t b = 0; b < side; ++b)
          for (std::uint64_t c = 0; c < side; ++c)
            for (std::uint64_t d = 0; d < side; ++d) {
              const PrimeFieldPoint pt{{1, y, a, b, c, d}};
              data[idx++] = det_mod(pencil_at(pen, pt, f), f);
            }
    detail::interpolate_tensor(data, dims, f);
    per_prime.push_back(std::move(data));
  }

  SparsePolynomial result;
  std::size_t idx = 0;
  std::vector<std::uint64_t> residues(primes.size());
  for (int y = 0; y < 2; ++y)
    for (int a = 0; a < static_cast<int>(side); ++a)
      for (int b = 0; b < static_cast<int>(side); ++b)
        for (int c = 0; c < static_cast<int>(side); ++c)
          for (int d = 0; d < static_cast<int>(side); ++d, ++idx) {
            bool zero = true;
            for (std::size_t k = 0; k < primes.size(); ++k) {
              residues[k] = per_prime[k][idx];
              zero = zero && residues[k] == 0;
            }
            if (zero) continue;
            const int deg = y + a + b + c + d;
            if (deg > pen.n) throw numerical_error("interpolated determinant exceeds degree n");
            result.add_term(Exponent{pen.n - deg, y, a, b, c, d}, detail::crt_lift(residues, primes));
          }
  return result;
}

// ---------------------------------------------------------------------------
// The explicit intertwiner for the balanced 3-gear digraphs

using PolyMatrix = std::vector<std::vector<SparsePolynomial>>;

/// The 12 x 12 matrix T with monomial entries in (alpha, beta, gamma),
/// 0-based rows and columns.
inline PolyMatrix explicit_conjugator_T() {
  auto mono = [](long c, int a, int b, int g) { return SparsePolynomial::monomial(c, Exponent{0, 0, a, b, g, 0}); };
  const auto A3 = mono(1, 3, 0, 0), A2G = mono(1, 2, 0, 1), A2G2 = mono(2, 2, 0, 1);
  PolyMatrix T(12, std::vector<SparsePolynomial>(12));
  auto set = [&](int r, int c, const SparsePolynomial& v) { T[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v; };
  // Upper block rows: alpha^3 on the diagonal of both halves, gamma terms
  // one step behind.
  set(0, 0, A3), set(0, 5, A2G2), set(0, 6, A3);
  set(1, 0, A2G2), set(1, 1, A3), set(1, 7, A3);
  set(2, 1, A2G), set(2, 2, A3), set(2, 7, A2G), set(2, 8, A3);
  set(3, 2, A2G2), set(3, 3, A3), set(3, 9, A3);
  set(4, 3, A2G), set(4, 4, A3), set(4, 9, A2G), set(4, 10, A3);
  set(5, 4, A2G), set(5, 5, A3), set(5, 10, A2G), set(5, 11, A3);
  // Lower rows: entry in the left half, its negative six columns further.
  auto pair = [&](int r, int c, const SparsePolynomial& v) {
    set(r, c, v);
    set(r, c + 6, SparsePolynomial() - v);
  };
  pair(6, 0, mono(1, 2, 1, 0));
  pair(7, 1, mono(1, 1, 2, 0));
  pair(8, 1, mono(1, 1, 1, 1)), pair(8, 2, mono(1, 2, 1, 0));
  pair(9, 3, mono(1, 0, 3, 0));
  pair(10, 3, mono(1, 0, 2, 1)), pair(10, 4, mono(1, 1, 2, 0));
  pair(11, 4, mono(1, 1, 1, 1)), pair(11, 5, mono(1, 2, 1, 0));
  return T;
}

inline PolyMatrix pencil_matrix(const Pencil& pen) {
  const auto m = static_cast<std::size_t>(pen.n);
  PolyMatrix L(m, std::vector<SparsePolynomial>(m));
  for (int s = sym_x; s <= sym_delta; ++s) {
    const auto coeff = pen.coefficient(static_cast<Symbol>(s));
    const auto var = SparsePolynomial::variable(static_cast<Symbol>(s));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (coeff(i, j) != 0) L[i][j] += SparsePolynomial(coeff(i, j)) * var;
  }
  return L;
}

inline PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  PolyMatrix c(n, std::vector<SparsePolynomial>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

/// det(T) as a polynomial in (alpha, beta, gamma). Every entry of T has
/// degree 3, so det(T) is homogeneous of degree 36: beta is set to 1,
/// (alpha, gamma) are interpolated on a 37 x 37 grid and beta is restored.
inline SparsePolynomial determinant_of_T(const PolyMatrix& T) {
  const std::size_t n = T.size();
  const int degree = 3 * static_cast<int>(n);
  BigInt bound = 1;
  for (const auto& row : T) {
    BigInt s = 0;
    for (const auto& e : row)
      for (const auto& [ex, c] : e.terms()) s += abs(c);
    bound *= s;
  }
  const auto primes = detail::primes_for_bound(bound);
  const std::size_t side = static_cast<std::size_t>(degree) + 1;
  std::vector<std::vector<std::uint64_t>> per_prime;
  for (auto p : primes) {
    const ModField f{p};
    std::vector<std::uint64_t> data(side * side);
    for (std::size_t a = 0; a < side; ++a)
      for (std::size_t g = 0; g < side; ++g) {
        const PrimeFieldPoint pt{{0, 0, a, 1, g, 0}};
        DenseMatrix<std::uint64_t> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) m(i, j) = T[i][j].evaluate_mod(pt, p);
        data[a * side + g] = det_mod(std::move(m), f);
      }
    detail::interpolate_tensor(data, {side, side}, f);
    per_prime.push_back(std::move(data));
  }
  SparsePolynomial result;
  std::vector<std::uint64_t> residues(primes.size());
  for (std::size_t a = 0; a < side; ++a)
    for (std::size_t g = 0; g < side; ++g) {
      bool zero = true;
      for (std::size_t k = 0; k < primes.size(); ++k) {
        residues[k] = per_prime[k][a * side + g];
        zero = zero && residues[k] == 0;
      }
      if (zero) continue;
      const int ia = static_cast<int>(a), ig = static_cast<int>(g);
      if (ia + ig > degree) throw numerical_error("det(T) interpolation exceeds degree 36");
      result.add_term(Exponent{0, 0, ia, degree - ia - ig, ig, 0}, detail::crt_lift(residues, primes));
    }
  return result;
}

/// ((2 alpha^3)^6 - (2 alpha^2 gamma)^6) alpha^8 beta^10, expanded.
inline SparsePolynomial expected_det_T() {
  return SparsePolynomial::monomial(64, Exponent{0, 0, 26, 10, 0, 0}) -
         SparsePolynomial::monomial(64, Exponent{0, 0, 20, 10, 6, 0});
}

struct TCheck {
  std::size_t residual_terms = 0;         ///< nonzero terms of L~ T - T L, all entries
  std::size_t residual_terms_eta = 0;     ///< those without y
  std::size_t residual_entries_eta = 0;   ///< entries with a y-free residual
  bool intertwines_eta = false;           ///< L~ T = T L on y = 0, exactly
  bool intertwines_full = false;
  SparsePolynomial det_T;
  bool det_matches = false;
  BigInt det_T_at_112;                    ///< det(T) at (alpha, beta, gamma) = (1, 1, 2)
  int point_trials = 0;
  bool points_agree_eta = false;          ///< same check at random field points

  bool ok() const { return intertwines_eta && det_matches && points_agree_eta; }
};

inline TCheck verify_T(const Digraph& g, const Digraph& g_dual, int point_trials = 20, std::uint64_t seed = 7) {
  if (g.vertex_count != 12 || g_dual.vertex_count != 12) throw validation_error("verify_T needs the 12-vertex digraphs");
  const PolyMatrix T = explicit_conjugator_T();
  const Pencil p = pencil(g), pd = pencil(g_dual);
  const PolyMatrix L = pencil_matrix(p), Ld = pencil_matrix(pd);
  const PolyMatrix lhs = multiply(Ld, T), rhs = multiply(T, L);
  TCheck c;
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j) {
      const SparsePolynomial r = lhs[i][j] - rhs[i][j];
      c.residual_terms += r.size();
      const auto eta = r.restrict_zero(sym_y);
      c.residual_terms_eta += eta.size();
      if (!eta.is_zero()) ++c.residual_entries_eta;
    }
  c.intertwines_eta = c.residual_terms_eta == 0;
  c.intertwines_full = c.residual_terms == 0;
  c.det_T = determinant_of_T(T);
  c.det_matches = c.det_T == expected_det_T();
  c.det_T_at_112 = c.det_T.evaluate({0, 0, 1, 1, 2, 0});

  // Independent numeric route: L~(z) T(z) - T(z) L(z) at random points, y = 0.
  const ModField f{kPrime};
  c.point_trials = point_trials;
  c.points_agree_eta = true;
  for (int t = 0; t < point_trials; ++t) {
    const PrimeFieldPoint pt = trial_point(seed, t, ZetaSlice::eta);
    const auto Lz = pencil_at(p, pt, f), Ldz = pencil_at(pd, pt, f);
    DenseMatrix<std::uint64_t> Tz(12, 12);
    for (std::size_t i = 0; i < 12; ++i)
      for (std::size_t j = 0; j < 12; ++j) Tz(i, j) = T[i][j].evaluate_mod(pt);
    for (std::size_t i = 0; i < 12 && c.points_agree_eta; ++i)
      for (std::size_t j = 0; j < 12; ++j) {
        std::uint64_t a = 0, b = 0;
        for (std::size_t k = 0; k < 12; ++k) {
          a = f.add(a, f.mul(Ldz(i, k), Tz(k, j)));
          b = f.add(b, f.mul(Tz(i, k), Lz(k, j)));
        }
        if (a != b) {
          c.points_agree_eta = false;
          break;
        }
      }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Isomorphism

/// Vertex bijection phi with arcs u->v in g1 exactly when phi(u)->phi(v) in
/// g2 (with multiplicities), or nothing. Backtracking over vertices in
/// order of decreasing degree, candidates restricted to equal (in, out)
/// degrees. Limited to n <= 16.
inline std::optional<std::vector<int>> digraph_isomorphic(const Digraph& g1, const Digraph& g2) {
  if (g1.vertex_count > 16 || g2.vertex_count > 16) throw validation_error("isomorphism search is limited to n <= 16");
  if (g1.vertex_count != g2.vertex_count || g1.arcs.size() != g2.arcs.size()) return std::nullopt;
  const Pencil p1 = pencil(g1), p2 = pencil(g2);
  const int n = g1.vertex_count;
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return p1.d_in[static_cast<std::size_t>(a)] + p1.d_out[static_cast<std::size_t>(a)] >
           p1.d_in[static_cast<std::size_t>(b)] + p1.d_out[static_cast<std::size_t>(b)];
  });
  std::vector<int> phi(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);

  auto compatible = [&](int u, int cand, std::size_t depth) {
    const auto su = static_cast<std::size_t>(u), sc = static_cast<std::size_t>(cand);
    if (p1.d_in[su] != p2.d_in[sc] || p1.d_out[su] != p2.d_out[sc]) return false;
    if (p1.A(su, su) != p2.A(sc, sc)) return false;
    for (std::size_t k = 0; k < depth; ++k) {
      const auto v = static_cast<std::size_t>(order[k]);
      const auto pv = static_cast<std::size_t>(phi[v]);
      if (p1.A(su, v) != p2.A(sc, pv) || p1.A(v, su) != p2.A(pv, sc)) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    const int u = order[depth];
    for (int cand = 0; cand < n; ++cand) {
      if (used[static_cast<std::size_t>(cand)] || !compatible(u, cand, depth)) continue;
      phi[static_cast<std::size_t>(u)] = cand;
      used[static_cast<std::size_t>(cand)] = true;
      if (self(self, depth + 1)) return true;
      used[static_cast<std::size_t>(cand)] = false;
      phi[static_cast<std::size_t>(u)] = -1;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return phi;
}

}  // namespace gears
