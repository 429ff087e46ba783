#include <gtest/gtest.h>

#include <cmath>

#include "gears/transplant.hpp"

using namespace gears;

namespace {

struct Pair {
  MetricGraph gear, dual;
};

Pair make_pair_of(std::vector<double> lengths, std::vector<ToothEnd> pattern = {}) {
  const auto spec = make_gear_spec(std::move(lengths), Variant::primal, std::move(pattern));
  return {build_gear(spec), build_gear(dual_gear(spec))};
}

double first_root(const MetricGraph& g, const VertexConditions& cond) {
  ScanParams p;
  p.k_max = 4;
  const auto s = scan_spectrum(g, cond, p);
  return s.values.at(1).k;
}

}  // namespace

TEST(Transplant, FirstEigenvalueSatisfiesDualConditions) {
  const auto [g, d] = make_pair_of({1, 2, 3});
  const VertexConditions cond{1.0};
  const double k = first_root(g, cond);
  for (const auto& f : eigenfunction_basis(g, cond, k)) {
    const auto r = transplant_checked(g, d, cond, f);
    EXPECT_LT(r.vertex_residual, 1e-8);
    EXPECT_EQ(r.map.pattern(), "NNN");
    EXPECT_LT(check_eigen_equation(d, r.function, f.lambda()), 1e-12);
  }
}

TEST(Transplant, RoundTrip) {
  const auto [g, d] = make_pair_of({1, 2, 3});
  for (double w : {1.0, 1.5}) {
    const VertexConditions cond{w};
    const double k = first_root(g, cond);
    const auto f = eigenfunction_basis(g, cond, k).front();
    const auto r = transplant_checked(g, d, cond, f);
    const auto back = inverse_transplant(d, r.function, r.map);
    EXPECT_LT(round_trip_error(f, back), 1e-10);
  }
}

TEST(Transplant, ZeroDerivativesGiveZero) {
  const auto [g, d] = make_pair_of({1, 2, 3});
  const Eigenfunction zero{2.0, std::vector<double>(12, 0.0)};
  const auto out = transplant(g, zero, TransplantMap{std::vector<bool>(3, false), 1.0, 2.0});
  for (double c : out.coeffs) EXPECT_EQ(c, 0.0);
}

TEST(Transplant, RejectsZeroEigenvalue) {
  const auto [g, d] = make_pair_of({1, 2, 3});
  const auto c = constant_function(g);
  EXPECT_THROW(transplant(g, c, TransplantMap{std::vector<bool>(3, false), 1.0, 0.0}), Error);
  EXPECT_THROW(inverse_transplant(d, c, TransplantMap{std::vector<bool>(3, false), 1.0, 0.0}), Error);
}

TEST(Transplant, WrongAssignmentSize) {
  const auto [g, d] = make_pair_of({1, 2, 3});
  const Eigenfunction f{1.0, std::vector<double>(12, 1.0)};
  EXPECT_THROW(transplant(g, f, TransplantMap{std::vector<bool>(2, false), 1.0, 1.0}), Error);
}

TEST(Transplant, Isometry) {
  const auto [g, d] = make_pair_of({1, 2, 3});
  for (double w : {1.0, 1.5}) {
    const VertexConditions cond{w};
    ScanParams p;
    p.k_max = 6;
    for (const auto& ev : scan_spectrum(g, cond, p).values) {
      if (ev.k == 0) continue;
      for (const auto& f : eigenfunction_basis(g, cond, ev.k)) {
        const auto r = transplant_checked(g, d, cond, f);
        EXPECT_LT(check_isometry(g, d, cond, f, r.function).rel_error, 1e-8) << "w=" << w << " k=" << ev.k;
      }
    }
  }
  const Eigenfunction zero{2.0, std::vector<double>(12, 0.0)};
  const auto c = check_isometry(g, d, VertexConditions{1.0}, zero, zero);
  EXPECT_EQ(c.lhs, 0.0);
  EXPECT_EQ(c.rhs, 0.0);
}

TEST(Transplant, PointwiseEnergyIdentity) {
  // p~^2 + w t~^2 = (1 + w)(p'^2 + w t'^2) at every x.
  const auto [g, d] = make_pair_of({1, 2, 3});
  const double w = 1.5;
  const VertexConditions cond{w};
  const double k = first_root(g, cond);
  const auto f = eigenfunction_basis(g, cond, k).front();
  const auto ft = transplant_checked(g, d, cond, f).function;
  for (int i = 0; i < 3; ++i) {
    for (double x : {0.0, 0.3, 0.77, 1.0}) {
      const double pd = evaluate_derivative(g, f, i, x), td = evaluate_derivative(g, f, 3 + i, x);
      const double pt = evaluate(d, ft, i, x), tt = evaluate(d, ft, 3 + i, x);
      const double lhs = pt * pt + w * tt * tt, rhs = (1 + w) * (pd * pd + w * td * td);
      EXPECT_NEAR(lhs, rhs, 1e-10 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST(Transplant, EveryAttachmentPatternUsesTheStandardForm) {
  const VertexConditions cond{1.5};
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<ToothEnd> pattern;
    for (int i = 0; i < 3; ++i) pattern.push_back((mask >> i) & 1 ? ToothEnd::head : ToothEnd::tail);
    const auto [g, d] = make_pair_of({1, 2, 3}, pattern);
    const double k = first_root(g, cond);
    for (const auto& f : eigenfunction_basis(g, cond, k)) {
      const auto r = transplant_checked(g, d, cond, f);
      EXPECT_EQ(r.map.pattern(), "NNN") << "mask " << mask;
      EXPECT_LT(r.vertex_residual, 1e-8);
    }
  }
}

TEST(Transplant, EigenspaceDimensionsAgree) {
  const auto [g, d] = make_pair_of({1, 1, 2});
  const VertexConditions cond{2.0};
  ScanParams p;
  p.k_max = 7;
  for (const auto& ev : scan_spectrum(g, cond, p).values) {
    if (ev.k == 0) continue;
    EXPECT_EQ(eigenfunction_basis(g, cond, ev.k).size(), eigenfunction_basis(d, cond, ev.k).size()) << ev.k;
  }
}

TEST(EigenEquation, DetectsCorruption) {
  const auto [g, d] = make_pair_of({1, 2, 3});
  const VertexConditions cond{1.0};
  const double k = first_root(g, cond);
  auto f = eigenfunction_basis(g, cond, k).front();
  EXPECT_LT(check_eigen_equation(g, f, f.lambda()), 1e-12);
  const Eigenfunction zero{k, std::vector<double>(12, 0.0)};
  EXPECT_EQ(check_eigen_equation(g, zero, zero.lambda()), 0.0);
  f.k *= 1.01;  // coefficients now belong to a different wavenumber
  EXPECT_GT(check_eigen_equation(g, f, k * k), 1e-3);
}

TEST(Suite, ReportsEveryEigenvalue) {
  const auto [g, d] = make_pair_of({1, 1, 2});
  const VertexConditions cond{1.0};
  ScanParams p;
  p.k_max = 5;
  const auto s = scan_spectrum(g, cond, p);
  const auto cases = transplant_suite(g, d, cond, s, p);
  EXPECT_EQ(cases.size(), s.values.size() - 1);
  for (const auto& c : cases) {
    EXPECT_LT(c.vertex_residual, 1e-8);
    EXPECT_LT(c.isometry_error, 1e-8);
    EXPECT_LT(c.round_trip_error, 1e-10);
  }
}
