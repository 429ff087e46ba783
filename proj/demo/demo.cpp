// Builds the gear with side lengths (1, 2, 3), its dual, and shows that the
// two share their spectrum while a transplanted eigenfunction moves across.

#include <cstdio>

#include "gears/gears.hpp"

int main() {
  using namespace gears;
  const auto spec = make_gear_spec({1, 2, 3});
  const auto gear = build_gear(spec), dual = build_gear(dual_gear(spec));
  const VertexConditions cond{1.5};

  ScanParams params;
  params.k_max = 6.0;
  const auto s1 = scan_spectrum(gear, cond, params), s2 = scan_spectrum(dual, cond, params);
  std::printf("%-12s %-12s %s\n", "lambda", "dual", "mult");
  for (std::size_t i = 0; i < s1.values.size() && i < s2.values.size(); ++i) {
    std::printf("%-12.8f %-12.8f %d\n", s1.values[i].lambda, s2.values[i].lambda, s1.values[i].multiplicity);
  }

  const auto f = eigenfunction_basis(gear, cond, s1.values.at(1).k).front();
  const auto moved = transplant_checked(gear, dual, cond, f);
  std::printf("\ntransplant at k = %.8f: vertex residual %.2e, assignment %s\n", f.k, moved.vertex_residual,
              moved.map.pattern().c_str());

  const auto ms = markov_matrix<Rational>(subdivide(gear), Rational(3, 2));
  const auto msd = markov_matrix<Rational>(subdivide(dual), Rational(3, 2));
  const bool same = characteristic_polynomial_exact(ms) == characteristic_polynomial_exact(msd);
  std::printf("walk characteristic polynomials %s\n", same ? "agree exactly" : "differ");
  return 0;
}
