#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "hyperlab/symfun.hpp"
#include "hyperlab/util.hpp"

using namespace hyperlab;
using namespace hyperlab::symfun;

namespace {

// Independent oracle: S_r by explicit enumeration of all r-subsets.
double esym_bruteforce(const Eigen::VectorXd& lambdas, int r) {
  const int m = static_cast<int>(lambdas.size());
  if (r == 0) return 1.0;
  double total = 0.0;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != r) continue;
    double prod = 1.0;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) prod *= lambdas[i];
    total += prod;
  }
  return total;
}

ShapeSpectrum make(std::initializer_list<double> ls) {
  Eigen::VectorXd v(static_cast<int>(ls.size()));
  int i = 0;
  for (double x : ls) v[i++] = x;
  return ShapeSpectrum(static_cast<int>(ls.size()), v);
}

ShapeSpectrum random_spectrum(Rng& rng, int m, double lo = -2.0,
                              double hi = 2.0) {
  Eigen::VectorXd v(m);
  for (int i = 0; i < m; ++i) v[i] = rng.uniform(lo, hi);
  return ShapeSpectrum(m, v);
}

}  // namespace

TEST_CASE("sym_all on the all-ones spectrum gives binomials") {
  const SymTable t = sym_all(make({1, 1, 1, 1}));
  for (int r = 0; r <= 4; ++r) {
    CHECK(t.S[r] == doctest::Approx(binom(4, r)).epsilon(1e-14));
    CHECK(t.H[r] == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("sym_all on (1,2,3)") {
  const SymTable t = sym_all(make({1, 2, 3}));
  CHECK(t.S[1] == doctest::Approx(6.0));
  CHECK(t.S[2] == doctest::Approx(11.0));
  CHECK(t.S[3] == doctest::Approx(6.0));
  CHECK(t.H[0] == 1.0);
}

TEST_CASE("sym_all on the zero spectrum") {
  const SymTable t = sym_all(make({0, 0, 0, 0, 0}));
  CHECK(t.S[0] == 1.0);
  for (int r = 1; r <= 5; ++r) CHECK(t.S[r] == 0.0);
}

TEST_CASE("sym_all matches subset enumeration up to m = 10") {
  Rng rng(20240901);
  for (int m = 2; m <= 10; ++m) {
    for (int rep = 0; rep < 25; ++rep) {
      const ShapeSpectrum spec = random_spectrum(rng, m);
      const SymTable t = sym_all(spec);
      for (int r = 0; r <= m; ++r) {
        const double expect = esym_bruteforce(spec.lambdas, r);
        CHECK(std::abs(t.S[r] - expect) <=
              1e-10 * (1.0 + std::abs(expect)));
      }
    }
  }
}

TEST_CASE("sym_all rejects non-finite entries") {
  Eigen::VectorXd v(3);
  v << 1.0, std::nan(""), 0.0;
  CHECK_THROWS_AS(ShapeSpectrum(3, v), ArgumentError);
}

TEST_CASE("newton order 0 is the identity") {
  const NewtonOp op = newton(make({0.3, -1.2, 0.7}), 0);
  for (int i = 0; i < 3; ++i) CHECK(op.mu[i] == 1.0);
}

TEST_CASE("newton on the umbilic spectrum (2,2,2), r=1") {
  const NewtonOp op = newton(make({2, 2, 2}), 1);
  // binom(m-1, r) kappa^r with m=3, r=1, kappa=2.
  for (int i = 0; i < 3; ++i) CHECK(op.mu[i] == doctest::Approx(4.0));
}

TEST_CASE("newton on (1,2,3), r=2: hand recursion") {
  const NewtonOp op = newton(make({1, 2, 3}), 2);
  CHECK(op.mu[0] == doctest::Approx(6.0));
  CHECK(op.mu[1] == doctest::Approx(3.0));
  CHECK(op.mu[2] == doctest::Approx(2.0));
  CHECK(op.trace() == doctest::Approx(11.0));  // (m-r) S_2 = 1 * 11
}

TEST_CASE("newton matrix form conjugates the eigenvalues") {
  const ShapeSpectrum spec = make({1, 2, 3});
  const NewtonOp op = newton(spec, 1);
  Eigen::MatrixXd basis(3, 3);
  basis << 1, 1, 0, 0, 1, 1, 1, 0, 1;  // invertible, not orthogonal
  const Eigen::MatrixXd P = op.matrix(basis);
  const Eigen::MatrixXd A =
      basis * spec.lambdas.asDiagonal() * basis.inverse();
  // P_1 = S_1 I - A in the same basis.
  const Eigen::MatrixXd expect =
      6.0 * Eigen::MatrixXd::Identity(3, 3) - A;
  CHECK((P - expect).norm() <= 1e-12 * expect.norm());
}

TEST_CASE("newton rejects out-of-range order") {
  CHECK_THROWS_AS(newton(make({1, 2, 3}), 3), ArgumentError);
  CHECK_THROWS_AS(newton(make({1, 2, 3}), -1), ArgumentError);
}

TEST_CASE("trace identities on (1,2,3), r=1") {
  const TraceResiduals res = trace_identities(make({1, 2, 3}), 1);
  CHECK(res.tr_P <= 1e-12);
  CHECK(res.tr_AP <= 1e-12);
  CHECK(res.tr_AAP <= 1e-12);
}

TEST_CASE("trace identity tr A P_0 = S_1 on (1,1)") {
  const ShapeSpectrum spec = make({1, 1});
  const NewtonOp op = newton(spec, 0);
  double tr_ap = 0.0;
  for (int i = 0; i < 2; ++i) tr_ap += spec.lambdas[i] * op.mu[i];
  CHECK(tr_ap == doctest::Approx(2.0));
  CHECK(trace_identities(spec, 0).max_relative() <= 1e-12);
}

TEST_CASE("trace identities hold on 1000 random spectra") {
  Rng rng(7151984);
  for (int rep = 0; rep < 1000; ++rep) {
    const int m = rng.uniform_int(2, 8);
    const ShapeSpectrum spec = random_spectrum(rng, m);
    for (int r = 0; r <= m - 1; ++r) {
      CHECK(trace_identities(spec, r).max_relative() < 1e-10);
    }
  }
}

TEST_CASE("Newton eigenvalues are the partial derivatives of S_{r+1}") {
  Rng rng(424242);
  const double h = 1e-5;
  for (int rep = 0; rep < 40; ++rep) {
    const int m = rng.uniform_int(2, 6);
    const int r = rng.uniform_int(0, m - 1);
    const ShapeSpectrum spec = random_spectrum(rng, m, -1.5, 1.5);
    const NewtonOp op = newton(spec, r);
    for (int i = 0; i < m; ++i) {
      ShapeSpectrum plus = spec, minus = spec;
      plus.lambdas[i] += h;
      minus.lambdas[i] -= h;
      const double d =
          (sym_all(plus).S_at(r + 1) - sym_all(minus).S_at(r + 1)) / (2 * h);
      CHECK(std::abs(d - op.mu[i]) <= 1e-6 * (1.0 + std::abs(d)));
    }
  }
}

TEST_CASE("umbilic closed form: P_r = binom(m-1,r) kappa^r I") {
  Rng rng(99);
  for (int m = 2; m <= 7; ++m) {
    const double kappa = rng.uniform(-2.0, 2.0);
    ShapeSpectrum spec(m, Eigen::VectorXd::Constant(m, kappa));
    for (int r = 0; r <= m - 1; ++r) {
      const NewtonOp op = newton(spec, r);
      const double expect = binom(m - 1, r) * std::pow(kappa, r);
      for (int i = 0; i < m; ++i)
        CHECK(std::abs(op.mu[i] - expect) <= 1e-10 * (1.0 + std::abs(expect)));
    }
  }
}

TEST_CASE("norms on a rank-one spectrum") {
  const BoundReport rep = norms_and_bounds(make({1, 0, 0, 0}), 2);
  CHECK(rep.frobenius_A == doctest::Approx(1.0));
  CHECK(rep.p_bound_holds);
  CHECK(rep.p_ratio < 0.5);  // large slack
}

TEST_CASE("umbilic spectra saturate the S-bound ratio at m^{-k/2}") {
  const int m = 4;
  const double kappa = 1.3;
  const BoundReport rep =
      norms_and_bounds(ShapeSpectrum(m, Eigen::VectorXd::Constant(m, kappa)), 1);
  // Worst ratio over k is at k = 1: m^{-1/2}.
  CHECK(rep.worst_s_ratio ==
        doctest::Approx(std::pow(m, -0.5)).epsilon(1e-12));
  CHECK(rep.s_bounds_hold);
}

TEST_CASE("zero spectrum: all norms vanish, bounds hold as 0 <= 0") {
  const BoundReport rep = norms_and_bounds(make({0, 0, 0}), 1);
  CHECK(rep.frobenius_A == 0.0);
  CHECK(rep.spectral_P == 0.0);
  CHECK(rep.s_bounds_hold);
  CHECK(rep.p_bound_holds);
}

TEST_CASE("spectral norm bound holds on random spectra") {
  Rng rng(31337);
  for (int rep = 0; rep < 1000; ++rep) {
    const int m = rng.uniform_int(2, 8);
    const ShapeSpectrum spec = random_spectrum(rng, m);
    for (int r = 0; r <= m - 1; ++r) {
      const BoundReport b = norms_and_bounds(spec, r);
      CHECK(b.p_bound_holds);
      CHECK(b.s_bounds_hold);
    }
  }
}

TEST_CASE("positivity: cylinder spectra, r=1") {
  std::vector<ShapeSpectrum> field;
  for (int i = 0; i < 16; ++i) field.push_back(make({1.0, 0.0}));
  const PositivityFlags flags = positivity_class(field, 1);
  CHECK(flags.cond_a);  // S_2 == 0, r odd
  CHECK(flags.p_r_nonneg);
}

TEST_CASE("positivity: round sphere satisfies condition (e) for every r") {
  const int m = 3;
  std::vector<ShapeSpectrum> field;
  for (int i = 0; i < 8; ++i)
    field.emplace_back(m, Eigen::VectorXd::Constant(m, 0.5));
  for (int r = 0; r <= m - 1; ++r) {
    const PositivityFlags flags = positivity_class(field, r);
    CHECK(flags.cond_e);
    CHECK(flags.p_r_nonneg);
  }
}

TEST_CASE("positivity: S_{r+1} of both signs defeats every condition") {
  std::vector<ShapeSpectrum> field;
  field.push_back(make({1.0, 1.0}));    // S_2 = 1
  field.push_back(make({1.0, -1.0}));   // S_2 = -1
  const PositivityFlags flags = positivity_class(field, 1);
  CHECK_FALSE(flags.any());
}

TEST_CASE("positivity rejects an empty sample") {
  std::vector<ShapeSpectrum> field;
  CHECK_THROWS_AS(positivity_class(field, 0), ArgumentError);
}

TEST_CASE("scal_from_S2") {
  using ambient::AmbientSpec;
  SUBCASE("flat ambient, S2 = 3") {
    CHECK(scal_from_S2(0.0, 3.0, AmbientSpec::space_form(0.0, 4)) ==
          doctest::Approx(6.0));
  }
  SUBCASE("S2 = 0 leaves the Einstein background value") {
    auto amb = AmbientSpec::space_form(-1.0, 4);  // lambda = -3, m = 3
    CHECK(scal_from_S2(1.0, 0.0, amb) == doctest::Approx(2.0 * (-3.0)));
  }
  SUBCASE("unit sphere in R^3") {
    CHECK(scal_from_S2(2.0, 1.0, AmbientSpec::space_form(0.0, 3)) ==
          doctest::Approx(2.0));
  }
  SUBCASE("non-Einstein product is rejected") {
    auto amb = AmbientSpec::product(1.0, 2, -1.0, 3);
    CHECK_FALSE(amb.is_einstein());
    CHECK_THROWS_AS(scal_from_S2(0.0, 0.0, amb), UnsupportedAmbientError);
  }
}
