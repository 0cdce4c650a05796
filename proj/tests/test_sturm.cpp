#include <doctest.h>

#include <cmath>

#include "g2cub/chebyshev.hpp"
#include "g2cub/error.hpp"
#include "g2cub/sturm.hpp"
#include "g2cub/verify.hpp"
#include "oracles.hpp"

using namespace g2cub;

namespace {
const WeightParams kGeneral[] = {{0, 0}, {0.3, 1.2}, {-0.4, 0.7}, {0.5, 0.5}, {-0.5, -0.5}, {1.5, -0.25}};
}

TEST_CASE("operator coefficients") {
  auto c = operator_coeffs(Rational(1, 2), Rational(-1, 2));
  CHECK(c.A11 == oracle::parse_poly("-6x^2+y+3x+2"));
  CHECK(c.A12 == oracle::parse_poly("-9xy+18x^2-6y-3"));
  CHECK(c.A22 == oracle::parse_poly("-18y^2+108x^3-54xy-27x-9y"));
  // B1 = (21 + 6 - 9) x + 3 + 3, B2 = 36 x + (45 - 18 + 9) y - 9 + 9
  CHECK(c.B1 == oracle::parse_poly("18x+6"));
  CHECK(c.B2 == oracle::parse_poly("36x+36y"));
}

TEST_CASE("L on low-degree monomials") {
  for (const auto& p : kGeneral) {
    const Rational a(p.alpha), b(p.beta);
    CHECK(apply_L(p, RPoly(Rational(1))).is_zero());
    RPoly lx = apply_L(p, RPoly::monomial(1, 0));
    RPoly expect = RPoly::monomial(1, 0, Rational(21) + 12 * a + 18 * b) + RPoly(Rational(3) + 6 * a);
    CHECK(lx == expect);
  }
}

TEST_CASE("monomial image") {
  for (const auto& p : kGeneral) {
    const Rational a(p.alpha), b(p.beta);
    auto t10 = monomial_image({p}, 1, 0);
    REQUIRE(t10.size() == 9);
    CHECK(t10[0].coeff == Rational(21) + 12 * a + 18 * b);
    auto t01 = monomial_image(p, 0, 1);
    CHECK(t01[0].coeff == Rational(18) + 3 * (Rational(9) + 6 * a + 12 * b));
    for (const auto& t : monomial_image(p, 0, 0)) CHECK(t.coeff == 0);
    for (const auto& k : star_sequence(12)) {
      CHECK(apply_L(p, RPoly::monomial(k.k1, k.k2)) == monomial_image_poly(p, k.k1, k.k2));
      CHECK(monomial_image(p, k.k1, k.k2)[0].coeff == eigenvalue_exact(a, b, k));
      // triangular in the star order
      const RPoly img = apply_L(p, RPoly::monomial(k.k1, k.k2));
      for (const auto& [e, c] : img.terms())
        CHECK_FALSE(star_less(k, MIndex{e.first, e.second}));
    }
  }
}

TEST_CASE("eigenvalues") {
  for (const auto& p : kGeneral) {
    CHECK(eigenvalue(p, {0, 0}) == 0);
    CHECK(eigenvalue(p, {1, 0}) == doctest::Approx(3 * (7 + 4 * p.alpha + 6 * p.beta)));
  }
  CHECK(eigenvalue({-0.5, -0.5}, {1, 0}) == doctest::Approx(6));
  // Separation from the indices that can appear below k in the monomial image.
  for (double a : {-0.5, 0.0, 0.5, 2.0})
    for (double b : {-0.5, 0.0, 0.5, 2.0})
      for (const auto& k : star_sequence(12))
        for (const auto& j : gamma_plus(k)) {
          CHECK(star_less(j, k));
          CHECK(eigenvalue({a, b}, k) > eigenvalue({a, b}, j));
        }
}

TEST_CASE("exact eigen-identity for the Chebyshev families") {
  for (Family f : kFamilies) CHECK(eigen_identity_residual(f, 12) == 0);
}

TEST_CASE("Gram-Schmidt eigenfunctions for general parameters") {
  for (const WeightParams& p : {WeightParams{0, 0}, WeightParams{0.3, 1.2}, WeightParams{-0.4, 0.7}}) {
    for (const auto& k : star_sequence(8)) {
      auto r = jacobi_poly(p, k);
      CHECK(r.residual <= 1e-8);
      CHECK(r.orthogonality <= 1e-9);
      CHECK(r.poly.leading() == k);
      CHECK(r.poly.coeff(k.k1, k.k2) == 1.0);
    }
    const double a = p.alpha, b = p.beta;
    auto p10 = jacobi_poly(p, {1, 0}).poly;
    CHECK(p10.coeff(0, 0) == doctest::Approx((1 + 2 * a) / (7 + 4 * a + 6 * b)).epsilon(1e-10));
    CHECK(p10.size() == 2);
    auto p01 = jacobi_poly(p, {0, 1}).poly;
    CHECK(p01.coeff(1, 0) == doctest::Approx(3 * (1 + 2 * a) / (4 + a + 3 * b)).epsilon(1e-10));
    CHECK(p01.coeff(0, 0) == doctest::Approx((5 + 5 * a + 11 * b + 2 * a * b + 6 * b * b + 4 * a * a) /
                                             ((4 + a + 3 * b) * (5 + 2 * a + 4 * b)))
                                 .epsilon(1e-10));
  }
  // Half-integer parameters reproduce the scaled Chebyshev polynomials.
  for (Family f : kFamilies)
    for (const auto& k : star_sequence(8)) {
      DPoly g = jacobi_poly(params_of(f), k).poly;
      RPoly c = cheb_poly(f, k);
      DPoly e = to_double(c * (Rational(1) / cheb_leading_coeff(f, k)));
      CHECK(max_abs_coeff(g - e) <= 1e-9 * std::max(1.0, max_abs_coeff(e)));
    }
  auto c20 = jacobi_poly({-0.5, -0.5}, {2, 0}).poly;
  CHECK(c20.coeff(1, 0) == doctest::Approx(-1.0 / 3));
  CHECK(c20.coeff(0, 1) == doctest::Approx(-1.0 / 3));
  CHECK(c20.coeff(0, 0) == doctest::Approx(-1.0 / 6));
  CHECK_THROWS_AS(jacobi_poly({-1.2, 0}, {1, 0}), Error);
}

TEST_CASE("self-adjointness") {
  const RPoly x = RPoly::monomial(1, 0), y = RPoly::monomial(0, 1), one(Rational(1));
  for (const auto& p : kGeneral) {
    auto [l, r] = selfadjointness_check(p, x, y);
    CHECK(std::abs(l - r) <= 1e-8 * (1 + std::abs(l)));
    auto [l1, r1] = selfadjointness_check(p, one, x * y - y * y);
    CHECK(std::abs(l1) < 1e-12);
    CHECK(std::abs(r1) < 1e-9);
  }
}

TEST_CASE("boundary polynomial identities") {
  const RPoly F = deltoid_F_poly();
  const RPoly x = RPoly::monomial(1, 0), y = RPoly::monomial(0, 1), one(Rational(1));
  CHECK(det_lambda() == F * Rational(9));
  auto flux = boundary_flux_polys();
  CHECK(flux[0] == -(F * (x * Rational(5) + one) * Rational(6)));
  CHECK(flux[1] == -(F * (y * Rational(3) + x * Rational(2) + one) * Rational(18)));
}
