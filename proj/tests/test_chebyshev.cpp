#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "g2cub/chebyshev.hpp"
#include "g2cub/error.hpp"
#include "g2cub/lattice.hpp"
#include "g2cub/verify.hpp"
#include "oracles.hpp"

using namespace g2cub;
using std::numbers::pi;

TEST_CASE("polynomial parser used by the oracles") {
  RPoly p = oracle::parse_poly("3xy-6x^2+x+2y+1");
  CHECK(p.coeff(1, 1) == 3);
  CHECK(p.coeff(2, 0) == -6);
  CHECK(p.coeff(0, 0) == 1);
  CHECK(p.size() == 5);
}

TEST_CASE("star order") {
  CHECK(star_less(MIndex{3, 0}, MIndex{0, 2}));
  CHECK(star_less(MIndex{1, 0}, MIndex{0, 1}));
  CHECK(star_less(MIndex{0, 1}, MIndex{2, 0}));
  auto seq = star_sequence(12);
  for (std::size_t i = 1; i < seq.size(); ++i) CHECK(star_less(seq[i - 1], seq[i]));
  for (int n = 0; n <= 30; ++n) CHECK(static_cast<long>(star_sequence(n).size()) == dim_pi_star(n));
}

TEST_CASE("change of variables") {
  auto xy = xy_map(Point{0.5, 0.5, -1});
  CHECK(xy[0] == doctest::Approx(-1.0 / 3));
  CHECK(xy[1] == doctest::Approx(-1.0 / 3));
  xy = xy_map(Point{0, 0, 0});
  CHECK(xy[0] == doctest::Approx(1.0));
  CHECK(xy[1] == doctest::Approx(1.0));
  CHECK(deltoid_F(1, 1) == 0.0);
  CHECK(deltoid_F(0, 0) == doctest::Approx(-1.0));

  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    Point t = random_interior_point(rng);
    auto [x, y] = xy_map(t);
    double ss = eval(Family::SS, HexIndex{2, 1, -3}, t);
    double sc = eval(Family::SC, HexIndex{1, 0, -1}, t), cs = eval(Family::CS, HexIndex{1, 1, -2}, t);
    CHECK(deltoid_F(x, y) == doctest::Approx(ss * ss / 3).scale(1).epsilon(1e-12));
    CHECK(deltoid_F(x, y) > 0);
    CHECK(xy_jacobian(t) == doctest::Approx(4 * pi * pi / 3 * sc * cs).epsilon(1e-12));
  }
}

TEST_CASE("every listed low-degree polynomial is reproduced exactly") {
  for (const auto& lp : oracle::listed_polys()) {
    INFO(family_name(lp.family) << " (" << lp.k1 << "," << lp.k2 << ") " << lp.text);
    CHECK(cheb_poly(lp.family, MIndex{lp.k1, lp.k2}) == oracle::parse_poly(lp.text));
  }
  CHECK(oracle::listed_polys().size() == 28);
}

TEST_CASE("explicit algorithm agrees with the symmetry-resolving recurrence") {
  for (Family f : kFamilies)
    for (const auto& k : star_sequence(16)) CHECK(cheb_poly(f, k) == cheb_poly_generic(f, k));
}

TEST_CASE("three-term recurrences hold exactly") {
  for (Family f : kFamilies)
    for (const auto& k : star_sequence(10)) {
      CHECK(recurrence_residual(f, k, 0).is_zero());
      CHECK(recurrence_residual(f, k, 1).is_zero());
    }
}

TEST_CASE("leading terms and parameter lookups") {
  for (Family f : kFamilies)
    for (const auto& k : star_sequence(14)) {
      RPoly p = cheb_poly(f, k);
      CHECK(p.leading() == k);
      CHECK(p.mdegree() == k.mdeg());
      CHECK(cheb_leading_coeff(f, k) == p.coeff(k.k1, k.k2));
      CHECK(cheb_leading_coeff(f, k) > 0);
    }
  CHECK(cheb_leading_coeff(Family::SS, {1, 1}) == 36);
  CHECK(family_of(WeightParams{0.5, -0.5}) == Family::SC);
  CHECK_FALSE(family_of(WeightParams{0.3, 0.5}).has_value());
  CHECK_THROWS_AS(require_half_integer(WeightParams{0, 0.5}), Error);
  CHECK(cheb_poly(WeightParams{-0.5, 0.5}, {2, 0}) == cheb_poly(Family::CS, {2, 0}));
}

TEST_CASE("index shift and symmetry resolution") {
  CHECK(kappa(Family::CC, 1, 0) == HexIndex{1, 0, -1});
  CHECK(kappa(Family::SS, 0, 0) == HexIndex{2, 1, -3});
  CHECK(kappa(Family::SC, 0, 0) == HexIndex{1, 0, -1});
  CHECK(kappa(Family::CS, 0, 0) == HexIndex{1, 1, -2});
  auto r = resolve(Family::CC, kappa(Family::CC, 2, 0));
  REQUIRE(r.has_value());
  CHECK(r->first == 1);
  CHECK(r->second == MIndex{2, 0});
  CHECK_FALSE(resolve(Family::SS, HexIndex{1, 1, -2}).has_value());
  CHECK_FALSE(resolve(Family::CS, HexIndex{3, 0, -3}).has_value());
}

TEST_CASE("polynomials equal the trigonometric quotients") {
  std::mt19937_64 rng(22);
  for (Family f : kFamilies)
    for (const auto& k : star_sequence(12)) {
      DPoly P = to_double(cheb_poly(f, k));
      for (int i = 0; i < 10; ++i) {
        Point t = random_interior_point(rng);
        auto [x, y] = xy_map(t);
        CHECK(eval(P, x, y) == doctest::Approx(cheb_eval_trig(f, k, t)).epsilon(1e-10).scale(1));
      }
    }
  Point t = random_interior_point(rng);
  auto [x, y] = xy_map(t);
  CHECK(cheb_eval_trig(Family::SS, {1, 0}, t) == doctest::Approx(6 * x + 1));
  CHECK(cheb_eval_trig(Family::CC, {2, 1}, t) == doctest::Approx(eval(Family::CC, HexIndex{3, 1, -4}, t)));
}

TEST_CASE("weight function and normalization constants") {
  CHECK(normalization_constant({-0.5, -0.5}) == doctest::Approx(4).epsilon(1e-11));
  CHECK(normalization_constant({0.5, -0.5}) == doctest::Approx(18 / (pi * pi)).epsilon(1e-11));
  CHECK(normalization_constant({-0.5, 0.5}) == doctest::Approx(18 / (pi * pi)).epsilon(1e-11));
  CHECK(normalization_constant({0.5, 0.5}) == doctest::Approx(243 / std::pow(pi, 4)).epsilon(1e-11));

  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    Point t = random_interior_point(rng);
    auto [x, y] = xy_map(t);
    double sc = eval(Family::SC, HexIndex{1, 0, -1}, t), cs = eval(Family::CS, HexIndex{1, 1, -2}, t);
    CHECK(weight_w({0.5, 0.5}, x, y) == doctest::Approx(std::abs(4 * pi * pi / 3 * sc * cs)).epsilon(1e-11));
    CHECK(sc * sc == doctest::Approx(eval(sc_square_poly(), x, y)).scale(1));
    CHECK(cs * cs == doctest::Approx(eval(cs_square_poly(), x, y)).scale(1));
  }
  CHECK_THROWS_AS(weight_w({-0.5, -0.5}, 0, 0), Error);
  CHECK_THROWS_AS(normalization_constant({-1.5, 0}), Error);
}

TEST_CASE("continuous orthogonality constants") {
  CHECK(d_constant(Family::CC, {0, 0}) == 1);
  CHECK(d_constant(Family::CC, {1, 0}) == doctest::Approx(1.0 / 6));
  CHECK(d_constant(Family::SS, {3, 2}) == doctest::Approx(1.0 / 12));
  for (Family f : kFamilies) {
    CHECK(continuous_orthogonality_error(f, 8, true) < 1e-9);
    CHECK(continuous_orthogonality_error(f, 8, false) < 1e-9);
  }
  RPoly p = cheb_poly(Family::SS, {1, 0});
  CHECK(continuous_inner(params_of(Family::SS), p, p) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(trig_pairing(Family::CC, {1, 0}, {1, 0}) == doctest::Approx(1.0 / 6).epsilon(1e-10));
  CHECK(std::abs(trig_pairing(Family::CC, {1, 0}, {0, 1})) < 1e-12);
}
