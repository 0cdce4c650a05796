#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "g2cub/coords.hpp"

using namespace g2cub;

TEST_CASE("cartesian and homogeneous coordinates round-trip") {
  Point t = cart_to_homog(0, 1);
  CHECK(t.t1 == doctest::Approx(-0.5));
  CHECK(t.t2 == doctest::Approx(1.0));
  CHECK(t.t3 == doctest::Approx(-0.5));
  t = cart_to_homog(2 / std::sqrt(3.0), 0);
  CHECK(t.t1 == doctest::Approx(1.0));
  CHECK(t.t2 == doctest::Approx(0.0));
  CHECK(t.t3 == doctest::Approx(-1.0));

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 100; ++i) {
    double a = u(rng), b = u(rng);
    Point p = cart_to_homog(a, b);
    CHECK(std::abs(p.t1 + p.t2 + p.t3) < 1e-14);
    auto x = homog_to_cart(p);
    CHECK(x[0] == doctest::Approx(a).epsilon(1e-13));
    CHECK(x[1] == doctest::Approx(b).epsilon(1e-13));
  }
}

TEST_CASE("index helpers") {
  HexIndex k = make_index(2, 1);
  CHECK(k == HexIndex{2, 1, -3});
  CHECK(zero_sum(k));
  CHECK_FALSE(zero_sum(HexIndex{1, 1, 1}));
  CHECK(congruent(HexIndex{3, 0, -3}, 3));
  CHECK_FALSE(congruent(HexIndex{1, 0, -1}, 3));
}

TEST_CASE("group table is closed and sigma1 acts as a signed swap") {
  const auto& G = g2_elements();
  for (const auto& a : G)
    for (const auto& b : G) CHECK(g2_index(compose(a, b)) >= 0);
  for (int i = 0; i < 6; ++i) {
    CHECK(G[i + 6].sign == -G[i].sign);
    CHECK(G[i + 6].perm == G[i].perm);
  }
  CHECK(apply(g2(G2::s1), HexIndex{1, 0, -1}) == HexIndex{-1, 1, 0});
  CHECK(g2_index(g2(G2::id)) == 0);
  // Each element has a two-sided inverse.
  for (const auto& a : G) {
    int inverses = 0;
    for (const auto& b : G) inverses += compose(a, b) == g2(G2::id) && compose(b, a) == g2(G2::id);
    CHECK(inverses == 1);
  }
}

TEST_CASE("group action composes as a right action") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1, 1);
  for (const auto& a : g2_elements())
    for (const auto& b : g2_elements()) {
      Point t = make_point(u(rng), u(rng));
      Point lhs = apply(compose(a, b), t), rhs = apply(b, apply(a, t));
      CHECK(lhs.t1 == doctest::Approx(rhs.t1));
      CHECK(lhs.t2 == doctest::Approx(rhs.t2));
    }
}

TEST_CASE("hat map") {
  CHECK(hat(HexIndex{3, 0, -3}) == HexIndex{-3, 6, -3});
  CHECK(hat(HexIndex{1, 0, -1}) == HexIndex{-1, 2, -1});
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b) {
      HexIndex k = make_index(a, b);
      HexIndex h = hat(k);
      CHECK(zero_sum(h));
      CHECK(congruent(h, 3));
      // hat(hat(k)) = -3 k
      CHECK(hat(h) == HexIndex{-3 * k.k1, -3 * k.k2, -3 * k.k3});
    }
}

TEST_CASE("orbit sizes") {
  CHECK(orbit(HexIndex{0, 0, 0}).size() == 1);
  CHECK(orbit(HexIndex{1, 0, -1}).size() == 6);
  CHECK(orbit(HexIndex{1, 1, -2}).size() == 6);
  CHECK(orbit(HexIndex{2, 1, -3}).size() == 12);
  for (long a = -5; a <= 5; ++a)
    for (long b = -5; b <= 5; ++b) {
      auto o = orbit(make_index(a, b));
      std::set<HexIndex> s(o.begin(), o.end());
      CHECK(s.size() == o.size());
      CHECK(12 % o.size() == 0);
    }
}

TEST_CASE("fundamental triangle membership") {
  CHECK(in_fundamental_triangle(Point{0.5, 0.5, -1}));
  CHECK(in_fundamental_triangle(Point{0, 0, 0}));
  CHECK(in_fundamental_triangle(Point{1, 0, -1}));
  CHECK_FALSE(in_fundamental_triangle(Point{0, 1, -1}));
  CHECK_FALSE(in_fundamental_triangle(Point{0.7, 0.5, -1.2}));
}
