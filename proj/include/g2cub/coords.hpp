#pragma once

#include <array>
#include <compare>
#include <vector>

namespace g2cub {

// Homogeneous coordinates t = E x, t1 + t2 + t3 = 0.
struct Point {
  double t1 = 0, t2 = 0, t3 = 0;
};

// Integer triple with zero sum.
struct HexIndex {
  long k1 = 0, k2 = 0, k3 = 0;
  auto operator<=>(const HexIndex&) const = default;
};

Point make_point(double t1, double t2);
HexIndex make_index(long k1, long k2);

Point cart_to_homog(double x1, double x2);
std::array<double, 2> homog_to_cart(const Point& t);

bool zero_sum(const HexIndex& k);
// All three components congruent mod m.
bool congruent(const HexIndex& k, long m);

// (t sigma)_i = sign * t_{perm[i]}.
struct GroupElem {
  int sign = 1;
  std::array<int, 3> perm{0, 1, 2};
  int parity = 1;  // (-1)^{|sigma|}
  bool operator==(const GroupElem&) const = default;
};

// Order: 1, s1, s2, s3, s1s2, s2s1, then the negations in the same order.
// The first six form A2, the last six A2*.
const std::array<GroupElem, 12>& g2_elements();

enum class G2 : int { id = 0, s1, s2, s3, s1s2, s2s1 };
const GroupElem& g2(G2 which, bool negated = false);

// t(ab) = (ta)b
GroupElem compose(const GroupElem& a, const GroupElem& b);
int g2_index(const GroupElem& g);  // -1 if not in the table

Point apply(const GroupElem& g, const Point& t);
HexIndex apply(const GroupElem& g, const HexIndex& k);

HexIndex hat(const HexIndex& k);
std::vector<HexIndex> orbit(const HexIndex& k);

// 0 <= t2 <= t1 <= -t3 <= 1, inclusive with absolute tolerance.
bool in_fundamental_triangle(const Point& t, double tol = 1e-12);

}  // namespace g2cub
