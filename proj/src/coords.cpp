#include "g2cub/coords.hpp"

#include <algorithm>
#include <cmath>

namespace g2cub {

namespace {

constexpr double kHalfSqrt3 = 0.86602540378443864676;

int perm_parity(const std::array<int, 3>& p) {
  int inv = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (p[i] > p[j]) ++inv;
  return (inv % 2) ? -1 : 1;
}

std::array<GroupElem, 12> build_table() {
  const std::array<std::pair<int, std::array<int, 3>>, 6> a2 = {{
      {1, {0, 1, 2}},   // 1
      {-1, {0, 2, 1}},  // s1: -(t1, t3, t2)
      {-1, {1, 0, 2}},  // s2: -(t2, t1, t3)
      {-1, {2, 1, 0}},  // s3: -(t3, t2, t1)
      {1, {2, 0, 1}},   // s1 s2: (t3, t1, t2)
      {1, {1, 2, 0}},   // s2 s1: (t2, t3, t1)
  }};
  std::array<GroupElem, 12> out;
  for (int i = 0; i < 6; ++i) {
    const auto& [s, p] = a2[i];
    out[i] = GroupElem{s, p, perm_parity(p)};
    out[i + 6] = GroupElem{-s, p, perm_parity(p)};
  }
  return out;
}

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

Point make_point(double t1, double t2) { return Point{t1, t2, -t1 - t2}; }

HexIndex make_index(long k1, long k2) { return HexIndex{k1, k2, -k1 - k2}; }

Point cart_to_homog(double x1, double x2) {
  return Point{kHalfSqrt3 * x1 - 0.5 * x2, x2, -kHalfSqrt3 * x1 - 0.5 * x2};
}

std::array<double, 2> homog_to_cart(const Point& t) {
  // E^T E = (3/2) I
  return {(2.0 / 3.0) * kHalfSqrt3 * (t.t1 - t.t3),
          (2.0 / 3.0) * (-0.5 * t.t1 + t.t2 - 0.5 * t.t3)};
}

bool zero_sum(const HexIndex& k) { return k.k1 + k.k2 + k.k3 == 0; }

bool congruent(const HexIndex& k, long m) {
  return mod(k.k1 - k.k2, m) == 0 && mod(k.k2 - k.k3, m) == 0;
}

const std::array<GroupElem, 12>& g2_elements() {
  static const std::array<GroupElem, 12> table = build_table();
  return table;
}

const GroupElem& g2(G2 which, bool negated) {
  return g2_elements()[static_cast<int>(which) + (negated ? 6 : 0)];
}

GroupElem compose(const GroupElem& a, const GroupElem& b) {
  // ((ta)b)_i = s_b (ta)_{p_b(i)} = s_b s_a t_{p_a(p_b(i))}
  std::array<int, 3> p{};
  for (int i = 0; i < 3; ++i) p[i] = a.perm[b.perm[i]];
  return GroupElem{a.sign * b.sign, p, perm_parity(p)};
}

int g2_index(const GroupElem& g) {
  const auto& table = g2_elements();
  for (int i = 0; i < 12; ++i)
    if (table[i] == g) return i;
  return -1;
}

Point apply(const GroupElem& g, const Point& t) {
  const double v[3] = {t.t1, t.t2, t.t3};
  return Point{g.sign * v[g.perm[0]], g.sign * v[g.perm[1]], g.sign * v[g.perm[2]]};
}

HexIndex apply(const GroupElem& g, const HexIndex& k) {
  const long v[3] = {k.k1, k.k2, k.k3};
  return HexIndex{g.sign * v[g.perm[0]], g.sign * v[g.perm[1]], g.sign * v[g.perm[2]]};
}

HexIndex hat(const HexIndex& k) { return HexIndex{k.k3 - k.k2, k.k1 - k.k3, k.k2 - k.k1}; }

std::vector<HexIndex> orbit(const HexIndex& k) {
  std::vector<HexIndex> out;
  out.reserve(12);
  for (const auto& g : g2_elements()) out.push_back(apply(g, k));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool in_fundamental_triangle(const Point& t, double tol) {
  return t.t2 >= -tol && t.t1 - t.t2 >= -tol && -t.t3 - t.t1 >= -tol && 1.0 + t.t3 >= -tol;
}

}  // namespace g2cub
