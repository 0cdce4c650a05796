#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "g2cub/coords.hpp"
#include "g2cub/gentrig.hpp"

namespace g2cub {

struct HexSets {
  std::vector<HexIndex> H;         // -n <= j_i <= n, j congruent mod 3
  std::vector<HexIndex> H_dagger;  // -n <= hat(k)_i <= n
};
HexSets enum_H(long n);

enum class NodeClass : int { interior, vertex30, vertex60, vertex90, edge };
const char* node_class_name(NodeClass c);

struct ClassifiedNode {
  HexIndex j;
  NodeClass cls;
  int omega;
};

// 0 <= j2 <= j1 <= -j3 <= n, j in H; lexicographic in j.
std::vector<ClassifiedNode> enum_upsilon(long n);
NodeClass classify(const HexIndex& j, long n);
int omega_of(NodeClass c);

// 1 interior, 1/2 on an edge, 1/3 at a vertex of the hexagon |j_i| <= n.
double hex_weight(const HexIndex& j, long n);
// c_j |orbit(j)|; agrees with omega_of(classify(j, n)) on the triangle.
double omega_general(const HexIndex& j, long n);

std::vector<HexIndex> enum_gamma(Family f, long n);

long dim_pi_star(long n);
long dim_pi_star_bruteforce(long n);

using PointFn = std::function<double(const Point&)>;
using ComplexPointFn = std::function<std::complex<double>(const Point&)>;

// (1/n^2) sum_{j in H_n} c_j f(j/n)
std::complex<double> hex_cubature(const ComplexPointFn& f, long n);
// (1/n^2) sum_{j in Upsilon_n} omega_j f(j/n) g(j/n)
double triangle_discrete_inner(const PointFn& f, const PointFn& g, long n);

inline Point lattice_point(const HexIndex& j, long n) {
  double d = static_cast<double>(n);
  return Point{j.k1 / d, j.k2 / d, j.k3 / d};
}

}  // namespace g2cub
