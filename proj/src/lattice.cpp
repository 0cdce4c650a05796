#include "g2cub/lattice.hpp"

#include <algorithm>
#include <cstdlib>

#include "g2cub/error.hpp"

namespace g2cub {

namespace {

void require_positive(long n) {
  if (n < 1) throw Error(Errc::invalid_argument, "n must be >= 1");
}

bool in_box(const HexIndex& k, long n) {
  return std::labs(k.k1) <= n && std::labs(k.k2) <= n && std::labs(k.k3) <= n;
}

}  // namespace

HexSets enum_H(long n) {
  require_positive(n);
  HexSets s;
  for (long a = -n; a <= n; ++a)
    for (long b = -n; b <= n; ++b) {
      HexIndex k = make_index(a, b);
      if (in_box(k, n) && congruent(k, 3)) s.H.push_back(k);
      if (in_box(hat(k), n)) s.H_dagger.push_back(k);
    }
  return s;
}

const char* node_class_name(NodeClass c) {
  switch (c) {
    case NodeClass::interior: return "interior";
    case NodeClass::vertex30: return "vertex30";
    case NodeClass::vertex60: return "vertex60";
    case NodeClass::vertex90: return "vertex90";
    case NodeClass::edge: return "edge";
  }
  return "?";
}

NodeClass classify(const HexIndex& j, long n) {
  if (j.k1 == 0 && j.k2 == 0) return NodeClass::vertex30;
  if (j.k1 == n && j.k2 == 0) return NodeClass::vertex60;
  if (2 * j.k1 == n && j.k1 == j.k2) return NodeClass::vertex90;
  if (0 < j.k2 && j.k2 < j.k1 && j.k1 < -j.k3 && -j.k3 < n) return NodeClass::interior;
  return NodeClass::edge;
}

int omega_of(NodeClass c) {
  switch (c) {
    case NodeClass::interior: return 12;
    case NodeClass::vertex30: return 1;
    case NodeClass::vertex60: return 2;
    case NodeClass::vertex90: return 3;
    case NodeClass::edge: return 6;
  }
  return 0;
}

std::vector<ClassifiedNode> enum_upsilon(long n) {
  require_positive(n);
  std::vector<ClassifiedNode> out;
  for (long j1 = 0; j1 <= n; ++j1)
    for (long j2 = 0; j2 <= j1 && j1 + j2 <= n; ++j2) {
      HexIndex j = make_index(j1, j2);
      if (!congruent(j, 3)) continue;
      NodeClass c = classify(j, n);
      out.push_back(ClassifiedNode{j, c, omega_of(c)});
    }
  return out;
}

double hex_weight(const HexIndex& j, long n) {
  int on = (std::labs(j.k1) == n) + (std::labs(j.k2) == n) + (std::labs(j.k3) == n);
  if (on == 0) return 1.0;
  if (on == 1) return 0.5;
  return 1.0 / 3.0;
}

double omega_general(const HexIndex& j, long n) {
  return hex_weight(j, n) * static_cast<double>(orbit(j).size());
}

std::vector<HexIndex> enum_gamma(Family f, long n) {
  require_positive(n);
  std::vector<HexIndex> out;
  for (long k1 = 0; 2 * k1 <= n; ++k1)
    for (long k2 = 0; k2 <= k1; ++k2) {
      HexIndex k = make_index(k1, k2);
      long top = k.k3 + n;  // k1 <= k3 + n  <=>  2 k1 + k2 <= n
      bool ok = false;
      switch (f) {
        case Family::CC: ok = k1 <= top; break;
        case Family::SC: ok = k2 < k1 && k1 < top; break;
        case Family::CS: ok = 0 < k2 && k1 <= top; break;
        case Family::SS: ok = 0 < k2 && k2 < k1 && k1 < top; break;
      }
      if (ok) out.push_back(k);
    }
  return out;
}

long dim_pi_star(long n) {
  if (n < 0) throw Error(Errc::invalid_argument, "n must be >= 0");
  long a = n / 3, b = n / 2;
  return (3 * a - 2 * n) * (a + 1) / 2 - (b - n - 1) * (b + 1);
}

long dim_pi_star_bruteforce(long n) {
  long c = 0;
  for (long k1 = 0; 2 * k1 <= n; ++k1)
    for (long k2 = 0; 2 * k1 + 3 * k2 <= n; ++k2) ++c;
  return c;
}

std::complex<double> hex_cubature(const ComplexPointFn& f, long n) {
  std::complex<double> s = 0;
  for (const auto& j : enum_H(n).H) s += hex_weight(j, n) * f(lattice_point(j, n));
  return s / static_cast<double>(n * n);
}

double triangle_discrete_inner(const PointFn& f, const PointFn& g, long n) {
  double s = 0;
  for (const auto& node : enum_upsilon(n)) {
    Point t = lattice_point(node.j, n);
    s += node.omega * f(t) * g(t);
  }
  return s / static_cast<double>(n * n);
}

}  // namespace g2cub
