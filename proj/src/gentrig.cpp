#include "g2cub/gentrig.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

#include "g2cub/error.hpp"

namespace g2cub {

namespace {

using std::numbers::pi;

bool sine_first(Family f) { return f == Family::SC || f == Family::SS; }
bool sine_second(Family f) { return f == Family::CS || f == Family::SS; }

bool has_zero(const HexIndex& k) { return k.k1 == 0 || k.k2 == 0 || k.k3 == 0; }
bool has_equal(const HexIndex& k) { return k.k1 == k.k2 || k.k2 == k.k3 || k.k1 == k.k3; }

bool is_integer(double v) { return std::floor(v) == v; }
bool has_integer(const Point& t) { return is_integer(t.t1) || is_integer(t.t2) || is_integer(t.t3); }
bool has_equal(const Point& t) { return t.t1 == t.t2 || t.t2 == t.t3 || t.t1 == t.t3; }

bool structural_zero(Family f, const HexIndex& k, const Point& t) {
  if (sine_second(f) && (has_zero(k) || has_integer(t))) return true;
  if (sine_first(f) && (has_equal(k) || has_equal(t))) return true;
  return false;
}

// Term i: g1(a A_i) g2(b B_i), A = (t1-t3, t2-t1, t3-t2), B = (t2, t3, t1),
// a = pi (k1-k3)/3, b = pi k2.
struct Args {
  double a, b;
  std::array<double, 3> A, B;
};

Args args(const HexIndex& k, const Point& t) {
  return Args{pi * static_cast<double>(k.k1 - k.k3) / 3.0, pi * static_cast<double>(k.k2),
              {t.t1 - t.t3, t.t2 - t.t1, t.t3 - t.t2},
              {t.t2, t.t3, t.t1}};
}

// dA_i/dt_m and dB_i/dt_m
constexpr int kdA[3][3] = {{1, 0, -1}, {-1, 1, 0}, {0, -1, 1}};
constexpr int kdB[3][3] = {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};

int pow_minus_i(Family f) {
  switch (f) {
    case Family::CC: return 0;
    case Family::SC:
    case Family::CS: return 1;
    case Family::SS: return 2;
  }
  return 0;
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::CC: return "CC";
    case Family::SC: return "SC";
    case Family::CS: return "CS";
    case Family::SS: return "SS";
  }
  return "?";
}

Family parse_family(std::string_view s) {
  std::string u;
  for (char c : s) u += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (Family f : kFamilies)
    if (u == family_name(f)) return f;
  throw Error(Errc::invalid_argument, "unknown family '" + std::string(s) + "'");
}

std::complex<double> phi(const HexIndex& k, const Point& t) {
  double kt = k.k1 * t.t1 + k.k2 * t.t2 + k.k3 * t.t3;
  return std::polar(1.0, 2.0 * pi * kt / 3.0);
}

double eval(Family f, const HexIndex& k, const Point& t) {
  if (structural_zero(f, k, t)) return 0.0;
  const Args g = args(k, t);
  double s = 0;
  for (int i = 0; i < 3; ++i) {
    double u = g.a * g.A[i], v = g.b * g.B[i];
    s += (sine_first(f) ? std::sin(u) : std::cos(u)) * (sine_second(f) ? std::sin(v) : std::cos(v));
  }
  return s / 3.0;
}

long double eval_extended(Family f, const HexIndex& k, const Point& t) {
  if (structural_zero(f, k, t)) return 0.0L;
  using L = long double;
  const L t1 = t.t1, t2 = t.t2, t3 = t.t3;
  const L a = std::numbers::pi_v<L> * static_cast<L>(k.k1 - k.k3) / 3, b = std::numbers::pi_v<L> * static_cast<L>(k.k2);
  const L A[3] = {t1 - t3, t2 - t1, t3 - t2}, B[3] = {t2, t3, t1};
  L s = 0;
  for (int i = 0; i < 3; ++i) {
    L u = a * A[i], v = b * B[i];
    s += (sine_first(f) ? std::sin(u) : std::cos(u)) * (sine_second(f) ? std::sin(v) : std::cos(v));
  }
  return s / 3;
}

int character(Family f, const GroupElem& g) {
  switch (f) {
    case Family::CC: return 1;
    case Family::SC: return g.sign * g.parity;
    case Family::CS: return g.sign;
    case Family::SS: return g.parity;
  }
  return 1;
}

std::array<double, 3> grad_t(Family f, const HexIndex& k, const Point& t) {
  const Args g = args(k, t);
  std::array<double, 3> out{0, 0, 0};
  for (int i = 0; i < 3; ++i) {
    double u = g.a * g.A[i], v = g.b * g.B[i];
    double f1 = sine_first(f) ? std::sin(u) : std::cos(u);
    double d1 = sine_first(f) ? std::cos(u) : -std::sin(u);
    double f2 = sine_second(f) ? std::sin(v) : std::cos(v);
    double d2 = sine_second(f) ? std::cos(v) : -std::sin(v);
    for (int m = 0; m < 3; ++m) out[m] += d1 * g.a * kdA[i][m] * f2 + f1 * d2 * g.b * kdB[i][m];
  }
  for (auto& v : out) v /= 3.0;
  return out;
}

std::array<double, 2> grad_cart(Family f, const HexIndex& k, const Point& t) {
  auto gt = grad_t(f, k, t);
  constexpr double h = 0.86602540378443864676;
  // E^T grad
  return {h * (gt[0] - gt[2]), -0.5 * gt[0] + gt[1] - 0.5 * gt[2]};
}

double laplace_eigenvalue(const HexIndex& k) {
  double d12 = static_cast<double>(k.k1 - k.k2), d23 = static_cast<double>(k.k2 - k.k3),
         d31 = static_cast<double>(k.k3 - k.k1);
  return 2.0 * pi * pi / 9.0 * (d12 * d12 + d23 * d23 + d31 * d31);
}

bool on_edge(const Point& t, Edge e, double tol) {
  switch (e) {
    case Edge::B1: return std::abs(t.t3 + 1.0) <= tol;
    case Edge::B2: return std::abs(t.t2) <= tol;
    case Edge::B3: return std::abs(t.t1 - t.t2) <= tol;
  }
  return false;
}

double boundary_normal_derivative(Family f, const HexIndex& k, const Point& t, Edge e) {
  if (!on_edge(t, e)) throw Error(Errc::domain, "point is not on the requested edge");
  // E n for the exterior unit normal of each edge.
  constexpr double h = 0.86602540378443864676;
  std::array<double, 3> en{};
  switch (e) {
    case Edge::B1: en = {0.5, 0.5, -1.0}; break;
    case Edge::B2: en = {0.5, -1.0, 0.5}; break;
    case Edge::B3: en = {-h, h, 0.0}; break;
  }
  auto g = grad_t(f, k, t);
  return en[0] * g[0] + en[1] * g[1] + en[2] * g[2];
}

Family product_family(Family a, Family b) {
  // characters multiply: track (sign exponent, parity exponent)
  auto bits = [](Family f) {
    switch (f) {
      case Family::CC: return std::pair{0, 0};
      case Family::SC: return std::pair{1, 1};
      case Family::CS: return std::pair{1, 0};
      case Family::SS: return std::pair{0, 1};
    }
    return std::pair{0, 0};
  };
  auto [sa, pa] = bits(a);
  auto [sb, pb] = bits(b);
  int s = sa ^ sb, p = pa ^ pb;
  if (s == 0 && p == 0) return Family::CC;
  if (s == 1 && p == 1) return Family::SC;
  if (s == 1) return Family::CS;
  return Family::SS;
}

std::vector<TrigTerm> product_expand(Family a, const HexIndex& j, Family b, const HexIndex& k) {
  Family h = product_family(a, b);
  int e = pow_minus_i(a) + pow_minus_i(b) - pow_minus_i(h);
  int sign = ((e / 2) % 2 == 0) ? 1 : -1;
  std::vector<TrigTerm> out;
  out.reserve(12);
  for (const auto& rho : g2_elements()) {
    HexIndex jr = apply(rho, j);
    HexIndex m{k.k1 + jr.k1, k.k2 + jr.k2, k.k3 + jr.k3};
    out.push_back(TrigTerm{h, m, Rational(sign * character(a, rho), 12)});
  }
  return out;
}

double eval(const std::vector<TrigTerm>& terms, const Point& t) {
  double s = 0;
  for (const auto& term : terms) s += to_double(term.coeff) * eval(term.family, term.k, t);
  return s;
}

}  // namespace g2cub
