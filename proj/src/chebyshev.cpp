#include "g2cub/chebyshev.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "g2cub/error.hpp"

namespace g2cub {

namespace {

using std::numbers::pi;

constexpr std::array<HexIndex, 6> kOrbitX{{{1, 0, -1}, {-1, 0, 1}, {0, 1, -1}, {0, -1, 1}, {1, -1, 0}, {-1, 1, 0}}};
constexpr std::array<HexIndex, 6> kOrbitY{{{1, 1, -2}, {-1, -1, 2}, {1, -2, 1}, {-1, 2, -1}, {-2, 1, 1}, {2, -1, -1}}};

std::pair<long, long> shift(Family f) {
  switch (f) {
    case Family::CC: return {0, 0};
    case Family::SC: return {1, 0};
    case Family::CS: return {1, 1};
    case Family::SS: return {2, 1};
  }
  return {0, 0};
}

RPoly px(const RPoly& p, long c) { return p.shifted(1, 0, Rational(c)); }
RPoly py(const RPoly& p, long c) { return p.shifted(0, 1, Rational(c)); }

struct Table {
  std::map<std::pair<int, int>, RPoly> P;
  int built = -1;

  const RPoly& at(int k1, int k2) const {
    auto it = P.find({k1, k2});
    if (it == P.end())
      throw Error(Errc::invalid_argument, "internal: missing Chebyshev table entry (" + std::to_string(k1) + "," +
                                               std::to_string(k2) + ")");
    return it->second;
  }
};

void seed(Table& t, Family f) {
  RPoly one(Rational(1)), x = RPoly::monomial(1, 0), y = RPoly::monomial(0, 1);
  t.P[{0, 0}] = one;
  switch (f) {
    case Family::CC:
      t.P[{1, 0}] = x;
      t.P[{0, 1}] = y;
      break;
    case Family::SC:
      t.P[{1, 0}] = x * Rational(6) + one * Rational(2);
      t.P[{0, 1}] = x * Rational(6) + y * Rational(3) + one;
      break;
    case Family::CS:
      t.P[{1, 0}] = x * Rational(3);
      t.P[{0, 1}] = y * Rational(6) + one * Rational(2);
      break;
    case Family::SS:
      t.P[{1, 0}] = x * Rational(6) + one;
      t.P[{0, 1}] = x * Rational(6) + y * Rational(6) + one * Rational(2);
      break;
  }
  t.built = 3;
}

HexIndex add(const HexIndex& a, const HexIndex& b) { return HexIndex{a.k1 + b.k1, a.k2 + b.k2, a.k3 + b.k3}; }

// One of the two recurrences with every neighbour except the target known.
std::optional<RPoly> generic_step(Family f, const Table& t, const MIndex& target) {
  struct Option {
    MIndex base;
    const std::array<HexIndex, 6>* orbit;
    int var;
  };
  std::vector<Option> opts;
  if (target.k1 >= 1) opts.push_back({{target.k1 - 1, target.k2}, &kOrbitX, 0});
  if (target.k2 >= 1) opts.push_back({{target.k1, target.k2 - 1}, &kOrbitY, 1});
  for (const auto& o : opts) {
    auto bit = t.P.find({o.base.k1, o.base.k2});
    if (bit == t.P.end()) continue;
    HexIndex K = kappa(f, o.base);
    RPoly acc = o.var == 0 ? px(bit->second, 6) : py(bit->second, 6);
    long self = 0;
    bool ok = true;
    for (const auto& v : *o.orbit) {
      auto r = resolve(f, add(K, v));
      if (!r) continue;
      const auto& [sign, k] = *r;
      if (k == target) {
        self += sign;
      } else if (auto it = t.P.find({k.k1, k.k2}); it != t.P.end()) {
        acc -= it->second * Rational(sign);
      } else {
        ok = false;
        break;
      }
    }
    if (ok && self != 0) return acc * Rational(1, self);
  }
  return std::nullopt;
}

void generic_level(Family f, Table& t, int n) {
  for (const auto& k : star_level(n)) {
    auto p = generic_step(f, t, k);
    if (!p)
      throw Error(Errc::invalid_argument, "internal: recurrence cannot reach (" + std::to_string(k.k1) + "," +
                                               std::to_string(k.k2) + ")");
    t.P[{k.k1, k.k2}] = std::move(*p);
  }
}

// Steps 1-3 for m-degree n >= 7.
void algorithm_level(Family f, Table& t, int n) {
  const WeightParams wp = params_of(f);
  const bool alpha_neg = wp.alpha < 0;
  const long cb = wp.beta < 0 ? 2 : 1;
  auto P = [&](int a, int b) -> const RPoly& { return t.at(a, b); };

  if (n % 2 == 0) {
    int m = n / 2;
    t.P[{m, 0}] = px(P(m - 1, 0), 6) - P(m - 2, 1) * Rational(cb) - P(m - 2, 0) - P(m - 3, 1) * Rational(cb);
  }
  for (int k2 = 2 - n % 2; k2 <= n / 3 - 2; k2 += 2) {
    int k1 = (n - 3 * k2) / 2;
    t.P[{k1, k2}] = px(P(k1 - 1, k2), 6) - P(k1 + 1, k2 - 1) - P(k1 - 2, k2 + 1) - P(k1, k2 - 1) -
                    P(k1 - 3, k2 + 1) - P(k1 - 2, k2);
  }
  int m = n / 3;
  switch (n % 3) {
    case 0: {
      RPoly r = py(P(0, m - 1), 6) - P(3, m - 3) - P(3, m - 2) - P(0, m - 2);
      if (alpha_neg)
        r -= P(3, m - 3) + P(3, m - 2);
      else
        r += P(1, m - 2) + P(1, m - 1);
      t.P[{0, m}] = std::move(r);
      break;
    }
    case 1: {
      RPoly r = px(P(1, m - 1), 6) - P(3, m - 2) - P(0, m) - P(2, m - 2) - P(0, m - 1);
      if (alpha_neg) r -= P(1, m - 1);
      t.P[{2, m - 1}] = std::move(r);
      break;
    }
    default: {
      RPoly base = alpha_neg ? px(P(0, m), 3) : px(P(0, m), 6) + P(0, m);
      t.P[{1, m}] = base - P(2, m - 1) - P(1, m - 1);
      break;
    }
  }
}

struct Store {
  std::mutex mu;
  Table tab[2][4];  // [generic only][family]
};

Store& store() {
  static Store s;
  return s;
}

RPoly lookup(Family f, const MIndex& k, bool generic) {
  if (k.k1 < 0 || k.k2 < 0) throw Error(Errc::invalid_argument, "Chebyshev index must be nonnegative");
  if (k.mdeg() > 400) throw Error(Errc::invalid_argument, "m-degree too large");
  Store& s = store();
  std::lock_guard lock(s.mu);
  Table& t = s.tab[generic ? 1 : 0][static_cast<int>(f)];
  if (t.built < 0) seed(t, f);
  for (int n = t.built + 1; n <= k.mdeg(); ++n) {
    if (generic || n <= 6)
      generic_level(f, t, n);
    else
      algorithm_level(f, t, n);
    t.built = n;
  }
  return t.at(k.k1, k.k2);
}

}  // namespace

WeightParams params_of(Family f) {
  switch (f) {
    case Family::CC: return {-0.5, -0.5};
    case Family::SC: return {0.5, -0.5};
    case Family::CS: return {-0.5, 0.5};
    case Family::SS: return {0.5, 0.5};
  }
  return {};
}

std::optional<Family> family_of(const WeightParams& p) {
  for (Family f : kFamilies)
    if (params_of(f) == p) return f;
  return std::nullopt;
}

Family require_half_integer(const WeightParams& p) {
  if (auto f = family_of(p)) return *f;
  throw Error(Errc::invalid_argument, "alpha and beta must each be -1/2 or 1/2");
}

std::array<double, 2> xy_map(const Point& t) {
  return {eval(Family::CC, HexIndex{1, 0, -1}, t), eval(Family::CC, HexIndex{1, 1, -2}, t)};
}

double xy_jacobian(const Point& t) {
  auto gx = grad_t(Family::CC, HexIndex{1, 0, -1}, t);
  auto gy = grad_t(Family::CC, HexIndex{1, 1, -2}, t);
  double x1 = gx[0] - gx[2], x2 = gx[1] - gx[2];
  double y1 = gy[0] - gy[2], y2 = gy[1] - gy[2];
  return x1 * y2 - x2 * y1;
}

RPoly sc_square_poly() {
  RPoly p;
  p.set(0, 0, Rational(1, 3));
  p.set(0, 1, Rational(2, 3));
  p.set(2, 0, Rational(-1));
  return p;
}

RPoly cs_square_poly() {
  RPoly p;
  p.set(3, 0, Rational(24));
  p.set(0, 2, Rational(-1));
  p.set(1, 1, Rational(-12));
  p.set(1, 0, Rational(-6));
  p.set(0, 1, Rational(-4));
  p.set(0, 0, Rational(-1));
  return p;
}

RPoly deltoid_F_poly() { return sc_square_poly() * Rational(3) * cs_square_poly(); }

double deltoid_F(double x, double y) {
  return (1 + 2 * y - 3 * x * x) * (24 * x * x * x - y * y - 12 * x * y - 6 * x - 4 * y - 1);
}

double weight_w(const WeightParams& p, double x, double y) {
  const double f1 = 1 + 2 * y - 3 * x * x;
  const double f2 = 24 * x * x * x - y * y - 12 * x * y - 6 * x - 4 * y - 1;
  if (f1 < 0 || f2 < 0) throw Error(Errc::domain, "point lies outside the deltoid region");
  if ((f1 == 0 && p.alpha < 0) || (f2 == 0 && p.beta < 0))
    throw Error(Errc::domain, "weight is singular on the boundary for negative parameters");
  const double pref = std::pow(4 * pi * pi, p.alpha + p.beta) / std::pow(3.0, 2 * p.alpha + p.beta);
  return pref * std::pow(f1, p.alpha) * std::pow(f2, p.beta);
}

double normalization_constant(const WeightParams& p, const QuadOptions& opts) {
  check_integrable(p);
  return 1.0 / (std::pow(4 * pi * pi / 3, p.alpha + p.beta + 1) * pullback_mass(p, opts));
}

HexIndex kappa(Family f, long k1, long k2) {
  auto [a, b] = shift(f);
  return make_index(k1 + k2 + a, k2 + b);
}

HexIndex kappa(Family f, const MIndex& k) { return kappa(f, k.k1, k.k2); }

std::optional<std::pair<int, MIndex>> resolve(Family f, const HexIndex& K) {
  std::optional<HexIndex> rep;
  int sign = 0;
  for (const auto& g : g2_elements()) {
    HexIndex m = apply(g, K);
    if (!(0 <= m.k2 && m.k2 <= m.k1)) continue;
    int c = character(f, g);
    if (!rep) {
      rep = m;
      sign = c;
    } else if (m == *rep && c != sign) {
      return std::nullopt;  // stabilizer with a nontrivial character
    }
  }
  auto [a, b] = shift(f);
  long k2 = rep->k2 - b;
  long k1 = rep->k1 - k2 - a;
  if (k1 < 0 || k2 < 0) return std::nullopt;
  return std::make_pair(sign, MIndex{static_cast<int>(k1), static_cast<int>(k2)});
}

RPoly cheb_poly(Family f, const MIndex& k) { return lookup(f, k, false); }

RPoly cheb_poly(const WeightParams& p, const MIndex& k) { return cheb_poly(require_half_integer(p), k); }

RPoly cheb_poly_generic(Family f, const MIndex& k) { return lookup(f, k, true); }

Rational cheb_leading_coeff(Family f, const MIndex& k) { return cheb_poly(f, k).coeff(k.k1, k.k2); }

RPoly recurrence_residual(Family f, const MIndex& base, int var) {
  const auto& orbit = var == 0 ? kOrbitX : kOrbitY;
  RPoly p = cheb_poly(f, base);
  RPoly r = var == 0 ? px(p, 6) : py(p, 6);
  HexIndex K = kappa(f, base);
  for (const auto& v : orbit)
    if (auto res = resolve(f, add(K, v))) r -= cheb_poly(f, res->second) * Rational(res->first);
  return r;
}

double cheb_eval_trig(Family f, const MIndex& k, const Point& t) {
  long double den = eval_extended(f, kappa(f, 0, 0), t);
  if (std::abs(den) < 1e-8L) {
    auto [x, y] = xy_map(t);
    return eval(cheb_poly(f, k), x, y);
  }
  return static_cast<double>(eval_extended(f, kappa(f, k), t) / den);
}

double trig_pairing(Family f, const MIndex& k, const MIndex& j, const QuadOptions& opts) {
  HexIndex a = kappa(f, k), b = kappa(f, j);
  return triangle_mean(
      [&](const QuadNode& n) {
        Point t = make_point(n.t1, n.t2);
        return eval(f, a, t) * eval(f, b, t);
      },
      opts);
}

double continuous_inner(const WeightParams& p, const XYFn& f, const XYFn& g, const QuadOptions& opts) {
  return weighted_mean(p, [&](const QuadNode& n) { return f(n.x, n.y) * g(n.x, n.y); }, opts);
}

double continuous_inner(const WeightParams& p, const DPoly& f, const DPoly& g, const QuadOptions& opts) {
  return weighted_mean(p, [&](const QuadNode& n) { return eval(f, n.x, n.y) * eval(g, n.x, n.y); }, opts);
}

double continuous_inner(const WeightParams& p, const RPoly& f, const RPoly& g, const QuadOptions& opts) {
  return continuous_inner(p, to_double(f), to_double(g), opts);
}

}  // namespace g2cub
