#include "g2cub/verify.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numbers>

#include "g2cub/chebyshev.hpp"
#include "g2cub/error.hpp"
#include "g2cub/lattice.hpp"
#include "g2cub/sturm.hpp"

namespace g2cub {

namespace {

using std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

double poly_max_abs(const RPoly& p) {
  double m = 0;
  for (const auto& [e, c] : p.terms()) m = std::max(m, std::abs(to_double(c)));
  return m;
}

std::vector<MIndex> monomials_upto(int d) { return star_sequence(d); }

// Reference moments of x^i y^j for one measure, all m-degrees <= d.
std::vector<double> reference_moments(const WeightParams& p, int d) {
  static std::mutex mu;
  static std::map<std::pair<double, double>, std::pair<int, std::vector<double>>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({p.alpha, p.beta});
    if (it != cache.end() && it->second.first >= d) {
      std::size_t cnt = monomials_upto(d).size();
      return std::vector<double>(it->second.second.begin(), it->second.second.begin() + cnt);
    }
  }
  const int D = std::max(d, 24);
  const auto mons = monomials_upto(D);
  auto m = weighted_means(p, mons.size(), [&](const QuadNode& n, std::span<double> out) {
    for (std::size_t i = 0; i < mons.size(); ++i) out[i] = std::pow(n.x, mons[i].k1) * std::pow(n.y, mons[i].k2);
  });
  std::lock_guard lock(mu);
  cache[{p.alpha, p.beta}] = {D, m};
  m.resize(monomials_upto(d).size());
  return m;
}

std::vector<double> cubic_real_roots(double p, double q) {
  // x^3 + p x + q = 0
  std::vector<double> r;
  double disc = -(4 * p * p * p + 27 * q * q);
  if (disc > 0) {
    double m = 2 * std::sqrt(-p / 3);
    double th = std::acos(3 * q / (2 * p) * std::sqrt(-3 / p)) / 3;
    for (int k = 0; k < 3; ++k) r.push_back(m * std::cos(th - 2 * pi * k / 3));
  } else {
    double s = std::sqrt(q * q / 4 + p * p * p / 27);
    r.push_back(std::cbrt(-q / 2 + s) + std::cbrt(-q / 2 - s));
  }
  return r;
}

HexIndex random_index(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  while (true) {
    HexIndex k = make_index(d(rng), d(rng));
    if (std::labs(k.k3) <= bound) return k;
  }
}

}  // namespace

CheckResult upper_check(std::string name, double value, double tol) {
  return CheckResult{std::move(name), value, tol, false, value <= tol};
}

CheckResult lower_check(std::string name, double value, double bound) {
  return CheckResult{std::move(name), value, bound, true, value > bound};
}

const char* suite_name(Suite s) {
  switch (s) {
    case Suite::orthogonality: return "orthogonality";
    case Suite::cubature: return "cubature";
    case Suite::eigen: return "eigen";
    case Suite::identities: return "identities";
    case Suite::variety: return "variety";
  }
  return "?";
}

Suite parse_suite(std::string_view s) {
  for (Suite v : {Suite::orthogonality, Suite::cubature, Suite::eigen, Suite::identities, Suite::variety})
    if (s == suite_name(v)) return v;
  throw Error(Errc::invalid_argument, "unknown suite '" + std::string(s) + "'");
}

int default_suite_n(Suite s) {
  switch (s) {
    case Suite::orthogonality: return 12;
    case Suite::cubature: return 10;
    case Suite::eigen: return 12;
    case Suite::identities: return 12;
    case Suite::variety: return 10;
  }
  return 10;
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string format_check(const CheckResult& c) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-44s %s=%.3e %s=%.3e %s", c.name.c_str(), c.lower_bound ? "value" : "max_err",
                c.value, c.lower_bound ? "min" : "tol", c.tol, c.pass ? "PASS" : "FAIL");
  return buf;
}

std::string format_report(const Report& r) {
  std::string s;
  for (const auto& c : r.checks) s += format_check(c) + "\n";
  return s;
}

Point random_interior_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  while (true) {
    double t2 = 0.5 * u(rng);
    double t1 = t2 + (1 - 2 * t2) * u(rng);
    Point t = make_point(t1, t2);
    if (t2 > 1e-6 && t1 - t2 > 1e-6 && 1 - t1 - t2 > 1e-6) return t;
  }
}

double d_constant(Family f, const MIndex& k) {
  switch (f) {
    case Family::CC:
      if (k.k1 == 0 && k.k2 == 0) return 1.0;
      return k.k1 * k.k2 == 0 ? 1.0 / 6 : 1.0 / 12;
    case Family::SC: return k.k2 == 0 ? 1.0 / 6 : 1.0 / 12;
    case Family::CS: return k.k1 == 0 ? 1.0 / 6 : 1.0 / 12;
    case Family::SS: return 1.0 / 12;
  }
  return 0;
}

double discrete_orthogonality_error(Family f, long n) {
  const auto gamma = enum_gamma(f, n);
  const auto nodes = enum_upsilon(n);
  std::vector<std::vector<double>> V(gamma.size(), std::vector<double>(nodes.size()));
  for (std::size_t a = 0; a < gamma.size(); ++a)
    for (std::size_t i = 0; i < nodes.size(); ++i) V[a][i] = eval(f, gamma[a], lattice_point(nodes[i].j, n));
  const double n2 = static_cast<double>(n) * n;
  double err = 0;
  for (std::size_t a = 0; a < gamma.size(); ++a)
    for (std::size_t b = 0; b < gamma.size(); ++b) {
      double s = 0;
      for (std::size_t i = 0; i < nodes.size(); ++i) s += nodes[i].omega * V[a][i] * V[b][i];
      s /= n2;
      double expect = 0;
      if (a == b) expect = f == Family::SS ? 1.0 / 12 : 1.0 / omega_general(hat(gamma[b]), n);
      err = std::max(err, std::abs(s - expect));
    }
  return err;
}

double continuous_orthogonality_error(Family f, int max_mdeg, bool trig) {
  const auto ks = star_sequence(max_mdeg);
  const std::size_t m = ks.size();
  std::vector<double> vals(m);
  std::vector<double> ip;
  if (trig) {
    std::vector<HexIndex> kap;
    for (const auto& k : ks) kap.push_back(kappa(f, k));
    ip = weighted_means(WeightParams{-0.5, -0.5}, m * m, [&](const QuadNode& n, std::span<double> out) {
      Point t = make_point(n.t1, n.t2);
      for (std::size_t i = 0; i < m; ++i) vals[i] = eval(f, kap[i], t);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out[i * m + j] = vals[i] * vals[j];
    });
  } else {
    std::vector<DPoly> P;
    for (const auto& k : ks) P.push_back(to_double(cheb_poly(f, k)));
    ip = weighted_means(params_of(f), m * m, [&](const QuadNode& n, std::span<double> out) {
      for (std::size_t i = 0; i < m; ++i) vals[i] = eval(P[i], n.x, n.y);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out[i * m + j] = vals[i] * vals[j];
    });
  }
  const double d00 = d_constant(f, MIndex{0, 0});
  double err = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      double expect = 0;
      if (i == j) expect = trig ? d_constant(f, ks[i]) : d_constant(f, ks[i]) / d00;
      err = std::max(err, std::abs(ip[i * m + j] - expect));
    }
  return err;
}

double eigen_identity_residual(Family f, int max_mdeg) {
  const WeightParams p = params_of(f);
  const OperatorCoeffs c = operator_coeffs(p);
  const Rational a(p.alpha), b(p.beta);
  double worst = 0;
  for (const auto& k : star_sequence(max_mdeg)) {
    RPoly P = cheb_poly(f, k);
    RPoly r = apply_L(c, P) - P * eigenvalue_exact(a, b, k);
    worst = std::max(worst, poly_max_abs(r));
  }
  return worst;
}

ExactnessResult cubature_exactness(RuleKind kind, int n) {
  CubatureRule rule = make_rule(kind, n);
  const auto mons = monomials_upto(2 * n);
  const auto ref = reference_moments(rule.params, 2 * n);
  ExactnessResult r;
  for (std::size_t i = 0; i < mons.size(); ++i) {
    const int a = mons[i].k1, b = mons[i].k2;
    double q = integrate(rule, [&](double x, double y) { return std::pow(x, a) * std::pow(y, b); });
    double e = std::abs(q - ref[i]) / (1 + std::abs(ref[i]));
    if (mons[i].mdeg() <= 2 * n - 1)
      r.max_err = std::max(r.max_err, e);
    else
      r.sharp_err = std::max(r.sharp_err, e);
  }
  return r;
}

LobattoZeros lobatto_common_zeros() {
  LobattoZeros z;
  const DPoly T30 = to_double(cheb_poly(Family::CC, MIndex{3, 0}));
  const DPoly T02 = to_double(cheb_poly(Family::CC, MIndex{0, 2}));
  // 2 T_{3,0} + T_{0,2} = 6y^2 - 2y - 1 eliminates x^3.
  const double s7 = std::sqrt(7.0);
  for (double y : {(1 - s7) / 6, (1 + s7) / 6}) {
    for (double x : cubic_real_roots(-(18 * y + 9) / 36, -(6 * y + 2) / 36)) {
      if (std::abs(eval(T30, x, y)) > 1e-9 || std::abs(eval(T02, x, y)) > 1e-9) continue;
      if (deltoid_F(x, y) > 0) z.found.push_back({x, y});
    }
  }
  const double c = std::sqrt(2.0) / (s7 + 1), th = std::acos(3 * std::sqrt(2.0) / (2 * s7 + 1)) / 3;
  for (int mu = 0; mu < 3; ++mu) {
    std::array<double, 2> p{c * std::cos(2 * pi * mu / 3 + th), -1 / (s7 + 1)};
    z.closed_form.push_back(p);
    z.max_residual = std::max({z.max_residual, std::abs(eval(T30, p[0], p[1])), std::abs(eval(T02, p[0], p[1]))});
  }
  auto found = z.found, closed = z.closed_form;
  std::sort(found.begin(), found.end());
  std::sort(closed.begin(), closed.end());
  if (found.size() != closed.size()) {
    z.max_mismatch = INFINITY;
  } else {
    for (std::size_t i = 0; i < found.size(); ++i)
      z.max_mismatch = std::max({z.max_mismatch, std::abs(found[i][0] - closed[i][0]),
                                 std::abs(found[i][1] - closed[i][1])});
  }
  return z;
}

double fd_laplacian(Family f, const HexIndex& k, const Point& t, double h) {
  auto x = homog_to_cart(t);
  auto F = [&](double a, double b) { return eval(f, k, cart_to_homog(a, b)); };
  auto d2 = [&](double dx, double dy) {
    return (-F(x[0] + 2 * dx, x[1] + 2 * dy) + 16 * F(x[0] + dx, x[1] + dy) - 30 * F(x[0], x[1]) +
            16 * F(x[0] - dx, x[1] - dy) - F(x[0] - 2 * dx, x[1] - 2 * dy)) /
           (12 * h * h);
  };
  return d2(h, 0) + d2(0, h);
}

std::vector<CheckResult> pointwise_identity_checks(unsigned seed, int points) {
  std::mt19937_64 rng(seed);
  const HexIndex k10{1, 0, -1}, k11{1, 1, -2}, k30{3, 0, -3}, k21{2, 1, -3};
  double wt = 0, wt1 = 0, wt2 = 0, wt3 = 0, eq_sc = 0, eq_cs = 0, jac = 0, hyp = 0;
  for (int i = 0; i < points; ++i) {
    Point t = random_interior_point(rng);
    double sc = eval(Family::SC, k10, t), cs = eval(Family::CS, k11, t), ss = eval(Family::SS, k21, t);
    double c1 = eval(Family::CC, k10, t), c2 = eval(Family::CC, k11, t), c3 = eval(Family::CC, k30, t);
    wt = std::max(wt, std::abs(3 * sc * cs - ss));
    wt1 = std::max(wt1, std::abs(sc * sc - ((1 + 2 * c2) / 3 - c1 * c1)));
    wt2 = std::max(wt2, std::abs(cs * cs + c2 * c2 - (1 + 2 * c3) / 3));
    wt3 = std::max(wt3, std::abs(c1 * c1 * c1 - (c3 / 36 + c1 / 4 + c2 / 6 + 1.0 / 18 + c2 * c1 / 2)));
    auto [x, y] = xy_map(t);
    eq_sc = std::max(eq_sc, std::abs(sc * sc - (1 + 2 * y - 3 * x * x) / 3));
    eq_cs = std::max(eq_cs, std::abs(cs * cs - (24 * x * x * x - y * y - 12 * x * y - 6 * x - 4 * y - 1)));
    jac = std::max(jac, rel(xy_jacobian(t), 4 * pi * pi / 3 * sc * cs));
    hyp = std::max(hyp, std::abs(deltoid_F(x, y) - ss * ss / 3));
  }
  return {upper_check("identities.wt", wt, 1e-12),           upper_check("identities.wt1", wt1, 1e-12),
          upper_check("identities.wt2", wt2, 1e-12),         upper_check("identities.wt3", wt3, 1e-12),
          upper_check("identities.sc_square", eq_sc, 1e-12), upper_check("identities.cs_square", eq_cs, 1e-12),
          upper_check("identities.jacobian", jac, 1e-12),    upper_check("identities.hypocycloid", hyp, 1e-12)};
}

std::vector<CheckResult> laplacian_checks(unsigned seed, int ks, int points) {
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;
  for (Family f : kFamilies) {
    double worst = 0;
    int used = 0, guard = 0;
    while (used < ks && guard++ < 10000) {
      HexIndex k = random_index(rng, 8);
      double lam = laplace_eigenvalue(k);
      if (lam == 0) continue;
      std::vector<Point> pts;
      double fn = 0;
      for (int i = 0; i < points; ++i) {
        pts.push_back(random_interior_point(rng));
        fn += std::pow(eval(f, k, pts.back()), 2);
      }
      if (std::sqrt(fn) < 1e-10) continue;  // identically vanishing index
      double num = 0, den = 0;
      for (const auto& t : pts) {
        double v = eval(f, k, t);
        num += std::pow(fd_laplacian(f, k, t, 1e-4) + lam * v, 2);
        den += std::pow(lam * v, 2);
      }
      worst = std::max(worst, std::sqrt(num / den));
      ++used;
    }
    out.push_back(upper_check(std::string("laplacian.") + family_name(f), worst, 1e-6));
  }
  return out;
}

namespace {

void suite_orthogonality(Report& r, int n) {
  for (Family f : kFamilies) {
    double e = 0;
    for (long m = 1; m <= n; ++m) e = std::max(e, discrete_orthogonality_error(f, m));
    r.checks.push_back(upper_check(std::string("discrete.") + family_name(f), e, 1e-12));
  }
  const int d = std::min(n, 10);
  for (Family f : kFamilies) {
    r.checks.push_back(upper_check(std::string("continuous.trig.") + family_name(f),
                                   continuous_orthogonality_error(f, d, true), 1e-9));
    r.checks.push_back(upper_check(std::string("continuous.normalized.") + family_name(f),
                                   continuous_orthogonality_error(f, d, false), 1e-9));
  }
}

void suite_cubature(Report& r, int n) {
  for (RuleKind k : kRuleKinds) {
    double err = 0, sharp = INFINITY;
    for (int m = 2; m <= n; ++m) {
      auto e = cubature_exactness(k, m);
      err = std::max(err, e.max_err);
      sharp = std::min(sharp, e.sharp_err);
    }
    r.checks.push_back(upper_check(std::string("exactness.") + rule_kind_name(k), err, 1e-9));
    r.checks.push_back(lower_check(std::string("sharpness.") + rule_kind_name(k), sharp, 1e-6));
    double wsum = 0;
    bool positive = true;
    for (int m = 1; m <= n; ++m) {
      auto rule = make_rule(k, m);
      double s = 0;
      for (double w : rule.weights) {
        s += w;
        positive = positive && w > 0;
      }
      wsum = std::max(wsum, std::abs(s - 1));
    }
    r.checks.push_back(upper_check(std::string("weight_sum.") + rule_kind_name(k), wsum, 1e-13));
    r.checks.push_back(upper_check(std::string("positive_weights.") + rule_kind_name(k), positive ? 0 : 1, 0));
  }
}

void suite_eigen(Report& r, int n) {
  for (Family f : kFamilies)
    r.checks.push_back(upper_check(std::string("exact_eigen.") + family_name(f), eigen_identity_residual(f, n), 0));

  const std::vector<WeightParams> general{{0, 0}, {0.3, 1.2}, {-0.4, 0.7}, {0.5, 0.5}};
  double img = 0, tri = 0, lam = 0;
  for (const auto& p : general)
    for (const auto& k : star_sequence(n)) {
      RPoly mono = RPoly::monomial(k.k1, k.k2);
      RPoly lm = apply_L(p, mono);
      img = std::max(img, poly_max_abs(lm - monomial_image_poly(p, k.k1, k.k2)));
      for (const auto& [e, c] : lm.terms())
        if (star_less(k, MIndex{e.first, e.second})) tri += 1;
      lam = std::max(lam, rel(to_double(monomial_image(p, k.k1, k.k2)[0].coeff), eigenvalue(p, k)));
    }
  r.checks.push_back(upper_check("monomial_image", img, 0));
  r.checks.push_back(upper_check("eigenvalue_diagonal", lam, 1e-14));
  r.checks.push_back(upper_check("triangularity", tri, 0));

  double gap = INFINITY;
  for (double a : {-0.5, 0.0, 0.5, 1.2})
    for (double b : {-0.5, 0.0, 0.5, 1.2})
      for (const auto& k : star_sequence(n))
        for (const auto& j : gamma_plus(k)) gap = std::min(gap, eigenvalue({a, b}, k) - eigenvalue({a, b}, j));
  r.checks.push_back(lower_check("eigenvalue_separation", gap, 0));

  const int d = std::min(n, 8);
  double res = 0, closed = 0;
  for (const auto& p : std::vector<WeightParams>{{0, 0}, {0.3, 1.2}, {-0.4, 0.7}}) {
    for (const auto& k : star_sequence(d)) res = std::max(res, jacobi_poly(p, k).residual);
    const double a = p.alpha, b = p.beta;
    DPoly p10 = jacobi_poly(p, {1, 0}).poly, p01 = jacobi_poly(p, {0, 1}).poly;
    closed = std::max(closed, std::abs(p10.coeff(0, 0) - (1 + 2 * a) / (7 + 4 * a + 6 * b)));
    closed = std::max(closed, std::abs(p01.coeff(1, 0) - 3 * (1 + 2 * a) / (4 + a + 3 * b)));
    closed = std::max(closed, std::abs(p01.coeff(0, 0) - (5 + 5 * a + 11 * b + 2 * a * b + 6 * b * b + 4 * a * a) /
                                                             ((4 + a + 3 * b) * (5 + 2 * a + 4 * b))));
  }
  r.checks.push_back(upper_check("jacobi_residual", res, 1e-8));
  r.checks.push_back(upper_check("jacobi_closed_forms", closed, 1e-10));

  double sa = 0;
  const RPoly x = RPoly::monomial(1, 0), y = RPoly::monomial(0, 1);
  for (const auto& p : general) {
    auto [l, rr] = selfadjointness_check(p, x, y);
    sa = std::max(sa, std::abs(l - rr) / (1 + std::abs(l)));
    auto [l2, r2] = selfadjointness_check(p, x * y + x * x, y * y - x);
    sa = std::max(sa, std::abs(l2 - r2) / (1 + std::abs(l2)));
  }
  r.checks.push_back(upper_check("selfadjoint", sa, 1e-8));
}

void suite_identities(Report& r, int n) {
  for (auto& c : pointwise_identity_checks(20241016u)) r.checks.push_back(std::move(c));

  // Exact polynomial identities with the constants they actually have.
  RPoly F = deltoid_F_poly();
  r.checks.push_back(upper_check("det_lambda_9F", poly_max_abs(det_lambda() - F * Rational(9)), 0));
  auto flux = boundary_flux_polys();
  RPoly fa1 = flux[0] + F * RPoly::monomial(1, 0, Rational(30)) + F * Rational(6);
  RPoly fa2 = flux[1] + F * (RPoly::monomial(0, 1, Rational(54)) + RPoly::monomial(1, 0, Rational(36)) +
                             RPoly(Rational(18)));
  r.checks.push_back(upper_check("fa1", poly_max_abs(fa1), 0));
  r.checks.push_back(upper_check("fa2_18", poly_max_abs(fa2), 0));

  double rec = 0, gen = 0;
  for (Family f : kFamilies)
    for (const auto& k : star_sequence(std::max(n - 3, 0))) {
      rec = std::max({rec, poly_max_abs(recurrence_residual(f, k, 0)), poly_max_abs(recurrence_residual(f, k, 1))});
    }
  for (Family f : kFamilies)
    for (const auto& k : star_sequence(std::max(n, 14)))
      gen = std::max(gen, poly_max_abs(cheb_poly(f, k) - cheb_poly_generic(f, k)));
  r.checks.push_back(upper_check("recurrences", rec, 0));
  r.checks.push_back(upper_check("algorithm_vs_recurrence", gen, 0));

  std::mt19937_64 rng(7);
  double quo = 0;
  for (Family f : kFamilies)
    for (const auto& k : star_sequence(14)) {
      DPoly P = to_double(cheb_poly(f, k));
      for (int i = 0; i < 50; ++i) {
        Point t = random_interior_point(rng);
        auto [x, y] = xy_map(t);
        quo = std::max(quo, rel(eval(P, x, y), cheb_eval_trig(f, k, t)));
      }
    }
  r.checks.push_back(upper_check("chebyshev_vs_trig", quo, 1e-10));

  double prod = 0, inv = 0;
  for (Family a : kFamilies)
    for (Family b : kFamilies)
      for (int i = 0; i < 10; ++i) {
        HexIndex j = random_index(rng, 4), k = random_index(rng, 4);
        Point t = random_interior_point(rng);
        prod = std::max(prod, std::abs(eval(product_expand(a, j, b, k), t) - eval(a, j, t) * eval(b, k, t)));
      }
  for (Family f : kFamilies)
    for (int i = 0; i < 20; ++i) {
      HexIndex k = random_index(rng, 6);
      Point t = random_interior_point(rng);
      for (const auto& g : g2_elements()) {
        inv = std::max(inv, std::abs(eval(f, k, apply(g, t)) - character(f, g) * eval(f, k, t)));
        inv = std::max(inv, std::abs(eval(f, apply(g, k), t) - character(f, g) * eval(f, k, t)));
      }
    }
  r.checks.push_back(upper_check("product_formulas", prod, 1e-12));
  r.checks.push_back(upper_check("group_invariance", inv, 1e-12));

  // Boundary behaviour: Neumann where the family is even across an edge, Dirichlet where odd.
  double neu = 0, dir = 0;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (Family f : kFamilies)
    for (int i = 0; i < 10; ++i) {
      HexIndex k = random_index(rng, 6);
      double scale = 1 + std::sqrt(laplace_eigenvalue(k));
      for (Edge e : {Edge::B1, Edge::B2, Edge::B3}) {
        double s = u(rng);
        Point t = e == Edge::B1 ? Point{0.5 + 0.5 * s, 0.5 - 0.5 * s, -1.0}
                  : e == Edge::B2 ? Point{s, 0.0, -s}
                                  : Point{0.5 * s, 0.5 * s, -s};
        bool odd = (e == Edge::B3) ? (f == Family::SC || f == Family::SS) : (f == Family::CS || f == Family::SS);
        if (odd)
          dir = std::max(dir, std::abs(eval(f, k, t)));
        else
          neu = std::max(neu, std::abs(boundary_normal_derivative(f, k, t, e)) / scale);
      }
    }
  r.checks.push_back(upper_check("neumann_edges", neu, 1e-12));
  r.checks.push_back(upper_check("dirichlet_edges", dir, 1e-13));

  for (auto& c : laplacian_checks(20241017u)) r.checks.push_back(std::move(c));
}

void suite_variety(Report& r, int n) {
  for (RuleKind k : kRuleKinds) {
    double rel_err = 0, control = INFINITY;
    for (int m = 1; m <= n; ++m) {
      auto v = variety_check(k, m);
      rel_err = std::max(rel_err, v.max_rel);
      control = std::min(control, v.control_min);
    }
    r.checks.push_back(upper_check(std::string("variety.") + rule_kind_name(k), rel_err, 1e-10));
    r.checks.push_back(lower_check(std::string("control.") + rule_kind_name(k), control, 0.5));
  }
  double cnt = 0;
  for (int m = 2; m <= std::max(n, 2); ++m)
    cnt = std::max(cnt, std::abs(static_cast<double>(gauss_rule(m).size()) - dim_pi_star(m - 1)));
  r.checks.push_back(upper_check("gauss_node_count", cnt, 0));
  auto z = lobatto_common_zeros();
  r.checks.push_back(upper_check("lobatto_zero_count", std::abs(static_cast<double>(z.found.size()) - 3), 0));
  r.checks.push_back(upper_check("lobatto_closed_form", std::max(z.max_mismatch, z.max_residual), 1e-12));
}

}  // namespace

Report run_suite(Suite s, int n, double tol) {
  if (n < 1) throw Error(Errc::invalid_argument, "n must be >= 1");
  Report r{s, n, {}};
  switch (s) {
    case Suite::orthogonality: suite_orthogonality(r, n); break;
    case Suite::cubature: suite_cubature(r, std::max(n, 2)); break;
    case Suite::eigen: suite_eigen(r, n); break;
    case Suite::identities: suite_identities(r, n); break;
    case Suite::variety: suite_variety(r, n); break;
  }
  if (tol > 0)
    for (auto& c : r.checks)
      if (!c.lower_bound) {
        c.tol = tol;
        c.pass = c.value <= tol;
      }
  return r;
}

}  // namespace g2cub
