#include "g2cub/sturm.hpp"

#include <Eigen/Dense>

#include <cmath>

#include "g2cub/chebyshev.hpp"
#include "g2cub/error.hpp"

namespace g2cub {

namespace {

constexpr std::array<std::pair<int, int>, 9> kShifts{
    {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 1}, {3, 2}, {4, 2}, {4, 3}, {5, 3}}};

RPoly poly(std::initializer_list<std::tuple<int, int, Rational>> terms) {
  RPoly p;
  for (const auto& [i, j, c] : terms) p.add_term(i, j, c);
  return p;
}

}  // namespace

OperatorCoeffs operator_coeffs(const Rational& a, const Rational& b) {
  using R = Rational;
  OperatorCoeffs c;
  c.A11 = poly({{2, 0, R(-6)}, {0, 1, R(1)}, {1, 0, R(3)}, {0, 0, R(2)}});
  c.A12 = poly({{1, 1, R(-9)}, {2, 0, R(18)}, {0, 1, R(-6)}, {0, 0, R(-3)}});
  c.A22 = poly({{0, 2, R(-18)}, {3, 0, R(108)}, {1, 1, R(-54)}, {1, 0, R(-27)}, {0, 1, R(-9)}});
  c.B1 = poly({{1, 0, R(21) + 12 * a + 18 * b}, {0, 0, 6 * a + 3}});
  c.B2 = poly({{1, 0, R(18) + 36 * a}, {0, 1, R(45) + 36 * b + 18 * a}, {0, 0, 18 * b + 9}});
  return c;
}

OperatorCoeffs operator_coeffs(const WeightParams& p) { return operator_coeffs(Rational(p.alpha), Rational(p.beta)); }

RPoly apply_L(const OperatorCoeffs& c, const RPoly& q) {
  RPoly qx = q.dx(), qy = q.dy();
  RPoly r = c.B1 * qx + c.B2 * qy;
  r -= c.A11 * qx.dx();
  r -= c.A12 * qx.dy() * Rational(2);
  r -= c.A22 * qy.dy();
  return r;
}

RPoly apply_L(const WeightParams& p, const RPoly& q) { return apply_L(operator_coeffs(p), q); }

DPoly apply_L(const WeightParams& p, const DPoly& q) {
  OperatorCoeffs c = operator_coeffs(p);
  DPoly A11 = to_double(c.A11), A12 = to_double(c.A12), A22 = to_double(c.A22), B1 = to_double(c.B1),
        B2 = to_double(c.B2);
  DPoly qx = q.dx(), qy = q.dy();
  DPoly r = B1 * qx + B2 * qy;
  r -= A11 * qx.dx();
  r -= A12 * qx.dy() * 2.0;
  r -= A22 * qy.dy();
  return r;
}

std::vector<MonomialImageTerm> monomial_image(const WeightParams& p, int j, int k) {
  if (j < 0 || k < 0) throw Error(Errc::invalid_argument, "monomial exponents must be nonnegative");
  const Rational a(p.alpha), b(p.beta), J(j), K(k);
  std::vector<MonomialImageTerm> out;
  for (const auto& [mu, nu] : kShifts) {
    Rational c;
    switch (mu * 10 + nu) {
      case 0: c = 6 * (J * J + 3 * K * K + 3 * J * K) + 3 * (5 + 4 * a + 6 * b) * J + 3 * (9 + 6 * a + 12 * b) * K; break;
      case 1: c = -108 * K * (K - 1); break;
      case 10: c = -J * (J - 1); break;
      case 11: c = 18 * K * (3 * K - 2 - 2 * J + 2 * a); break;
      case 21: c = 3 * J * (-J + 2 + 4 * K + 2 * a); break;
      case 32: c = 9 * K * (K + 2 * b); break;
      case 42: c = -2 * J * (J - 1); break;
      case 43: c = 27 * K * (K - 1); break;
      case 53: c = 6 * J * K; break;
    }
    out.push_back(MonomialImageTerm{mu, nu, j - 2 * mu + 3 * nu, k + mu - 2 * nu, c});
  }
  return out;
}

RPoly monomial_image_poly(const WeightParams& p, int j, int k) {
  RPoly r;
  for (const auto& t : monomial_image(p, j, k)) {
    if (t.coeff == 0) continue;
    if (t.i < 0 || t.j < 0) throw Error(Errc::invalid_argument, "internal: nonzero coefficient at negative exponent");
    r.add_term(t.i, t.j, t.coeff);
  }
  return r;
}

Rational eigenvalue_exact(const Rational& a, const Rational& b, const MIndex& k) {
  Rational n(k.mdeg()), k2(k.k2);
  return Rational(3, 2) * n * (n + 5 + 4 * a + 6 * b) + Rational(9, 2) * k2 * (k2 + 1 + 2 * b);
}

double eigenvalue(const WeightParams& p, const MIndex& k) {
  double n = k.mdeg(), k2 = k.k2;
  return 1.5 * n * (n + 5 + 4 * p.alpha + 6 * p.beta) + 4.5 * k2 * (k2 + 1 + 2 * p.beta);
}

std::vector<MIndex> gamma_plus(const MIndex& k) {
  std::vector<MIndex> out;
  const int m = k.k1, n = k.k2;
  for (int p = 0; p <= 2 * m + 3 * n; ++p)
    for (int q = 0; q <= (p + n) / 2; ++q) {
      if (p == 0 && q == 0) continue;
      MIndex j{m - 2 * p + 3 * q, n + p - 2 * q};
      if (j.k1 >= 0 && j.k2 >= 0) out.push_back(j);
    }
  return out;
}

JacobiResult jacobi_poly(const WeightParams& p, const MIndex& k, const QuadOptions& opts) {
  if (k.k1 < 0 || k.k2 < 0) throw Error(Errc::invalid_argument, "index must be nonnegative");
  check_integrable(p);
  std::vector<MIndex> basis;
  for (const auto& m : star_sequence(k.mdeg())) {
    basis.push_back(m);
    if (m == k) break;
  }
  const std::size_t nb = basis.size();

  auto powers = [&](const QuadNode& node, std::vector<double>& mono) {
    mono.resize(nb);
    for (std::size_t i = 0; i < nb; ++i) mono[i] = std::pow(node.x, basis[i].k1) * std::pow(node.y, basis[i].k2);
  };

  // Gram matrix of the monomial basis, for the condition report.
  Eigen::MatrixXd G(nb, nb);
  {
    std::vector<double> mono;
    auto g = weighted_means(
        p, nb * nb,
        [&](const QuadNode& node, std::span<double> out) {
          powers(node, mono);
          for (std::size_t a = 0; a < nb; ++a)
            for (std::size_t b = 0; b < nb; ++b) out[a * nb + b] = mono[a] * mono[b];
        },
        opts);
    for (std::size_t a = 0; a < nb; ++a)
      for (std::size_t b = 0; b < nb; ++b) G(a, b) = g[a * nb + b];
  }
  Eigen::VectorXd d = G.diagonal().cwiseSqrt().cwiseInverse();
  Eigen::MatrixXd Gs = d.asDiagonal() * G * d.asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Gs, Eigen::EigenvaluesOnly);
  double lo = es.eigenvalues().minCoeff(), hi = es.eigenvalues().maxCoeff();
  double cond = lo > 0 ? hi / lo : INFINITY;
  if (!(cond <= 1e12)) throw Error(Errc::ill_conditioned, "Gram matrix condition estimate exceeds 1e12");

  // Orthogonal basis q_0..q_{nb-1} stored as coefficient rows over `basis`.
  Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(nb, nb);
  std::vector<double> qnorm(nb, 0.0);
  std::vector<double> mono;
  for (std::size_t c = 0; c < nb; ++c) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(nb);
    v(c) = 1.0;
    for (int pass = 0; pass < 2 && c > 0; ++pass) {
      auto ip = weighted_means(
          p, c,
          [&](const QuadNode& node, std::span<double> out) {
            powers(node, mono);
            Eigen::Map<const Eigen::VectorXd> mv(mono.data(), nb);
            double vv = v.dot(mv);
            for (std::size_t i = 0; i < c; ++i) out[i] = vv * Q.row(i).dot(mv);
          },
          opts);
      for (std::size_t i = 0; i < c; ++i) v -= (ip[i] / qnorm[i]) * Q.row(i).transpose();
    }
    Q.row(c) = v.transpose();
    qnorm[c] = weighted_mean(
        p,
        [&](const QuadNode& node) {
          powers(node, mono);
          Eigen::Map<const Eigen::VectorXd> mv(mono.data(), nb);
          double vv = v.dot(mv);
          return vv * vv;
        },
        opts);
  }

  JacobiResult res;
  res.condition = cond;
  for (std::size_t i = 0; i < nb; ++i) {
    double c = Q(nb - 1, i);
    if (c != 0.0) res.poly.set(basis[i].k1, basis[i].k2, c);
  }
  res.poly.set(k.k1, k.k2, 1.0);

  const double lam = eigenvalue(p, k);
  DPoly r = apply_L(p, res.poly) - res.poly * lam;
  double scale = max_abs_coeff(res.poly * lam);
  res.residual = scale > 0 ? max_abs_coeff(r) / scale : max_abs_coeff(r);

  if (nb > 1) {
    const Eigen::VectorXd last = Q.row(nb - 1).transpose();
    auto ip = weighted_means(
        p, nb - 1,
        [&](const QuadNode& node, std::span<double> out) {
          powers(node, mono);
          Eigen::Map<const Eigen::VectorXd> mv(mono.data(), nb);
          double pv = last.dot(mv);
          for (std::size_t i = 0; i + 1 < nb; ++i) out[i] = pv * mono[i];
        },
        opts);
    for (std::size_t i = 0; i + 1 < nb; ++i)
      res.orthogonality =
          std::max(res.orthogonality, std::abs(ip[i]) / std::sqrt(qnorm[nb - 1] * G(i, i)));
  }
  return res;
}

std::pair<double, double> selfadjointness_check(const WeightParams& p, const RPoly& f, const RPoly& g,
                                                const QuadOptions& opts) {
  OperatorCoeffs c = operator_coeffs(p);
  return {continuous_inner(p, apply_L(c, f), g, opts), continuous_inner(p, f, apply_L(c, g), opts)};
}

RPoly det_lambda() {
  OperatorCoeffs c = operator_coeffs(Rational(0), Rational(0));
  return c.A11 * c.A22 - c.A12 * c.A12;
}

std::array<RPoly, 2> boundary_flux_polys() {
  OperatorCoeffs c = operator_coeffs(Rational(0), Rational(0));
  RPoly F = deltoid_F_poly();
  RPoly F1 = F.dx(), F2 = F.dy();
  return {F1 * c.A11 + F2 * c.A12, F1 * c.A12 + F2 * c.A22};
}

}  // namespace g2cub
