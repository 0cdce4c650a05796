#pragma once

#include <array>
#include <utility>
#include <vector>

#include "g2cub/poly.hpp"
#include "g2cub/quadrature.hpp"

namespace g2cub {

struct OperatorCoeffs {
  RPoly A11, A12, A22, B1, B2;
};

// Parameters are converted exactly (binary64 -> rational).
OperatorCoeffs operator_coeffs(const WeightParams& p);
OperatorCoeffs operator_coeffs(const Rational& alpha, const Rational& beta);

// -A11 q_xx - 2 A12 q_xy - A22 q_yy + B1 q_x + B2 q_y
RPoly apply_L(const WeightParams& p, const RPoly& q);
RPoly apply_L(const OperatorCoeffs& c, const RPoly& q);
DPoly apply_L(const WeightParams& p, const DPoly& q);

struct MonomialImageTerm {
  int mu, nu;  // shift
  int i, j;    // exponent (j0 - 2 mu + 3 nu, k0 + mu - 2 nu)
  Rational coeff;
};
// The nine shifts (0,0),(0,1),(1,0),(1,1),(2,1),(3,2),(4,2),(4,3),(5,3) in this order.
std::vector<MonomialImageTerm> monomial_image(const WeightParams& p, int j, int k);
RPoly monomial_image_poly(const WeightParams& p, int j, int k);

double eigenvalue(const WeightParams& p, const MIndex& k);
Rational eigenvalue_exact(const Rational& alpha, const Rational& beta, const MIndex& k);

// Indices (m - 2p + 3q, n + p - 2q) strictly earlier than k = (m, n) whose
// eigenvalues must differ from lambda_k.
std::vector<MIndex> gamma_plus(const MIndex& k);

struct JacobiResult {
  DPoly poly;            // leading term x^{k1} y^{k2} with coefficient 1
  double residual = 0;   // max |coeff(L P - lambda P)| / max |coeff(lambda P)|
  double condition = 0;  // 2-norm condition estimate of the scaled Gram matrix
  double orthogonality = 0;  // max |<P, m>| / (|P| |m|) over earlier monomials m
};
// Gram-Schmidt in the *-order. Throws Error(ill_conditioned) above 1e12.
JacobiResult jacobi_poly(const WeightParams& p, const MIndex& k, const QuadOptions& opts = {});

// (<L f, g>, <f, L g>) with the normalized weighted inner product.
std::pair<double, double> selfadjointness_check(const WeightParams& p, const RPoly& f, const RPoly& g,
                                                const QuadOptions& opts = {});

// det [[A11, A12], [A12, A22]]
RPoly det_lambda();
// F_x A11 + F_y A12 and F_x A12 + F_y A22 with F the deltoid polynomial.
std::array<RPoly, 2> boundary_flux_polys();

}  // namespace g2cub
