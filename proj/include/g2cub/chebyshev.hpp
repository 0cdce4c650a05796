#pragma once

#include <array>
#include <functional>
#include <optional>
#include <utility>

#include "g2cub/coords.hpp"
#include "g2cub/gentrig.hpp"
#include "g2cub/poly.hpp"
#include "g2cub/quadrature.hpp"

namespace g2cub {

// CC (-1/2,-1/2), SC (1/2,-1/2), CS (-1/2,1/2), SS (1/2,1/2).
WeightParams params_of(Family f);
std::optional<Family> family_of(const WeightParams& p);
// Throws Error(invalid_argument) unless both parameters are +-1/2.
Family require_half_integer(const WeightParams& p);

// (x, y) = (CC_{1,0,-1}(t), CC_{1,1,-2}(t))
std::array<double, 2> xy_map(const Point& t);
// d(x, y)/d(t1, t2) with t3 = -t1 - t2, differentiated analytically.
double xy_jacobian(const Point& t);

double deltoid_F(double x, double y);
RPoly deltoid_F_poly();
RPoly sc_square_poly();  // (1 + 2y - 3x^2)/3 = SC_{1,0,-1}^2
RPoly cs_square_poly();  // 24x^3 - y^2 - 12xy - 6x - 4y - 1 = CS_{1,1,-2}^2

// (4 pi^2)^{a+b} / 3^{2a+b} (1+2y-3x^2)^a (24x^3-...)^b.
// Throws Error(domain) when a factor is negative, or zero under a negative power.
double weight_w(const WeightParams& p, double x, double y);
// 1 / integral of w over the deltoid region.
double normalization_constant(const WeightParams& p, const QuadOptions& opts = {});

// Numerator index of P^F_{k1,k2}.
HexIndex kappa(Family f, const MIndex& k);
HexIndex kappa(Family f, long k1, long k2);

// F_K / F_{kappa(0,0)} = sign * P^F_k; nullopt when the quotient vanishes identically.
std::optional<std::pair<int, MIndex>> resolve(Family f, const HexIndex& K);

// Exact polynomial; memoized and thread-safe.
RPoly cheb_poly(Family f, const MIndex& k);
RPoly cheb_poly(const WeightParams& p, const MIndex& k);
// Same family built only by the symmetry-resolving three-term recurrences.
RPoly cheb_poly_generic(Family f, const MIndex& k);
Rational cheb_leading_coeff(Family f, const MIndex& k);

// 6 x P_base - sum over the x-orbit (var 0) or 6 y P_base - sum over the
// y-orbit (var 1) of the resolved neighbours; zero when the recurrence holds.
RPoly recurrence_residual(Family f, const MIndex& base, int var);

// Quotient of trig functions in long double, polynomial fallback when |denominator| < 1e-8.
double cheb_eval_trig(Family f, const MIndex& k, const Point& t);

// Uniform triangle mean of F_{kappa(k)} F_{kappa(j)}.
double trig_pairing(Family f, const MIndex& k, const MIndex& j, const QuadOptions& opts = {});

using XYFn = std::function<double(double, double)>;
// c_{a,b} integral of f g w over the deltoid region.
double continuous_inner(const WeightParams& p, const XYFn& f, const XYFn& g, const QuadOptions& opts = {});
double continuous_inner(const WeightParams& p, const DPoly& f, const DPoly& g, const QuadOptions& opts = {});
double continuous_inner(const WeightParams& p, const RPoly& f, const RPoly& g, const QuadOptions& opts = {});

}  // namespace g2cub
