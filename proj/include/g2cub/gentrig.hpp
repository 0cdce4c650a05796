#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "g2cub/coords.hpp"
#include "g2cub/poly.hpp"

namespace g2cub {

enum class Family : int { CC = 0, SC = 1, CS = 2, SS = 3 };

inline constexpr std::array<Family, 4> kFamilies{Family::CC, Family::SC, Family::CS, Family::SS};

const char* family_name(Family f);
// Accepts "cc", "CC", ...; throws Error(invalid_argument) otherwise.
Family parse_family(std::string_view s);

// exp(2 pi i k.t / 3)
std::complex<double> phi(const HexIndex& k, const Point& t);

// Three-term closed forms. Structurally vanishing cases return exactly 0.
double eval(Family f, const HexIndex& k, const Point& t);
// Same closed form accumulated in long double.
long double eval_extended(Family f, const HexIndex& k, const Point& t);

// F_k(t sigma) = character(F, sigma) F_k(t), and the same in k.
int character(Family f, const GroupElem& g);

// Gradient of the closed form with respect to (t1, t2, t3) taken as free variables.
std::array<double, 3> grad_t(Family f, const HexIndex& k, const Point& t);
// Gradient in Cartesian coordinates x with t = E x.
std::array<double, 2> grad_cart(Family f, const HexIndex& k, const Point& t);

// (2 pi^2 / 9) sum (k_i - k_j)^2
double laplace_eigenvalue(const HexIndex& k);

// B1: t3 = -1, B2: t2 = 0, B3: t1 = t2.
enum class Edge : int { B1 = 1, B2 = 2, B3 = 3 };
bool on_edge(const Point& t, Edge e, double tol = 1e-12);
// Exterior normal derivative; throws Error(domain) when t is not on the edge.
double boundary_normal_derivative(Family f, const HexIndex& k, const Point& t, Edge e);

struct TrigTerm {
  Family family;
  HexIndex k;
  Rational coeff;
};

// Family H of a product F_j G_k.
Family product_family(Family a, Family b);
// F_j G_k as twelve terms (1/12) (+-) chi_F(rho) H_{k + j rho}; not merged.
std::vector<TrigTerm> product_expand(Family a, const HexIndex& j, Family b, const HexIndex& k);
double eval(const std::vector<TrigTerm>& terms, const Point& t);

}  // namespace g2cub
