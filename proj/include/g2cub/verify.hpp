#pragma once

#include <array>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "g2cub/coords.hpp"
#include "g2cub/cubature.hpp"
#include "g2cub/gentrig.hpp"
#include "g2cub/poly.hpp"

namespace g2cub {

struct CheckResult {
  std::string name;
  double value = 0;
  double tol = 0;
  bool lower_bound = false;  // pass iff value > tol instead of value <= tol
  bool pass = false;
};

CheckResult upper_check(std::string name, double value, double tol);
CheckResult lower_check(std::string name, double value, double bound);

enum class Suite : int { orthogonality, cubature, eigen, identities, variety };
const char* suite_name(Suite s);
Suite parse_suite(std::string_view s);
int default_suite_n(Suite s);

struct Report {
  Suite suite;
  int n = 0;
  std::vector<CheckResult> checks;
  bool passed() const;
};

// tol <= 0 keeps the per-check defaults; otherwise it replaces every upper-bound tolerance.
Report run_suite(Suite s, int n, double tol = 0);
// One line per check: name, value, tolerance, PASS/FAIL.
std::string format_report(const Report& r);
std::string format_check(const CheckResult& c);

// Uniform in the open triangle 0 < t2 < t1 < 1 - t2.
Point random_interior_point(std::mt19937_64& rng);

// Orthogonality constants of the Chebyshev families (trig pairing of the numerators).
double d_constant(Family f, const MIndex& k);
// max |<F_j, F_k>_n - delta / omega_{hat k}| over Gamma_n of the family.
double discrete_orthogonality_error(Family f, long n);
// max over |j|_*, |k|_* <= max_mdeg: trig pairing against d_k delta (trig = true)
// or normalized inner product against (d_k / d_00) delta.
double continuous_orthogonality_error(Family f, int max_mdeg, bool trig);

// Largest |coefficient| of L P - lambda P over |k|_* <= max_mdeg; 0 when exact.
double eigen_identity_residual(Family f, int max_mdeg);

struct ExactnessResult {
  double max_err = 0;     // over monomials with m-degree <= 2n - 1
  double sharp_err = 0;   // max over monomials of m-degree exactly 2n
};
ExactnessResult cubature_exactness(RuleKind kind, int n);

struct LobattoZeros {
  std::vector<std::array<double, 2>> found;        // common zeros inside the region
  std::vector<std::array<double, 2>> closed_form;  // mu = 0, 1, 2
  double max_residual = 0;                         // |T_{3,0}|, |T_{0,2}| at the closed form
  double max_mismatch = 0;                         // found vs closed form after sorting
};
LobattoZeros lobatto_common_zeros();

// Fourth-order finite-difference Laplacian in Cartesian coordinates.
double fd_laplacian(Family f, const HexIndex& k, const Point& t, double h);

std::vector<CheckResult> pointwise_identity_checks(unsigned seed, int points = 100);
std::vector<CheckResult> laplacian_checks(unsigned seed, int ks = 10, int points = 20);

}  // namespace g2cub
