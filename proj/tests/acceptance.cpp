// Acceptance runner: one PASS/FAIL line per criterion.
//
// Exit status is 0 when every criterion passes, except that criterion 10 is
// allowed to print FAIL solely because the two stated constants known to be
// wrong (det = 3F, FA2 with factor 6) fail while their corrected forms hold
// exactly. Anything else, including those two unexpectedly passing, exits 1.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include <unistd.h>

#include "g2cub/chebyshev.hpp"
#include "g2cub/cubature.hpp"
#include "g2cub/lattice.hpp"
#include "g2cub/sturm.hpp"
#include "g2cub/verify.hpp"
#include "oracles.hpp"

#ifndef G2CUB_CLI_PATH
#error "G2CUB_CLI_PATH must name the command-line tool"
#endif

using namespace g2cub;

namespace {

struct Line {
  int id;
  bool pass;
  std::string detail;
};

std::vector<Line> lines;
bool unexpected = false;

void report(int id, bool pass, std::string detail) {
  std::printf("criterion %2d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  lines.push_back({id, pass, std::move(detail)});
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double max_abs(const RPoly& p) {
  double m = 0;
  for (const auto& [e, c] : p.terms()) m = std::max(m, std::abs(to_double(c)));
  return m;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void c1() {
  bool ok = true;
  for (long n = 1; n <= 12; ++n) ok = ok && dim_pi_star(n) == oracle::kDims[n - 1];
  long bad = -1;
  for (long n = 0; n <= 60 && bad < 0; ++n)
    if (dim_pi_star(n) != dim_pi_star_bruteforce(n)) bad = n;
  report(1, ok && bad < 0, std::string("table n=1..12 ") + (ok ? "matches" : "differs") +
                               ", brute force n<=60 " + (bad < 0 ? "agrees" : "differs at n=" + std::to_string(bad)));
}

void c2() {
  int wrong = 0;
  for (const auto& lp : oracle::listed_polys())
    if (!(cheb_poly(lp.family, MIndex{lp.k1, lp.k2}) == oracle::parse_poly(lp.text))) ++wrong;
  const auto total = oracle::listed_polys().size();
  report(2, wrong == 0 && total == 28,
         std::to_string(total - wrong) + "/" + std::to_string(total) + " listed polynomials exact");
}

void c3() {
  auto t0 = std::chrono::steady_clock::now();
  double worst = 0;
  for (Family f : kFamilies) worst = std::max(worst, eigen_identity_residual(f, 12));
  double dt = seconds_since(t0);
  report(3, worst == 0 && dt < 10, fmt("max |LP - lambda P| coeff = %.3g, %.2f s", worst, dt));
}

void c4() {
  double res = 0, closed = 0;
  for (const WeightParams& p : {WeightParams{0, 0}, WeightParams{0.3, 1.2}, WeightParams{-0.4, 0.7}}) {
    for (const auto& k : star_sequence(8)) res = std::max(res, jacobi_poly(p, k).residual);
    const double a = p.alpha, b = p.beta;
    DPoly p10 = jacobi_poly(p, {1, 0}).poly, p01 = jacobi_poly(p, {0, 1}).poly;
    // P_{1,0} = x + c, P_{0,1} = y + d x + e
    DPoly e10, e01;
    e10.set(1, 0, 1);
    e10.set(0, 0, (1 + 2 * a) / (7 + 4 * a + 6 * b));
    e01.set(0, 1, 1);
    e01.set(1, 0, 3 * (1 + 2 * a) / (4 + a + 3 * b));
    e01.set(0, 0, (5 + 5 * a + 11 * b + 2 * a * b + 6 * b * b + 4 * a * a) / ((4 + a + 3 * b) * (5 + 2 * a + 4 * b)));
    closed = std::max({closed, max_abs_coeff(p10 - e10), max_abs_coeff(p01 - e01)});
  }
  report(4, res <= 1e-8 && closed <= 1e-10, fmt("residual %.3g (tol 1e-8), closed forms %.3g (tol 1e-10)", res, closed));
}

void c5() {
  double e = 0;
  for (Family f : kFamilies)
    for (long n = 1; n <= 12; ++n) e = std::max(e, discrete_orthogonality_error(f, n));
  report(5, e <= 1e-12, fmt("max abs error %.3g over n<=12 (tol 1e-12)", e));
}

void c6() {
  double trig = 0, norm = 0;
  for (Family f : kFamilies) {
    trig = std::max(trig, continuous_orthogonality_error(f, 10, true));
    norm = std::max(norm, continuous_orthogonality_error(f, 10, false));
  }
  report(6, trig <= 1e-9 && norm <= 1e-9,
         fmt("trig pairing vs d_k %.3g, weighted inner vs d_k/d_00 %.3g (tol 1e-9)", trig, norm));
}

void c7() {
  double worst = 0, sharp = INFINITY;
  for (RuleKind k : kRuleKinds)
    for (int n = 2; n <= 10; ++n) {
      auto r = cubature_exactness(k, n);
      worst = std::max(worst, r.max_err);
      sharp = std::min(sharp, r.sharp_err);
    }
  report(7, worst <= 1e-9 && sharp > 1e-6,
         fmt("max error on m-degree<=2n-1 %.3g (tol 1e-9), min sharpness at 2n %.3g (> 1e-6)", worst, sharp));
}

void c8() {
  bool counts = true;
  double vanish = 0;
  for (int n = 2; n <= 12; ++n) {
    auto rule = gauss_rule(n);
    counts = counts && static_cast<long>(rule.size()) == dim_pi_star(n - 1);
    for (const auto& k : star_level(n)) {
      DPoly P = to_double(cheb_poly(Family::SS, k));
      for (const auto& x : rule.nodes) vanish = std::max(vanish, std::abs(eval(P, x[0], x[1])));
    }
  }
  report(8, counts && vanish <= 1e-10,
         std::string("node counts ") + (counts ? "match" : "differ") + fmt(", max |P| at nodes %.3g (tol 1e-10)", vanish));
}

void c9() {
  double vanish = 0;
  for (int n = 1; n <= 10; ++n) {
    auto rule = lobatto_rule(n);
    for (const auto& a : star_level(n + 1)) {
      MIndex s = a.k1 >= 1 ? MIndex{a.k1 - 1, a.k2} : MIndex{1, a.k2 - 1};
      DPoly D = to_double(cheb_poly(Family::CC, a) - cheb_poly(Family::CC, s));
      for (const auto& x : rule.nodes) vanish = std::max(vanish, std::abs(eval(D, x[0], x[1])));
    }
  }
  auto z = lobatto_common_zeros();
  double cf = z.found.size() == 3 ? std::max(z.max_mismatch, z.max_residual) : INFINITY;
  report(9, vanish <= 1e-10 && cf <= 1e-12,
         fmt("max |T_a - T_a*| at nodes %.3g (tol 1e-10), closed-form zeros %.3g (tol 1e-12)", vanish, cf));
}

void c10() {
  const RPoly F = deltoid_F_poly();
  const RPoly x = RPoly::monomial(1, 0), y = RPoly::monomial(0, 1), one(Rational(1));
  const RPoly det = det_lambda();
  const auto flux = boundary_flux_polys();

  const double det3 = max_abs(det - F * Rational(3));
  const double det9 = max_abs(det - F * Rational(9));
  const double fa1 = max_abs(flux[0] + F * (x * Rational(5) + one) * Rational(6));
  const double fa2 = max_abs(flux[1] + F * (y * Rational(3) + x * Rational(2) + one) * Rational(6));
  const double fa2_18 = max_abs(flux[1] + F * (y * Rational(3) + x * Rational(2) + one) * Rational(18));

  // Exact polynomial forms of the squared-sine identities.
  const double sc2 = max_abs(sc_square_poly() - (one + y * Rational(2) - x * x * Rational(3)) * Rational(1, 3));
  const double cs2 = max_abs(cs_square_poly() - (x * x * x * Rational(24) - y * y - x * y * Rational(12) -
                                                 x * Rational(6) - y * Rational(4) - one));

  bool pointwise = true;
  std::string failed;
  for (const auto& c : pointwise_identity_checks(20241016u, 100)) {
    if (c.tol != 1e-12 || !c.pass) {
      pointwise = false;
      failed += " " + c.name;
    }
  }

  const bool others = pointwise && fa1 == 0 && sc2 == 0 && cs2 == 0;
  const bool all = others && det3 == 0 && fa2 == 0;
  std::string d = std::string("pointwise WT,WT1-3,squares,Jacobian,F ") + (pointwise ? "ok" : "failed:" + failed) +
                  fmt("; FA1 %.3g; det=3F residual %.3g; FA2 (factor 6) residual %.3g", fa1, det3, fa2) +
                  fmt("; corrected det=9F %.3g, FA2 factor 18 %.3g", det9, fa2_18);
  report(10, all, d);
  if (!all) {
    // Tolerated only when the two stated constants are the sole cause.
    const bool documented = others && det3 != 0 && fa2 != 0 && det9 == 0 && fa2_18 == 0;
    if (!documented) unexpected = true;
    std::printf("              known-false constants (det=3F, FA2 factor 6) %s\n",
                documented ? "fail as documented; corrected identities hold exactly" : "NOT as documented");
  }
}

void c11() {
  double worst = 0;
  for (const auto& c : laplacian_checks(20241017u, 10, 20)) worst = std::max(worst, c.value);
  report(11, worst <= 1e-6, fmt("max relative error %.3g (tol 1e-6, h=1e-4)", worst));
}

bool run_cli(const std::string& args) {
  std::string cmd = std::string("\"") + G2CUB_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  return std::system(cmd.c_str()) == 0;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void c12() {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("g2cub_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  int compared = 0, same = 0;
  for (const char* rule : {"gauss", "lobatto", "radau1", "radau2"})
    for (const char* format : {"json", "csv"}) {
      fs::path a = dir / "a", b = dir / "b";
      std::string base = std::string("nodes --rule ") + rule + " --n 9 --format " + format + " --out ";
      bool ran = run_cli(base + "\"" + a.string() + "\"") && run_cli(base + "\"" + b.string() + "\"");
      ++compared;
      std::string sa = slurp(a), sb = slurp(b);
      if (ran && !sa.empty() && sa == sb) ++same;
    }
  fs::remove_all(dir);
  report(12, same == compared, std::to_string(same) + "/" + std::to_string(compared) + " output pairs byte-identical");
}

}  // namespace

int main() {
  try {
    c1(); c2(); c3(); c4(); c5(); c6();
    c7(); c8(); c9(); c10(); c11(); c12();
  } catch (const std::exception& e) {
    std::printf("aborted: %s\n", e.what());
    return 1;
  }
  bool ok = !unexpected;
  for (const auto& l : lines)
    if (!l.pass && l.id != 10) ok = false;
  return ok && lines.size() == 12 ? 0 : 1;
}
