// g2cub: command-line front end over the C API.
#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "g2cub/g2cub.h"

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3 };

int exit_for(g2cub_status s) {
  switch (s) {
    case G2CUB_OK: return kOk;
    case G2CUB_E_INVALID_ARGUMENT:
    case G2CUB_E_DOMAIN: return kUsage;
    case G2CUB_E_IO: return kIo;
    default: return kVerifyFailed;
  }
}

int report_error(g2cub_status s) {
  std::fprintf(stderr, "g2cub: %s: %s\n", g2cub_status_string(s), g2cub_last_error());
  return exit_for(s);
}

// Owns a string returned by the library.
struct CStr {
  char* p = nullptr;
  ~CStr() { g2cub_string_free(p); }
};

int emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return std::fflush(stdout) == 0 ? kOk : kIo;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    std::fprintf(stderr, "g2cub: cannot open '%s' for writing\n", path.c_str());
    return kIo;
  }
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  f.close();
  if (!f) {
    std::fprintf(stderr, "g2cub: write to '%s' failed\n", path.c_str());
    return kIo;
  }
  return kOk;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int cmd_dims(int n_max) {
  if (n_max < 1) {
    std::fprintf(stderr, "g2cub: --n must be >= 1\n");
    return kUsage;
  }
  std::string out = "n,dim,cc,sc,cs,ss\n";
  for (long n = 1; n <= n_max; ++n) {
    long dim = 0;
    if (auto s = g2cub_dim_pi_star(n, &dim)) return report_error(s);
    out += std::to_string(n) + "," + std::to_string(dim);
    for (const char* fam : {"cc", "sc", "cs", "ss"}) {
      long c = 0;
      if (auto s = g2cub_gamma_size(fam, n, &c)) return report_error(s);
      out += "," + std::to_string(c);
    }
    out += "\n";
  }
  return emit(out, "");
}

int cmd_nodes(const std::string& kind, int n, const std::string& format, const std::string& path) {
  if (format != "json" && format != "csv") {
    std::fprintf(stderr, "g2cub: --format must be json or csv\n");
    return kUsage;
  }
  g2cub_rule* rule = nullptr;
  if (auto s = g2cub_rule_new(kind.c_str(), n, &rule)) return report_error(s);
  CStr text;
  g2cub_status s = format == "json" ? g2cub_rule_to_json(rule, &text.p) : g2cub_rule_to_csv(rule, &text.p);
  g2cub_rule_free(rule);
  if (s) return report_error(s);
  return emit(text.p, path);
}

int cmd_eval(double alpha, double beta, int k1, int k2, double x, double y, bool coefficients) {
  g2cub_poly* p = nullptr;
  if (auto s = g2cub_poly_new(alpha, beta, k1, k2, &p)) return report_error(s);
  double v = 0;
  g2cub_status s = g2cub_poly_eval(p, x, y, &v);
  std::string out;
  if (!s) out = fmt17(v) + "\n";
  if (!s && coefficients) {
    CStr str;
    s = g2cub_poly_to_string(p, &str.p);
    if (!s) out += std::string(str.p) + "\n";
  }
  g2cub_poly_free(p);
  if (s) return report_error(s);
  return emit(out, "");
}

int cmd_poly(double alpha, double beta, int k1, int k2, const std::string& format, const std::string& path) {
  if (format != "json" && format != "text") {
    std::fprintf(stderr, "g2cub: --format must be json or text\n");
    return kUsage;
  }
  g2cub_poly* p = nullptr;
  if (auto s = g2cub_poly_new(alpha, beta, k1, k2, &p)) return report_error(s);
  CStr str;
  g2cub_status s = format == "json" ? g2cub_poly_to_json(p, &str.p) : g2cub_poly_to_string(p, &str.p);
  g2cub_poly_free(p);
  if (s) return report_error(s);
  std::string text = str.p;
  if (format == "text") text += "\n";
  return emit(text, path);
}

int cmd_verify(const std::string& suite, int n, double tol) {
  g2cub_report* r = nullptr;
  if (auto s = g2cub_verify(suite.c_str(), n, tol, &r)) return report_error(s);
  CStr text;
  g2cub_status s = g2cub_report_to_text(r, &text.p);
  int passed = g2cub_report_passed(r);
  g2cub_report_free(r);
  if (s) return report_error(s);
  std::string out = text.p;
  out += std::string("suite ") + suite + (passed ? " PASS\n" : " FAIL\n");
  int rc = emit(out, "");
  if (rc) return rc;
  return passed ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cubature, Chebyshev polynomials and trigonometric transforms on the 30-60-90 triangle"};
  app.require_subcommand(1);

  int n = 0;
  double alpha = -0.5, beta = -0.5, x = 0, y = 0, tol = 0;
  int k1 = 0, k2 = 0;
  std::string rule, format, out, suite;
  bool coefficients = false;

  auto* dims = app.add_subcommand("dims", "Print dim Pi*_n and the Gamma set sizes for n = 1..N");
  dims->add_option("--n", n, "Largest n")->required();

  auto* nodes = app.add_subcommand("nodes", "Write the nodes and weights of a cubature rule");
  nodes->add_option("--rule", rule, "gauss | lobatto | radau1 | radau2")->required();
  nodes->add_option("--n", n, "Rule parameter (>= 1)")->required();
  nodes->add_option("--format", format, "json | csv")->default_val("json");
  nodes->add_option("--out", out, "Output file (default stdout)");

  auto* ev = app.add_subcommand("eval", "Evaluate P^{alpha,beta}_{k1,k2} at (x, y)");
  ev->add_option("--alpha", alpha, "alpha (> -1)")->default_val(-0.5);
  ev->add_option("--beta", beta, "beta (> -1)")->default_val(-0.5);
  ev->add_option("--k1", k1, "First index")->required();
  ev->add_option("--k2", k2, "Second index")->required();
  ev->add_option("--x", x, "x")->required();
  ev->add_option("--y", y, "y")->required();
  ev->add_flag("--coefficients", coefficients, "Also print the coefficient list");

  auto* poly = app.add_subcommand("poly", "Print the coefficients of P^{alpha,beta}_{k1,k2}");
  poly->add_option("--alpha", alpha, "alpha (> -1)")->default_val(-0.5);
  poly->add_option("--beta", beta, "beta (> -1)")->default_val(-0.5);
  poly->add_option("--k1", k1, "First index")->required();
  poly->add_option("--k2", k2, "Second index")->required();
  poly->add_option("--format", format, "json | text")->default_val("json");
  poly->add_option("--out", out, "Output file (default stdout)");

  auto* ver = app.add_subcommand("verify", "Run a property suite; exit 1 if any check fails");
  ver->add_option("suite", suite, "orthogonality | cubature | eigen | identities | variety")->required();
  ver->add_option("--n", n, "Suite size parameter (default per suite)");
  ver->add_option("--tol", tol, "Override every tolerance (must be positive)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (ver->parsed() && ver->count("--tol") && !(tol > 0)) {
    std::fprintf(stderr, "g2cub: --tol must be positive\n");
    return kUsage;
  }

  if (const char* cap = std::getenv("G2CUB_QUAD_CAP"); cap && std::atoi(cap) < 16) {
    std::fprintf(stderr, "g2cub: G2CUB_QUAD_CAP must be an integer >= 16\n");
    return kUsage;
  }

  if (dims->parsed()) return cmd_dims(n);
  if (nodes->parsed()) return cmd_nodes(rule, n, format, out);
  if (ev->parsed()) return cmd_eval(alpha, beta, k1, k2, x, y, coefficients);
  if (poly->parsed()) return cmd_poly(alpha, beta, k1, k2, format, out);
  if (ver->parsed()) return cmd_verify(suite, n, tol);
  return kUsage;
}
