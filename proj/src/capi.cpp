#include "g2cub/g2cub.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "g2cub/chebyshev.hpp"
#include "g2cub/cubature.hpp"
#include "g2cub/error.hpp"
#include "g2cub/lattice.hpp"
#include "g2cub/serialize.hpp"
#include "g2cub/sturm.hpp"
#include "g2cub/verify.hpp"

struct g2cub_rule {
  g2cub::CubatureRule rule;
};

struct g2cub_poly {
  g2cub::WeightParams params;
  g2cub::MIndex k;
  bool exact = false;
  g2cub::RPoly exact_poly;
  g2cub::DPoly poly;
  double residual = 0;
};

struct g2cub_report {
  g2cub::Report report;
};

namespace {

thread_local std::string g_last_error;

g2cub_status fail(g2cub_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class F>
g2cub_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return G2CUB_OK;
  } catch (const g2cub::Error& e) {
    switch (e.code()) {
      case g2cub::Errc::invalid_argument: return fail(G2CUB_E_INVALID_ARGUMENT, e.what());
      case g2cub::Errc::domain: return fail(G2CUB_E_DOMAIN, e.what());
      case g2cub::Errc::no_convergence: return fail(G2CUB_E_NO_CONVERGENCE, e.what());
      case g2cub::Errc::ill_conditioned: return fail(G2CUB_E_ILL_CONDITIONED, e.what());
      case g2cub::Errc::io: return fail(G2CUB_E_IO, e.what());
    }
    return fail(G2CUB_E_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(G2CUB_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(G2CUB_E_INTERNAL, e.what());
  } catch (...) {
    return fail(G2CUB_E_INTERNAL, "unknown error");
  }
}

void need(const void* p, const char* what) {
  if (!p) throw g2cub::Error(g2cub::Errc::invalid_argument, std::string(what) + " must not be NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* g2cub_status_string(g2cub_status s) {
  switch (s) {
    case G2CUB_OK: return "ok";
    case G2CUB_E_INVALID_ARGUMENT: return "invalid argument";
    case G2CUB_E_DOMAIN: return "domain error";
    case G2CUB_E_NO_CONVERGENCE: return "no convergence";
    case G2CUB_E_ILL_CONDITIONED: return "ill conditioned";
    case G2CUB_E_IO: return "i/o error";
    case G2CUB_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* g2cub_last_error(void) { return g_last_error.c_str(); }

void g2cub_string_free(char* s) { std::free(s); }

void g2cub_set_quad_cap(int cap) { g2cub::set_default_quad_cap(cap); }

g2cub_status g2cub_dim_pi_star(long n, long* out) {
  return guarded([&] {
    need(out, "out");
    *out = g2cub::dim_pi_star(n);
  });
}

g2cub_status g2cub_gamma_size(const char* family, long n, long* out) {
  return guarded([&] {
    need(family, "family");
    need(out, "out");
    *out = static_cast<long>(g2cub::enum_gamma(g2cub::parse_family(family), n).size());
  });
}

g2cub_status g2cub_trig_eval(const char* family, long k1, long k2, double t1, double t2, double* out) {
  return guarded([&] {
    need(family, "family");
    need(out, "out");
    *out = g2cub::eval(g2cub::parse_family(family), g2cub::make_index(k1, k2), g2cub::make_point(t1, t2));
  });
}

g2cub_status g2cub_rule_new(const char* kind, int n, g2cub_rule** out) {
  return guarded([&] {
    need(kind, "kind");
    need(out, "out");
    *out = nullptr;
    auto r = std::make_unique<g2cub_rule>();
    r->rule = g2cub::make_rule(g2cub::parse_rule_kind(kind), n);
    *out = r.release();
  });
}

void g2cub_rule_free(g2cub_rule* r) { delete r; }

size_t g2cub_rule_size(const g2cub_rule* r) { return r ? r->rule.size() : 0; }

g2cub_status g2cub_rule_node(const g2cub_rule* r, size_t i, double* x, double* y, double* w) {
  return guarded([&] {
    need(r, "rule");
    if (i >= r->rule.size()) throw g2cub::Error(g2cub::Errc::invalid_argument, "node index out of range");
    if (x) *x = r->rule.nodes[i][0];
    if (y) *y = r->rule.nodes[i][1];
    if (w) *w = r->rule.weights[i];
  });
}

g2cub_status g2cub_rule_info(const g2cub_rule* r, int* n, double* alpha, double* beta, int* exact_mdegree) {
  return guarded([&] {
    need(r, "rule");
    if (n) *n = r->rule.n;
    if (alpha) *alpha = r->rule.params.alpha;
    if (beta) *beta = r->rule.params.beta;
    if (exact_mdegree) *exact_mdegree = r->rule.exact_mdegree;
  });
}

g2cub_status g2cub_rule_to_json(const g2cub_rule* r, char** out) {
  return guarded([&] {
    need(r, "rule");
    need(out, "out");
    *out = dup(g2cub::rule_to_json(r->rule));
  });
}

g2cub_status g2cub_rule_to_csv(const g2cub_rule* r, char** out) {
  return guarded([&] {
    need(r, "rule");
    need(out, "out");
    *out = dup(g2cub::rule_to_csv(r->rule));
  });
}

g2cub_status g2cub_poly_new(double alpha, double beta, int k1, int k2, g2cub_poly** out) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    if (k1 < 0 || k2 < 0) throw g2cub::Error(g2cub::Errc::invalid_argument, "k1, k2 must be nonnegative");
    auto p = std::make_unique<g2cub_poly>();
    p->params = {alpha, beta};
    p->k = {k1, k2};
    if (auto f = g2cub::family_of(p->params)) {
      p->exact = true;
      p->exact_poly = g2cub::cheb_poly(*f, p->k);
      p->poly = g2cub::to_double(p->exact_poly);
    } else {
      auto res = g2cub::jacobi_poly(p->params, p->k);
      p->poly = std::move(res.poly);
      p->residual = res.residual;
    }
    *out = p.release();
  });
}

void g2cub_poly_free(g2cub_poly* p) { delete p; }

int g2cub_poly_is_exact(const g2cub_poly* p) { return p && p->exact ? 1 : 0; }

g2cub_status g2cub_poly_eval(const g2cub_poly* p, double x, double y, double* out) {
  return guarded([&] {
    need(p, "poly");
    need(out, "out");
    *out = g2cub::eval(p->poly, x, y);
  });
}

g2cub_status g2cub_poly_residual(const g2cub_poly* p, double* out) {
  return guarded([&] {
    need(p, "poly");
    need(out, "out");
    *out = p->residual;
  });
}

g2cub_status g2cub_poly_to_json(const g2cub_poly* p, char** out) {
  return guarded([&] {
    need(p, "poly");
    need(out, "out");
    *out = dup(p->exact ? g2cub::poly_to_json(p->params, p->k, p->exact_poly)
                        : g2cub::poly_to_json(p->params, p->k, p->poly));
  });
}

g2cub_status g2cub_poly_to_string(const g2cub_poly* p, char** out) {
  return guarded([&] {
    need(p, "poly");
    need(out, "out");
    *out = dup(p->exact ? g2cub::to_string(p->exact_poly) : g2cub::to_string(p->poly));
  });
}

g2cub_status g2cub_verify(const char* suite, int n, double tol, g2cub_report** out) {
  return guarded([&] {
    need(suite, "suite");
    need(out, "out");
    *out = nullptr;
    auto s = g2cub::parse_suite(suite);
    auto r = std::make_unique<g2cub_report>();
    r->report = g2cub::run_suite(s, n > 0 ? n : g2cub::default_suite_n(s), tol);
    *out = r.release();
  });
}

void g2cub_report_free(g2cub_report* r) { delete r; }

int g2cub_report_passed(const g2cub_report* r) { return r && r->report.passed() ? 1 : 0; }

size_t g2cub_report_size(const g2cub_report* r) { return r ? r->report.checks.size() : 0; }

g2cub_status g2cub_report_check(const g2cub_report* r, size_t i, const char** name, double* value, double* tol,
                                int* pass) {
  return guarded([&] {
    need(r, "report");
    if (i >= r->report.checks.size()) throw g2cub::Error(g2cub::Errc::invalid_argument, "check index out of range");
    const auto& c = r->report.checks[i];
    if (name) *name = c.name.c_str();
    if (value) *value = c.value;
    if (tol) *tol = c.tol;
    if (pass) *pass = c.pass ? 1 : 0;
  });
}

g2cub_status g2cub_report_to_text(const g2cub_report* r, char** out) {
  return guarded([&] {
    need(r, "report");
    need(out, "out");
    *out = dup(g2cub::format_report(r->report));
  });
}

}  // extern "C"
