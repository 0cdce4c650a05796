#include "g2cub/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

#include "g2cub/error.hpp"
#include "g2cub/gentrig.hpp"

namespace g2cub {

namespace {

using std::numbers::pi;

std::atomic<int> g_cap_override{0};

int env_cap() {
  if (const char* s = std::getenv("G2CUB_QUAD_CAP")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v >= 16 && v <= 1 << 14) return static_cast<int>(v);
  }
  return 512;
}

// Rule on [0, 1] for s^b (1 - s)^a; returns nodes s, complements 1 - s, weights.
struct UnitRule {
  std::vector<double> s, sc, w;
};

UnitRule unit_jacobi(int order, double a, double b) {
  GaussRule g = gauss_jacobi(order, a, b);
  UnitRule r;
  double scale = std::exp2(-(a + b + 1));
  for (int i = 0; i < order; ++i) {
    r.s.push_back(0.5 * (1 + g.z[i]));
    r.sc.push_back(0.5 * (1 - g.z[i]));
    r.w.push_back(g.w[i] * scale);
  }
  return r;
}

std::shared_ptr<const PullbackRule> build_rule(const WeightParams& p, int order) {
  const double A = 2 * p.alpha + 1, B = 2 * p.beta + 1;
  UnitRule rs = unit_jacobi(order, B, 3 * A + 3 * B + 1);
  UnitRule ru = unit_jacobi(order, A, B);
  auto rule = std::make_shared<PullbackRule>();
  rule->order = order;
  rule->nodes.reserve(static_cast<std::size_t>(order) * order);
  const HexIndex kx{1, 0, -1}, ky{1, 1, -2};
  double mass = 0;
  for (int i = 0; i < order; ++i) {
    const double s = rs.s[i], s1 = rs.sc[i];
    for (int j = 0; j < order; ++j) {
      const double u = ru.s[j], u1 = ru.sc[j];
      const double t1 = s * (1 - u / 2), t2 = s * u / 2;
      // |SC_{1,0,-1}| and |CS_{1,1,-2}| as sine products, each divided by its
      // vanishing factor so the ratio stays accurate near the edges.
      const double sc_r = (4.0 / 3.0) * std::sin(pi * s * u1 / 3) / (s * u1) *
                          std::sin(pi * s * (1 + u / 2) / 3) / s * std::sin(pi * s * (2 - u / 2) / 3) / s;
      const double cs_r = (4.0 / 3.0) * std::sin(pi * t1) / s * std::sin(pi * t2) / (s * u) *
                          std::sin(pi * s1) / (s * s1);
      double ratio = std::pow(sc_r, A) * std::pow(cs_r, B);
      double raw = rs.w[i] * ru.w[j] * 0.5 * ratio;
      mass += raw;
      Point t = make_point(t1, t2);
      rule->nodes.push_back(QuadNode{t1, t2, eval(Family::CC, kx, t), eval(Family::CC, ky, t), raw});
    }
  }
  for (auto& n : rule->nodes) n.w /= mass;
  rule->raw_mass = mass;
  return rule;
}

}  // namespace

GaussRule gauss_jacobi(int order, double a, double b) {
  if (order < 1) throw Error(Errc::invalid_argument, "quadrature order must be >= 1");
  if (!(a > -1 && b > -1)) throw Error(Errc::domain, "Jacobi exponents must exceed -1");
  const int N = order;
  Eigen::VectorXd diag(N), sub(std::max(N - 1, 1));
  const double ab = a + b;
  for (int n = 0; n < N; ++n) {
    if (n == 0)
      diag(n) = (b - a) / (ab + 2);
    else
      diag(n) = (b * b - a * a) / ((2 * n + ab) * (2 * n + ab + 2));
  }
  for (int n = 1; n < N; ++n) {
    double bn;
    if (n == 1) {
      bn = 4 * (1 + a) * (1 + b) / ((2 + ab) * (2 + ab) * (3 + ab));
    } else {
      double c = 2 * n + ab;
      bn = 4 * n * (n + a) * (n + b) * (n + ab) / (c * c * (c + 1) * (c - 1));
    }
    sub(n - 1) = std::sqrt(bn);
  }
  const double mu0 =
      std::exp((ab + 1) * std::log(2.0) + std::lgamma(a + 1) + std::lgamma(b + 1) - std::lgamma(ab + 2));
  GaussRule r;
  if (N == 1) {
    r.z = {diag(0)};
    r.w = {mu0};
    return r;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub.head(N - 1), Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) throw Error(Errc::no_convergence, "Golub-Welsch eigensolver failed");
  for (int i = 0; i < N; ++i) {
    r.z.push_back(es.eigenvalues()(i));
    double v = es.eigenvectors()(0, i);
    r.w.push_back(mu0 * v * v);
  }
  return r;
}

void check_integrable(const WeightParams& p) {
  if (!(p.alpha > -1 && p.beta > -1))
    throw Error(Errc::domain, "weight parameters must satisfy alpha, beta > -1");
  if (!(p.alpha + p.beta > -4.0 / 3.0))
    throw Error(Errc::domain, "weight is not integrable at the cusp unless alpha + beta > -4/3");
}

std::shared_ptr<const PullbackRule> pullback_rule(const WeightParams& p, int order) {
  check_integrable(p);
  static std::mutex mu;
  static std::map<std::tuple<double, double, int>, std::shared_ptr<const PullbackRule>> cache;
  auto key = std::make_tuple(p.alpha, p.beta, order);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto rule = build_rule(p, order);
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(rule)).first->second;
}

int effective_cap(const QuadOptions& o) {
  if (o.cap > 0) return o.cap;
  if (int c = g_cap_override.load(); c > 0) return c;
  return env_cap();
}

void set_default_quad_cap(int cap) { g_cap_override.store(cap > 0 ? cap : 0); }

std::vector<double> weighted_means(const WeightParams& p, std::size_t m, const VectorIntegrand& f,
                                   const QuadOptions& opts) {
  const int cap = effective_cap(opts);
  std::vector<double> buf(m);
  auto run = [&](int order, std::vector<double>& I, std::vector<double>& S) {
    auto rule = pullback_rule(p, order);
    I.assign(m, 0.0);
    S.assign(m, 0.0);
    for (const auto& node : rule->nodes) {
      std::fill(buf.begin(), buf.end(), 0.0);
      f(node, buf);
      for (std::size_t i = 0; i < m; ++i) {
        I[i] += node.w * buf[i];
        S[i] += node.w * std::abs(buf[i]);
      }
    }
  };
  int order = std::min(opts.start, cap);
  std::vector<double> prev, cur, S;
  run(order, prev, S);
  while (true) {
    if (2 * order > cap)
      throw Error(Errc::no_convergence, "quadrature did not converge within " + std::to_string(cap) +
                                            " points per axis");
    order *= 2;
    run(order, cur, S);
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i)
      ok = std::abs(cur[i] - prev[i]) <= opts.rtol * std::max(std::abs(cur[i]), S[i]);
    if (ok) return cur;
    prev.swap(cur);
  }
}

double weighted_mean(const WeightParams& p, const std::function<double(const QuadNode&)>& f,
                     const QuadOptions& opts) {
  return weighted_means(
      p, 1, [&](const QuadNode& n, std::span<double> out) { out[0] = f(n); }, opts)[0];
}

double pullback_mass(const WeightParams& p, const QuadOptions& opts) {
  const int cap = effective_cap(opts);
  int order = std::min(opts.start, cap);
  double prev = pullback_rule(p, order)->raw_mass;
  while (true) {
    if (2 * order > cap) throw Error(Errc::no_convergence, "pullback mass did not converge");
    order *= 2;
    double cur = pullback_rule(p, order)->raw_mass;
    if (std::abs(cur - prev) <= opts.rtol * std::abs(cur)) return cur;
    prev = cur;
  }
}

double triangle_mean(const std::function<double(const QuadNode&)>& f, const QuadOptions& opts) {
  return weighted_mean(WeightParams{-0.5, -0.5}, f, opts);
}

}  // namespace g2cub
