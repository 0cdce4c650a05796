#include "g2cub/cubature.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "g2cub/chebyshev.hpp"
#include "g2cub/error.hpp"
#include "g2cub/lattice.hpp"

namespace g2cub {

namespace {

void require_n(int n) {
  if (n < 1) throw Error(Errc::invalid_argument, "rule parameter n must be >= 1");
}

CubatureRule start(RuleKind kind, int n, int N, Family f) {
  CubatureRule r;
  r.kind = kind;
  r.n = n;
  r.lattice_n = N;
  r.params = params_of(f);
  r.exact_mdegree = 2 * n - 1;
  return r;
}

void push(CubatureRule& r, const HexIndex& j, const Point& t, double w) {
  r.lattice.push_back(j);
  r.nodes.push_back(xy_map(t));
  r.weights.push_back(w);
}

// Dense sample of the region for scaling the variety residuals.
const std::vector<std::array<double, 2>>& dense_sample() {
  static const std::vector<std::array<double, 2>> pts = [] {
    std::vector<std::array<double, 2>> v;
    const long M = 60;
    for (const auto& node : enum_upsilon(M)) v.push_back(xy_map(lattice_point(node.j, M)));
    return v;
  }();
  return pts;
}

MIndex alpha_star(const MIndex& a) { return a.k1 >= 1 ? MIndex{a.k1 - 1, a.k2} : MIndex{1, a.k2 - 1}; }

}  // namespace

const char* rule_kind_name(RuleKind k) {
  switch (k) {
    case RuleKind::gauss: return "gauss";
    case RuleKind::lobatto: return "lobatto";
    case RuleKind::radau1: return "radau1";
    case RuleKind::radau2: return "radau2";
  }
  return "?";
}

RuleKind parse_rule_kind(std::string_view s) {
  std::string l;
  for (char c : s) l += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (RuleKind k : kRuleKinds)
    if (l == rule_kind_name(k)) return k;
  throw Error(Errc::invalid_argument, "unknown rule kind '" + std::string(s) + "'");
}

CubatureRule gauss_rule(int n) {
  require_n(n);
  const int N = n + 5;
  CubatureRule r = start(RuleKind::gauss, n, N, Family::SS);
  const double N2 = static_cast<double>(N) * N;
  for (const auto& node : enum_upsilon(N)) {
    if (node.cls != NodeClass::interior) continue;
    Point t = lattice_point(node.j, N);
    double ss = eval(Family::SS, HexIndex{2, 1, -3}, t);
    push(r, node.j, t, 144.0 * ss * ss / N2);
  }
  return r;
}

CubatureRule lobatto_rule(int n) {
  require_n(n);
  CubatureRule r = start(RuleKind::lobatto, n, n, Family::CC);
  const double n2 = static_cast<double>(n) * n;
  for (const auto& node : enum_upsilon(n)) push(r, node.j, lattice_point(node.j, n), node.omega / n2);
  return r;
}

CubatureRule radau1_rule(int n) {
  require_n(n);
  const int N = n + 2;
  CubatureRule r = start(RuleKind::radau1, n, N, Family::SC);
  const double N2 = static_cast<double>(N) * N;
  for (const auto& node : enum_upsilon(N)) {
    Point t = lattice_point(node.j, N);
    double sc = eval(Family::SC, HexIndex{1, 0, -1}, t);
    if (sc == 0.0) continue;  // structural zero on t1 = t2
    push(r, node.j, t, 6.0 * node.omega * sc * sc / N2);
  }
  return r;
}

CubatureRule radau2_rule(int n) {
  require_n(n);
  const int N = n + 3;
  CubatureRule r = start(RuleKind::radau2, n, N, Family::CS);
  const double N2 = static_cast<double>(N) * N;
  for (const auto& node : enum_upsilon(N)) {
    Point t = lattice_point(node.j, N);
    double cs = eval(Family::CS, HexIndex{1, 1, -2}, t);
    if (cs == 0.0) continue;  // structural zero on t2 = 0 and t3 = -1
    push(r, node.j, t, 6.0 * node.omega * cs * cs / N2);
  }
  return r;
}

std::pair<CubatureRule, CubatureRule> radau_rules(int n) { return {radau1_rule(n), radau2_rule(n)}; }

CubatureRule make_rule(RuleKind kind, int n) {
  switch (kind) {
    case RuleKind::gauss: return gauss_rule(n);
    case RuleKind::lobatto: return lobatto_rule(n);
    case RuleKind::radau1: return radau1_rule(n);
    case RuleKind::radau2: return radau2_rule(n);
  }
  throw Error(Errc::invalid_argument, "unknown rule kind");
}

double integrate(const CubatureRule& rule, const XYFn& f) {
  double s = 0;
  for (std::size_t i = 0; i < rule.size(); ++i) s += rule.weights[i] * f(rule.nodes[i][0], rule.nodes[i][1]);
  return s;
}

double reference_integral(const WeightParams& p, const XYFn& f, const QuadOptions& opts) {
  return weighted_mean(p, [&](const QuadNode& n) { return f(n.x, n.y); }, opts);
}

VarietyReport variety_check(RuleKind kind, int n) {
  CubatureRule rule = make_rule(kind, n);
  std::vector<DPoly> polys;
  auto level = [&](Family f, int deg, bool diff) {
    for (const auto& a : star_level(deg)) {
      RPoly q = cheb_poly(f, a);
      if (diff) q -= cheb_poly(f, alpha_star(a));
      polys.push_back(to_double(q));
    }
  };
  switch (kind) {
    case RuleKind::gauss: level(Family::SS, n, false); break;
    case RuleKind::lobatto: level(Family::CC, n + 1, true); break;
    case RuleKind::radau1: level(Family::SC, n, false); break;
    case RuleKind::radau2: level(Family::CS, n + 1, true); break;
  }
  VarietyReport rep;
  rep.kind = kind;
  rep.n = n;
  rep.polynomials = polys.size();
  rep.nodes = rule.size();
  rep.control_min = rule.size() ? INFINITY : 0.0;
  const DPoly one = to_double(cheb_poly(family_of(rule.params).value(), MIndex{0, 0}));
  for (const auto& node : rule.nodes) rep.control_min = std::min(rep.control_min, std::abs(eval(one, node[0], node[1])));
  for (const auto& q : polys) {
    double scale = 0;
    for (const auto& s : dense_sample()) scale = std::max(scale, std::abs(eval(q, s[0], s[1])));
    for (const auto& node : rule.nodes) {
      double v = std::abs(eval(q, node[0], node[1]));
      rep.max_abs = std::max(rep.max_abs, v);
      if (scale > 0) rep.max_rel = std::max(rep.max_rel, v / scale);
    }
  }
  return rep;
}

}  // namespace g2cub
