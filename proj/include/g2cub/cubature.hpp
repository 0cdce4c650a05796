#pragma once

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "g2cub/coords.hpp"
#include "g2cub/gentrig.hpp"
#include "g2cub/quadrature.hpp"

namespace g2cub {

enum class RuleKind : int { gauss = 0, lobatto = 1, radau1 = 2, radau2 = 3 };
inline constexpr std::array<RuleKind, 4> kRuleKinds{RuleKind::gauss, RuleKind::lobatto, RuleKind::radau1,
                                                    RuleKind::radau2};
const char* rule_kind_name(RuleKind k);
RuleKind parse_rule_kind(std::string_view s);

struct CubatureRule {
  RuleKind kind = RuleKind::gauss;
  int n = 0;
  int lattice_n = 0;  // the N of the generating set Upsilon_N
  WeightParams params;
  int exact_mdegree = 0;
  std::vector<HexIndex> lattice;  // generating j, lexicographic
  std::vector<std::array<double, 2>> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

// Weights are normalized so that they integrate against the probability
// measure c w dx dy; all rules are exact on m-degree <= 2n - 1.
CubatureRule gauss_rule(int n);    // interior of Upsilon_{n+5}, measure (1/2, 1/2)
CubatureRule lobatto_rule(int n);  // Upsilon_n, measure (-1/2, -1/2)
CubatureRule radau1_rule(int n);   // Upsilon_{n+2} without j1 = j2, measure (1/2, -1/2)
CubatureRule radau2_rule(int n);   // Upsilon_{n+3} without j2 = 0, j1 + j2 = n + 3, measure (-1/2, 1/2)
std::pair<CubatureRule, CubatureRule> radau_rules(int n);
CubatureRule make_rule(RuleKind kind, int n);

using XYFn = std::function<double(double, double)>;
double integrate(const CubatureRule& rule, const XYFn& f);
double reference_integral(const WeightParams& p, const XYFn& f, const QuadOptions& opts = {});

// Polynomials whose common zeros are the nodes of the rule.
struct VarietyReport {
  RuleKind kind;
  int n = 0;
  std::size_t polynomials = 0;
  std::size_t nodes = 0;
  double max_abs = 0;  // max |p(node)|
  double max_rel = 0;  // max |p(node)| / max over a dense sample of the region
  double control_min = 0;  // min over nodes of |P_{0,0}| (negative control, should be 1)
};
VarietyReport variety_check(RuleKind kind, int n);

}  // namespace g2cub
