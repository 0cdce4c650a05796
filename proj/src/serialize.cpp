#include "g2cub/serialize.hpp"

#include <cstdio>

namespace g2cub {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string rule_to_json(const CubatureRule& r) {
  std::string s = "{\"kind\":\"";
  s += rule_kind_name(r.kind);
  s += "\",\"n\":" + std::to_string(r.n);
  s += ",\"alpha\":" + format_double(r.params.alpha);
  s += ",\"beta\":" + format_double(r.params.beta);
  s += ",\"nodes\":[";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ",";
    s += "[" + format_double(r.nodes[i][0]) + "," + format_double(r.nodes[i][1]) + "]";
  }
  s += "],\"weights\":[";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ",";
    s += format_double(r.weights[i]);
  }
  s += "],\"exact_mdegree\":" + std::to_string(r.exact_mdegree) + "}\n";
  return s;
}

std::string rule_to_csv(const CubatureRule& r) {
  std::string s = "x,y,weight\n";
  for (std::size_t i = 0; i < r.size(); ++i)
    s += format_double(r.nodes[i][0]) + "," + format_double(r.nodes[i][1]) + "," + format_double(r.weights[i]) + "\n";
  return s;
}

namespace {

std::string header(const WeightParams& p, const MIndex& k) {
  return "{\"alpha\":" + format_double(p.alpha) + ",\"beta\":" + format_double(p.beta) + ",\"k\":[" +
         std::to_string(k.k1) + "," + std::to_string(k.k2) + "],\"terms\":[";
}

}  // namespace

std::string poly_to_json(const WeightParams& p, const MIndex& k, const RPoly& q) {
  std::string s = header(p, k);
  bool first = true;
  for (const auto& [m, c] : q.star_sorted()) {
    if (!first) s += ",";
    first = false;
    s += "{\"i\":" + std::to_string(m.k1) + ",\"j\":" + std::to_string(m.k2) + ",\"num\":" +
         numerator(c).str() + ",\"den\":" + denominator(c).str() + "}";
  }
  return s + "]}\n";
}

std::string poly_to_json(const WeightParams& p, const MIndex& k, const DPoly& q) {
  std::string s = header(p, k);
  bool first = true;
  for (const auto& [m, c] : q.star_sorted()) {
    if (!first) s += ",";
    first = false;
    s += "{\"i\":" + std::to_string(m.k1) + ",\"j\":" + std::to_string(m.k2) + ",\"value\":" + format_double(c) +
         "}";
  }
  return s + "]}\n";
}

}  // namespace g2cub
