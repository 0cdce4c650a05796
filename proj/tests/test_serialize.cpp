#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>

#include <json.hpp>

#include "g2cub/chebyshev.hpp"
#include "g2cub/serialize.hpp"

using namespace g2cub;

TEST_CASE("doubles keep 17 significant digits and round-trip") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0) == "1");
  for (double v : {1.0 / 3, -2.5e-17, 6.02214076e23}) CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
}

TEST_CASE("rule JSON schema") {
  auto r = gauss_rule(6);
  auto j = nlohmann::json::parse(rule_to_json(r));
  CHECK(j["kind"] == "gauss");
  CHECK(j["n"] == 6);
  CHECK(j["alpha"] == 0.5);
  CHECK(j["beta"] == 0.5);
  CHECK(j["exact_mdegree"] == 11);
  REQUIRE(j["nodes"].size() == 5);
  REQUIRE(j["weights"].size() == 5);
  for (std::size_t i = 0; i < r.size(); ++i) {
    CHECK(j["nodes"][i][0].get<double>() == r.nodes[i][0]);
    CHECK(j["nodes"][i][1].get<double>() == r.nodes[i][1]);
    CHECK(j["weights"][i].get<double>() == r.weights[i]);
  }
}

TEST_CASE("rule CSV") {
  auto r = lobatto_rule(4);
  std::istringstream in(rule_to_csv(r));
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,y,weight");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 4);
}

TEST_CASE("polynomial JSON") {
  RPoly p = cheb_poly(Family::CC, {2, 0});
  auto j = nlohmann::json::parse(poly_to_json(params_of(Family::CC), {2, 0}, p));
  CHECK(j["alpha"] == -0.5);
  CHECK(j["k"] == nlohmann::json::array({2, 0}));
  REQUIRE(j["terms"].size() == 4);
  // ascending star order: 1, x, y, x^2
  CHECK(j["terms"][0]["i"] == 0);
  CHECK(j["terms"][0]["num"] == -1);
  CHECK(j["terms"][0]["den"] == 1);
  CHECK(j["terms"][3]["i"] == 2);
  CHECK(j["terms"][3]["num"] == 6);

  DPoly d;
  d.set(1, 0, 1.0);
  d.set(0, 0, 0.25);
  auto jd = nlohmann::json::parse(poly_to_json({0, 0}, {1, 0}, d));
  CHECK(jd["terms"][0]["value"] == 0.25);
  CHECK(jd["terms"][1]["value"] == 1.0);
}
