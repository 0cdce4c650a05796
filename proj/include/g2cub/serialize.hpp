#pragma once

#include <string>

#include "g2cub/cubature.hpp"
#include "g2cub/poly.hpp"
#include "g2cub/quadrature.hpp"

namespace g2cub {

// %.17g
std::string format_double(double v);

std::string rule_to_json(const CubatureRule& r);
std::string rule_to_csv(const CubatureRule& r);

// {"alpha":..,"beta":..,"k":[k1,k2],"terms":[{"i","j","num","den"}]} in ascending *-order.
std::string poly_to_json(const WeightParams& p, const MIndex& k, const RPoly& q);
// Float coefficients use "value" instead of "num"/"den".
std::string poly_to_json(const WeightParams& p, const MIndex& k, const DPoly& q);

}  // namespace g2cub
