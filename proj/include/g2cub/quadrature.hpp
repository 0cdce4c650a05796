#pragma once

#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace g2cub {

struct WeightParams {
  double alpha = 0, beta = 0;
  bool operator==(const WeightParams&) const = default;
};

// Gauss-Jacobi rule on [-1, 1] for (1 - z)^a (1 + z)^b, a, b > -1.
struct GaussRule {
  std::vector<double> z, w;
};
GaussRule gauss_jacobi(int order, double a, double b);

// Node of the pulled-back rule on the parameter triangle 0 <= t2 <= t1 <= 1 - t2.
struct QuadNode {
  double t1, t2, x, y;
  double w;  // normalized: weights sum to 1
};

// Tensor rule for the probability measure proportional to
// |SC_{1,0,-1}|^{2a+1} |CS_{1,1,-2}|^{2b+1} dt on the triangle, which is
// c_{a,b} w_{a,b} dx dy on the deltoid region after the change of variables.
struct PullbackRule {
  int order = 0;
  std::vector<QuadNode> nodes;
  double raw_mass = 0;  // integral of |SC|^{2a+1}|CS|^{2b+1} over the triangle
};

// Cached; order points per axis.
std::shared_ptr<const PullbackRule> pullback_rule(const WeightParams& p, int order);

struct QuadOptions {
  double rtol = 1e-12;
  int start = 16;
  int cap = 0;  // 0: G2CUB_QUAD_CAP or 512
};
int effective_cap(const QuadOptions& o);
void set_default_quad_cap(int cap);  // 0 restores the environment default

// f fills out[0..m) at a node. Returns the m weighted means, doubling the
// order until |I_N - I_{N/2}| <= rtol max(|I_N|, sum w |f|) for every entry.
// Throws Error(no_convergence) past the cap.
using VectorIntegrand = std::function<void(const QuadNode&, std::span<double>)>;
std::vector<double> weighted_means(const WeightParams& p, std::size_t m, const VectorIntegrand& f,
                                   const QuadOptions& opts = {});
double weighted_mean(const WeightParams& p, const std::function<double(const QuadNode&)>& f,
                     const QuadOptions& opts = {});

// Converged raw mass of the pullback density.
double pullback_mass(const WeightParams& p, const QuadOptions& opts = {});

// Uniform mean over the fundamental triangle.
double triangle_mean(const std::function<double(const QuadNode&)>& f, const QuadOptions& opts = {});

// Throws Error(domain) unless alpha, beta > -1 and alpha + beta > -4/3.
void check_integrable(const WeightParams& p);

}  // namespace g2cub
