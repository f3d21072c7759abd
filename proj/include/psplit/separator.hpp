#pragma once

#include <span>
#include <vector>

#include "psplit/operators.hpp"
#include "psplit/product_space.hpp"

namespace psplit {

/*
 * The affine separator of one outer iteration, built from the n graph pairs
 * (x_i, y_i) with y_i in T_i(x_i):
 *
 *   phi(z, w) = sum_{i<n} <G_i z - x_i, y_i - w_i> + <z - x_n, y_n + sum_i G_i^* w_i>
 *
 * Its gradient in the gamma-weighted inner product is
 *
 *   grad phi = ( (1/gamma) (sum_{i<n} G_i^* y_i + y_n),  x_1 - G_1 x_n, ..., x_{n-1} - G_{n-1} x_n )
 *
 * and phi <= 0 on the extended solution set, so a positive value at the
 * extrapolated point defines a strictly separating halfspace.
 */

struct SeparatorSample {
  std::vector<GraphPair> pairs;  // i = 1..n
  Vec grad_z;                    // (1/gamma) (sum_{i<n} G_i^* y_i + y_n)
  std::vector<Vec> grad_w;       // x_i - G_i x_n, i = 1..n-1
  double grad_norm_sq_gamma = 0.0;
  double phi_at_hat = 0.0;

  ProductPoint gradient_point() const { return ProductPoint(grad_z, grad_w); }
};

struct SeparatorGradient {
  Vec grad_z;
  std::vector<Vec> grad_w;
  double grad_norm_sq_gamma;
};

/// Gradient blocks and squared gamma-norm; phi is affine, so these do not
/// depend on the evaluation point. maps must hold G_1..G_n with G_n identity.
SeparatorGradient separator_gradient(std::span<const GraphPair> pairs,
                                     std::span<const LinearMap> maps, const GammaGeometry& geom);

/// Builds the full sample: gradient plus phi evaluated at the extrapolated
/// point (p_hat, with dependent block w_hat_n = -sum_i G_i^* w_hat_i).
SeparatorSample assemble_separator(std::vector<GraphPair> pairs, const ProductPoint& p_hat,
                                   const Vec& w_hat_n, std::span<const LinearMap> maps,
                                   const GammaGeometry& geom);

/// phi at an arbitrary point of the product space.
double phi_eval(const SeparatorSample& sample, const ProductPoint& p,
                std::span<const LinearMap> maps);

/// Projection step length max{0, phi(p_hat)} / ||grad phi||^2_gamma.
/// Requires a nonzero gradient: a zero gradient means the algorithm should
/// already have stopped with an exact solution.
double theta(const SeparatorSample& sample);

/// Lower bound on phi(p_hat) implied by the relative-error criterion:
///   (1 - sigma^2) min{1/rho_hi, rho_lo} / 2
///     * sum_i (||G_i zhat - x_i||^2 + ||what_i - y_i||^2).
/// w_hat spans all n hatted duals, the last entry being the dependent block.
double lower_bound_certificate(std::span<const GraphPair> pairs, double sigma, double rho_lo,
                               double rho_hi, const Vec& z_hat, std::span<const Vec> w_hat,
                               std::span<const LinearMap> maps);

/// Constant c with phi(p_hat) >= c ||grad phi||^2_gamma along the iteration,
/// derived from the block count, the map-norm bounds, sigma and the rho
/// bounds. Diagnostic only.
double sandwich_constant(std::size_t n, double max_map_norm, double sigma, double rho_lo,
                         double rho_hi, double gamma);

}  // namespace psplit
