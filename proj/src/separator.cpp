#include "psplit/separator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace psplit {

namespace {

void check_shape(std::span<const GraphPair> pairs, std::span<const LinearMap> maps) {
  if (pairs.size() < 2) {
    throw std::invalid_argument("separator: need at least two blocks");
  }
  if (maps.size() != pairs.size()) {
    throw DimensionError("separator: expected one linear map per block");
  }
  if (!maps.back().is_identity) {
    throw std::invalid_argument("separator: the last linear map must be the identity");
  }
}

}  // namespace

SeparatorGradient separator_gradient(std::span<const GraphPair> pairs,
                                     std::span<const LinearMap> maps, const GammaGeometry& geom) {
  check_shape(pairs, maps);
  const std::size_t n = pairs.size();

  Vec pulled = pairs[n - 1].y;  // sum_{i<n} G_i^* y_i + y_n
  for (std::size_t i = 0; i + 1 < n; ++i) {
    pulled += maps[i].adjoint(pairs[i].y);
  }

  const Vec& x_n = pairs[n - 1].x;
  std::vector<Vec> grad_w;
  grad_w.reserve(n - 1);
  double w_part = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Vec g = pairs[i].x - maps[i].apply(x_n);
    w_part += g.squaredNorm();
    grad_w.push_back(std::move(g));
  }

  const double norm_sq = pulled.squaredNorm() / geom.gamma + w_part;
  return SeparatorGradient{Vec(pulled / geom.gamma), std::move(grad_w), norm_sq};
}

SeparatorSample assemble_separator(std::vector<GraphPair> pairs, const ProductPoint& p_hat,
                                   const Vec& w_hat_n, std::span<const LinearMap> maps,
                                   const GammaGeometry& geom) {
  SeparatorGradient grad = separator_gradient(pairs, maps, geom);
  const std::size_t n = pairs.size();
  if (p_hat.num_w() + 1 != n) {
    throw DimensionError("assemble_separator: p_hat has wrong block count");
  }

  double phi = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    phi += (maps[i].apply(p_hat.z()) - pairs[i].x).dot(pairs[i].y - p_hat.w(i));
  }
  phi += (p_hat.z() - pairs[n - 1].x).dot(pairs[n - 1].y - w_hat_n);

  SeparatorSample sample;
  sample.pairs = std::move(pairs);
  sample.grad_z = std::move(grad.grad_z);
  sample.grad_w = std::move(grad.grad_w);
  sample.grad_norm_sq_gamma = grad.grad_norm_sq_gamma;
  sample.phi_at_hat = phi;
  return sample;
}

double phi_eval(const SeparatorSample& sample, const ProductPoint& p,
                std::span<const LinearMap> maps) {
  const auto& pairs = sample.pairs;
  check_shape(pairs, maps);
  const std::size_t n = pairs.size();
  if (p.num_w() + 1 != n) {
    throw DimensionError("phi_eval: point has wrong block count");
  }

  double phi = 0.0;
  Vec pulled_w = Vec::Zero(p.z().size());  // sum_{i<n} G_i^* w_i
  for (std::size_t i = 0; i + 1 < n; ++i) {
    phi += (maps[i].apply(p.z()) - pairs[i].x).dot(pairs[i].y - p.w(i));
    pulled_w += maps[i].adjoint(p.w(i));
  }
  phi += (p.z() - pairs[n - 1].x).dot(pairs[n - 1].y + pulled_w);
  return phi;
}

double theta(const SeparatorSample& sample) {
  if (!(sample.grad_norm_sq_gamma > 0.0)) {
    throw std::logic_error(
        "theta: separator gradient is zero; the caller should have stopped at the exact-solution "
        "test");
  }
  return std::max(0.0, sample.phi_at_hat) / sample.grad_norm_sq_gamma;
}

double lower_bound_certificate(std::span<const GraphPair> pairs, double sigma, double rho_lo,
                               double rho_hi, const Vec& z_hat, std::span<const Vec> w_hat,
                               std::span<const LinearMap> maps) {
  check_shape(pairs, maps);
  if (w_hat.size() != pairs.size()) {
    throw DimensionError("lower_bound_certificate: expected one hatted dual per block");
  }
  if (!(rho_lo > 0.0 && rho_lo <= rho_hi)) {
    throw std::invalid_argument("lower_bound_certificate: need 0 < rho_lo <= rho_hi");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    sum += (maps[i].apply(z_hat) - pairs[i].x).squaredNorm() +
           (w_hat[i] - pairs[i].y).squaredNorm();
  }
  const double coeff = (1.0 - sigma * sigma) * std::min(1.0 / rho_hi, rho_lo) / 2.0;
  return coeff * sum;
}

double sandwich_constant(std::size_t n, double max_map_norm, double sigma, double rho_lo,
                         double rho_hi, double gamma) {
  const double g2 = max_map_norm * max_map_norm;
  const double grad_factor = std::max(static_cast<double>(n) * g2 / gamma,
                                      2.0 * std::max(1.0, static_cast<double>(n - 1) * g2));
  const double lower_coeff = (1.0 - sigma * sigma) * std::min(1.0 / rho_hi, rho_lo) / 2.0;
  return lower_coeff / grad_factor;
}

}  // namespace psplit
