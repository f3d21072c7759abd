#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace psplit {

using Vec = Eigen::VectorXd;

/// Dimension mismatch between blocks of the product space. `block` is the
/// offending block index (0 = z, i >= 1 = w_i), or -1 when not block-specific.
class DimensionError : public std::invalid_argument {
public:
  explicit DimensionError(const std::string& msg, int block_index = -1)
      : std::invalid_argument(msg), block(block_index) {}
  int block;
};

/// Geometry of the product space H = H_0 x H_1 x ... x H_{n-1}. The z-block
/// carries the weight gamma in the inner product; the w-blocks are unweighted.
struct GammaGeometry {
  double gamma;
  std::vector<Eigen::Index> dims;  // d_0 (z block), d_1 .. d_{n-1} (w blocks)

  GammaGeometry(double gamma_weight, std::vector<Eigen::Index> block_dims);

  std::size_t num_blocks() const { return dims.size(); }
};

/// A point p = (z, w_1, ..., w_{n-1}) of the product space. Immutable after
/// construction; all arithmetic allocates fresh values, so points may be
/// shared freely across threads.
class ProductPoint {
public:
  ProductPoint(Vec z, std::vector<Vec> w);

  static ProductPoint zero(const GammaGeometry& geom);

  const Vec& z() const { return z_; }
  const std::vector<Vec>& w() const { return w_; }
  const Vec& w(std::size_t i) const { return w_[i]; }
  std::size_t num_w() const { return w_.size(); }

  /// Throws DimensionError (naming the block) unless the point matches geom.
  void require_compatible(const GammaGeometry& geom) const;

private:
  Vec z_;
  std::vector<Vec> w_;
};

/// gamma <z, z'> + sum_i <w_i, w_i'>.
double inner_gamma(const ProductPoint& p, const ProductPoint& q, const GammaGeometry& geom);

double norm_gamma(const ProductPoint& p, const GammaGeometry& geom);

/// a * p + q, blockwise.
ProductPoint axpy(double a, const ProductPoint& p, const ProductPoint& q);

}  // namespace psplit
