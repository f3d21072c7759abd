#include "psplit/product_space.hpp"

#include <cmath>

namespace psplit {

GammaGeometry::GammaGeometry(double gamma_weight, std::vector<Eigen::Index> block_dims)
    : gamma(gamma_weight), dims(std::move(block_dims)) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument("GammaGeometry: gamma must be positive and finite");
  }
  if (dims.empty()) {
    throw std::invalid_argument("GammaGeometry: at least one block required");
  }
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 1) {
      throw DimensionError("GammaGeometry: block " + std::to_string(i) + " has dimension < 1",
                           static_cast<int>(i));
    }
  }
}

namespace {

void require_finite(const Vec& v, int block) {
  if (!v.allFinite()) {
    throw std::invalid_argument("ProductPoint: block " + std::to_string(block) +
                                " contains NaN or Inf");
  }
}

}  // namespace

ProductPoint::ProductPoint(Vec z, std::vector<Vec> w) : z_(std::move(z)), w_(std::move(w)) {
  if (z_.size() < 1) {
    throw DimensionError("ProductPoint: z block must be nonempty", 0);
  }
  require_finite(z_, 0);
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (w_[i].size() < 1) {
      throw DimensionError("ProductPoint: w block " + std::to_string(i + 1) + " is empty",
                           static_cast<int>(i + 1));
    }
    require_finite(w_[i], static_cast<int>(i + 1));
  }
}

ProductPoint ProductPoint::zero(const GammaGeometry& geom) {
  std::vector<Vec> w;
  w.reserve(geom.dims.size() - 1);
  for (std::size_t i = 1; i < geom.dims.size(); ++i) {
    w.push_back(Vec::Zero(geom.dims[i]));
  }
  return ProductPoint(Vec::Zero(geom.dims[0]), std::move(w));
}

void ProductPoint::require_compatible(const GammaGeometry& geom) const {
  if (num_w() + 1 != geom.num_blocks()) {
    throw DimensionError("ProductPoint: expected " + std::to_string(geom.num_blocks()) +
                         " blocks, point has " + std::to_string(num_w() + 1));
  }
  if (z_.size() != geom.dims[0]) {
    throw DimensionError("ProductPoint: z block has dimension " + std::to_string(z_.size()) +
                             ", geometry expects " + std::to_string(geom.dims[0]),
                         0);
  }
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (w_[i].size() != geom.dims[i + 1]) {
      throw DimensionError("ProductPoint: w block " + std::to_string(i + 1) + " has dimension " +
                               std::to_string(w_[i].size()) + ", geometry expects " +
                               std::to_string(geom.dims[i + 1]),
                           static_cast<int>(i + 1));
    }
  }
}

double inner_gamma(const ProductPoint& p, const ProductPoint& q, const GammaGeometry& geom) {
  p.require_compatible(geom);
  q.require_compatible(geom);
  double acc = geom.gamma * p.z().dot(q.z());
  for (std::size_t i = 0; i < p.num_w(); ++i) {
    acc += p.w(i).dot(q.w(i));
  }
  return acc;
}

double norm_gamma(const ProductPoint& p, const GammaGeometry& geom) {
  return std::sqrt(inner_gamma(p, p, geom));
}

ProductPoint axpy(double a, const ProductPoint& p, const ProductPoint& q) {
  if (p.num_w() != q.num_w()) {
    throw DimensionError("axpy: operands have different block counts");
  }
  if (p.z().size() != q.z().size()) {
    throw DimensionError("axpy: z blocks differ in dimension", 0);
  }
  Vec z = a * p.z() + q.z();
  std::vector<Vec> w;
  w.reserve(p.num_w());
  for (std::size_t i = 0; i < p.num_w(); ++i) {
    if (p.w(i).size() != q.w(i).size()) {
      throw DimensionError("axpy: w block " + std::to_string(i + 1) + " differs in dimension",
                           static_cast<int>(i + 1));
    }
    w.push_back(a * p.w(i) + q.w(i));
  }
  return ProductPoint(std::move(z), std::move(w));
}

}  // namespace psplit
