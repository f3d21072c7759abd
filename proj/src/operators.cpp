#include "psplit/operators.hpp"

#include <cmath>
#include <limits>
#include <memory>

namespace psplit {

LinearMap identity_map(Eigen::Index dim) {
  if (dim < 1) {
    throw DimensionError("identity_map: dimension must be >= 1");
  }
  LinearMap map;
  map.in_dim = dim;
  map.out_dim = dim;
  map.apply = [](const Vec& v) { return v; };
  map.adjoint = [](const Vec& v) { return v; };
  map.norm_bound = 1.0;
  map.is_identity = true;
  return map;
}

LinearMap matrix_map(Eigen::MatrixXd a) {
  if (a.rows() < 1 || a.cols() < 1) {
    throw DimensionError("matrix_map: matrix must be nonempty");
  }
  if (!a.allFinite()) {
    throw std::invalid_argument("matrix_map: matrix contains NaN or Inf");
  }
  auto m = std::make_shared<const Eigen::MatrixXd>(std::move(a));
  LinearMap map;
  map.in_dim = m->cols();
  map.out_dim = m->rows();
  map.apply = [m](const Vec& v) { return Vec((*m) * v); };
  map.adjoint = [m](const Vec& u) { return Vec(m->transpose() * u); };
  // Valid spectral-norm upper bounds: Frobenius, and sqrt(norm_1 * norm_inf).
  const double fro = m->norm();
  const double one = m->cwiseAbs().colwise().sum().maxCoeff();
  const double inf = m->cwiseAbs().rowwise().sum().maxCoeff();
  map.norm_bound = std::min(fro, std::sqrt(one * inf));
  return map;
}

void ResolventRequest::validate() const {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw std::invalid_argument("ResolventRequest: rho must be positive and finite");
  }
  if (!(sigma >= 0.0 && sigma < 1.0)) {
    throw std::invalid_argument("ResolventRequest: sigma must lie in [0,1)");
  }
  if (target.size() != z_hat_mapped.size() || target.size() != w_hat.size()) {
    throw DimensionError("ResolventRequest: target, z_hat_mapped and w_hat must agree in size");
  }
}

AffineBlockOperator::AffineBlockOperator(Eigen::MatrixXd q, Vec b)
    : q_(std::move(q)), b_(std::move(b)) {
  if (q_.rows() != b_.size()) {
    throw DimensionError("AffineBlockOperator: Q has " + std::to_string(q_.rows()) +
                         " rows but b has size " + std::to_string(b_.size()));
  }
  if (!q_.allFinite() || !b_.allFinite()) {
    throw std::invalid_argument("AffineBlockOperator: Q or b contains NaN or Inf");
  }
}

Vec AffineBlockOperator::apply(const Vec& x) const {
  if (x.size() != q_.cols()) {
    throw DimensionError("AffineBlockOperator::apply: x has size " + std::to_string(x.size()) +
                         ", expected " + std::to_string(q_.cols()));
  }
  return q_.transpose() * (q_ * x - b_);
}

GraphPair AffineBlockOperator::resolvent(const ResolventRequest& req) const {
  req.validate();
  const Eigen::Index d = q_.cols();
  if (req.target.size() != d) {
    throw DimensionError("AffineBlockOperator::resolvent: request has size " +
                         std::to_string(req.target.size()) + ", expected " + std::to_string(d));
  }

  const double rho = req.rho;
  const Vec rhs = req.target + rho * (q_.transpose() * b_);
  const auto apply_system = [&](const Vec& v) -> Vec {
    return v + rho * (q_.transpose() * (q_ * v));
  };

  int cap = req.max_inner;
  if (cap == 0) cap = 10 * static_cast<int>(d);
  if (cap < 0) cap = 1000 * static_cast<int>(d) + 1000;

  const double sigma_sq = req.sigma * req.sigma;
  // Floating-point escape for sigma = 0 (the criterion then demands e = 0
  // exactly): accept once the defect is at machine-roundoff scale.
  const double exact_floor = 1e-12 * (1.0 + rhs.norm());
  const double exact_floor_sq = exact_floor * exact_floor;

  double best_err_sq = std::numeric_limits<double>::infinity();
  double bound_at_best = 0.0;

  GraphPair out;
  out.rho = rho;
  const auto accept = [&](const Vec& x, int iterations) -> bool {
    Vec y = q_.transpose() * (q_ * x - b_);
    Vec e = x + rho * y - req.target;
    const double err_sq = e.squaredNorm();
    const double bound = sigma_sq * ((req.z_hat_mapped - x).squaredNorm() +
                                     (rho * (req.w_hat - y)).squaredNorm());
    if (err_sq < best_err_sq) {
      best_err_sq = err_sq;
      bound_at_best = bound;
    }
    if (err_sq <= bound || err_sq <= exact_floor_sq) {
      out.x = x;
      out.y = std::move(y);
      out.e = std::move(e);
      out.inner_iterations = iterations;
      return true;
    }
    return false;
  };

  Vec x = (req.warm_start != nullptr) ? *req.warm_start : Vec(Vec::Zero(d));
  if (x.size() != d) {
    throw DimensionError("AffineBlockOperator::resolvent: warm start has wrong size");
  }
  if (accept(x, 0)) return out;

  Vec r = rhs - apply_system(x);
  Vec p = r;
  double rr = r.squaredNorm();
  for (int it = 1; it <= cap; ++it) {
    if (!(rr > 0.0)) break;
    Vec ap = apply_system(p);
    const double pap = p.dot(ap);
    if (!(pap > 0.0)) break;  // the system matrix is SPD; this is a numerical breakdown
    const double step = rr / pap;
    x += step * p;
    r -= step * ap;
    if (accept(x, it)) return out;
    const double rr_next = r.squaredNorm();
    p = r + (rr_next / rr) * p;
    rr = rr_next;
  }
  throw ResolventError(
      "AffineBlockOperator::resolvent: relative-error criterion not met within " +
          std::to_string(cap) + " CG iterations",
      best_err_sq, bound_at_best, cap);
}

L1Operator::L1Operator(double lambda, Eigen::Index dim) : lambda_(lambda), dim_(dim) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("L1Operator: lambda must be nonnegative and finite");
  }
  if (dim < 1) {
    throw DimensionError("L1Operator: dimension must be >= 1");
  }
}

GraphPair L1Operator::resolvent(const ResolventRequest& req) const {
  req.validate();
  if (req.target.size() != dim_) {
    throw DimensionError("L1Operator::resolvent: request has size " +
                         std::to_string(req.target.size()) + ", expected " +
                         std::to_string(dim_));
  }
  const Vec& v = req.target;
  const double threshold = req.rho * lambda_;
  Vec x = v.array().sign() * (v.array().abs() - threshold).max(0.0);
  GraphPair out;
  out.y = (v - x) / req.rho;
  out.x = std::move(x);
  out.e = Vec::Zero(dim_);
  out.rho = req.rho;
  out.inner_iterations = 0;
  return out;
}

GraphPair inexact_resolvent(const MonotoneOperator& op, const ResolventRequest& req) {
  return op.resolvent(req);
}

std::pair<double, double> relative_error_sides(const GraphPair& pair, const Vec& z_hat_mapped,
                                               const Vec& w_hat, double sigma) {
  const double lhs = pair.e.squaredNorm();
  const double rhs = sigma * sigma *
                     ((z_hat_mapped - pair.x).squaredNorm() +
                      (pair.rho * (w_hat - pair.y)).squaredNorm());
  return {lhs, rhs};
}

}  // namespace psplit
