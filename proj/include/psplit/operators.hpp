#pragma once

#include <Eigen/Dense>
#include <functional>
#include <stdexcept>
#include <utility>

#include "psplit/product_space.hpp"

namespace psplit {

/// A bounded linear map G with its adjoint and an upper bound on the
/// operator norm (used by diagnostic constants, never by the iteration).
struct LinearMap {
  Eigen::Index in_dim = 0;
  Eigen::Index out_dim = 0;
  std::function<Vec(const Vec&)> apply;
  std::function<Vec(const Vec&)> adjoint;
  double norm_bound = 0.0;
  bool is_identity = false;
};

LinearMap identity_map(Eigen::Index dim);
LinearMap matrix_map(Eigen::MatrixXd a);

/// One point of graph(T) produced by a resolvent evaluation: y lies in T(x)
/// exactly, and x + rho y = target + e where e satisfies the relative-error
/// bound ||e||^2 <= sigma^2 (||G zhat - x||^2 + ||rho (what - y)||^2).
struct GraphPair {
  Vec x;
  Vec y;
  Vec e;
  double rho = 1.0;
  int inner_iterations = 0;
};

struct ResolventRequest {
  Vec target;        // G zhat + rho what
  Vec z_hat_mapped;  // G zhat
  Vec w_hat;         // what
  double rho = 1.0;
  double sigma = 0.0;
  const Vec* warm_start = nullptr;  // optional inner-solver starting point
  int max_inner = 0;                // 0: default cap (10 d); < 0: effectively uncapped

  void validate() const;
};

/// Inner solver exhausted its budget without meeting the relative-error
/// criterion; carries the best residual seen.
class ResolventError : public std::runtime_error {
public:
  ResolventError(const std::string& msg, double best_error_sq_, double bound_at_best_,
                 int iterations_)
      : std::runtime_error(msg),
        best_error_sq(best_error_sq_),
        bound_at_best(bound_at_best_),
        iterations(iterations_) {}
  double best_error_sq;
  double bound_at_best;
  int iterations;
};

class MonotoneOperator {
public:
  virtual ~MonotoneOperator() = default;
  virtual Eigen::Index dim() const = 0;
  virtual GraphPair resolvent(const ResolventRequest& req) const = 0;
};

/// T(x) = Q^T (Q x - b). The resolvent runs conjugate gradients on
/// (I + rho Q^T Q) x = target + rho Q^T b and stops at the first iterate
/// whose defect e = x + rho T(x) - target passes the relative-error test.
/// y is always recomputed as T(x), so y in T(x) holds exactly; e is always
/// the algebraic defect, never a quantity accumulated inside CG.
class AffineBlockOperator final : public MonotoneOperator {
public:
  AffineBlockOperator(Eigen::MatrixXd q, Vec b);

  Eigen::Index dim() const override { return q_.cols(); }
  Vec apply(const Vec& x) const;
  GraphPair resolvent(const ResolventRequest& req) const override;

  const Eigen::MatrixXd& q() const { return q_; }
  const Vec& b() const { return b_; }

private:
  Eigen::MatrixXd q_;
  Vec b_;
};

/// T = subdifferential of lambda ||.||_1. The resolvent is componentwise
/// soft thresholding at level rho * lambda, exact (e = 0).
class L1Operator final : public MonotoneOperator {
public:
  L1Operator(double lambda, Eigen::Index dim);

  Eigen::Index dim() const override { return dim_; }
  double lambda() const { return lambda_; }
  GraphPair resolvent(const ResolventRequest& req) const override;

private:
  double lambda_;
  Eigen::Index dim_;
};

/// Generic entry point: dispatches to the operator's resolvent.
GraphPair inexact_resolvent(const MonotoneOperator& op, const ResolventRequest& req);

/// Both sides of the relative-error criterion, recomputed from scratch:
/// first = ||e||^2, second = sigma^2 (||G zhat - x||^2 + rho^2 ||what - y||^2).
std::pair<double, double> relative_error_sides(const GraphPair& pair, const Vec& z_hat_mapped,
                                               const Vec& w_hat, double sigma);

}  // namespace psplit
