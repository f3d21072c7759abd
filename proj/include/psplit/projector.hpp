#pragma once

#include <functional>
#include <span>
#include <vector>

#include "psplit/params.hpp"
#include "psplit/product_space.hpp"

namespace psplit {

/*
 * Generic inertial-relaxed separator-projection engine. Each step
 * extrapolates the iterate pair,
 *
 *   p_hat = p_curr + alpha_k (p_curr - p_prev),
 *
 * asks an oracle for an affine separator (value at p_hat, gradient, squared
 * gamma-norm of the gradient) that is nonpositive on the target set, and
 * moves by a relaxed projection onto the separator's halfspace:
 *
 *   p_next = p_hat - beta_k max{0, phi(p_hat)} / ||grad||^2_gamma * grad.
 *
 * The engine knows nothing about how separators are produced; the splitting
 * solver is one oracle, hand-built convex sets in the tests are another.
 */

/// Iterate pair of the engine. The initial state has p_prev = p_curr.
struct ProjectorState {
  ProductPoint p_curr;
  ProductPoint p_prev;
  int k = 0;

  static ProjectorState init(ProductPoint p0) {
    ProductPoint copy = p0;
    return ProjectorState{std::move(p0), std::move(copy), 0};
  }
};

/// p_hat = p_curr + alpha_k (p_curr - p_prev).
ProductPoint extrapolate(const ProjectorState& state, double alpha_k);

/// Relaxed projection of p_hat onto {p : phi(p) <= 0}; with beta_k = 1 this
/// is the exact projection, beta_k > 1 overshoots the hyperplane.
ProductPoint project_relaxed(const ProductPoint& p_hat, double phi_at_hat,
                             const ProductPoint& grad, double grad_norm_sq, double beta_k,
                             const GammaGeometry& geom);

struct SeparatorEval {
  double phi_at_hat;
  ProductPoint grad;
  double grad_norm_sq;  // ||grad||^2 in the gamma geometry
};
using SeparatorOracle = std::function<SeparatorEval(const ProductPoint& p_hat, int k)>;

struct ProjectionRun {
  std::vector<ProductPoint> iterates;  // p^0 .. p^K
  std::vector<double> alphas;          // alpha_0 .. alpha_{K-1}
  std::vector<double> betas;
  bool stopped_on_zero_gradient = false;
};

/// Drives the engine for at most max_iter steps; stops early when the
/// oracle's gradient satisfies ||grad||^2 <= eps_grad (1 + ||p_hat||^2_gamma).
ProjectionRun run_separator_projection(ProductPoint p0, const SeparatorOracle& oracle,
                                       const std::function<double(int)>& alpha_of_k,
                                       const std::function<double(int)>& beta_of_k, int max_iter,
                                       double eps_grad, const GammaGeometry& geom);

/// Per-iteration quantities of the inertial Fejer analysis, measured against
/// a reference point p* of the target set.
struct FejerDiagnostics {
  double h_k;      // ||p^k - p*||^2_gamma
  double s_k;      // beta_{k-1} (2 - beta_{k-1}) ||p_hat^{k-1} - p_tilde^k||^2_gamma (s_0 = 0)
  double mu_k;     // h_k - alpha_k h_{k-1} + gamma_k ||p^k - p^{k-1}||^2_gamma
  double gamma_k;  // 2 (1 - 1/beta_bar) alpha_k^2 + 2 alpha_k / beta_bar
};

struct FejerReport {
  std::vector<FejerDiagnostics> diagnostics;  // k = 0..K
  // Slack (rhs - lhs) of each inequality at k = 0..K-1; nonnegative up to
  // the tolerance when the run is admissible.
  std::vector<double> slack_descent_a;   // inertial descent with s_{k+1}
  std::vector<double> slack_descent_b;   // inertial descent with gamma_k
  std::vector<double> slack_key;         // projection inequality against p*
  std::vector<double> slack_mu;          // mu_k - mu_{k+1}
  std::vector<double> slack_sum_bound;   // summability bound on partial sums
  bool ok = true;
  int first_violation = -1;  // iteration index, -1 when ok
};

/// Recomputes all Fejer quantities from a recorded trajectory (p^0..p^K plus
/// the alpha_k, beta_k actually used) and checks the descent inequalities.
/// Violations below -tol (1 + h_k) mark the report as failed.
FejerReport fejer_check(std::span<const ProductPoint> iterates, std::span<const double> alphas,
                        std::span<const double> betas, const ProductPoint& p_star,
                        const InertiaRelaxationBudget& budget, const GammaGeometry& geom,
                        double tol = 1e-9);

}  // namespace psplit
