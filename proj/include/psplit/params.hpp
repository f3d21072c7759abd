#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

namespace psplit {

/// Admissible inertia/relaxation parameters. The relaxation upper bound is
/// tied to the inertial upper bound through beta_from_alpha; every inertial
/// step alpha_k must stay at or below alpha_cap, strictly below alpha_bar.
struct InertiaRelaxationBudget {
  double alpha_bar;  // parameter-curve argument, in (0,1)
  double alpha_cap;  // upper bound for all alpha_k, in [0, alpha_bar)
  double beta_bar;   // = beta_from_alpha(alpha_bar), in (0,2)
  double beta_lo;    // lower relaxation bound, in (0, beta_bar]

  /// beta_lo defaults to beta_bar: beta_k is constant unless a range is given.
  static InertiaRelaxationBudget from_alpha_bar(double alpha_bar, double alpha_cap);
  static InertiaRelaxationBudget from_alpha_bar(double alpha_bar, double alpha_cap,
                                                double beta_lo);

  void validate() const;  // throws std::invalid_argument on any broken bound
};

/// Relaxation upper bound as a function of the inertial upper bound:
///   beta(a) = 2 (a-1)^2 / (2 (a-1)^2 + 3a - 1),   a in (0,1), value in (0,2).
/// Decreasing, with beta(1/3) = 1; values above 1 (overrelaxation) require
/// a < 1/3.
double beta_from_alpha(double alpha_bar);

/// Exact inverse of beta_from_alpha:
///   alpha(b) = 2 (2-b) / (4 - b + sqrt(16 b - 7 b^2)),   b in (0,2).
double alpha_from_beta(double beta_bar);

/// q(nu) = 2 (1/bb - 1) nu^2 - (4/bb - 1) nu + 2/bb - 1 for bb = beta_bar.
/// q(alpha_from_beta(beta_bar)) = 0, and q is decreasing on [0, that root],
/// so q stays positive on any schedule capped strictly below the root.
double q_value(double nu, double beta_bar);

/// Smallest positive root of a nu^2 - b nu + c, requiring b > 0, c > 0 and
/// b^2 - 4ac > 0, in the cancellation-free form 2c / (b + sqrt(b^2 - 4ac)).
double smallest_positive_root(double a, double b, double c);

struct ScheduleViolation {
  std::size_t index;
  std::string reason;
};

/// Checks 0 <= alpha_k <= alpha_{k+1} <= alpha_cap over the given prefix.
/// Returns the first violation, or nullopt when the prefix is admissible.
std::optional<ScheduleViolation> validate_schedule(std::span<const double> alphas,
                                                   const InertiaRelaxationBudget& budget);

}  // namespace psplit
