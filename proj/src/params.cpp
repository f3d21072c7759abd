#include "psplit/params.hpp"

#include <cmath>
#include <stdexcept>

namespace psplit {

double beta_from_alpha(double alpha_bar) {
  if (!(alpha_bar > 0.0 && alpha_bar < 1.0)) {
    throw std::domain_error("beta_from_alpha: alpha_bar must lie in (0,1)");
  }
  const double t = alpha_bar - 1.0;
  // Denominator 2 t^2 + 3 a - 1 = 2 a^2 - a + 1 has no real roots, so the
  // expression is well defined on all of (0,1).
  return 2.0 * t * t / (2.0 * t * t + 3.0 * alpha_bar - 1.0);
}

double alpha_from_beta(double beta_bar) {
  if (!(beta_bar > 0.0 && beta_bar < 2.0)) {
    throw std::domain_error("alpha_from_beta: beta_bar must lie in (0,2)");
  }
  const double s = std::sqrt(beta_bar * (16.0 - 7.0 * beta_bar));
  return 2.0 * (2.0 - beta_bar) / (4.0 - beta_bar + s);
}

double q_value(double nu, double beta_bar) {
  if (!(beta_bar > 0.0 && beta_bar < 2.0)) {
    throw std::domain_error("q_value: beta_bar must lie in (0,2)");
  }
  const double bi = 1.0 / beta_bar;
  return 2.0 * (bi - 1.0) * nu * nu - (4.0 * bi - 1.0) * nu + 2.0 * bi - 1.0;
}

double smallest_positive_root(double a, double b, double c) {
  if (!(b > 0.0 && c > 0.0)) {
    throw std::domain_error("smallest_positive_root: requires b > 0 and c > 0");
  }
  const double disc = b * b - 4.0 * a * c;
  if (!(disc > 0.0)) {
    throw std::domain_error("smallest_positive_root: requires b^2 - 4ac > 0");
  }
  return 2.0 * c / (b + std::sqrt(disc));
}

InertiaRelaxationBudget InertiaRelaxationBudget::from_alpha_bar(double alpha_bar,
                                                                double alpha_cap) {
  const double bb = beta_from_alpha(alpha_bar);
  return from_alpha_bar(alpha_bar, alpha_cap, bb);
}

InertiaRelaxationBudget InertiaRelaxationBudget::from_alpha_bar(double alpha_bar, double alpha_cap,
                                                                double beta_lo) {
  InertiaRelaxationBudget budget{alpha_bar, alpha_cap, beta_from_alpha(alpha_bar), beta_lo};
  budget.validate();
  return budget;
}

void InertiaRelaxationBudget::validate() const {
  if (!(alpha_cap >= 0.0 && alpha_cap < alpha_bar && alpha_bar < 1.0)) {
    throw std::invalid_argument("InertiaRelaxationBudget: need 0 <= alpha_cap < alpha_bar < 1");
  }
  if (!(std::abs(beta_bar - beta_from_alpha(alpha_bar)) <= 1e-12)) {
    throw std::invalid_argument(
        "InertiaRelaxationBudget: beta_bar must equal beta_from_alpha(alpha_bar)");
  }
  if (!(beta_lo > 0.0 && beta_lo <= beta_bar && beta_bar < 2.0)) {
    throw std::invalid_argument("InertiaRelaxationBudget: need 0 < beta_lo <= beta_bar < 2");
  }
}

std::optional<ScheduleViolation> validate_schedule(std::span<const double> alphas,
                                                   const InertiaRelaxationBudget& budget) {
  double prev = 0.0;
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    const double a = alphas[k];
    if (!(a >= 0.0)) {
      return ScheduleViolation{k, "alpha_k must be nonnegative"};
    }
    if (a < prev) {
      return ScheduleViolation{k, "alpha_k must be nondecreasing"};
    }
    if (a > budget.alpha_cap) {
      return ScheduleViolation{k, "alpha_k exceeds alpha_cap"};
    }
    prev = a;
  }
  return std::nullopt;
}

}  // namespace psplit
