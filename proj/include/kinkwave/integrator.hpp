#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace kinkwave {

struct StepControl {
  double rel_tol = 1e-10;
  double abs_tol = 1e-10;
  double max_step = 0.25;
};

/// Where the solution is heading and how close counts as arrived.
struct Approach {
  double target = 0.0;
  double cutoff = 1e-10;
  double lower = -std::numeric_limits<double>::infinity();  // solution must stay within [lower, upper]
  double upper = std::numeric_limits<double>::infinity();
};

struct ScalarTrajectory {
  std::vector<double> values;  // one per requested output time
  int accepted_steps = 0;
  int rejected_steps = 0;
  bool reached_target = false;
};

/// Integrates the autonomous scalar ODE y' = rhs(y) from (0, y0) with the
/// Dormand-Prince 5(4) embedded pair, accepting a step when the local error
/// estimate is at most rel_tol*|y| + abs_tol. `outputs` must be nondecreasing
/// and nonnegative; steps are shortened to land on each output exactly. Once
/// |y - target| < cutoff the remaining outputs are set to the target.
/// Throws Stiffness on step-size underflow and InconsistentField when y
/// leaves [lower, upper].
ScalarTrajectory integrate_scalar(const std::function<double(double)>& rhs, double y0,
                                  std::span<const double> outputs, const StepControl& control,
                                  const Approach& approach);

}  // namespace kinkwave
