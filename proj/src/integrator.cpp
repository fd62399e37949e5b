#include "kinkwave/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kinkwave/errors.hpp"

namespace kinkwave {
namespace {

// Dormand-Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                 a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                 b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

}  // namespace

ScalarTrajectory integrate_scalar(const std::function<double(double)>& rhs, double y0,
                                  std::span<const double> outputs, const StepControl& control,
                                  const Approach& approach) {
  ScalarTrajectory out;
  out.values.reserve(outputs.size());
  double t = 0.0;
  double y = y0;
  double k1 = rhs(y);
  double h = std::min(control.max_step,
                      0.01 * std::max(1.0, std::abs(y)) / std::max(std::abs(k1), 1e-300));
  h = std::max(h, 1e-6);

  auto arrived = [&](double value) { return std::abs(value - approach.target) < approach.cutoff; };

  std::size_t next = 0;
  while (next < outputs.size() && outputs[next] <= t) out.values.push_back(y), ++next;

  while (next < outputs.size()) {
    if (arrived(y)) {
      out.reached_target = true;
      while (next < outputs.size()) out.values.push_back(approach.target), ++next;
      break;
    }
    const double remaining = outputs[next] - t;
    const bool lands = h >= remaining;
    const double step = lands ? remaining : h;

    const double k2 = rhs(y + step * a21 * k1);
    const double k3 = rhs(y + step * (a31 * k1 + a32 * k2));
    const double k4 = rhs(y + step * (a41 * k1 + a42 * k2 + a43 * k3));
    const double k5 = rhs(y + step * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const double k6 = rhs(y + step * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const double y_new = y + step * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const double k7 = rhs(y_new);
    const double err =
        std::abs(step * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7));
    const double scale = control.rel_tol * std::max(std::abs(y), std::abs(y_new)) + control.abs_tol;

    double factor;
    if (!std::isfinite(err) || !std::isfinite(y_new)) {
      factor = 0.2;
    } else if (err == 0.0) {
      factor = 5.0;
    } else {
      factor = std::clamp(0.9 * std::pow(scale / err, 0.2), 0.2, 5.0);
    }

    if (std::isfinite(y_new) && err <= scale) {
      ++out.accepted_steps;
      t = lands ? outputs[next] : t + step;
      y = y_new;
      k1 = k7;
      if (y < approach.lower || y > approach.upper) {
        std::ostringstream os;
        os << "solution left the admissible range: y = " << y << " at t = " << t;
        throw Error(ErrorKind::InconsistentField, os.str());
      }
      while (next < outputs.size() && outputs[next] <= t) out.values.push_back(y), ++next;
      // A short landing step should not shrink the next regular step.
      h = std::min(control.max_step, lands ? std::max(h, step * factor) : step * factor);
    } else {
      ++out.rejected_steps;
      h = step * factor;
      if (h < 1e-14 * std::max(1.0, std::abs(t))) {
        std::ostringstream os;
        os << "step size underflow at t = " << t << ", y = " << y;
        throw Error(ErrorKind::Stiffness, os.str());
      }
    }
  }
  return out;
}

}  // namespace kinkwave
