#pragma once

#include <functional>

namespace kinkwave {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
};

/// Adaptive Gauss-Kronrod (7/15) quadrature with recursive bisection of the
/// interval of largest error estimate, until the total estimate is below
/// max(abs_tol, rel_tol * |value|).
QuadratureResult integrate_adaptive(const std::function<double(double)>& fn, double a,
                                    double b, double abs_tol, double rel_tol,
                                    int max_intervals = 2000);

}  // namespace kinkwave
