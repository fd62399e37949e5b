#pragma once

#include <cmath>
#include <utility>

#include "kinkwave/errors.hpp"

namespace kinkwave {

/// Root of a continuous function on [lo, hi] with a sign change: bisection
/// safeguarding secant (regula falsi, Illinois variant) steps. Stops once
/// |fn(x)| <= f_tol or the bracket collapses to adjacent doubles.
template <class Fn>
double find_root_bracketed(Fn&& fn, double lo, double hi, double f_tol, int max_iter = 400) {
  double flo = fn(lo);
  double fhi = fn(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (!((flo < 0.0) != (fhi < 0.0))) {
    throw Error(ErrorKind::OutOfRange, "no sign change in bracket");
  }
  int side = 0;
  double best = std::abs(flo) < std::abs(fhi) ? lo : hi;
  for (int it = 0; it < max_iter; ++it) {
    double x = (lo * fhi - hi * flo) / (fhi - flo);
    // Alternate with bisection so slow secant convergence cannot stall.
    if (it % 3 == 2 || !(x > lo && x < hi)) x = 0.5 * (lo + hi);
    if (x <= lo || x >= hi) break;
    const double fx = fn(x);
    best = x;
    if (std::abs(fx) <= f_tol || fx == 0.0) return x;
    if ((fx < 0.0) == (flo < 0.0)) {
      lo = x;
      flo = fx;
      if (side == -1) fhi *= 0.5;
      side = -1;
    } else {
      hi = x;
      fhi = fx;
      if (side == 1) flo *= 0.5;
      side = 1;
    }
  }
  return best;
}

/// Maximizes a unimodal function on [lo, hi] by golden-section search.
template <class Fn>
std::pair<double, double> golden_maximize(Fn&& fn, double lo, double hi, double x_tol = 1e-13) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = fn(x1);
  double f2 = fn(x2);
  while (hi - lo > x_tol * std::max(1.0, std::abs(lo) + std::abs(hi))) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = fn(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = fn(x1);
    }
  }
  return f1 > f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

}  // namespace kinkwave
