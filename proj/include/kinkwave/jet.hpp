#pragma once

// Truncated Taylor arithmetic used to differentiate the constitutive laws.
// A Jet holds the coefficients t[k] = f^(k)(x)/k! for k = 0..3.

#include <array>
#include <cmath>

namespace kinkwave::detail {

struct Jet {
  std::array<double, 4> t{};

  static Jet variable(double x) { return Jet{{x, 1.0, 0.0, 0.0}}; }
  static Jet constant(double c) { return Jet{{c, 0.0, 0.0, 0.0}}; }

  double value() const { return t[0]; }
  double derivative(int order) const {
    static constexpr double kFactorial[] = {1.0, 1.0, 2.0, 6.0};
    return t[order] * kFactorial[order];
  }
};

inline Jet operator+(Jet a, const Jet& b) {
  for (int k = 0; k < 4; ++k) a.t[k] += b.t[k];
  return a;
}
inline Jet operator-(Jet a, const Jet& b) {
  for (int k = 0; k < 4; ++k) a.t[k] -= b.t[k];
  return a;
}
inline Jet operator-(Jet a) {
  for (auto& c : a.t) c = -c;
  return a;
}
inline Jet operator+(Jet a, double c) { a.t[0] += c; return a; }
inline Jet operator+(double c, Jet a) { a.t[0] += c; return a; }
inline Jet operator-(Jet a, double c) { a.t[0] -= c; return a; }
inline Jet operator-(double c, const Jet& a) { return c + (-a); }
inline Jet operator*(Jet a, double c) {
  for (auto& x : a.t) x *= c;
  return a;
}
inline Jet operator*(double c, Jet a) { return a * c; }

inline Jet operator*(const Jet& a, const Jet& b) {
  Jet r;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i <= k; ++i) r.t[k] += a.t[i] * b.t[k - i];
  return r;
}

inline Jet operator/(const Jet& a, const Jet& b) {
  Jet r;
  for (int k = 0; k < 4; ++k) {
    double s = a.t[k];
    for (int i = 1; i <= k; ++i) s -= b.t[i] * r.t[k - i];
    r.t[k] = s / b.t[0];
  }
  return r;
}
inline Jet operator/(const Jet& a, double c) { return a * (1.0 / c); }
inline Jet operator/(double c, const Jet& b) { return Jet::constant(c) / b; }

inline Jet exp(const Jet& a) {
  Jet r;
  r.t[0] = std::exp(a.t[0]);
  for (int k = 1; k < 4; ++k) {
    double s = 0.0;
    for (int i = 1; i <= k; ++i) s += i * a.t[i] * r.t[k - i];
    r.t[k] = s / k;
  }
  return r;
}

inline Jet log(const Jet& a) {
  Jet r;
  r.t[0] = std::log(a.t[0]);
  for (int k = 1; k < 4; ++k) {
    double s = 0.0;
    for (int i = 1; i < k; ++i) s += i * r.t[i] * a.t[k - i];
    r.t[k] = (a.t[k] - s / k) / a.t[0];
  }
  return r;
}

// Requires a positive base.
inline Jet pow(const Jet& a, double p) { return exp(p * log(a)); }

// Right-hand derivative at zero: sign(0) is taken as +1.
inline Jet abs(const Jet& a) { return a.t[0] < 0.0 ? -a : a; }

}  // namespace kinkwave::detail
