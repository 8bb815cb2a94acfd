#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "fuzzscore/errors.hpp"

namespace fuzzscore {

/// A piecewise-linear membership function, either triangular(a,b,c) or
/// trapezoidal(a,b,c,d). Both are stored as the four breakpoints of a
/// trapezoid; a triangle has b == c.
class MembershipFunction {
 public:
  enum class Shape { Triangular, Trapezoidal };

  static MembershipFunction triangular(double a, double b, double c) {
    if (!(a <= b && b <= c) || !(a < c))
      throw ConfigError("triangular membership requires a <= b <= c and a < c, got (" +
                        std::to_string(a) + ", " + std::to_string(b) + ", " +
                        std::to_string(c) + ")");
    return MembershipFunction(Shape::Triangular, a, b, b, c);
  }

  static MembershipFunction trapezoidal(double a, double b, double c, double d) {
    if (!(a <= b && b <= c && c <= d) || !(a < d))
      throw ConfigError("trapezoidal membership requires a <= b <= c <= d and a < d, got (" +
                        std::to_string(a) + ", " + std::to_string(b) + ", " +
                        std::to_string(c) + ", " + std::to_string(d) + ")");
    return MembershipFunction(Shape::Trapezoidal, a, b, c, d);
  }

  Shape shape() const { return shape_; }
  double supportLo() const { return a_; }
  double supportHi() const { return d_; }
  double coreLo() const { return b_; }
  double coreHi() const { return c_; }

  /// Breakpoints (a, b, c, d); for triangles b == c.
  std::array<double, 4> breakpoints() const { return {a_, b_, c_, d_}; }

  /// Location of full membership, the midpoint of the core.
  double peak() const { return 0.5 * (b_ + c_); }

  double operator()(double x) const {
    if (x < a_ || x > d_) return 0.0;
    if (x >= b_ && x <= c_) return 1.0;
    if (x < b_) return (x - a_) / (b_ - a_);
    return (d_ - x) / (d_ - c_);
  }

  friend bool operator==(const MembershipFunction& l, const MembershipFunction& r) {
    return l.shape_ == r.shape_ && l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_ &&
           l.d_ == r.d_;
  }

 private:
  MembershipFunction(Shape shape, double a, double b, double c, double d)
      : shape_(shape), a_(a), b_(b), c_(c), d_(d) {}

  Shape shape_;
  double a_, b_, c_, d_;
};

/// Membership degree of x under mf; 0 outside the support.
inline double membership(const MembershipFunction& mf, double x) { return mf(x); }

}  // namespace fuzzscore
