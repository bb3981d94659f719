#pragma once

#include <cmath>

namespace grlab {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  constexpr CompensatedSum() = default;
  explicit constexpr CompensatedSum(double x) : sum_(x) {}

  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }

  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2. Exact for integer sums below 2^106.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  static DoubleDouble two_sum(double a, double b) noexcept {
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return {s, err};
  }

  DoubleDouble& operator+=(const DoubleDouble& o) noexcept {
    DoubleDouble s = two_sum(hi, o.hi);
    s.lo += lo + o.lo;
    *this = two_sum(s.hi, s.lo);
    return *this;
  }

  DoubleDouble& operator-=(const DoubleDouble& o) noexcept { return *this += DoubleDouble{-o.hi, -o.lo}; }

  double value() const noexcept { return hi + lo; }
};

}  // namespace grlab
