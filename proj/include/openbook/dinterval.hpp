#pragma once

#include <cmath>
#include <limits>

#include "openbook/intervals.hpp"
#include "openbook/matrix.hpp"

namespace openbook {

// Closed interval backed by machine doubles. Endpoints are computed in
// round-to-nearest and then nudged one ulp outward, which keeps every
// operation a true enclosure without touching the FPU rounding mode.
struct DInterval {
  double lo = 0.0, hi = 0.0;

  static double step_down(double x) {
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
  }
  static double step_up(double x) {
    return std::nextafter(x, std::numeric_limits<double>::infinity());
  }
  static DInterval whole() {
    return {-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  }
  static DInterval make(double a, double b) {
    if (!(a <= b)) return whole();
    return {a, b};
  }

  static DInterval from(const Int& v) {
    double d = v.get_d();
    return make(step_down(d), step_up(d));
  }
  static DInterval from(const Interval& v) {
    return make(mpfr_get_d(v.lo(), MPFR_RNDD), mpfr_get_d(v.hi(), MPFR_RNDU));
  }

  bool excludes_zero() const { return lo > 0.0 || hi < 0.0; }
  int certified_sign() const { return lo > 0.0 ? 1 : (hi < 0.0 ? -1 : 0); }
  // certified lower bound of |x|; 0 when the interval meets 0
  double mig() const { return lo > 0.0 ? lo : (hi < 0.0 ? -hi : 0.0); }
  DInterval zeroed() const { return {}; }

  DInterval operator+(const DInterval& o) const {
    return make(step_down(lo + o.lo), step_up(hi + o.hi));
  }
  DInterval operator-(const DInterval& o) const {
    return make(step_down(lo - o.hi), step_up(hi - o.lo));
  }
  DInterval operator-() const { return {-hi, -lo}; }
  DInterval operator*(const DInterval& o) const {
    const double p1 = lo * o.lo, p2 = lo * o.hi, p3 = hi * o.lo, p4 = hi * o.hi;
    if (std::isnan(p1) || std::isnan(p2) || std::isnan(p3) || std::isnan(p4)) return whole();
    return make(step_down(std::fmin(std::fmin(p1, p2), std::fmin(p3, p4))),
                step_up(std::fmax(std::fmax(p1, p2), std::fmax(p3, p4))));
  }
  // requires o.excludes_zero()
  DInterval operator/(const DInterval& o) const {
    const double p1 = lo / o.lo, p2 = lo / o.hi, p3 = hi / o.lo, p4 = hi / o.hi;
    if (std::isnan(p1) || std::isnan(p2) || std::isnan(p3) || std::isnan(p4)) return whole();
    return make(step_down(std::fmin(std::fmin(p1, p2), std::fmin(p3, p4))),
                step_up(std::fmax(std::fmax(p1, p2), std::fmax(p3, p4))));
  }
};

struct CDInterval {
  DInterval re, im;

  CDInterval operator+(const CDInterval& o) const { return {re + o.re, im + o.im}; }
  CDInterval operator-(const CDInterval& o) const { return {re - o.re, im - o.im}; }
  CDInterval operator*(const CDInterval& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CDInterval conj() const { return {re, -im}; }
  CDInterval div_by_real(const DInterval& d) const { return {re / d, im / d}; }
};

}  // namespace openbook
