#pragma once

#include <algorithm>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

#include "openbook/errors.hpp"
#include "openbook/matrix.hpp"

namespace openbook {

// Closed interval [lo, hi] with directed-rounding endpoint arithmetic.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128) : prec_(prec) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
  Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  Interval(Interval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, 2);
    mpfr_init2(hi_, 2);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  Interval& operator=(Interval o) noexcept {
    std::swap(prec_, o.prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
  }
  ~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  static Interval from(const Int& v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
  }
  static Interval from(const Rat& v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
    return r;
  }

  mpfr_prec_t prec() const { return prec_; }
  bool excludes_zero() const { return mpfr_sgn(lo_) > 0 || mpfr_sgn(hi_) < 0; }
  int certified_sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
  }

  // |midpoint| proxy for pivot choice; any rounding is fine here.
  double magnitude() const {
    double a = mpfr_get_d(lo_, MPFR_RNDN), b = mpfr_get_d(hi_, MPFR_RNDN);
    return std::max(a < 0 ? -a : a, b < 0 ? -b : b);
  }

  // certified lower bound of |x|; 0 when the interval meets 0
  double mig() const {
    if (mpfr_sgn(lo_) > 0) return mpfr_get_d(lo_, MPFR_RNDD);
    if (mpfr_sgn(hi_) < 0) return -mpfr_get_d(hi_, MPFR_RNDU);
    return 0.0;
  }
  Interval zeroed() const { return Interval(prec_); }

  Interval operator+(const Interval& o) const {
    Interval r(prec_);
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
  }
  Interval operator-(const Interval& o) const {
    Interval r(prec_);
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
  }
  Interval operator-() const {
    Interval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
  }
  Interval operator*(const Interval& o) const {
    Interval r(prec_);
    mpfr_t t;
    mpfr_init2(t, prec_);
    const mpfr_srcptr a[2] = {lo_, hi_}, b[2] = {o.lo_, o.hi_};
    bool first = true;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        mpfr_mul(t, a[i], b[j], MPFR_RNDD);
        if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, a[i], b[j], MPFR_RNDU);
        if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
        first = false;
      }
    mpfr_clear(t);
    return r;
  }
  // requires o.excludes_zero()
  Interval operator/(const Interval& o) const {
    Interval r(prec_);
    mpfr_t t;
    mpfr_init2(t, prec_);
    const mpfr_srcptr a[2] = {lo_, hi_}, b[2] = {o.lo_, o.hi_};
    bool first = true;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        mpfr_div(t, a[i], b[j], MPFR_RNDD);
        if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
        mpfr_div(t, a[i], b[j], MPFR_RNDU);
        if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
        first = false;
      }
    mpfr_clear(t);
    return r;
  }

  void widen_by(const Interval& w) {  // pad both ends by hi(w) >= 0
    mpfr_sub(lo_, lo_, w.hi_, MPFR_RNDD);
    mpfr_add(hi_, hi_, w.hi_, MPFR_RNDU);
  }

  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_ptr lo() { return lo_; }
  mpfr_ptr hi() { return hi_; }

 private:
  mpfr_t lo_, hi_;
  mpfr_prec_t prec_;
};

namespace detail {

inline Interval two_pi_times(const Rat& c, mpfr_prec_t prec) {
  Interval pi(prec);
  mpfr_const_pi(pi.lo(), MPFR_RNDD);
  mpfr_const_pi(pi.hi(), MPFR_RNDU);
  mpfr_mul_2ui(pi.lo(), pi.lo(), 1, MPFR_RNDD);
  mpfr_mul_2ui(pi.hi(), pi.hi(), 1, MPFR_RNDU);
  return pi * Interval::from(c, prec);
}

// Encloses f over [x.lo, x.hi] for 1-Lipschitz f (cos or sin): hull of the
// endpoint values padded by the interval width.
template <typename Fn>
Interval lipschitz_enclose(const Interval& x, mpfr_prec_t prec, Fn f) {
  Interval r(prec), at_hi(prec), width(prec);
  f(r.lo(), x.lo(), MPFR_RNDD);
  f(r.hi(), x.lo(), MPFR_RNDU);
  f(at_hi.lo(), x.hi(), MPFR_RNDD);
  f(at_hi.hi(), x.hi(), MPFR_RNDU);
  if (mpfr_cmp(at_hi.lo(), r.lo()) < 0) mpfr_set(r.lo(), at_hi.lo(), MPFR_RNDD);
  if (mpfr_cmp(at_hi.hi(), r.hi()) > 0) mpfr_set(r.hi(), at_hi.hi(), MPFR_RNDU);
  mpfr_sub(width.hi(), x.hi(), x.lo(), MPFR_RNDU);
  mpfr_set_zero(width.lo(), 1);
  r.widen_by(width);
  return r;
}

}  // namespace detail

inline Interval cos_two_pi(const Rat& c, mpfr_prec_t prec) {
  return detail::lipschitz_enclose(detail::two_pi_times(c, prec), prec,
                                   [](mpfr_ptr out, mpfr_srcptr x, mpfr_rnd_t rnd) {
                                     mpfr_cos(out, x, rnd);
                                   });
}

inline Interval sin_two_pi(const Rat& c, mpfr_prec_t prec) {
  return detail::lipschitz_enclose(detail::two_pi_times(c, prec), prec,
                                   [](mpfr_ptr out, mpfr_srcptr x, mpfr_rnd_t rnd) {
                                     mpfr_sin(out, x, rnd);
                                   });
}

struct ComplexInterval {
  Interval re, im;

  ComplexInterval(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  ComplexInterval(Interval re_, Interval im_) : re(std::move(re_)), im(std::move(im_)) {}

  ComplexInterval operator+(const ComplexInterval& o) const { return {re + o.re, im + o.im}; }
  ComplexInterval operator-(const ComplexInterval& o) const { return {re - o.re, im - o.im}; }
  ComplexInterval operator*(const ComplexInterval& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  ComplexInterval conj() const { return {re, -im}; }
  ComplexInterval div_by_real(const Interval& d) const { return {re / d, im / d}; }
};

}  // namespace openbook
