#pragma once

#include <cstddef>
#include <vector>

#include "openbook/errors.hpp"
#include "openbook/intervals.hpp"
#include "openbook/poly.hpp"

namespace openbook {

// Exact arithmetic in Q[t]/Phi_m(t), the m-th cyclotomic field, in the power
// basis 1, zeta, ..., zeta^(deg-1).
class CycloField {
 public:
  using Elem = std::vector<Rat>;  // always of size deg()

  explicit CycloField(unsigned long m) : m_(m) {
    IntPoly phi = cyclotomic_polynomial(m);
    deg_ = phi.size() - 1;
    phi_.resize(deg_ + 1);
    for (std::size_t i = 0; i <= deg_; ++i) phi_[i] = Rat(phi[i]);
    powers_.reserve(2 * m_);
    Elem p = zero();
    p[0] = 1;
    for (unsigned long j = 0; j < 2 * m_; ++j) {
      powers_.push_back(p);
      p = shift_reduce(p);
    }
  }

  unsigned long m() const { return m_; }
  std::size_t deg() const { return deg_; }

  Elem zero() const { return Elem(deg_); }
  Elem from_int(const Int& v) const {
    Elem e = zero();
    e[0] = Rat(v);
    return e;
  }
  const Elem& power(unsigned long j) const { return powers_[j % m_]; }

  static bool is_zero(const Elem& a) {
    for (const Rat& c : a)
      if (c != 0) return false;
    return true;
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r(deg_);
    for (std::size_t i = 0; i < deg_; ++i) r[i] = a[i] + b[i];
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r(deg_);
    for (std::size_t i = 0; i < deg_; ++i) r[i] = a[i] - b[i];
    return r;
  }
  Elem neg(const Elem& a) const {
    Elem r(deg_);
    for (std::size_t i = 0; i < deg_; ++i) r[i] = -a[i];
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    std::vector<Rat> prod(2 * deg_ - 1);
    for (std::size_t i = 0; i < deg_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < deg_; ++j)
        if (b[j] != 0) prod[i + j] += a[i] * b[j];
    }
    reduce(prod);
    prod.resize(deg_);
    return prod;
  }

  // conj(zeta^i) = zeta^(m-i)
  Elem conj(const Elem& a) const {
    Elem r = zero();
    for (std::size_t i = 0; i < deg_; ++i) {
      if (a[i] == 0) continue;
      const Elem& p = power(i == 0 ? 0 : m_ - i);
      for (std::size_t j = 0; j < deg_; ++j) r[j] += a[i] * p[j];
    }
    return r;
  }

  Elem inverse(const Elem& a) const {
    // extended Euclid over Q[t] against Phi_m (irreducible)
    std::vector<Rat> r0 = phi_, r1(a.begin(), a.end());
    std::vector<Rat> s0, s1{Rat(1)};
    trim(r1);
    if (r1.empty()) throw Error("division by zero in cyclotomic field");
    while (true) {
      trim(r1);
      if (r1.size() == 1) break;
      auto [q, rem] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(rem);
      if (trim(r1); r1.empty()) throw Error("cyclotomic modulus not coprime to element");
      std::vector<Rat> s2 = poly_sub(s0, poly_mul_rat(q, s1));
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    const Rat unit = r1[0];
    Elem out = zero();
    for (std::size_t i = 0; i < s1.size() && i < deg_; ++i) out[i] = s1[i] / unit;
    return out;
  }

  // Enclosure of sum a_i * cos(2*pi*i/m); equals the element itself when it
  // is fixed by conjugation.
  Interval real_embedding(const Elem& a, mpfr_prec_t prec) const {
    Interval acc(prec);
    for (std::size_t i = 0; i < deg_; ++i) {
      if (a[i] == 0) continue;
      Rat angle(i, m_);
      angle.canonicalize();
      acc = acc + Interval::from(a[i], prec) * cos_two_pi(angle, prec);
    }
    return acc;
  }

 private:
  static bool trim(std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return true;
  }

  static std::vector<Rat> poly_mul_rat(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rat> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
  }

  static std::vector<Rat> poly_sub(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> r(a.size() > b.size() ? a.size() : b.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
  }

  static std::pair<std::vector<Rat>, std::vector<Rat>> divmod(std::vector<Rat> a,
                                                              const std::vector<Rat>& b) {
    std::vector<Rat> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    for (std::size_t i = q.size(); i-- > 0;) {
      Rat c = a[i + b.size() - 1] / b.back();
      q[i] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
    }
    return {std::move(q), std::move(a)};
  }

  Elem shift_reduce(const Elem& p) const {  // multiply by t mod Phi
    std::vector<Rat> s(deg_ + 1);
    for (std::size_t i = 0; i < deg_; ++i) s[i + 1] = p[i];
    reduce(s);
    s.resize(deg_);
    return s;
  }

  void reduce(std::vector<Rat>& p) const {
    for (std::size_t i = p.size(); i-- > deg_;) {
      Rat c = p[i];
      if (c == 0) continue;
      for (std::size_t j = 0; j <= deg_; ++j) p[i - deg_ + j] -= c * phi_[j];
    }
  }

  unsigned long m_;
  std::size_t deg_;
  std::vector<Rat> phi_;
  std::vector<Elem> powers_;
};

}  // namespace openbook
