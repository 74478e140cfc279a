#pragma once

/*
 * Exact arithmetic in cyclotomic fields Q(zeta_m).
 *
 * A CycRat is a coefficient vector in the power basis 1, z, ..., z^(phi(m)-1)
 * of Q[x]/(Phi_m(x)), where z stands for a fixed primitive m-th root of
 * unity.  Canonical form: reduced mod Phi_m, and demoted to order 1 when
 * the value is rational, so rationals compare equal no matter where they
 * came from.  Mixed-order arithmetic promotes both operands to the lcm of
 * their orders via zeta_a = zeta_lcm^(lcm/a); every operation returns a
 * canonical value, so values stay immutable and safe to share.
 */

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "hecke/error.hpp"
#include "hecke/rational.hpp"

namespace hecke {

namespace detail {

using RatPoly = std::vector<Rat>;  // dense, index = degree, no trailing zeros

inline void rp_trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly c(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  rp_trim(c);
  return c;
}

// Division with remainder by a monic divisor.
inline void rp_divmod_monic(RatPoly num, const RatPoly& den, RatPoly& quo, RatPoly& rem) {
  quo.assign(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0, Rat(0));
  while (num.size() >= den.size()) {
    Rat c = num.back();
    std::size_t shift = num.size() - den.size();
    quo[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    rp_trim(num);
    if (num.size() < den.size()) break;
  }
  rp_trim(quo);
  rem = std::move(num);
}

// Phi_m as a monic polynomial: (x^m - 1) / prod_{d | m, d < m} Phi_d.
inline const RatPoly& cyclotomic_polynomial(long m) {
  static std::map<long, RatPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::map<long, RatPoly> local;
  for (long k = 1; k <= m; ++k) {
    if (m % k != 0 || cache.count(k)) continue;
    RatPoly num(k + 1, Rat(0));
    num[0] = -1;
    num[k] = 1;
    for (long d = 1; d < k; ++d) {
      if (k % d != 0) continue;
      const RatPoly& phi_d = cache.count(d) ? cache[d] : local[d];
      RatPoly quo, rem;
      rp_divmod_monic(num, phi_d, quo, rem);
      require(rem.empty(), errc::invalid_argument, "cyclotomic polynomial division not exact");
      num = std::move(quo);
    }
    local[k] = std::move(num);
  }
  for (auto& [k, p] : local) cache.emplace(k, std::move(p));
  return cache.at(m);
}

inline RatPoly rp_mod_phi(RatPoly p, long m) {
  const RatPoly& phi = cyclotomic_polynomial(m);
  rp_trim(p);
  if (p.size() < phi.size()) return p;
  RatPoly quo, rem;
  rp_divmod_monic(std::move(p), phi, quo, rem);
  return rem;
}

}  // namespace detail

class CycRat {
 public:
  CycRat() : order_(1), coeffs_{Rat(0)} {}
  CycRat(const Rat& r) : order_(1), coeffs_{r} {}
  CycRat(long n) : order_(1), coeffs_{Rat(n)} {}

  // Value sum_i coeffs[i] * zeta_m^i; reduced and demoted on construction.
  CycRat(long order, detail::RatPoly coeffs) : order_(order), coeffs_(std::move(coeffs)) {
    require(order_ >= 1, errc::invalid_argument, "cyclotomic order must be positive");
    canonicalize();
  }

  static CycRat zeta(long m, long k = 1) {
    require(m >= 1, errc::invalid_argument, "cyclotomic order must be positive");
    k %= m;
    if (k < 0) k += m;
    detail::RatPoly p(k + 1, Rat(0));
    p[k] = 1;
    return CycRat(m, std::move(p));
  }

  long order() const { return order_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  bool is_one() const { return order_ == 1 && coeffs_[0] == 1; }
  bool is_rational() const { return order_ == 1; }

  Rat to_rat() const {
    require(is_rational(), errc::invalid_argument, "value is not rational");
    return coeffs_[0];
  }

  CycRat promoted(long m) const {
    require(m % order_ == 0, errc::invalid_argument, "promotion target must be a multiple of the order");
    if (m == order_) return *this;
    long k = m / order_;
    detail::RatPoly p;
    p.resize((coeffs_.size() - 1) * k + 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * k] = coeffs_[i];
    return CycRat(m, std::move(p));
  }

  friend CycRat operator+(const CycRat& a, const CycRat& b) {
    // Rational operands dominate in practice; skip the promotion machinery.
    if (a.order_ == 1 && b.order_ == 1) return CycRat(Rat(a.coeffs_[0] + b.coeffs_[0]));
    long m = lcm_long(a.order_, b.order_);
    CycRat x = a.promoted(m), y = b.promoted(m);
    detail::RatPoly p = x.coeffs_;
    if (p.size() < y.coeffs_.size()) p.resize(y.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < y.coeffs_.size(); ++i) p[i] += y.coeffs_[i];
    return CycRat(m, std::move(p));
  }

  friend CycRat operator-(const CycRat& a, const CycRat& b) { return a + (-b); }

  CycRat operator-() const {
    detail::RatPoly p = coeffs_;
    for (auto& c : p) c = -c;
    return CycRat(order_, std::move(p));
  }

  friend CycRat operator*(const CycRat& a, const CycRat& b) {
    if (a.order_ == 1 && b.order_ == 1) return CycRat(Rat(a.coeffs_[0] * b.coeffs_[0]));
    long m = lcm_long(a.order_, b.order_);
    CycRat x = a.promoted(m), y = b.promoted(m);
    return CycRat(m, detail::rp_mul(x.coeffs_, y.coeffs_));
  }

  CycRat inverse() const {
    require(!is_zero(), errc::division_by_zero, "inverse of zero");
    if (order_ == 1) return CycRat(Rat(1) / coeffs_[0]);
    // Extended Euclid for gcd(a, Phi_m) = 1 in Q[x].
    detail::RatPoly r0 = detail::cyclotomic_polynomial(order_), r1 = coeffs_;
    detail::rp_trim(r1);
    detail::RatPoly s0{}, s1{Rat(1)};
    while (!r1.empty() && r1.size() > 1) {
      detail::RatPoly lead_adjusted = r1;
      Rat lc = lead_adjusted.back();
      for (auto& c : lead_adjusted) c /= lc;
      detail::RatPoly quo, rem;
      detail::rp_divmod_monic(r0, lead_adjusted, quo, rem);
      for (auto& c : quo) c /= lc;
      // r0 - quo*r1 = rem', s0 - quo*s1
      detail::RatPoly s2 = s0;
      detail::RatPoly qs = detail::rp_mul(quo, s1);
      if (s2.size() < qs.size()) s2.resize(qs.size(), Rat(0));
      for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
      detail::rp_trim(s2);
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    require(!r1.empty(), errc::division_by_zero, "element not invertible mod cyclotomic polynomial");
    Rat unit = r1[0];
    detail::RatPoly inv = s1;
    for (auto& c : inv) c /= unit;
    return CycRat(order_, std::move(inv));
  }

  friend CycRat operator/(const CycRat& a, const CycRat& b) { return a * b.inverse(); }

  friend bool operator==(const CycRat& a, const CycRat& b) {
    // Canonical form is unique within a fixed order, so equal orders
    // compare structurally; mixed orders go through the common field.
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    long m = lcm_long(a.order_, b.order_);
    return a.promoted(m).coeffs_ == b.promoted(m).coeffs_;
  }
  friend bool operator!=(const CycRat& a, const CycRat& b) { return !(a == b); }

  CycRat pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycRat acc(1), base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  // Polynomial in z with descending exponents, e.g. "-z^3 + 1/2*z - 2".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const Rat& c = coeffs_[i];
      if (c == 0) continue;
      Rat abs_c = c < 0 ? Rat(-c) : c;
      if (first) {
        if (c < 0) out += "-";
        first = false;
      } else {
        out += c < 0 ? " - " : " + ";
      }
      bool unit_coeff = abs_c == 1 && i > 0;
      if (!unit_coeff) out += rat_to_string(abs_c);
      if (i > 0) {
        if (!unit_coeff) out += "*";
        out += "z";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void canonicalize() {
    coeffs_ = detail::rp_mod_phi(std::move(coeffs_), order_);
    bool rational = true;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) rational = false;
    if (rational && order_ != 1) {
      Rat c = coeffs_.empty() ? Rat(0) : coeffs_[0];
      order_ = 1;
      coeffs_.assign(1, c);
      return;
    }
    std::size_t want = detail::cyclotomic_polynomial(order_).size() - 1;
    coeffs_.resize(want == 0 ? 1 : want, Rat(0));
    if (coeffs_.empty()) coeffs_.assign(1, Rat(0));
  }

  long order_;
  std::vector<Rat> coeffs_;
};

// zeta_d embedded in Q(zeta_m) for d | m: zeta_d^k = zeta_m^(k*m/d).
inline CycRat cyc_embed(long k, long d, long m) {
  require(d >= 1 && m % d == 0, errc::invalid_argument, "embedding order must divide ambient order");
  return CycRat::zeta(m, k * (m / d));
}

}  // namespace hecke
