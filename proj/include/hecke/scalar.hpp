#pragma once

/*
 * The ground field of the whole library: rational functions in one
 * indeterminate q with coefficients in a cyclotomic field.
 *
 * A Scalar is stored as q^shift * num / den with num, den polynomials in
 * q over CycRat.  Canonical form, enforced by every constructor:
 *   - num and den are coprime,
 *   - den is monic with nonzero constant term (all powers of q are
 *     factored into shift),
 *   - num has nonzero constant term unless the value is zero,
 *   - zero is (0, 1, shift 0).
 * Canonical form is unique, so equality is structural.  Laurent
 * polynomials (den = 1) and plain powers of q are the common case and
 * stay cheap.
 */

#include <string>
#include <utility>
#include <vector>

#include "hecke/cyclotomic.hpp"
#include "hecke/error.hpp"

namespace hecke {

// Dense polynomial in q over CycRat.  Zero is the empty vector; otherwise
// no trailing zero coefficients.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(CycRat c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  explicit QPoly(std::vector<CycRat> c) : c_(std::move(c)) { trim(); }

  static QPoly one() { return QPoly(CycRat(1)); }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  const std::vector<CycRat>& coeffs() const { return c_; }
  CycRat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : CycRat(0); }
  const CycRat& lead() const { return c_.back(); }

  // Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
  long low() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return static_cast<long>(i);
    return 0;
  }

  QPoly shifted_down(long k) const {  // divide by q^k, must be exact
    QPoly r;
    r.c_.assign(c_.begin() + k, c_.end());
    return r;
  }

  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<CycRat> c(std::max(a.c_.size(), b.c_.size()), CycRat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return QPoly(std::move(c));
  }
  friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }
  QPoly operator-() const {
    std::vector<CycRat> c = c_;
    for (auto& x : c) x = -x;
    QPoly r;
    r.c_ = std::move(c);
    return r;
  }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<CycRat> c(a.c_.size() + b.c_.size() - 1, CycRat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return QPoly(std::move(c));
  }
  QPoly times_q(long k) const {  // multiply by q^k, k >= 0
    if (is_zero()) return QPoly();
    if (k == 0) return *this;
    std::vector<CycRat> c(c_.size() + k, CycRat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    return QPoly(std::move(c));
  }
  QPoly scaled(const CycRat& s) const {
    std::vector<CycRat> c = c_;
    for (auto& x : c) x = x * s;
    return QPoly(std::move(c));
  }

  // Division with remainder; divisor must be nonzero.
  friend void qp_divmod(QPoly num, const QPoly& den, QPoly& quo, QPoly& rem) {
    require(!den.is_zero(), errc::division_by_zero, "polynomial division by zero");
    if (den.is_one()) {
      quo = std::move(num);
      rem = QPoly();
      return;
    }
    CycRat lc_inv = den.lead().inverse();
    std::vector<CycRat> q(num.c_.size() > den.c_.size() - 1 ? num.c_.size() - den.c_.size() + 1 : 0,
                          CycRat(0));
    while (num.c_.size() >= den.c_.size()) {
      CycRat f = num.c_.back() * lc_inv;
      std::size_t shift = num.c_.size() - den.c_.size();
      q[shift] = f;
      for (std::size_t i = 0; i < den.c_.size(); ++i)
        num.c_[shift + i] = num.c_[shift + i] - f * den.c_[i];
      num.trim();
      if (num.c_.size() < den.c_.size()) break;
    }
    quo = QPoly(std::move(q));
    rem = std::move(num);
  }

  // Monic gcd; gcd(0, b) = monic b.
  friend QPoly qp_gcd(QPoly a, QPoly b) {
    if (a.is_one() || b.is_one()) return QPoly::one();
    while (!b.is_zero()) {
      QPoly quo, rem;
      qp_divmod(std::move(a), b, quo, rem);
      a = std::move(b);
      b = std::move(rem);
    }
    if (a.is_zero()) return a;
    return a.scaled(a.lead().inverse());
  }

  CycRat eval(const CycRat& v) const {
    CycRat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
    return acc;
  }

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a.c_ == b.c_); }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<CycRat> c_;
};

class Scalar {
 public:
  Scalar() : num_(), den_(QPoly::one()), shift_(0) {}
  Scalar(const Rat& r) : Scalar(CycRat(r)) {}
  Scalar(long n) : Scalar(CycRat(n)) {}
  Scalar(CycRat c) : num_(QPoly(std::move(c))), den_(QPoly::one()), shift_(0) { canonicalize(); }
  Scalar(QPoly num, QPoly den, long shift) : num_(std::move(num)), den_(std::move(den)), shift_(shift) {
    require(!den_.is_zero(), errc::division_by_zero, "scalar with zero denominator");
    canonicalize();
  }

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }
  static Scalar q(long k = 1) { return Scalar(QPoly::one(), QPoly::one(), k); }
  static Scalar from_cyc(CycRat c) { return Scalar(std::move(c)); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }
  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  long shift() const { return shift_; }

  bool is_constant() const { return num_.degree() <= 0 && den_.is_one() && shift_ == 0; }
  CycRat constant_value() const {
    require(is_constant() || is_zero(), errc::invalid_argument, "scalar is not constant in q");
    return num_.coeff(0);
  }

  // num degree + den degree; used by elimination to pick cheap pivots.
  long complexity() const { return (num_.degree() < 0 ? 0 : num_.degree()) + den_.degree(); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long s = std::min(a.shift_, b.shift_);
    QPoly na = a.num_.times_q(a.shift_ - s);
    if (!b.den_.is_one()) na = na * b.den_;
    QPoly nb = b.num_.times_q(b.shift_ - s);
    if (!a.den_.is_one()) nb = nb * a.den_;
    QPoly d = a.den_.is_one() ? b.den_ : b.den_.is_one() ? a.den_ : a.den_ * b.den_;
    return Scalar(na + nb, std::move(d), s);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  Scalar operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    // Laurent polynomials need no reduction at all.
    if (a.den_.is_one() && b.den_.is_one())
      return Scalar(a.num_ * b.num_, QPoly::one(), a.shift_ + b.shift_);
    // Cross-reduce first so the canonical gcd works on small inputs.
    QPoly g1 = qp_gcd(a.num_, b.den_);
    QPoly g2 = qp_gcd(b.num_, a.den_);
    QPoly quo, rem;
    QPoly na = a.num_, db = b.den_, nb = b.num_, da = a.den_;
    if (!g1.is_one()) {
      qp_divmod(std::move(na), g1, quo, rem);
      na = quo;
      qp_divmod(std::move(db), g1, quo, rem);
      db = quo;
    }
    if (!g2.is_one()) {
      qp_divmod(std::move(nb), g2, quo, rem);
      nb = quo;
      qp_divmod(std::move(da), g2, quo, rem);
      da = quo;
    }
    return Scalar(na * nb, da * db, a.shift_ + b.shift_);
  }
  Scalar inverse() const {
    require(!is_zero(), errc::division_by_zero, "inverse of zero scalar");
    return Scalar(den_, num_, -shift_);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc = one(), base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Evaluate at q = v.  Throws specialization_pole when the denominator
  // (or a negative power of q at v = 0) vanishes.
  CycRat substitute_q(const CycRat& v) const {
    if (is_zero()) return CycRat(0);
    CycRat dv = den_.eval(v);
    require(!dv.is_zero(), errc::specialization_pole, "denominator vanishes at the given q");
    if (v.is_zero() && shift_ < 0)
      fail(errc::specialization_pole, "negative power of q evaluated at zero");
    return num_.eval(v) * v.pow(shift_) / dv;
  }

  std::string to_string() const;

 private:
  void canonicalize() {
    if (num_.is_zero()) {
      den_ = QPoly::one();
      shift_ = 0;
      return;
    }
    long t = num_.low();
    if (t > 0) {
      num_ = num_.shifted_down(t);
      shift_ += t;
    }
    long s = den_.low();
    if (s > 0) {
      den_ = den_.shifted_down(s);
      shift_ -= s;
    }
    if (!den_.is_one()) {
      QPoly g = qp_gcd(num_, den_);
      if (g.degree() > 0) {
        QPoly quo, rem;
        qp_divmod(std::move(num_), g, quo, rem);
        num_ = quo;
        qp_divmod(std::move(den_), g, quo, rem);
        den_ = quo;
      }
    }
    if (!den_.lead().is_one()) {
      CycRat inv = den_.lead().inverse();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  QPoly num_, den_;
  long shift_;
};

namespace detail {

// One Laurent term c * q^k in the canonical text form.
inline std::string term_to_string(const CycRat& c, long k, bool leading) {
  std::string cs = c.to_string();
  bool negative = false;
  if (!cs.empty() && cs[0] == '-' && cs.find(' ') == std::string::npos) {
    negative = true;
    cs = cs.substr(1);
  }
  bool composite = cs.find(' ') != std::string::npos;
  std::string body;
  if (k == 0) {
    body = composite ? "(" + cs + ")" : cs;
  } else {
    std::string qp = k == 1 ? "q" : "q^" + std::to_string(k);
    if (cs == "1")
      body = qp;
    else if (composite)
      body = "(" + cs + ")*" + qp;
    else
      body = cs + "*" + qp;
  }
  if (leading) return (negative ? "-" : "") + body;
  return (negative ? " - " : " + ") + body;
}

inline std::string laurent_to_string(const QPoly& p, long shift) {
  if (p.is_zero()) return "0";
  std::string out;
  bool leading = true;
  for (long i = p.degree(); i >= 0; --i) {
    CycRat c = p.coeff(i);
    if (c.is_zero()) continue;
    out += term_to_string(c, i + shift, leading);
    leading = false;
  }
  return out;
}

}  // namespace detail

inline std::string Scalar::to_string() const {
  std::string ns = detail::laurent_to_string(num_, shift_);
  if (den_.is_one()) return ns;
  bool multi = false;
  {
    int terms = 0;
    for (long i = 0; i <= num_.degree(); ++i)
      if (!num_.coeff(i).is_zero()) ++terms;
    multi = terms > 1;
  }
  std::string ds = detail::laurent_to_string(den_, 0);
  return (multi ? "(" + ns + ")" : ns) + "/(" + ds + ")";
}

// ---------------------------------------------------------------------------
// Parser for the canonical text grammar:
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := ('+' | '-')* atom ('^' signed-integer)?
//   atom   := integer | 'z' | 'q' | '(' expr ')'
// 'z' denotes a primitive root of unity of the given order.

class ScalarParser {
 public:
  ScalarParser(const std::string& text, long zeta_order) : s_(text), zeta_order_(zeta_order) {}

  Scalar parse() {
    Scalar v = expr();
    skip_ws();
    require(pos_ == s_.size(), errc::parse_error, "trailing input in scalar '" + s_ + "'");
    return v;
  }

 private:
  Scalar expr() {
    Scalar v = term();
    for (;;) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        v += term();
      } else if (peek() == '-') {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        v *= factor();
      } else if (peek() == '/') {
        ++pos_;
        v /= factor();
      } else {
        return v;
      }
    }
  }

  Scalar factor() {
    skip_ws();
    bool neg = false;
    while (peek() == '-' || peek() == '+') {
      if (peek() == '-') neg = !neg;
      ++pos_;
      skip_ws();
    }
    Scalar v = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      v = v.pow(integer());
    }
    return neg ? -v : v;
  }

  Scalar atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      skip_ws();
      require(peek() == ')', errc::parse_error, "expected ')' in scalar '" + s_ + "'");
      ++pos_;
      return v;
    }
    if (c == 'q') {
      ++pos_;
      return Scalar::q();
    }
    if (c == 'z') {
      ++pos_;
      return Scalar::from_cyc(CycRat::zeta(zeta_order_));
    }
    if (c >= '0' && c <= '9') return Scalar(Rat(digits()));
    fail(errc::parse_error, "unexpected character in scalar '" + s_ + "'");
  }

  long integer() {
    skip_ws();
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
    }
    long v = digits();
    return neg ? -v : v;
  }

  long digits() {
    skip_ws();
    require(peek() >= '0' && peek() <= '9', errc::parse_error, "expected digits in scalar '" + s_ + "'");
    long v = 0;
    while (peek() >= '0' && peek() <= '9') {
      v = v * 10 + (peek() - '0');
      ++pos_;
    }
    return v;
  }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  const std::string& s_;
  std::size_t pos_ = 0;
  long zeta_order_;
};

inline Scalar parse_scalar(const std::string& text, long zeta_order = 1) {
  return ScalarParser(text, zeta_order).parse();
}

}  // namespace hecke
