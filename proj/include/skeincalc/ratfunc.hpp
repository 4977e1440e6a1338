#pragma once

#include <string>
#include <utility>

#include "skeincalc/errors.hpp"
#include "skeincalc/intpoly.hpp"
#include "skeincalc/rational.hpp"

namespace skeincalc {

/// Rational function in t with integer coefficients, stored canonically as
///     (num * t^shift) / den
/// where num and den are integer polynomials with nonzero constant terms,
/// den has positive leading coefficient and is coprime to num (content and
/// polynomial part both reduced).  Equality is structural, so canonical
/// form doubles as the equality test.  The parameter t is never evaluated:
/// genericity of t is exactly what exact rational-function arithmetic
/// models.
class RatFunc {
 public:
  RatFunc() : num_(), shift_(0), den_(1) {}
  RatFunc(long long c) : num_(c), shift_(0), den_(1) {}  // NOLINT
  RatFunc(const BigInt& c) : num_(IntPoly::monomial(c, 0)), shift_(0), den_(1) {  // NOLINT
    if (num_.is_zero()) shift_ = 0;
  }

  RatFunc(IntPoly num, long long shift, IntPoly den)
      : num_(std::move(num)), shift_(shift), den_(std::move(den)) {
    reduce();
  }

  /// t^k for any integer k.
  static RatFunc t_power(long long k) {
    RatFunc r;
    r.num_ = IntPoly(1);
    r.shift_ = k;
    return r;
  }

  static RatFunc from_poly(IntPoly p) { return RatFunc(std::move(p), 0, IntPoly(1)); }

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  long long shift() const { return shift_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && shift_ == 0 && den_.is_one(); }

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long long s = std::min(a.shift_, b.shift_);
    if (a.den_ == b.den_) {
      IntPoly na = a.num_.shifted(static_cast<int>(a.shift_ - s));
      IntPoly nb = b.num_.shifted(static_cast<int>(b.shift_ - s));
      return RatFunc(na + nb, s, a.den_);
    }
    IntPoly na = (a.num_ * b.den_).shifted(static_cast<int>(a.shift_ - s));
    IntPoly nb = (b.num_ * a.den_).shifted(static_cast<int>(b.shift_ - s));
    return RatFunc(na + nb, s, a.den_ * b.den_);
  }

  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    return RatFunc(a.num_ * b.num_, a.shift_ + b.shift_, a.den_ * b.den_);
  }

  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  RatFunc inverse() const {
    if (is_zero()) throw input_error("RatFunc::inverse: division by zero");
    return RatFunc(den_, -shift_, num_);
  }

  RatFunc pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc base = *this, result = 1;
    while (e != 0) {
      if (e & 1LL) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  /// Value at t = 1 (the classical specialization); the denominator must
  /// not vanish there.
  Rational eval_at_one() const {
    Rational d = den_.eval(Rational(1));
    if (d.is_zero()) throw input_error("RatFunc::eval_at_one: pole at t = 1");
    return num_.eval(Rational(1)) / d;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    bool wrap_num = num_.degree() > 0 && (shift_ != 0 || !den_.is_one());
    std::string ns = num_.to_string();
    if (wrap_num) ns = "(" + ns + ")";
    s = ns;
    if (shift_ != 0) {
      if (num_.is_one()) s = "";
      else s += "*";
      s += "t^" + std::to_string(shift_);
    }
    if (!den_.is_one()) {
      std::string ds = den_.to_string();
      if (den_.degree() > 0) ds = "(" + ds + ")";
      s += "/" + ds;
    }
    return s;
  }

 private:
  IntPoly num_;
  long long shift_;
  IntPoly den_;

  void reduce() {
    if (den_.is_zero()) throw input_error("RatFunc: zero denominator");
    if (num_.is_zero()) {
      shift_ = 0;
      den_ = IntPoly(1);
      return;
    }
    // pull t powers out of both polynomials into the shift
    int vn = num_.low_order();
    if (vn > 0) {
      num_ = IntPoly::div_exact(num_, IntPoly::monomial(BigInt(1), vn));
      shift_ += vn;
    }
    int vd = den_.low_order();
    if (vd > 0) {
      den_ = IntPoly::div_exact(den_, IntPoly::monomial(BigInt(1), vd));
      shift_ -= vd;
    }
    // constants share no polynomial factor with anything, so the PRS gcd
    // only runs when both sides have positive degree
    if (!den_.is_one() && num_.degree() > 0 && den_.degree() > 0) {
      IntPoly g = IntPoly::gcd(num_, den_);
      if (!g.is_one()) {
        num_ = IntPoly::div_exact(num_, g);
        den_ = IntPoly::div_exact(den_, g);
      }
    }
    BigInt cg = BigInt::gcd(num_.content(), den_.content());
    if (den_.lc().is_negative()) cg = -cg;
    if (!cg.is_one()) {
      num_ = num_.divide_bigint_exact(cg);
      den_ = den_.divide_bigint_exact(cg);
    }
  }
};

}  // namespace skeincalc
