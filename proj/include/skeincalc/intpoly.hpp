#pragma once

#include <string>
#include <utility>
#include <vector>

#include "skeincalc/bigint.hpp"
#include "skeincalc/errors.hpp"
#include "skeincalc/rational.hpp"

namespace skeincalc {

/// Polynomial over BigInt, coefficients ascending, no trailing zeros.
/// The zero polynomial is the empty coefficient vector.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  IntPoly(long long c) : coeffs_{BigInt(c)} { trim(); }  // NOLINT

  static IntPoly monomial(BigInt c, int exp) {
    if (exp < 0) throw input_error("IntPoly::monomial: negative exponent");
    if (c.is_zero()) return IntPoly();
    std::vector<BigInt> v(static_cast<std::size_t>(exp) + 1, BigInt(0));
    v.back() = std::move(c);
    return IntPoly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& lc() const { return coeffs_.back(); }
  BigInt coeff(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(i)]
                                                          : BigInt(0);
  }

  /// Index of the lowest nonzero coefficient (valuation at t = 0).
  int low_order() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) return static_cast<int>(i);
    return 0;
  }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  IntPoly operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (i < a.coeffs_.size()) out[i] += a.coeffs_[i];
      if (i < b.coeffs_.size()) out[i] += b.coeffs_[i];
    }
    return IntPoly(std::move(out));
  }

  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPoly(std::move(out));
  }

  IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
  IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

  IntPoly mul_bigint(const BigInt& c) const {
    if (c.is_zero()) return IntPoly();
    IntPoly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
  }

  IntPoly shifted(int exp) const {
    if (is_zero()) return IntPoly();
    std::vector<BigInt> out(static_cast<std::size_t>(exp), BigInt(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return IntPoly(std::move(out));
  }

  /// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  BigInt content() const {
    BigInt g = 0;
    for (const BigInt& c : coeffs_) g = BigInt::gcd(g, c);
    return g;
  }

  IntPoly divide_bigint_exact(const BigInt& c) const {
    IntPoly r = *this;
    for (auto& x : r.coeffs_) x = BigInt::div_exact(x, c);
    return r;
  }

  /// content 1 and positive leading coefficient.
  IntPoly primitive() const {
    if (is_zero()) return IntPoly();
    BigInt c = content();
    if (lc().is_negative()) c = -c;
    return divide_bigint_exact(c);
  }

  /// Exact division: throws consistency_error unless b divides a.
  static IntPoly div_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw input_error("IntPoly::div_exact: division by zero");
    if (a.is_zero()) return IntPoly();
    std::vector<BigInt> rem = a.coeffs_;
    std::vector<BigInt> quot(a.coeffs_.size(), BigInt(0));
    int db = b.degree();
    for (int d = a.degree(); d >= db;) {
      BigInt q = BigInt::div_exact(rem[static_cast<std::size_t>(d)], b.lc());
      quot[static_cast<std::size_t>(d - db)] = q;
      for (int i = 0; i <= db; ++i)
        rem[static_cast<std::size_t>(d - db + i)] -= q * b.coeffs_[static_cast<std::size_t>(i)];
      while (d >= 0 && rem[static_cast<std::size_t>(d)].is_zero()) --d;
    }
    for (const BigInt& c : rem)
      if (!c.is_zero()) throw consistency_error("IntPoly::div_exact: not divisible");
    return IntPoly(std::move(quot));
  }

  /// Pseudo-remainder of a by b (b nonzero, deg a >= deg b allowed to fail
  /// soft: returns a when deg a < deg b).
  static IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
      int shift = a.degree() - db;
      BigInt alc = a.lc();
      a = a.mul_bigint(b.lc()) - b.shifted(shift).mul_bigint(alc);
    }
    return a;
  }

  /// Full gcd over Z[t]: primitive PRS on the primitive parts times the gcd
  /// of the contents.  Result has positive leading coefficient.
  static IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.is_zero() ? IntPoly() : b.primitive().mul_bigint(b.content().abs());
    if (b.is_zero()) return a.primitive().mul_bigint(a.content().abs());
    BigInt content_gcd = BigInt::gcd(a.content(), b.content());
    IntPoly x = a.primitive(), y = b.primitive();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
      IntPoly r = pseudo_rem(x, y).primitive();
      x = std::move(y);
      y = std::move(r);
    }
    return x.mul_bigint(content_gcd);
  }

  Rational eval(const Rational& t) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + Rational(coeffs_[i]);
    return acc;
  }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      if (coeffs_[i].is_zero()) continue;
      if (!s.empty()) s += coeffs_[i].is_negative() ? " - " : " + ";
      else if (coeffs_[i].is_negative()) s += "-";
      BigInt mag = coeffs_[i].abs();
      if (i == 0 || !mag.is_one()) s += mag.to_string();
      if (i > 0) {
        if (!mag.is_one()) s += "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  std::vector<BigInt> coeffs_;

  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
};

}  // namespace skeincalc
