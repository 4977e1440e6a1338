#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "skeincalc/errors.hpp"

namespace skeincalc {

/// Signed arbitrary-precision integer.  Magnitude is a little-endian vector
/// of 32-bit limbs; the invariant is "no leading zero limb" and sign 0 only
/// for the empty magnitude.  Everything here is O(n^2)-school arithmetic,
/// which is ample: the largest values in this project are partition numbers
/// around 10^21 and polynomial coefficients a few hundred bits wide.
class BigInt {
 public:
  BigInt() = default;

  BigInt(long long v) {  // NOLINT: implicit, mirrors int literals
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // careful with LLONG_MIN: negate as unsigned
    unsigned long long u = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                 : static_cast<unsigned long long>(v);
    while (u != 0) {
      mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffULL));
      u >>= 32;
    }
  }

  BigInt(int v) : BigInt(static_cast<long long>(v)) {}
  BigInt(unsigned long long u) {
    if (u == 0) return;
    sign_ = 1;
    while (u != 0) {
      mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffULL));
      u >>= 32;
    }
  }

  static BigInt from_string(const std::string& s) {
    std::size_t i = 0;
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    if (i == s.size()) throw input_error("BigInt::from_string: empty digits");
    BigInt r;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw input_error("BigInt::from_string: bad digit");
      r.mul_small_inplace(10);
      r.add_small_inplace(static_cast<std::uint32_t>(s[i] - '0'));
    }
    if (!r.is_zero()) r.sign_ = sign;
    return r;
  }

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }
  bool is_negative() const { return sign_ < 0; }
  bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

  bool fits_int64() const {
    if (mag_.size() > 2) return false;
    unsigned long long u = to_u64_mag();
    if (sign_ >= 0) return u <= 0x7fffffffffffffffULL;
    return u <= 0x8000000000000000ULL;
  }

  long long to_int64() const {
    if (!fits_int64()) throw input_error("BigInt::to_int64: out of range");
    unsigned long long u = to_u64_mag();
    return sign_ < 0 ? -static_cast<long long>(u - 1) - 1
                     : static_cast<long long>(u);
  }

  bool fits_uint64() const { return sign_ >= 0 && mag_.size() <= 2; }
  unsigned long long to_uint64() const {
    if (!fits_uint64()) throw input_error("BigInt::to_uint64: out of range");
    return to_u64_mag();
  }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
  }

  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    int c = cmp_mag(a.mag_, b.mag_);
    if (a.sign_ < 0) c = -c;
    return c <=> 0;
  }

  BigInt operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
  }

  BigInt abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.mag_ = add_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
      return r;
    }
    int c = cmp_mag(a.mag_, b.mag_);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.mag_ = sub_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
    } else {
      r.mag_ = sub_mag(b.mag_, a.mag_);
      r.sign_ = b.sign_;
    }
    return r;
  }

  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (std::size_t i = 0; i < a.mag_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.mag_.size(); ++j) {
        std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] +
                            r.mag_[i + j] + carry;
        r.mag_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
        carry = cur >> 32;
      }
      std::size_t k = i + b.mag_.size();
      while (carry != 0) {
        std::uint64_t cur = r.mag_[k] + carry;
        r.mag_[k] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
        carry = cur >> 32;
        ++k;
      }
    }
    r.trim();
    r.sign_ = a.sign_ * b.sign_;
    return r;
  }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  /// Truncated division: quotient rounds toward zero, remainder has the
  /// sign of the dividend, |r| < |b|.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw input_error("BigInt::divmod: division by zero");
    int c = cmp_mag(a.mag_, b.mag_);
    if (c < 0) {
      q = BigInt();
      r = a;
      return;
    }
    // binary long division on magnitudes
    q = BigInt();
    q.mag_.assign(a.mag_.size(), 0);
    BigInt rem;
    for (std::size_t bit = a.mag_.size() * 32; bit-- > 0;) {
      rem.shift_left1();
      if ((a.mag_[bit / 32] >> (bit % 32)) & 1U) {
        if (rem.mag_.empty()) rem.mag_.push_back(1);
        else rem.mag_[0] |= 1U;
        rem.sign_ = 1;
      }
      if (cmp_mag(rem.mag_, b.mag_) >= 0) {
        rem.mag_ = sub_mag(rem.mag_, b.mag_);
        if (rem.mag_.empty()) rem.sign_ = 0;
        q.mag_[bit / 32] |= (1U << (bit % 32));
      }
    }
    q.trim();
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r = rem;
    if (!r.mag_.empty()) r.sign_ = a.sign_;
    else r.sign_ = 0;
  }

  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return q;
  }

  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return r;
  }

  /// Exact division; throws consistency_error when the division has a
  /// remainder (used where divisibility is guaranteed).
  static BigInt div_exact(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw consistency_error("BigInt::div_exact: not divisible");
    return q;
  }

  static BigInt gcd(BigInt a, BigInt b) {
    a.sign_ = a.mag_.empty() ? 0 : 1;
    b.sign_ = b.mag_.empty() ? 0 : 1;
    while (!b.is_zero()) {
      BigInt q, r;
      divmod(a, b, q, r);
      a = b;
      b = r;
    }
    return a;
  }

  BigInt pow(unsigned long long e) const {
    BigInt base = *this, result = 1;
    while (e != 0) {
      if (e & 1ULL) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    BigInt t = *this;
    t.sign_ = 1;
    while (!t.is_zero()) {
      std::uint32_t rem = t.divmod_small_inplace(1000000000U);
      std::string chunk = std::to_string(rem);
      if (!t.is_zero()) chunk.insert(0, 9 - chunk.size(), '0');
      out.insert(0, chunk);
    }
    if (sign_ < 0) out.insert(0, 1, '-');
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v) {
    return os << v.to_string();
  }

 private:
  int sign_ = 0;
  std::vector<std::uint32_t> mag_;

  unsigned long long to_u64_mag() const {
    unsigned long long u = 0;
    if (mag_.size() > 0) u = mag_[0];
    if (mag_.size() > 1) u |= static_cast<unsigned long long>(mag_[1]) << 32;
    return u;
  }

  void trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
  }

  void shift_left1() {
    std::uint32_t carry = 0;
    for (auto& limb : mag_) {
      std::uint32_t next = limb >> 31;
      limb = (limb << 1) | carry;
      carry = next;
    }
    if (carry != 0) mag_.push_back(carry);
    if (!mag_.empty()) sign_ = 1;
  }

  void mul_small_inplace(std::uint32_t m) {
    std::uint64_t carry = 0;
    for (auto& limb : mag_) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
      limb = static_cast<std::uint32_t>(cur & 0xffffffffULL);
      carry = cur >> 32;
    }
    while (carry != 0) {
      mag_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffULL));
      carry >>= 32;
    }
    trim();
    if (!mag_.empty() && sign_ == 0) sign_ = 1;
  }

  void add_small_inplace(std::uint32_t v) {
    std::uint64_t carry = v;
    for (std::size_t i = 0; carry != 0 && i < mag_.size(); ++i) {
      std::uint64_t cur = mag_[i] + carry;
      mag_[i] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
      carry = cur >> 32;
    }
    if (carry != 0) mag_.push_back(static_cast<std::uint32_t>(carry));
    if (!mag_.empty()) sign_ = 1;
  }

  std::uint32_t divmod_small_inplace(std::uint32_t d) {
    std::uint64_t rem = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | mag_[i];
      mag_[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
  }

  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> out = big;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
      std::uint64_t cur = carry + out[i] + (i < small.size() ? small[i] : 0);
      out[i] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
      carry = cur >> 32;
      if (carry == 0 && i >= small.size()) break;
    }
    if (carry != 0) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
  }

  // precondition: a >= b as magnitudes
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out = a;
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(out[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
      if (cur < 0) {
        cur += 0x100000000LL;
        borrow = 1;
      } else {
        borrow = 0;
      }
      out[i] = static_cast<std::uint32_t>(cur);
      if (borrow == 0 && i >= b.size()) break;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
  }
};

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= BigInt(static_cast<long long>(i));
  return r;
}

}  // namespace skeincalc
