#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "skeincalc/errors.hpp"

namespace skeincalc {

/// Weakly decreasing tuple of positive integers.  The empty partition is the
/// unique partition of 0.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw input_error("Partition: parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw input_error("Partition: parts must be weakly decreasing");
    }
  }

  static Partition rectangle(long long part, long long copies) {
    if (part < 1 || copies < 0) throw input_error("Partition::rectangle: bad shape");
    return Partition(std::vector<long long>(static_cast<std::size_t>(copies), part));
  }

  const std::vector<long long>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  long long part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  long long size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.to_string();
  }

 private:
  std::vector<long long> parts_;
};

/// Tuple of positive integers (order matters).  Weak compositions are
/// accepted on input; zero parts are dropped during normalization.
class Composition {
 public:
  Composition() = default;

  explicit Composition(std::vector<long long> parts) {
    for (long long p : parts) {
      if (p < 0) throw input_error("Composition: parts must be nonnegative");
      if (p > 0) parts_.push_back(p);
    }
  }

  static Composition rectangle(long long part, long long copies) {
    if (part < 1 || copies < 0) throw input_error("Composition::rectangle: bad shape");
    return Composition(std::vector<long long>(static_cast<std::size_t>(copies), part));
  }

  /// (m^j, 1^r) shapes, the targets of the idempotent criteria.
  static Composition rect_and_ones(long long m, long long j, long long r) {
    std::vector<long long> v(static_cast<std::size_t>(j), m);
    v.insert(v.end(), static_cast<std::size_t>(r), 1);
    return Composition(std::move(v));
  }

  const std::vector<long long>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  long long size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
  }

  Composition concat(const Composition& other) const {
    std::vector<long long> v = parts_;
    v.insert(v.end(), other.parts_.begin(), other.parts_.end());
    return Composition(std::move(v));
  }

  friend bool operator==(const Composition&, const Composition&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const Composition& c) {
    return os << c.to_string();
  }

 private:
  std::vector<long long> parts_;
};

/// Parts of a composition rearranged weakly decreasing.
inline Partition sort_to_partition(const Composition& alpha) {
  std::vector<long long> v = alpha.parts();
  std::sort(v.begin(), v.end(), std::greater<long long>());
  return Partition(std::move(v));
}

/// Conjugate (transposed) Young diagram.
inline Partition transpose(const Partition& lambda) {
  std::vector<long long> cols;
  if (!lambda.empty()) {
    cols.assign(static_cast<std::size_t>(lambda.parts()[0]), 0);
    for (long long part : lambda.parts()) {
      for (long long c = 0; c < part; ++c) ++cols[static_cast<std::size_t>(c)];
    }
  }
  return Partition(std::move(cols));
}

/// Dominance: every prefix sum of mu is <= the matching prefix sum of
/// lambda (shorter tuples padded with zeros).  Requires equal sizes.
inline bool dominated_by(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size())
    throw input_error("dominated_by: partitions must have equal size");
  long long mu_sum = 0, la_sum = 0;
  std::size_t n = std::max(mu.length(), lambda.length());
  for (std::size_t i = 0; i < n; ++i) {
    mu_sum += mu.part(i);
    la_sum += lambda.part(i);
    if (mu_sum > la_sum) return false;
  }
  return true;
}

inline long long gcd_of_partition(const Partition& lambda) {
  if (lambda.empty()) throw input_error("gcd_of_partition: empty partition");
  long long g = 0;
  for (long long p : lambda.parts()) g = std::gcd(g, p);
  return g;
}

}  // namespace skeincalc
