#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "skeincalc/errors.hpp"
#include "skeincalc/partition.hpp"

namespace skeincalc {

/// Element of the symmetric group on {0, ..., n-1}, stored in one-line
/// notation: images()[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
      if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v])
        throw input_error("Permutation: images are not a bijection");
      seen[v] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }

  /// Adjacent transposition s_i = (i, i+1), 0-based, for 0 <= i < n-1.
  static Permutation transposition(int n, int i) {
    if (i < 0 || i + 1 >= n) throw input_error("Permutation::transposition: bad index");
    Permutation p = identity(n);
    std::swap(p.images_[i], p.images_[i + 1]);
    return p;
  }

  /// One representative per conjugacy class: cycles of the given type in
  /// decreasing length, consecutively numbered.  (1 2 ... l1)(l1+1 ...) etc.
  static Permutation from_cycle_type(const Partition& lambda) {
    int n = static_cast<int>(lambda.size());
    std::vector<int> img(static_cast<std::size_t>(n));
    int base = 0;
    for (long long len : lambda.parts()) {
      for (int i = 0; i < len; ++i)
        img[static_cast<std::size_t>(base + i)] = base + (i + 1) % static_cast<int>(len);
      base += static_cast<int>(len);
    }
    return Permutation(std::move(img));
  }

  int degree() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[static_cast<std::size_t>(i)] != i) return false;
    return true;
  }

  /// Composition acting left-to-right on points: (a*b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
      throw input_error("Permutation: degree mismatch in composition");
    std::vector<int> img(a.images_.size());
    for (std::size_t i = 0; i < img.size(); ++i)
      img[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
    return Permutation(std::move(img));
  }

  Permutation inverse() const {
    std::vector<int> img(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      img[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return Permutation(std::move(img));
  }

  /// Coxeter length = number of inversions of the one-line word.
  int length() const {
    int inv = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
      for (std::size_t j = i + 1; j < images_.size(); ++j)
        if (images_[i] > images_[j]) ++inv;
    return inv;
  }

  int sign() const { return length() % 2 == 0 ? 1 : -1; }

  Partition cycle_type() const {
    std::vector<char> seen(images_.size(), 0);
    std::vector<long long> lens;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      long long len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
        seen[j] = 1;
        ++len;
      }
      lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<long long>());
    return Partition(std::move(lens));
  }

  /// Cycles as index lists, each starting at its minimal element, ordered by
  /// that minimum.
  std::vector<std::vector<int>> cycles() const {
    std::vector<char> seen(images_.size(), 0);
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::vector<int> cyc;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
        seen[j] = 1;
        cyc.push_back(static_cast<int>(j));
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  /// Reduced word in adjacent transpositions, built by bubble-sorting the
  /// one-line word at the first descent.  Deterministic, length == length().
  std::vector<int> reduced_word() const {
    std::vector<int> word;
    std::vector<int> w = images_;
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] > w[i + 1]) {
          std::swap(w[i], w[i + 1]);
          word.push_back(static_cast<int>(i));
          progress = true;
          break;
        }
      }
    }
    std::reverse(word.begin(), word.end());
    return word;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i) s += " ";
      s += std::to_string(images_[i] + 1);
    }
    return s + "]";
  }

  friend std::ostream& operator<<(std::ostream& os, const Permutation& p) {
    return os << p.to_string();
  }

 private:
  std::vector<int> images_;
};

}  // namespace skeincalc
