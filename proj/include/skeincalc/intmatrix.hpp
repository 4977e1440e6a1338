#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "skeincalc/errors.hpp"

namespace skeincalc {

/// Dense matrix of exact 64-bit integers.  All arithmetic is
/// overflow-checked; the matrices in this project are tiny (rank parameters
/// below ~25), so a checked failure indicates a logic bug, not a resource
/// limit.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols, long long fill = 0)
      : rows_(rows), cols_(cols),
        entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {
    if (rows < 0 || cols < 0) throw input_error("IntMatrix: negative dimensions");
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_columns(int rows, const std::vector<std::vector<long long>>& cols) {
    IntMatrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) {
      if (static_cast<int>(cols[static_cast<std::size_t>(j)].size()) != rows)
        throw input_error("IntMatrix::from_columns: ragged column");
      for (int i = 0; i < rows; ++i) m(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  long long& operator()(int i, int j) {
    return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)];
  }
  long long operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)];
  }

  std::vector<long long> column(int j) const {
    std::vector<long long> out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) out[static_cast<std::size_t>(i)] = (*this)(i, j);
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  static long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw consistency_error("IntMatrix: multiply overflow");
    return r;
  }
  static long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw consistency_error("IntMatrix: add overflow");
    return r;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw input_error("IntMatrix: dimension mismatch in product");
    IntMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        long long aik = a(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < b.cols_; ++j)
          out(i, j) = checked_add(out(i, j), checked_mul(aik, b(k, j)));
      }
    return out;
  }

  std::vector<long long> apply(const std::vector<long long>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw input_error("IntMatrix::apply: size mismatch");
    std::vector<long long> out(static_cast<std::size_t>(rows_), 0);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        out[static_cast<std::size_t>(i)] = checked_add(
            out[static_cast<std::size_t>(i)], checked_mul((*this)(i, j), v[static_cast<std::size_t>(j)]));
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (int i = 0; i < rows_; ++i) {
      s += "[";
      for (int j = 0; j < cols_; ++j) {
        if (j) s += " ";
        s += std::to_string((*this)(i, j));
      }
      s += "]\n";
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    return os << m.to_string();
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<long long> entries_;
};

/// Smith normal form U * M * V = D with unimodular witnesses and their
/// inverses.  Diagonal entries are nonnegative and form a divisibility
/// chain d1 | d2 | ...
struct SnfResult {
  IntMatrix U, V, D;
  IntMatrix Uinv, Vinv;

  int rank() const {
    int r = 0;
    int n = std::min(D.rows(), D.cols());
    for (int i = 0; i < n; ++i)
      if (D(i, i) != 0) ++r;
    return r;
  }

  /// Diagonal entries > 1: the invariant factors of the torsion of
  /// coker(M).
  std::vector<long long> torsion_invariants() const {
    std::vector<long long> out;
    int n = std::min(D.rows(), D.cols());
    for (int i = 0; i < n; ++i)
      if (D(i, i) > 1) out.push_back(D(i, i));
    return out;
  }
};

namespace snf_detail {

inline void swap_rows(IntMatrix& m, int a, int b) {
  for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
inline void swap_cols(IntMatrix& m, int a, int b) {
  for (int i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row[a] += c * row[b]
inline void add_row(IntMatrix& m, int a, int b, long long c) {
  for (int j = 0; j < m.cols(); ++j)
    m(a, j) = IntMatrix::checked_add(m(a, j), IntMatrix::checked_mul(c, m(b, j)));
}
// col[a] += c * col[b]
inline void add_col(IntMatrix& m, int a, int b, long long c) {
  for (int i = 0; i < m.rows(); ++i)
    m(i, a) = IntMatrix::checked_add(m(i, a), IntMatrix::checked_mul(c, m(i, b)));
}
inline void negate_row(IntMatrix& m, int a) {
  for (int j = 0; j < m.cols(); ++j) m(a, j) = -m(a, j);
}
inline void negate_col(IntMatrix& m, int a) {
  for (int i = 0; i < m.rows(); ++i) m(i, a) = -m(i, a);
}

}  // namespace snf_detail

/// Smallest-|pivot| elimination with deterministic row-major pivot scan.
/// The identity U*M*V == D is re-verified before returning.
inline SnfResult smith_normal_form(const IntMatrix& m) {
  using namespace snf_detail;
  if (m.rows() == 0 || m.cols() == 0) throw input_error("smith_normal_form: empty matrix");
  SnfResult res;
  res.D = m;
  res.U = IntMatrix::identity(m.rows());
  res.Uinv = IntMatrix::identity(m.rows());
  res.V = IntMatrix::identity(m.cols());
  res.Vinv = IntMatrix::identity(m.cols());
  IntMatrix& d = res.D;

  auto row_op = [&](int a, int b, long long c) {
    add_row(d, a, b, c);
    add_row(res.U, a, b, c);
    add_col(res.Uinv, b, a, -c);
  };
  auto col_op = [&](int a, int b, long long c) {
    add_col(d, a, b, c);
    add_col(res.V, a, b, c);
    add_row(res.Vinv, b, a, -c);
  };
  auto row_swap = [&](int a, int b) {
    if (a == b) return;
    swap_rows(d, a, b);
    swap_rows(res.U, a, b);
    swap_cols(res.Uinv, a, b);
  };
  auto col_swap = [&](int a, int b) {
    if (a == b) return;
    swap_cols(d, a, b);
    swap_cols(res.V, a, b);
    swap_rows(res.Vinv, a, b);
  };
  auto row_negate = [&](int a) {
    negate_row(d, a);
    negate_row(res.U, a);
    negate_col(res.Uinv, a);
  };

  int n = std::min(m.rows(), m.cols());
  for (int k = 0; k < n; ++k) {
    for (;;) {
      // smallest nonzero |entry| in the trailing block, row-major tie-break
      int pi = -1, pj = -1;
      for (int i = k; i < d.rows(); ++i)
        for (int j = k; j < d.cols(); ++j)
          if (d(i, j) != 0 &&
              (pi < 0 || std::llabs(d(i, j)) < std::llabs(d(pi, pj))))
            pi = i, pj = j;
      if (pi < 0) goto done;
      row_swap(k, pi);
      col_swap(k, pj);
      bool clean = true;
      for (int i = k + 1; i < d.rows(); ++i) {
        if (d(i, k) == 0) continue;
        long long q = d(i, k) / d(k, k);
        if (q != 0) row_op(i, k, -q);
        if (d(i, k) != 0) clean = false;
      }
      for (int j = k + 1; j < d.cols(); ++j) {
        if (d(k, j) == 0) continue;
        long long q = d(k, j) / d(k, k);
        if (q != 0) col_op(j, k, -q);
        if (d(k, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility fix: fold in any trailing row containing an entry the
      // pivot does not divide, then redo the elimination
      bool fixed = true;
      for (int i = k + 1; i < d.rows() && fixed; ++i)
        for (int j = k + 1; j < d.cols() && fixed; ++j)
          if (d(i, j) % d(k, k) != 0) {
            row_op(k, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
    if (d(k, k) < 0) row_negate(k);
  }
done:
  if (res.U * m * res.V != res.D)
    throw consistency_error("smith_normal_form: witness identity failed");
  int nn = std::min(d.rows(), d.cols());
  for (int k = 0; k + 1 < nn; ++k) {
    if (d(k + 1, k + 1) != 0 && (d(k, k) == 0 || d(k + 1, k + 1) % d(k, k) != 0))
      throw consistency_error("smith_normal_form: divisibility chain failed");
  }
  return res;
}

/// Basis of the integer kernel { x : M x = 0 }, read off the columns of V
/// whose diagonal entry vanishes.  Because V is unimodular the kernel
/// lattice comes out saturated.
inline std::vector<std::vector<long long>> kernel_basis(const IntMatrix& m) {
  SnfResult s = smith_normal_form(m);
  std::vector<std::vector<long long>> out;
  int n = std::min(m.rows(), m.cols());
  for (int j = 0; j < m.cols(); ++j) {
    if (j < n && s.D(j, j) != 0) continue;
    out.push_back(s.V.column(j));
  }
  return out;
}

/// Basis of the saturation of the column span of M inside Z^rows: the first
/// rank-many columns of U^{-1}.
inline std::vector<std::vector<long long>> saturation_basis(const IntMatrix& m) {
  SnfResult s = smith_normal_form(m);
  int r = s.rank();
  std::vector<std::vector<long long>> out;
  out.reserve(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) out.push_back(s.Uinv.column(j));
  return out;
}

/// Integral solution x of M x = b, if one exists.
inline std::optional<std::vector<long long>> solve_integral(const SnfResult& s,
                                                            const std::vector<long long>& b) {
  std::vector<long long> y = s.U.apply(b);
  std::vector<long long> xp(static_cast<std::size_t>(s.D.cols()), 0);
  int n = std::min(s.D.rows(), s.D.cols());
  for (int i = 0; i < s.D.rows(); ++i) {
    long long yi = y[static_cast<std::size_t>(i)];
    if (i < n && s.D(i, i) != 0) {
      if (yi % s.D(i, i) != 0) return std::nullopt;
      xp[static_cast<std::size_t>(i)] = yi / s.D(i, i);
    } else if (yi != 0) {
      return std::nullopt;
    }
  }
  return s.V.apply(xp);
}

inline bool in_column_span(const SnfResult& s, const std::vector<long long>& b) {
  return solve_integral(s, b).has_value();
}

/// Rank over Q by Bareiss fraction-free elimination; deliberately
/// independent of the Smith normal form code so the two can cross-check
/// each other.  Also returns |det| of the pivot submatrix, a multiple of
/// the exponent of the torsion of coker(M).
struct FractionFreeResult {
  int rank = 0;
  long long minor_abs = 1;  // |det| of the selected rank x rank submatrix
};

inline FractionFreeResult fraction_free_eliminate(IntMatrix a) {
  FractionFreeResult out;
  long long prev = 1;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    snf_detail::swap_rows(a, r, pivot);
    for (int i = r + 1; i < a.rows(); ++i) {
      for (int j = c + 1; j < a.cols(); ++j) {
        long long num = IntMatrix::checked_add(
            IntMatrix::checked_mul(a(r, c), a(i, j)),
            -IntMatrix::checked_mul(a(i, c), a(r, j)));
        a(i, j) = num / prev;  // Bareiss: division is exact
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    out.minor_abs = std::llabs(prev);
    ++r;
  }
  out.rank = r;
  return out;
}

}  // namespace skeincalc
