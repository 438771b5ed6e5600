#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace trisect {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense integer matrix with exact entries, stored row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);
  static IntMatrix from_rows(std::size_t cols, const std::vector<IntVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  std::vector<IntVector> columns() const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVector operator*(const IntVector& v) const;
  IntMatrix operator-() const;

  bool is_zero() const;
  bool operator==(const IntMatrix& rhs) const;
  bool operator!=(const IntMatrix& rhs) const { return !(*this == rhs); }

  // Elementary operations. The two-by-two forms replace (row_i, row_j) by
  // (p*row_i + q*row_j, r*row_i + s*row_j).
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& c);
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& c);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  void combine_rows(std::size_t i, std::size_t j, const Integer& p, const Integer& q,
                    const Integer& r, const Integer& s);
  void combine_cols(std::size_t i, std::size_t j, const Integer& p, const Integer& q,
                    const Integer& r, const Integer& s);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Horizontal block [a | b]; row counts must agree.
IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
/// Vertical block [a ; b]; column counts must agree.
IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b);
/// Block-diagonal direct sum.
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

IntVector add(const IntVector& a, const IntVector& b);
IntVector subtract(const IntVector& a, const IntVector& b);
IntVector scale(const Integer& c, const IntVector& a);
IntVector zero_vector(std::size_t n);
bool is_zero(const IntVector& v);
IntVector to_int_vector(std::initializer_list<long> values);
std::string to_string(const IntVector& v);

/// Floor division and the matching nonnegative remainder for positive divisors.
Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& b);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace trisect
