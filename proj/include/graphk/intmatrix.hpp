// Dense matrices over Z with arbitrary-precision entries, row-major.

#ifndef GRAPHK_INTMATRIX_HPP_
#define GRAPHK_INTMATRIX_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "graphk/bigint.hpp"

namespace graphk {

class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}
  IntMatrix(size_t rows, size_t cols, std::vector<Int> entries);

  // Convenience constructor from nested initializer data.
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
  static IntMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& at(size_t i, size_t j) { return entries_[i * cols_ + j]; }
  const Int& at(size_t i, size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<Int>& entries() const { return entries_; }

  IntMatrix transpose() const;
  std::vector<Int> column(size_t j) const;
  std::vector<Int> row(size_t i) const;

  // Horizontal concatenation [*this | b]; row counts must agree.
  IntMatrix hstack(const IntMatrix& b) const;

  void swap_rows(size_t i, size_t j);
  void swap_cols(size_t i, size_t j);
  // row i += c * row j
  void add_row(size_t i, size_t j, const Int& c);
  // col i += c * col j
  void add_col(size_t i, size_t j, const Int& c);
  void negate_row(size_t i);
  void negate_col(size_t j);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  size_t rows_, cols_;
  std::vector<Int> entries_;
};

std::vector<Int> mat_vec(const IntMatrix& a, const std::vector<Int>& v);

// Exact determinant (square input), fraction-free Bareiss elimination.
Int determinant(const IntMatrix& a);

}  // namespace graphk

#endif  // GRAPHK_INTMATRIX_HPP_
