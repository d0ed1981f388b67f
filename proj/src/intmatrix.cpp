#include "graphk/intmatrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace graphk {

IntMatrix::IntMatrix(size_t rows, size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw std::invalid_argument("IntMatrix: entry count does not match dimensions");
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  size_t m = rows.size();
  size_t n = m == 0 ? 0 : rows[0].size();
  IntMatrix a(m, n);
  for (size_t i = 0; i < m; ++i) {
    if (rows[i].size() != n)
      throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
    for (size_t j = 0; j < n; ++j) a.at(i, j) = rows[i][j];
  }
  return a;
}

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix a(n, n);
  for (size_t i = 0; i < n; ++i) a.at(i, i) = 1;
  return a;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::vector<Int> IntMatrix::column(size_t j) const {
  std::vector<Int> c(rows_);
  for (size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

std::vector<Int> IntMatrix::row(size_t i) const {
  std::vector<Int> r(cols_);
  for (size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

IntMatrix IntMatrix::hstack(const IntMatrix& b) const {
  if (rows_ != b.rows_)
    throw std::invalid_argument("IntMatrix::hstack: row count mismatch");
  IntMatrix r(rows_, cols_ + b.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (size_t j = 0; j < b.cols_; ++j) r.at(i, cols_ + j) = b.at(i, j);
  }
  return r;
}

void IntMatrix::swap_rows(size_t i, size_t j) {
  if (i == j) return;
  for (size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(size_t i, size_t j) {
  if (i == j) return;
  for (size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::add_row(size_t i, size_t j, const Int& c) {
  for (size_t k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMatrix::add_col(size_t i, size_t j, const Int& c) {
  for (size_t k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

void IntMatrix::negate_row(size_t i) {
  for (size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::negate_col(size_t j) {
  for (size_t k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("IntMatrix: dimension mismatch in product");
  IntMatrix r(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (size_t j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("IntMatrix: dimension mismatch in difference");
  IntMatrix r(a.rows_, a.cols_);
  for (size_t i = 0; i < a.entries_.size(); ++i)
    r.entries_[i] = a.entries_[i] - b.entries_[i];
  return r;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<Int> mat_vec(const IntMatrix& a, const std::vector<Int>& v) {
  if (v.size() != a.cols())
    throw std::invalid_argument("mat_vec: dimension mismatch");
  std::vector<Int> r(a.rows(), Int(0));
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r[i] += a.at(i, j) * v[j];
  return r;
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("determinant: matrix not square");
  size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int sign = 1;
  Int prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num / prev;  // Bareiss: division is exact
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

}  // namespace graphk
