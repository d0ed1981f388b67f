#include "graphk/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphk {

std::vector<Int> SmithNF::diagonal() const {
  size_t k = std::min(s.rows(), s.cols());
  std::vector<Int> d(k);
  for (size_t i = 0; i < k; ++i) d[i] = s.at(i, i);
  return d;
}

size_t SmithNF::rank() const {
  size_t r = 0;
  for (const Int& d : diagonal())
    if (d != 0) ++r;
  return r;
}

namespace {

// Locate the entry of smallest nonzero absolute value in s[t.., t..],
// scanning in row-major order. Returns false if the block is zero.
bool find_pivot(const IntMatrix& s, size_t t, size_t& pi, size_t& pj) {
  bool found = false;
  Int best = 0;
  for (size_t i = t; i < s.rows(); ++i) {
    for (size_t j = t; j < s.cols(); ++j) {
      const Int& e = s.at(i, j);
      if (e == 0) continue;
      Int a = abs(e);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

struct Worker {
  IntMatrix s, u, u_inv, v;

  explicit Worker(const IntMatrix& a)
      : s(a),
        u(IntMatrix::identity(a.rows())),
        u_inv(IntMatrix::identity(a.rows())),
        v(IntMatrix::identity(a.cols())) {}

  // Elementary operations applied consistently: a row operation R on s is
  // mirrored as u <- R u and u_inv <- u_inv R^{-1}; a column operation C
  // gives v <- v C.
  void swap_rows(size_t i, size_t j) {
    s.swap_rows(i, j);
    u.swap_rows(i, j);
    u_inv.swap_cols(i, j);
  }
  void swap_cols(size_t i, size_t j) {
    s.swap_cols(i, j);
    v.swap_cols(i, j);
  }
  void add_row(size_t i, size_t j, const Int& c) {  // row i += c * row j
    s.add_row(i, j, c);
    u.add_row(i, j, c);
    u_inv.add_col(j, i, -c);
  }
  void add_col(size_t i, size_t j, const Int& c) {  // col i += c * col j
    s.add_col(i, j, c);
    v.add_col(i, j, c);
  }
  void negate_col(size_t j) {
    s.negate_col(j);
    v.negate_col(j);
  }

  void run() {
    size_t t = 0;
    size_t bound = std::min(s.rows(), s.cols());
    while (t < bound) {
      size_t pi, pj;
      if (!find_pivot(s, t, pi, pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      for (;;) {
        if (!clear_cross(t)) continue;  // pivot shrank, re-clear
        if (fix_divisibility(t)) break;
      }
      if (s.at(t, t) < 0) negate_col(t);
      ++t;
    }
  }

  // Clears row t and column t against the pivot. Returns false when a
  // nonzero remainder became the new (smaller) pivot and clearing must
  // restart.
  bool clear_cross(size_t t) {
    for (size_t i = t + 1; i < s.rows(); ++i) {
      if (s.at(i, t) == 0) continue;
      Int q = s.at(i, t) / s.at(t, t);
      if (q != 0) add_row(i, t, -q);
      if (s.at(i, t) != 0) {  // remainder strictly smaller than pivot
        swap_rows(t, i);
        return false;
      }
    }
    for (size_t j = t + 1; j < s.cols(); ++j) {
      if (s.at(t, j) == 0) continue;
      Int q = s.at(t, j) / s.at(t, t);
      if (q != 0) add_col(j, t, -q);
      if (s.at(t, j) != 0) {
        swap_cols(t, j);
        return false;
      }
    }
    return true;
  }

  // Enforces pivot | remaining block. On violation, folds the offending
  // row into row t so the next clearing pass shrinks the pivot to a gcd.
  bool fix_divisibility(size_t t) {
    for (size_t i = t + 1; i < s.rows(); ++i)
      for (size_t j = t + 1; j < s.cols(); ++j)
        if (s.at(i, j) % s.at(t, t) != 0) {
          add_row(t, i, Int(1));
          return false;
        }
    return true;
  }
};

}  // namespace

SmithNF smith_normal_form(const IntMatrix& a) {
  Worker w(a);
  w.run();
  return SmithNF{std::move(w.u), std::move(w.s), std::move(w.v),
                 std::move(w.u_inv)};
}

IntMatrix kernel_basis(const IntMatrix& a) {
  SmithNF nf = smith_normal_form(a);
  size_t n = a.cols();
  std::vector<size_t> free_cols;
  size_t k = std::min(a.rows(), n);
  for (size_t j = 0; j < n; ++j)
    if (j >= k || nf.s.at(j, j) == 0) free_cols.push_back(j);
  IntMatrix basis(n, free_cols.size());
  for (size_t c = 0; c < free_cols.size(); ++c)
    for (size_t i = 0; i < n; ++i) basis.at(i, c) = nf.v.at(i, free_cols[c]);
  return basis;
}

std::optional<std::vector<Int>> solve_linear(const IntMatrix& a,
                                             const std::vector<Int>& b) {
  if (b.size() != a.rows())
    throw std::invalid_argument("solve_linear: dimension mismatch");
  SmithNF nf = smith_normal_form(a);
  std::vector<Int> c = mat_vec(nf.u, b);
  size_t k = std::min(a.rows(), a.cols());
  std::vector<Int> y(a.cols(), Int(0));
  for (size_t i = 0; i < c.size(); ++i) {
    const Int d = i < k ? nf.s.at(i, i) : Int(0);
    if (d == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (c[i] % d != 0) return std::nullopt;
      y[i] = c[i] / d;
    }
  }
  return mat_vec(nf.v, y);
}

}  // namespace graphk
