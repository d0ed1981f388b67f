// Smith normal form over Z and the linear-algebra queries built on it
// (integer kernels, linear Diophantine solving).

#ifndef GRAPHK_SMITH_HPP_
#define GRAPHK_SMITH_HPP_

#include <optional>
#include <vector>

#include "graphk/intmatrix.hpp"

namespace graphk {

// Decomposition u * a * v = s with u, v unimodular and s diagonal,
// diagonal entries >= 0 satisfying d1 | d2 | ... Zeros trail.
// u_inv is maintained alongside u (u * u_inv = identity).
struct SmithNF {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;
  IntMatrix u_inv;

  std::vector<Int> diagonal() const;
  // Number of nonzero diagonal entries (the rank of the input).
  size_t rank() const;
};

// Deterministic: pivots are chosen by smallest nonzero absolute value,
// ties broken in row-major order; sign fixes are applied on the column side.
SmithNF smith_normal_form(const IntMatrix& a);

// Columns form a Z-basis of { x : a x = 0 }.
IntMatrix kernel_basis(const IntMatrix& a);

// One integer solution x of a x = b, if any.
std::optional<std::vector<Int>> solve_linear(const IntMatrix& a,
                                             const std::vector<Int>& b);

}  // namespace graphk

#endif  // GRAPHK_SMITH_HPP_
