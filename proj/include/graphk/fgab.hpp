// Finitely generated abelian groups in invariant-factor normal form,
// elements in canonical coordinates, and the hom / tensor calculus.

#ifndef GRAPHK_FGAB_HPP_
#define GRAPHK_FGAB_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graphk/intmatrix.hpp"
#include "graphk/smith.hpp"

namespace graphk {

// A presentation Z^ambient / column-span(matrix), kept so classes of
// ambient vectors can be computed after the fact.
struct Presentation {
  IntMatrix matrix;
  SmithNF snf;

  size_t ambient() const { return matrix.rows(); }
};

// Isomorphism-invariant data: free rank and invariant factors
// d1 | d2 | ... (each >= 2, ascending). Two values are isomorphic iff
// these coincide. Canonical element coordinates list the free part
// first, then one coordinate per torsion factor, reduced mod d_i.
class FgAb {
 public:
  FgAb() = default;
  FgAb(size_t free_rank, std::vector<Int> torsion);

  static FgAb free(size_t rank) { return FgAb(rank, {}); }
  static FgAb zero() { return FgAb(0, {}); }
  static FgAb cyclic(const Int& n);  // Z/n for n >= 2, Z for n == 0

  size_t free_rank() const { return free_rank_; }
  const std::vector<Int>& torsion() const { return torsion_; }
  size_t coord_count() const { return free_rank_ + torsion_.size(); }

  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  bool is_torsion_free() const { return torsion_.empty(); }
  // Order of the group; nullopt when infinite.
  std::optional<Int> order() const;

  const std::shared_ptr<const Presentation>& presentation() const {
    return pres_;
  }
  void set_presentation(std::shared_ptr<const Presentation> p) {
    pres_ = std::move(p);
  }

  // Reduces a raw coordinate vector into canonical range.
  std::vector<Int> reduce(std::vector<Int> coords) const;

  friend bool operator==(const FgAb& a, const FgAb& b) {
    return a.free_rank_ == b.free_rank_ && a.torsion_ == b.torsion_;
  }
  friend bool operator!=(const FgAb& a, const FgAb& b) { return !(a == b); }

 private:
  size_t free_rank_ = 0;
  std::vector<Int> torsion_;
  std::shared_ptr<const Presentation> pres_;
};

struct GroupElement {
  FgAb owner;
  std::vector<Int> coords;

  bool is_zero() const;
};

// The divisible group (C*)^rank, tracked symbolically by rank alone.
struct DivisiblePower {
  size_t rank = 0;

  bool is_trivial() const { return rank == 0; }
  friend bool operator==(const DivisiblePower& a, const DivisiblePower& b) {
    return a.rank == b.rank;
  }
};

// Rewrites a list of cyclic orders (each >= 1) into an invariant-factor
// chain by repeated (a, b) -> (gcd, lcm).
std::vector<Int> canonicalize_torsion(std::vector<Int> factors);

FgAb cokernel(const IntMatrix& a);

// Canonical class of an ambient vector in a group with presentation.
GroupElement project_element(const FgAb& g, const std::vector<Int>& v);

// An ambient vector representing the element with the given canonical
// coordinates (a section of project_element).
std::vector<Int> ambient_lift(const FgAb& g, const std::vector<Int>& coords);

FgAb hom_group(const FgAb& g, const FgAb& h);
FgAb tensor_group(const FgAb& g, const FgAb& h);
DivisiblePower tensor_with_cstar(const FgAb& g);
FgAb direct_sum(const FgAb& g, const FgAb& h);

// Additive order of an element: nullopt when infinite.
std::optional<Int> element_order(const FgAb& g, const std::vector<Int>& coords);

// Display grammar: `0`, `Z`, `Z^r`, `Z/d` joined by ` + `, free part
// first, torsion ascending. DivisiblePower shows as `(C*)^r`.
std::string to_string(const FgAb& g);
std::string to_string(const DivisiblePower& d);
FgAb parse_group_literal(const std::string& text);

// Conversion of the invariant factors into prime-power cyclic orders
// (primary decomposition), ascending, and the corresponding display.
std::vector<Int> primary_factors(const FgAb& g);
std::string to_string_primary(const FgAb& g);

}  // namespace graphk

#endif  // GRAPHK_FGAB_HPP_
