// K-theoretic invariants of graph algebras: Bowen-Franks groups, K-theory
// of the path algebra and its completion, the extension groups relating
// algebraic and topological bivariant K-theory, and the finiteness
// criterion for the comparison map to be an isomorphism.

#ifndef GRAPHK_INVARIANTS_HPP_
#define GRAPHK_INVARIANTS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "graphk/fgab.hpp"
#include "graphk/graph.hpp"

namespace graphk {

// A group together with a distinguished element (the class of the unit).
struct ScaledGroup {
  FgAb group;
  GroupElement scale;

  std::string scale_description() const;
};

enum class KFlavor { Algebraic, Topological };

struct KTheoryData {
  KFlavor flavor;
  ScaledGroup k0;
  FgAb k1_free;                // ker(I - A^t), torsion free
  DivisiblePower k1_divisible; // BF (x) C*, algebraic flavor only
};

// A finitely generated part plus a symbolic divisible part.
struct MixedGroup {
  FgAb fg;
  DivisiblePower divisible;

  bool is_trivial() const { return fg.is_trivial() && divisible.is_trivial(); }
  friend bool operator==(const MixedGroup& a, const MixedGroup& b) {
    return a.fg == b.fg && a.divisible == b.divisible;
  }
};

std::string to_string(const MixedGroup& m);

enum class SplitState { Yes, Unknown };

// A short exact sequence 0 -> sub -> total -> quotient -> 0 reported by
// its outer terms. `total` is only filled when it is forced: the
// quotient is torsion free (so the sequence splits) or the sub is
// trivial. Unforced extension classes are never guessed.
struct ExtensionData {
  MixedGroup sub;
  FgAb quotient;
  std::optional<MixedGroup> total;
  SplitState split = SplitState::Unknown;
  std::vector<std::string> citations;
  std::vector<std::string> notes;
};

ScaledGroup bowen_franks(const Graph& g);
FgAb bowen_franks_dual(const Graph& g);

KTheoryData k_theory(const Graph& g, KFlavor flavor);

// Homomorphism classes L(e) -> L(f) in algebraic bivariant K-theory:
// 0 -> BF(e)^v (x) K1(L(f)) -> kk(L(e),L(f)) -> hom(BF(e),BF(f)) -> 0.
ExtensionData kk_extension(const Graph& e, const Graph& f);

// The topological counterpart:
// 0 -> BF(e) (x) ker(I-A_f^t) -> KK(C*(e),C*(f)) -> hom(BF(e),BF(f)) -> 0.
ExtensionData KK_extension(const Graph& e, const Graph& f);

// Coefficient version against a user-supplied pair (g0, g1) standing for
// the homotopy K-theory of the coefficient algebra.
ExtensionData kk_with_coefficients(const Graph& e, const FgAb& g0, const FgAb& g1);

// Kernel of the comparison map kk(L(e),L(f)) -> KK(C*(e),C*(f)):
// (C*)^r with r = rank(BF(e)^v (x) BF(f)).
DivisiblePower comp_kernel(const Graph& e, const Graph& f);

struct CompIsoReport {
  bool is_iso;
  DivisiblePower kernel;
  FgAb bf_e, bf_f;
  std::vector<std::string> citations;
  std::string text;
};

CompIsoReport comp_is_iso(const Graph& e, const Graph& f);

}  // namespace graphk

#endif  // GRAPHK_INVARIANTS_HPP_
