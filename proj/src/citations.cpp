#include "graphk/citations.hpp"

namespace graphk::cite {

const std::string kKpClass = "kp-class";
const std::string kSpiCriterion = "spi-criterion";
const std::string kBowenFranks = "bf-groups";
const std::string kK1Split = "k1-split";
const std::string kKkRow = "kk-row";
const std::string kKKRow = "KK-row";
const std::string kCoeffRow = "coeff-row";
const std::string kCompFull = "comp-full";
const std::string kCompConservative = "comp-conservative";
const std::string kCompFiniteIso = "comp-finite-iso";
const std::string kLiftOnto = "lift-onto";
const std::string kM2HomotopyIff = "m2-homotopy-iff";
const std::string kClassGroups = "class-groups";
const std::string kPdUnitary = "pd-unitary";
const std::string kScaleConvention = "scale-convention";

const std::vector<Anchor>& registry() {
  static const std::vector<Anchor> anchors = {
      {kKpClass,
       "Kirchberg-Phillips / Cuntz-Rordam classification: for finite spi graphs E, "
       "the scaled group (K0(C*(E)), [1]) is a complete isomorphism invariant of C*(E)."},
      {kSpiCriterion,
       "purely infinite simplicity criterion: L(E) and C*(E) are simple purely infinite "
       "iff every cycle of E has an exit, the only hereditary saturated vertex sets are "
       "trivial, and every vertex connects to a cycle."},
      {kBowenFranks,
       "Bowen-Franks groups: BF(E) = Coker(I - A_E^t), BF(E)^v = Coker(I - A_E), with "
       "A_E[v][w] counting edges v -> w."},
      {kK1Split,
       "K1 splitting: 0 -> BF(F) (x) C* -> K1(L(F)) -> ker(I - A_F^t) -> 0 is exact and "
       "splits, since ker(I - A_F^t) is free abelian."},
      {kKkRow,
       "algebraic row: 0 -> BF(E)^v (x) K1(L(F)) -> kk(L(E),L(F)) -> "
       "hom(BF(E),BF(F)) -> 0."},
      {kKKRow,
       "topological row: 0 -> BF(E) (x) ker(I - A_F^t) -> KK(C*(E),C*(F)) -> "
       "hom(BF(E),BF(F)) -> 0."},
      {kCoeffRow,
       "coefficient row: 0 -> BF(E)^v (x) KH1(A) -> kk(L(E),A) -> "
       "hom(BF(E),KH0(A)) -> 0."},
      {kCompFull,
       "comparison fullness: 0 -> BF(E)^v (x) BF(F) (x) C* -> kk(L(E),L(F)) -> "
       "KK(C*(E),C*(F)) -> 0 is exact; completion is full on bivariant classes."},
      {kCompConservative,
       "comparison conservativity: the completion functor from bivariant K-theory of "
       "Leavitt path algebras to KK reflects isomorphisms (its kernel ideal squares "
       "to zero)."},
      {kCompFiniteIso,
       "finiteness criterion: if BF(E) or BF(F) is finite then "
       "kk(L(E),L(F)) -> KK(C*(E),C*(F)) is an isomorphism, since C* is divisible."},
      {kLiftOnto,
       "lifting: completion maps property-(P) *-homomorphisms L(E) -> L(F) onto the "
       "nonzero M2-homotopy classes of C*-maps C*(E) -> C*(F); unital classes lift to "
       "unital maps."},
      {kM2HomotopyIff,
       "homotopy criterion: the completion of a property-(P) *-homomorphism is an "
       "M2-homotopy equivalence of C*-algebras iff the map itself is a polynomial "
       "M2-homotopy equivalence."},
      {kClassGroups,
       "homotopy-class groups: for spi targets, [L(E),A]_{M2} minus zero is a group "
       "isomorphic to kk(L(E),A), and [[C*(E),B]]_{M2} minus zero is isomorphic to "
       "KK(C*(E),B)."},
      {kPdUnitary,
       "duality unitary: a *-homomorphism phi: L(E) -> A corresponds to the class of "
       "1(x)1 - sum_v phi(v)(x)v + sum_e phi(e)(x)e_t^* in the algebra A (x) L(E_t)."},
      {kScaleConvention,
       "scale convention: the distinguished element of BF(E) is the class of the "
       "all-ones vector, i.e. [1] = sum over vertices of [p_v]."},
  };
  return anchors;
}

}  // namespace graphk::cite
