// Simple pure infiniteness of graphs, classification of their algebras
// by the scaled Bowen-Franks group, induced maps on K0, and the
// lifting / homotopy-class reports.

#ifndef GRAPHK_CLASSIFY_HPP_
#define GRAPHK_CLASSIFY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "graphk/genmap.hpp"
#include "graphk/invariants.hpp"

namespace graphk {

inline constexpr size_t kDefaultCycleCap = 1000000;

struct SpiReport {
  bool condition_L = false;                // every cycle has an exit
  bool hereditary_saturated_trivial = false;
  bool every_vertex_to_cycle = false;
  bool spi = false;                        // conjunction of the three
  // Witnesses, present exactly when the corresponding flag is false.
  std::optional<std::vector<std::string>> cycle_without_exit;  // edge ids
  std::optional<std::vector<std::string>> nontrivial_subset;   // vertex names
  std::optional<std::string> stranded_vertex;
  std::string citation;
};

// Requires a nonempty regular graph. Condition (L) enumerates simple
// cycles (edge-disjoint parallels counted separately) up to `cycle_cap`
// and fails loudly past the cap.
SpiReport spi_check(const Graph& g, size_t cycle_cap = kDefaultCycleCap);

void require_spi(const Graph& g, const std::string& who);

enum class Verdict { Isomorphic, NotIsomorphic, Unknown };

// Isomorphism of scaled groups in canonical coordinates: the element
// with coordinates c maps to matrix * c.
struct ScaledIsoCertificate {
  IntMatrix matrix;
};

struct ClassifyVerdict {
  Verdict answer = Verdict::Unknown;
  std::optional<ScaledIsoCertificate> certificate;  // present when Isomorphic
  std::string reason;
  std::vector<std::string> citations;
};

struct ClassifyOptions {
  Int order_bound = 10000;  // torsion orders above this give Unknown
  unsigned long long budget = 10000000;  // automorphism candidates tried
};

// Decides whether some isomorphism BF(e) -> BF(f) carries scale to
// scale. Requires both graphs spi (the invariant is only complete
// there). The free parts are handled constructively (unimodular orbits
// of integer vectors are classified by their content), the torsion part
// by exhaustive search over automorphisms within the configured bounds;
// Unknown is returned only when a bound is exceeded.
ClassifyVerdict kp_classify(const Graph& e, const Graph& f,
                            const ClassifyOptions& opts = {});

// Machine check of a certificate: matrix defines a homomorphism, is
// bijective, and maps scale_e to scale_f.
bool verify_scaled_iso(const FgAb& ge, const std::vector<Int>& scale_e,
                       const FgAb& gf, const std::vector<Int>& scale_f,
                       const IntMatrix& matrix);

// Induced map BF(e) -> BF(f) of a verified generator map whose vertex
// images normalize to orthogonal sums of monomials p p*. Partial:
// unsupported idempotent shapes are reported, not guessed.
struct K0Map {
  bool supported = false;
  std::string unsupported_reason;
  IntMatrix ambient;    // |F^0| x |E^0|, counts ranges of the p's
  IntMatrix canonical;  // canonical coordinates of generator images
  FgAb source, target;  // BF(e), BF(f), presentations retained
};

K0Map k0_of_generator_map(const GeneratorMap& m);

enum class Tristate { Yes, No, Unknown };

struct HomotopyReport {
  Tristate answer = Tristate::Unknown;
  std::string explanation;
  std::vector<std::string> citations;
};

// Decides whether a verified map is an M2-homotopy equivalence, in the
// finite Bowen-Franks case: there K1 vanishes and the comparison
// functor is conservative, so bijectivity of the induced K0 map
// decides. Infinite groups yield Unknown by design.
HomotopyReport is_homotopy_equivalence(const GeneratorMap& m);

struct LiftReport {
  ExtensionData cstar_classes;    // [[C*(e),C*(f)]]_{M2} minus zero
  ExtensionData leavitt_classes;  // [L(e),L(f)]_{M2} minus zero
  DivisiblePower fiber;           // kernel of completion between them
  bool unique_lifting = false;    // completion bijective on classes
  std::vector<std::string> citations;
};

LiftReport lift_report(const Graph& e, const Graph& f);

}  // namespace graphk

#endif  // GRAPHK_CLASSIFY_HPP_
