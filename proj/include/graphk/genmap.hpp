// Generator-level specifications of *-homomorphisms between Leavitt
// path algebras, and their verification against the defining relations.

#ifndef GRAPHK_GENMAP_HPP_
#define GRAPHK_GENMAP_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graphk/leavitt.hpp"

namespace graphk {

struct GeneratorMap {
  std::shared_ptr<const Graph> source;
  std::shared_ptr<const Graph> target;
  std::vector<LeavittElement> vertex_images;  // indexed by source vertex
  std::vector<LeavittElement> edge_images;    // indexed by source edge
  bool unital_claim = false;
  std::optional<LeavittElement> p_witness;
  bool verified = false;

  // phi(1) = sum of the vertex images.
  LeavittElement image_of_one() const;
};

struct RelationCheck {
  std::string name;
  bool ok;
  std::string residue;  // normal form of lhs - rhs when the check failed
};

struct HomReport {
  bool verified = false;
  bool unital = false;
  std::optional<bool> property_p;  // set iff a witness was supplied
  std::vector<RelationCheck> checks;
  std::vector<std::string> notes;

  std::vector<const RelationCheck*> failures() const;
};

// Checks, by normal-form equality in the target: vertex images are
// orthogonal self-adjoint idempotents; edge images are compatible with
// their source and range projections; e* f = delta r(e); the range
// relation at every vertex; unitality iff claimed; and the isometry
// witness when provided (t in phi(1) L(F) with t* t = 1). Sets
// m.verified on full success.
HomReport verify_hom(GeneratorMap& m);

// The *-homomorphism e -> u phi(e) for a unitary u over phi(1)
// (u* u = u u* = phi(1) is checked). The twisted map is re-verified.
GeneratorMap twist_hom(const GeneratorMap& m, const LeavittElement& u);

// JSON format: {"source": <graph or path>, "target": <graph or path>,
// "vertex_images": {name: expr}, "edge_images": {name: expr},
// "unital": bool (optional), "p_witness": expr (optional)}.
GeneratorMap parse_generator_map(const std::string& json_text);

std::string serialize_generator_map(const GeneratorMap& m);

}  // namespace graphk

#endif  // GRAPHK_GENMAP_HPP_
