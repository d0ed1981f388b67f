// Two-factor tensor elements over a pair of graphs, enough to express
// and verify the duality unitary attached to a verified generator map.

#ifndef GRAPHK_TENSORELEM_HPP_
#define GRAPHK_TENSORELEM_HPP_

#include <map>
#include <memory>
#include <string>
#include <utility>

#include "graphk/genmap.hpp"
#include "graphk/leavitt.hpp"

namespace graphk {

class TensorElement {
 public:
  TensorElement() = default;
  TensorElement(std::shared_ptr<const Graph> left, std::shared_ptr<const Graph> right)
      : left_(std::move(left)), right_(std::move(right)) {}

  static TensorElement one(std::shared_ptr<const Graph> left,
                           std::shared_ptr<const Graph> right);
  // a (x) b, distributing over the terms of both sides.
  static TensorElement pure(const LeavittElement& a, const LeavittElement& b);

  const std::shared_ptr<const Graph>& left_graph() const { return left_; }
  const std::shared_ptr<const Graph>& right_graph() const { return right_; }
  bool is_zero() const { return terms_.empty(); }

  using Key = std::pair<PathMonomial, PathMonomial>;
  const std::map<Key, GaussianRational>& terms() const { return terms_; }

  void add_term(const Key& k, const GaussianRational& c);

  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator-(const TensorElement& o) const;
  TensorElement operator*(const TensorElement& o) const;
  TensorElement involute() const;
  TensorElement normal_form(size_t step_bound = kDefaultRewriteBound) const;
  bool equivalent(const TensorElement& o) const;

 private:
  std::shared_ptr<const Graph> left_, right_;
  std::map<Key, GaussianRational> terms_;
};

std::string to_string(const TensorElement& x);

struct DualityReport {
  TensorElement unitary;       // 1(x)1 - sum_v phi(v)(x)v + sum_e phi(e)(x)e_t^
  bool is_unitary = false;     // u u^ = 1(x)1 = u^ u by normal forms
  std::string citation;
};

// Builds the duality element of a verified map phi: L(E) -> L(F) inside
// L(F) (x) L(E_t) and checks unitarity.
DualityReport duality_unitary(const GeneratorMap& m);

}  // namespace graphk

#endif  // GRAPHK_TENSORELEM_HPP_
