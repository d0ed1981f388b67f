#include "graphk/tensorelem.hpp"

#include <deque>

#include "graphk/citations.hpp"
#include "graphk/error.hpp"

namespace graphk {

TensorElement TensorElement::one(std::shared_ptr<const Graph> left,
                                 std::shared_ptr<const Graph> right) {
  return pure(LeavittElement::one(left), LeavittElement::one(right));
}

TensorElement TensorElement::pure(const LeavittElement& a, const LeavittElement& b) {
  TensorElement t(a.graph(), b.graph());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) t.add_term({ma, mb}, ca * cb);
  return t;
}

void TensorElement::add_term(const Key& k, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  TensorElement r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
  TensorElement r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
  TensorElement r(left_, right_);
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      auto lp = monomial_product(*left_, ka.first, kb.first);
      if (!lp) continue;
      auto rp = monomial_product(*right_, ka.second, kb.second);
      if (!rp) continue;
      r.add_term({*lp, *rp}, ca * cb);
    }
  return r;
}

TensorElement TensorElement::involute() const {
  TensorElement r(left_, right_);
  for (const auto& [k, c] : terms_)
    r.add_term({PathMonomial{k.first.q, k.first.p},
                PathMonomial{k.second.q, k.second.p}},
               c.conj());
  return r;
}

TensorElement TensorElement::normal_form(size_t step_bound) const {
  TensorElement out(left_, right_);
  std::deque<std::pair<Key, GaussianRational>> work(terms_.begin(), terms_.end());
  size_t steps = 0;
  auto bump = [&]() {
    if (++steps > step_bound)
      throw LimitError("tensor normal_form: rewrite step bound exceeded");
  };
  while (!work.empty()) {
    auto [k, c] = work.front();
    work.pop_front();
    if (c.is_zero()) continue;
    if (auto ex = r2_step(*left_, k.first)) {
      bump();
      for (const auto& [mono, sign] : *ex)
        work.emplace_back(Key{mono, k.second}, sign > 0 ? c : -c);
      continue;
    }
    if (auto ex = r2_step(*right_, k.second)) {
      bump();
      for (const auto& [mono, sign] : *ex)
        work.emplace_back(Key{k.first, mono}, sign > 0 ? c : -c);
      continue;
    }
    out.add_term(k, c);
  }
  return out;
}

bool TensorElement::equivalent(const TensorElement& o) const {
  return (*this - o).normal_form().is_zero();
}

std::string to_string(const TensorElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    bool neg = c.re < 0 || (c.re == 0 && c.im < 0);
    GaussianRational a = neg ? -c : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (!a.is_one()) out += to_string(a) + ".";
    out += to_string(*x.left_graph(), k.first) + " (x) " +
           to_string(*x.right_graph(), k.second);
    first = false;
  }
  return out;
}

DualityReport duality_unitary(const GeneratorMap& m) {
  if (!m.verified)
    throw DataError("duality_unitary: map has not been verified");
  auto et = std::make_shared<Graph>(transpose_graph(*m.source));
  const auto& target = m.target;

  TensorElement u = TensorElement::one(target, et);
  for (size_t v = 0; v < m.source->num_vertices(); ++v)
    u = u - TensorElement::pure(m.vertex_images[v], LeavittElement::vertex(et, v));
  for (size_t e = 0; e < m.source->num_edges(); ++e)
    u = u + TensorElement::pure(m.edge_images[e], LeavittElement::edge_star(et, e));

  TensorElement one = TensorElement::one(target, et);
  DualityReport rep;
  rep.unitary = u.normal_form();
  rep.is_unitary = (u * u.involute()).equivalent(one) &&
                   (u.involute() * u).equivalent(one);
  rep.citation = cite::kPdUnitary;
  return rep;
}

}  // namespace graphk
