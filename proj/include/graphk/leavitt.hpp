// Exact symbolic arithmetic in the Leavitt path algebra of a finite
// graph over the Gaussian rationals.
//
// Elements are kept as linear combinations of monomials p q* where p, q
// are paths with a common range. Multiplication resolves the middle
// factor q* p' by the path-prefix rule (which subsumes the relation
// e* f = delta_{e,f} r(e)), so the only rewriting left for normal forms
// is the range relation at each vertex: with the outgoing edges
// e_1 < ... < e_k of v in input order,
//
//   (R2)  e_k e_k*  ->  v - e_1 e_1* - ... - e_{k-1} e_{k-1}*
//
// applied at the junction of p and q whenever both end in the maximal
// edge e_k. A monomial has at most one junction, so each monomial has a
// unique redex and the rewriting system is confluent by linearity.

#ifndef GRAPHK_LEAVITT_HPP_
#define GRAPHK_LEAVITT_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphk/bigint.hpp"
#include "graphk/graph.hpp"

namespace graphk {

// Default cap on R2 applications per normalization call.
inline constexpr size_t kDefaultRewriteBound = 1000000;

// A path: its source vertex and a composable edge sequence. The empty
// path at a vertex is the vertex itself.
struct Path {
  size_t base = 0;  // source vertex index
  std::vector<size_t> edges;

  size_t length() const { return edges.size(); }
  bool empty() const { return edges.empty(); }

  friend bool operator==(const Path& a, const Path& b) {
    return a.base == b.base && a.edges == b.edges;
  }
  friend bool operator<(const Path& a, const Path& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    if (a.base != b.base) return a.base < b.base;
    return a.edges < b.edges;
  }
};

// p q* with r(p) = r(q).
struct PathMonomial {
  Path p;
  Path q;

  friend bool operator==(const PathMonomial& a, const PathMonomial& b) {
    return a.p == b.p && a.q == b.q;
  }
  friend bool operator<(const PathMonomial& a, const PathMonomial& b) {
    size_t la = a.p.length() + a.q.length();
    size_t lb = b.p.length() + b.q.length();
    if (la != lb) return la < lb;
    if (!(a.p == b.p)) return a.p < b.p;
    return a.q < b.q;
  }
};

size_t path_range(const Graph& g, const Path& p);
size_t path_source(const Graph& g, const Path& p);
// Validates composability and the base vertex; throws DataError.
Path make_path(const Graph& g, size_t base, std::vector<size_t> edges);
// Validates r(p) = r(q); throws DataError.
PathMonomial make_monomial(const Graph& g, Path p, Path q);

// One R2 expansion of a monomial whose junction carries the maximal
// edge; nullopt when the monomial is R2-normal. The int is a sign.
std::optional<std::vector<std::pair<PathMonomial, int>>> r2_step(
    const Graph& g, const PathMonomial& m);

// Product of two monomials: a single monomial or zero (nullopt).
std::optional<PathMonomial> monomial_product(const Graph& g,
                                             const PathMonomial& a,
                                             const PathMonomial& b);

class LeavittElement {
 public:
  LeavittElement() = default;
  explicit LeavittElement(std::shared_ptr<const Graph> g) : graph_(std::move(g)) {}

  static LeavittElement zero(std::shared_ptr<const Graph> g);
  static LeavittElement one(std::shared_ptr<const Graph> g);
  static LeavittElement vertex(std::shared_ptr<const Graph> g, size_t v);
  static LeavittElement edge(std::shared_ptr<const Graph> g, size_t e);
  static LeavittElement edge_star(std::shared_ptr<const Graph> g, size_t e);
  static LeavittElement monomial(std::shared_ptr<const Graph> g, PathMonomial m,
                                 GaussianRational c = GaussianRational::one());

  const std::shared_ptr<const Graph>& graph() const { return graph_; }
  const std::map<PathMonomial, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  void add_term(const PathMonomial& m, const GaussianRational& c);

  LeavittElement operator+(const LeavittElement& o) const;
  LeavittElement operator-(const LeavittElement& o) const;
  LeavittElement operator-() const;
  LeavittElement operator*(const LeavittElement& o) const;
  LeavittElement scaled(const GaussianRational& c) const;
  LeavittElement involute() const;

  LeavittElement normal_form(size_t step_bound = kDefaultRewriteBound) const;

  // Equality of normal forms.
  bool equivalent(const LeavittElement& o) const;

  friend bool operator==(const LeavittElement& a, const LeavittElement& b);
  friend bool operator!=(const LeavittElement& a, const LeavittElement& b) {
    return !(a == b);
  }

 private:
  void require_same_graph(const LeavittElement& o) const;

  std::shared_ptr<const Graph> graph_;
  std::map<PathMonomial, GaussianRational> terms_;
};

// Element grammar: identifiers name vertices and edges; `^` is the
// involution, `.` or `*` or juxtaposition is multiplication; `+`, `-`,
// rational literals `a/b`, the imaginary unit `i` (unless shadowed by a
// graph identifier) and parentheses behave as usual. The result is not
// normalized.
LeavittElement parse_element(std::shared_ptr<const Graph> g, const std::string& text);

std::string to_string(const LeavittElement& x);
std::string to_string(const Graph& g, const PathMonomial& m);

}  // namespace graphk

#endif  // GRAPHK_LEAVITT_HPP_
