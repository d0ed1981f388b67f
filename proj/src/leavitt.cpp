#include "graphk/leavitt.hpp"

#include <cctype>
#include <deque>
#include <sstream>

#include "graphk/error.hpp"

namespace graphk {

size_t path_range(const Graph& g, const Path& p) {
  return p.empty() ? p.base : g.edge_dst(p.edges.back());
}

size_t path_source(const Graph& g, const Path& p) {
  (void)g;
  return p.base;
}

Path make_path(const Graph& g, size_t base, std::vector<size_t> edges) {
  size_t at = base;
  for (size_t e : edges) {
    if (g.edge_src(e) != at)
      throw DataError("non-composable path: edge '" + g.edge(e).id +
                      "' does not start at '" + g.vertex(at) + "'");
    at = g.edge_dst(e);
  }
  return Path{base, std::move(edges)};
}

PathMonomial make_monomial(const Graph& g, Path p, Path q) {
  if (path_range(g, p) != path_range(g, q))
    throw DataError("monomial ranges differ: r(p) = '" +
                    g.vertex(path_range(g, p)) + "' but r(q) = '" +
                    g.vertex(path_range(g, q)) + "'");
  return PathMonomial{std::move(p), std::move(q)};
}

std::optional<std::vector<std::pair<PathMonomial, int>>> r2_step(
    const Graph& g, const PathMonomial& m) {
  if (m.p.empty() || m.q.empty()) return std::nullopt;
  size_t ep = m.p.edges.back();
  if (ep != m.q.edges.back()) return std::nullopt;
  size_t v = g.edge_src(ep);
  const auto& out = g.out_edges(v);
  if (out.empty() || out.back() != ep) return std::nullopt;  // not maximal
  Path p0 = m.p;
  p0.edges.pop_back();
  Path q0 = m.q;
  q0.edges.pop_back();
  std::vector<std::pair<PathMonomial, int>> result;
  result.push_back({PathMonomial{p0, q0}, 1});
  for (size_t i = 0; i + 1 < out.size(); ++i) {
    Path pe = p0, qe = q0;
    pe.edges.push_back(out[i]);
    qe.edges.push_back(out[i]);
    result.push_back({PathMonomial{std::move(pe), std::move(qe)}, -1});
  }
  return result;
}

namespace {

// True iff a is a prefix of b (same source vertex, b starts with a's
// edge list).
bool path_prefix(const Path& a, const Path& b) {
  if (a.base != b.base || a.length() > b.length()) return false;
  for (size_t i = 0; i < a.edges.size(); ++i)
    if (a.edges[i] != b.edges[i]) return false;
  return true;
}

Path path_tail(const Graph& g, const Path& whole, const Path& prefix) {
  Path t;
  t.base = path_range(g, prefix);
  t.edges.assign(whole.edges.begin() + prefix.length(), whole.edges.end());
  return t;
}

Path path_concat(const Path& a, const Path& b) {
  Path r = a;
  r.edges.insert(r.edges.end(), b.edges.begin(), b.edges.end());
  return r;
}

}  // namespace

std::optional<PathMonomial> monomial_product(const Graph& g,
                                             const PathMonomial& a,
                                             const PathMonomial& b) {
  // Resolve q_a* p_b: nonzero only when one path extends the other.
  if (path_prefix(a.q, b.p)) {
    Path t = path_tail(g, b.p, a.q);
    return PathMonomial{path_concat(a.p, t), b.q};
  }
  if (path_prefix(b.p, a.q)) {
    Path t = path_tail(g, a.q, b.p);
    return PathMonomial{a.p, path_concat(b.q, t)};
  }
  return std::nullopt;
}

LeavittElement LeavittElement::zero(std::shared_ptr<const Graph> g) {
  return LeavittElement(std::move(g));
}

LeavittElement LeavittElement::one(std::shared_ptr<const Graph> g) {
  LeavittElement x(g);
  for (size_t v = 0; v < g->num_vertices(); ++v)
    x.add_term(PathMonomial{Path{v, {}}, Path{v, {}}}, GaussianRational::one());
  return x;
}

LeavittElement LeavittElement::vertex(std::shared_ptr<const Graph> g, size_t v) {
  LeavittElement x(std::move(g));
  x.add_term(PathMonomial{Path{v, {}}, Path{v, {}}}, GaussianRational::one());
  return x;
}

LeavittElement LeavittElement::edge(std::shared_ptr<const Graph> g, size_t e) {
  LeavittElement x(g);
  size_t r = g->edge_dst(e);
  x.add_term(PathMonomial{Path{g->edge_src(e), {e}}, Path{r, {}}},
             GaussianRational::one());
  return x;
}

LeavittElement LeavittElement::edge_star(std::shared_ptr<const Graph> g, size_t e) {
  LeavittElement x(g);
  size_t r = g->edge_dst(e);
  x.add_term(PathMonomial{Path{r, {}}, Path{g->edge_src(e), {e}}},
             GaussianRational::one());
  return x;
}

LeavittElement LeavittElement::monomial(std::shared_ptr<const Graph> g,
                                        PathMonomial m, GaussianRational c) {
  LeavittElement x(std::move(g));
  x.add_term(m, c);
  return x;
}

void LeavittElement::add_term(const PathMonomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LeavittElement::require_same_graph(const LeavittElement& o) const {
  if (graph_ == o.graph_) return;
  if (graph_ && o.graph_ && *graph_ == *o.graph_) return;
  throw DataError("elements live over different graphs");
}

LeavittElement LeavittElement::operator+(const LeavittElement& o) const {
  require_same_graph(o);
  LeavittElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

LeavittElement LeavittElement::operator-(const LeavittElement& o) const {
  require_same_graph(o);
  LeavittElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

LeavittElement LeavittElement::operator-() const {
  LeavittElement r(graph_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

LeavittElement LeavittElement::scaled(const GaussianRational& c) const {
  LeavittElement r(graph_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.add_term(m, c * k);
  return r;
}

LeavittElement LeavittElement::operator*(const LeavittElement& o) const {
  require_same_graph(o);
  LeavittElement r(graph_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      auto prod = monomial_product(*graph_, ma, mb);
      if (prod) r.add_term(*prod, ca * cb);
    }
  return r;
}

LeavittElement LeavittElement::involute() const {
  LeavittElement r(graph_);
  for (const auto& [m, c] : terms_)
    r.add_term(PathMonomial{m.q, m.p}, c.conj());
  return r;
}

LeavittElement LeavittElement::normal_form(size_t step_bound) const {
  LeavittElement out(graph_);
  std::deque<std::pair<PathMonomial, GaussianRational>> work(terms_.begin(),
                                                             terms_.end());
  size_t steps = 0;
  while (!work.empty()) {
    auto [m, c] = work.front();
    work.pop_front();
    if (c.is_zero()) continue;
    auto expansion = r2_step(*graph_, m);
    if (!expansion) {
      out.add_term(m, c);
      continue;
    }
    if (++steps > step_bound)
      throw LimitError("normal_form: rewrite step bound (" +
                       std::to_string(step_bound) + ") exceeded");
    for (const auto& [mono, sign] : *expansion)
      work.emplace_back(mono, sign > 0 ? c : -c);
  }
  return out;
}

bool LeavittElement::equivalent(const LeavittElement& o) const {
  require_same_graph(o);
  return (*this - o).normal_form().is_zero();
}

bool operator==(const LeavittElement& a, const LeavittElement& b) {
  if (a.graph_ && b.graph_ && !(*a.graph_ == *b.graph_)) return false;
  return a.terms_ == b.terms_;
}

// ---------------------------------------------------------------------------
// Printing

std::string to_string(const GaussianRational& c) {
  auto rat = [](const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
  };
  if (c.im == 0) return rat(c.re);
  std::string imag;
  if (c.im == 1)
    imag = "i";
  else if (c.im == -1)
    imag = "-i";
  else
    imag = rat(c.im) + "*i";
  if (c.re == 0) return imag;
  if (c.im > 0) return "(" + rat(c.re) + "+" + imag + ")";
  if (c.im == -1) return "(" + rat(c.re) + "-i)";
  return "(" + rat(c.re) + "-" + rat(-c.im) + "*i)";
}

std::string to_string(const Graph& g, const PathMonomial& m) {
  std::vector<std::string> pieces;
  for (size_t e : m.p.edges) pieces.push_back(g.edge(e).id);
  for (auto it = m.q.edges.rbegin(); it != m.q.edges.rend(); ++it)
    pieces.push_back(g.edge(*it).id + "^");
  if (pieces.empty()) return g.vertex(m.p.base);
  std::string out;
  for (size_t i = 0; i < pieces.size(); ++i) out += (i ? "." : "") + pieces[i];
  return out;
}

std::string to_string(const LeavittElement& x) {
  if (x.is_zero()) return "0";
  const Graph& g = *x.graph();
  std::string out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    bool neg = c.re < 0 || (c.re == 0 && c.im < 0);
    GaussianRational a = neg ? -c : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (!a.is_one()) out += to_string(a) + ".";
    out += to_string(g, m);
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { Ident, Number, Plus, Minus, Star, Dot, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    size_t start = i_;
    if (i_ >= s_.size()) return {Tok::End, "", start};
    char c = s_[i_];
    switch (c) {
      case '+': ++i_; return {Tok::Plus, "+", start};
      case '-': ++i_; return {Tok::Minus, "-", start};
      case '*': ++i_; return {Tok::Star, "*", start};
      case '.': ++i_; return {Tok::Dot, ".", start};
      case '^': ++i_; return {Tok::Caret, "^", start};
      case '(': ++i_; return {Tok::LParen, "(", start};
      case ')': ++i_; return {Tok::RParen, ")", start};
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
        num += s_[i_++];
      if (i_ < s_.size() && s_[i_] == '/') {
        size_t save = i_;
        ++i_;
        std::string den;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
          den += s_[i_++];
        if (den.empty())
          i_ = save;  // the '/' was not part of a rational literal
        else
          num += "/" + den;
      }
      return {Tok::Number, num, start};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
        id += s_[i_++];
      return {Tok::Ident, id, start};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

 private:
  const std::string& s_;
  size_t i_ = 0;
};

// Shape of a parsed factor; used to tell constructor violations in
// juxtaposed monomials apart from genuine algebraic zeros.
enum class Shape {
  Scalar,         // number or imaginary unit
  PlainPath,      // unstarred identifier chain (q part empty)
  Starred,        // purely starred chain (p part empty)
  MixedMonomial,  // p and q parts both nonempty
  General,        // sums, parenthesized expressions
};

struct Operand {
  LeavittElement value;
  Shape shape;
};

class Parser {
 public:
  Parser(std::shared_ptr<const Graph> g, const std::string& text)
      : graph_(std::move(g)), lex_(text) {
    advance();
  }

  LeavittElement parse() {
    LeavittElement x = expression();
    if (cur_.kind != Tok::End)
      throw ParseError("unexpected trailing input '" + cur_.text + "'", cur_.pos);
    return x;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  bool starts_factor() const {
    return cur_.kind == Tok::Ident || cur_.kind == Tok::Number ||
           cur_.kind == Tok::LParen;
  }

  LeavittElement expression() {
    bool neg = false;
    if (cur_.kind == Tok::Minus) {
      neg = true;
      advance();
    } else if (cur_.kind == Tok::Plus) {
      advance();
    }
    LeavittElement acc = term();
    if (neg) acc = -acc;
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      bool minus = cur_.kind == Tok::Minus;
      advance();
      LeavittElement t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  LeavittElement term() {
    Operand acc = factor();
    for (;;) {
      if (cur_.kind == Tok::Dot || cur_.kind == Tok::Star) {
        advance();
        acc = combine(acc, factor());
      } else if (starts_factor()) {
        acc = combine(acc, factor());
      } else {
        break;
      }
    }
    return acc.value;
  }

  // Juxtaposed path letters build monomials; constructor violations
  // (non-composable paths, mismatched ranges) are reported instead of
  // silently producing zero. Genuinely algebraic zeros (e.g. e^ f with
  // e != f, or products of distinct vertices) stay zeros.
  Operand combine(const Operand& a, const Operand& b) {
    LeavittElement prod = a.value * b.value;
    if (prod.is_zero() && !a.value.is_zero() && !b.value.is_zero()) {
      bool left_path = a.shape == Shape::PlainPath;
      if (left_path && b.shape == Shape::PlainPath && has_edges(b.value))
        throw DataError("non-composable path in product");
      if (left_path && b.shape == Shape::Starred)
        throw DataError("monomial ranges differ: r(p) != r(q)");
    }
    Shape shape = Shape::General;
    if (a.shape == Shape::Scalar && b.shape == Shape::Scalar)
      shape = Shape::Scalar;
    else if (a.shape == Shape::PlainPath && b.shape == Shape::PlainPath)
      shape = Shape::PlainPath;
    else if ((a.shape == Shape::PlainPath || a.shape == Shape::MixedMonomial) &&
             b.shape == Shape::Starred)
      shape = Shape::MixedMonomial;
    else if (a.shape == Shape::Starred && b.shape == Shape::Starred)
      shape = Shape::Starred;
    return {prod, shape};
  }

  static bool has_edges(const LeavittElement& x) {
    for (const auto& [m, c] : x.terms())
      if (!m.p.empty() || !m.q.empty()) return true;
    return false;
  }

  Operand factor() {
    Operand base = atom();
    while (cur_.kind == Tok::Caret) {
      advance();
      base.value = base.value.involute();
      switch (base.shape) {
        case Shape::PlainPath: base.shape = Shape::Starred; break;
        case Shape::Starred: base.shape = Shape::PlainPath; break;
        default: break;
      }
    }
    return base;
  }

  Operand atom() {
    switch (cur_.kind) {
      case Tok::Number: {
        GaussianRational c{Rational(cur_.text)};
        advance();
        return {LeavittElement::one(graph_).scaled(c), Shape::Scalar};
      }
      case Tok::LParen: {
        advance();
        LeavittElement inner = expression();
        if (cur_.kind != Tok::RParen) throw ParseError("expected ')'", cur_.pos);
        advance();
        return {inner, Shape::General};
      }
      case Tok::Ident: {
        std::string name = cur_.text;
        size_t pos = cur_.pos;
        advance();
        if (graph_->has_vertex(name))
          return {LeavittElement::vertex(graph_, graph_->vertex_index(name)),
                  Shape::PlainPath};
        if (graph_->has_edge(name))
          return {LeavittElement::edge(graph_, graph_->edge_index(name)),
                  Shape::PlainPath};
        if (name == "i")
          return {LeavittElement::one(graph_).scaled(GaussianRational::i()),
                  Shape::Scalar};
        throw ParseError("unknown identifier '" + name + "'", pos);
      }
      default:
        throw ParseError("expected an identifier, number or '('", cur_.pos);
    }
  }

  std::shared_ptr<const Graph> graph_;
  Lexer lex_;
  Token cur_;
};

}  // namespace

LeavittElement parse_element(std::shared_ptr<const Graph> g, const std::string& text) {
  return Parser(std::move(g), text).parse();
}

}  // namespace graphk
