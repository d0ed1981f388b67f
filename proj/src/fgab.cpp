#include "graphk/fgab.hpp"

#include <algorithm>
#include <sstream>

#include "graphk/error.hpp"

namespace graphk {

FgAb::FgAb(size_t free_rank, std::vector<Int> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2)
      throw std::invalid_argument("FgAb: torsion factors must be >= 2");
    if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
      throw std::invalid_argument("FgAb: torsion factors must form a divisibility chain");
  }
}

FgAb FgAb::cyclic(const Int& n) {
  if (n == 0) return FgAb(1, {});
  if (n == 1) return FgAb(0, {});
  if (n < 0) throw std::invalid_argument("FgAb::cyclic: negative order");
  return FgAb(0, {n});
}

std::optional<Int> FgAb::order() const {
  if (free_rank_ > 0) return std::nullopt;
  Int n = 1;
  for (const Int& d : torsion_) n *= d;
  return n;
}

std::vector<Int> FgAb::reduce(std::vector<Int> coords) const {
  if (coords.size() != coord_count())
    throw std::invalid_argument("FgAb::reduce: coordinate length mismatch");
  for (size_t i = 0; i < torsion_.size(); ++i) {
    Int& c = coords[free_rank_ + i];
    c = mod_floor(c, torsion_[i]);
  }
  return coords;
}

bool GroupElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const Int& c) { return c == 0; });
}

std::vector<Int> canonicalize_torsion(std::vector<Int> factors) {
  for (const Int& f : factors)
    if (f < 1) throw std::invalid_argument("canonicalize_torsion: factors must be >= 1");
  // (a, b) -> (gcd, lcm) strictly grows the larger member, so this
  // terminates with a divisibility chain.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < factors.size(); ++i)
      for (size_t j = i + 1; j < factors.size(); ++j) {
        Int g = gcd(factors[i], factors[j]);
        if (g == factors[i] || g == factors[j]) continue;
        Int l = factors[i] / g * factors[j];
        factors[i] = g;
        factors[j] = l;
        changed = true;
      }
  }
  std::sort(factors.begin(), factors.end());
  std::vector<Int> out;
  for (Int& f : factors)
    if (f > 1) out.push_back(std::move(f));
  return out;
}

namespace {

// Row indices of the SNF diagonal, split by the role the row plays in
// the quotient: free rows (diagonal zero or beyond the diagonal) and
// torsion rows (diagonal >= 2).
struct RowSplit {
  std::vector<size_t> free_rows;
  std::vector<size_t> torsion_rows;
  std::vector<Int> torsion;
};

RowSplit split_rows(const Presentation& p) {
  RowSplit r;
  size_t m = p.matrix.rows();
  size_t k = std::min(m, p.matrix.cols());
  for (size_t i = 0; i < m; ++i) {
    Int d = i < k ? p.snf.s.at(i, i) : Int(0);
    if (d == 0)
      r.free_rows.push_back(i);
    else if (d > 1) {
      r.torsion_rows.push_back(i);
      r.torsion.push_back(d);
    }
  }
  return r;
}

}  // namespace

FgAb cokernel(const IntMatrix& a) {
  auto pres = std::make_shared<Presentation>();
  pres->matrix = a;
  pres->snf = smith_normal_form(a);
  RowSplit rs = split_rows(*pres);
  FgAb g(rs.free_rows.size(), rs.torsion);
  g.set_presentation(std::move(pres));
  return g;
}

GroupElement project_element(const FgAb& g, const std::vector<Int>& v) {
  const auto& pres = g.presentation();
  if (!pres)
    throw std::logic_error("project_element: group has no presentation");
  if (v.size() != pres->ambient())
    throw DataError("project_element: vector length " + std::to_string(v.size()) +
                    " does not match ambient rank " +
                    std::to_string(pres->ambient()));
  std::vector<Int> w = mat_vec(pres->snf.u, v);
  RowSplit rs = split_rows(*pres);
  std::vector<Int> coords;
  coords.reserve(g.coord_count());
  for (size_t i : rs.free_rows) coords.push_back(w[i]);
  for (size_t t = 0; t < rs.torsion_rows.size(); ++t)
    coords.push_back(mod_floor(w[rs.torsion_rows[t]], rs.torsion[t]));
  return GroupElement{g, std::move(coords)};
}

std::vector<Int> ambient_lift(const FgAb& g, const std::vector<Int>& coords) {
  const auto& pres = g.presentation();
  if (!pres) throw std::logic_error("ambient_lift: group has no presentation");
  if (coords.size() != g.coord_count())
    throw std::invalid_argument("ambient_lift: coordinate length mismatch");
  RowSplit rs = split_rows(*pres);
  std::vector<Int> w(pres->ambient(), Int(0));
  for (size_t i = 0; i < rs.free_rows.size(); ++i) w[rs.free_rows[i]] = coords[i];
  for (size_t t = 0; t < rs.torsion_rows.size(); ++t)
    w[rs.torsion_rows[t]] = coords[rs.free_rows.size() + t];
  return mat_vec(pres->snf.u_inv, w);
}

FgAb hom_group(const FgAb& g, const FgAb& h) {
  size_t free_rank = g.free_rank() * h.free_rank();
  std::vector<Int> factors;
  // hom(Z^a, H) = H^a
  for (size_t i = 0; i < g.free_rank(); ++i)
    for (const Int& n : h.torsion()) factors.push_back(n);
  // hom(Z/m, Z/n) = Z/gcd(m, n); hom(Z/m, Z) = 0
  for (const Int& m : g.torsion())
    for (const Int& n : h.torsion()) factors.push_back(gcd(m, n));
  return FgAb(free_rank, canonicalize_torsion(std::move(factors)));
}

FgAb tensor_group(const FgAb& g, const FgAb& h) {
  size_t free_rank = g.free_rank() * h.free_rank();
  std::vector<Int> factors;
  for (size_t i = 0; i < g.free_rank(); ++i)
    for (const Int& n : h.torsion()) factors.push_back(n);
  for (size_t j = 0; j < h.free_rank(); ++j)
    for (const Int& m : g.torsion()) factors.push_back(m);
  for (const Int& m : g.torsion())
    for (const Int& n : h.torsion()) factors.push_back(gcd(m, n));
  return FgAb(free_rank, canonicalize_torsion(std::move(factors)));
}

DivisiblePower tensor_with_cstar(const FgAb& g) {
  // Torsion dies into a divisible group; only the free rank survives.
  return DivisiblePower{g.free_rank()};
}

FgAb direct_sum(const FgAb& g, const FgAb& h) {
  std::vector<Int> factors = g.torsion();
  factors.insert(factors.end(), h.torsion().begin(), h.torsion().end());
  return FgAb(g.free_rank() + h.free_rank(),
              canonicalize_torsion(std::move(factors)));
}

std::optional<Int> element_order(const FgAb& g, const std::vector<Int>& coords) {
  if (coords.size() != g.coord_count())
    throw std::invalid_argument("element_order: coordinate length mismatch");
  for (size_t i = 0; i < g.free_rank(); ++i)
    if (coords[i] != 0) return std::nullopt;
  Int ord = 1;
  for (size_t t = 0; t < g.torsion().size(); ++t) {
    const Int& d = g.torsion()[t];
    Int c = mod_floor(coords[g.free_rank() + t], d);
    ord = lcm(ord, d / gcd(d, c));
  }
  return ord;
}

std::string to_string(const FgAb& g) {
  if (g.is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (g.free_rank() == 1) {
    os << "Z";
    first = false;
  } else if (g.free_rank() > 1) {
    os << "Z^" << g.free_rank();
    first = false;
  }
  for (const Int& d : g.torsion()) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

std::string to_string(const DivisiblePower& d) {
  if (d.rank == 0) return "0";
  return "(C*)^" + std::to_string(d.rank);
}

std::vector<Int> primary_factors(const FgAb& g) {
  std::vector<Int> out;
  for (const Int& d : g.torsion()) {
    Int n = d;
    size_t steps = 0;
    auto strip = [&](const Int& p) {
      Int q = 1;
      while (n % p == 0) {
        q *= p;
        n /= p;
      }
      if (q > 1) out.push_back(q);
    };
    strip(2);
    for (Int p = 3; p * p <= n; p += 2) {
      if (++steps > 2000000)
        throw LimitError("primary_factors: torsion factor too large to factorize");
      strip(p);
    }
    if (n > 1) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string_primary(const FgAb& g) {
  if (g.is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (g.free_rank() == 1) {
    os << "Z";
    first = false;
  } else if (g.free_rank() > 1) {
    os << "Z^" << g.free_rank();
    first = false;
  }
  for (const Int& q : primary_factors(g)) {
    if (!first) os << " + ";
    os << "Z/" << q;
    first = false;
  }
  return os.str();
}

FgAb parse_group_literal(const std::string& text) {
  // Accepts the display grammar with optional whitespace around '+'.
  auto fail = [&](const std::string& why) -> FgAb {
    throw DataError("bad group literal '" + text + "': " + why);
  };
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == '+') {
      parts.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  parts.push_back(cur);
  size_t free_rank = 0;
  std::vector<Int> factors;
  for (const std::string& p : parts) {
    if (p.empty()) return fail("empty summand");
    if (p == "0") {
      if (parts.size() != 1) return fail("'0' cannot be combined with other summands");
      return FgAb::zero();
    }
    if (p == "Z") {
      free_rank += 1;
    } else if (p.rfind("Z^", 0) == 0) {
      try {
        long r = std::stol(p.substr(2));
        if (r < 1) return fail("rank must be >= 1");
        free_rank += static_cast<size_t>(r);
      } catch (const std::exception&) {
        return fail("bad rank in '" + p + "'");
      }
    } else if (p.rfind("Z/", 0) == 0) {
      Int d;
      try {
        d = Int(p.substr(2));
      } catch (const std::exception&) {
        return fail("bad modulus in '" + p + "'");
      }
      if (d < 2) return fail("modulus must be >= 2");
      factors.push_back(d);
    } else {
      return fail("unrecognized summand '" + p + "'");
    }
  }
  return FgAb(free_rank, canonicalize_torsion(std::move(factors)));
}

}  // namespace graphk
