#include <doctest.h>

#include <algorithm>
#include <random>

#include "graphk/error.hpp"
#include "graphk/genmap.hpp"
#include "graphk/leavitt.hpp"
#include "graphk/tensorelem.hpp"

using namespace graphk;

namespace {

std::shared_ptr<const Graph> shared(Graph g) {
  return std::make_shared<Graph>(std::move(g));
}

// Random element: up to `max_terms` monomials with paths of length <= 2
// and small Gaussian rational coefficients.
LeavittElement random_element(std::shared_ptr<const Graph> g, std::mt19937& rng,
                              int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> len(0, 2);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<size_t> vstart(0, g->num_vertices() - 1);
  LeavittElement x = LeavittElement::zero(g);
  int n = nterms(rng);
  auto grow = [&](size_t from, int steps) {
    Path p{from, {}};
    size_t at = from;
    for (int s = 0; s < steps; ++s) {
      const auto& out = g->out_edges(at);
      if (out.empty()) break;
      std::uniform_int_distribution<size_t> pick(0, out.size() - 1);
      size_t e = out[pick(rng)];
      p.edges.push_back(e);
      at = g->edge_dst(e);
    }
    return p;
  };
  for (int t = 0; t < n; ++t) {
    Path p = grow(vstart(rng), len(rng));
    size_t pr = path_range(*g, p);
    Path q{pr, {}};
    for (int attempt = 0; attempt < 8; ++attempt) {
      Path cand = grow(vstart(rng), len(rng));
      if (path_range(*g, cand) == pr) {
        q = cand;
        break;
      }
    }
    GaussianRational c(Rational(num(rng)), Rational(num(rng)));
    if (c.is_zero()) c = GaussianRational::one();
    x.add_term(PathMonomial{p, q}, c);
  }
  return x;
}

GeneratorMap identity_map(std::shared_ptr<const Graph> g) {
  GeneratorMap m;
  m.source = g;
  m.target = g;
  for (size_t v = 0; v < g->num_vertices(); ++v)
    m.vertex_images.push_back(LeavittElement::vertex(g, v));
  for (size_t e = 0; e < g->num_edges(); ++e)
    m.edge_images.push_back(LeavittElement::edge(g, e));
  m.unital_claim = true;
  return m;
}

}  // namespace

TEST_CASE("parse_element basics") {
  auto r2 = shared(rose(2));
  LeavittElement m = parse_element(r2, "e1.e1^");
  REQUIRE(m.term_count() == 1);
  CHECK(to_string(m) == "e1.e1^");

  CHECK(to_string(parse_element(r2, "v")) == "v");
  CHECK(parse_element(r2, "e1*e1^") == parse_element(r2, "e1.e1^"));
  CHECK(parse_element(r2, "e1 e1^") == parse_element(r2, "e1.e1^"));

  // r(p) != r(q) across distinct vertices is a constructor error.
  auto two = shared(parse_graph(
      R"({"vertices":["v","w"],"edges":[["e1","v","v"],["e2","v","w"],["l","w","w"]]})"));
  CHECK_THROWS_AS((void)parse_element(two, "e1.e2^"), DataError);
  // Non-composable juxtaposed path.
  CHECK_THROWS_AS((void)parse_element(two, "e2.e1"), DataError);
  // Algebraic zeros are not errors.
  CHECK(parse_element(two, "e1^.e2").is_zero());
  CHECK(parse_element(two, "v.w").is_zero());
  CHECK(parse_element(two, "e2.l").is_zero() == false);

  CHECK_THROWS_AS((void)parse_element(r2, "e1 +"), ParseError);
  CHECK_THROWS_AS((void)parse_element(r2, "nope"), ParseError);
  CHECK_THROWS_AS((void)parse_element(r2, "e1 ) "), ParseError);
}

TEST_CASE("parse_element coefficients") {
  auto r1 = shared(rose(1));
  CHECK(to_string(parse_element(r1, "2.v").normal_form()) == "2.v");
  CHECK(to_string(parse_element(r1, "1/2 v").normal_form()) == "1/2.v");
  CHECK(to_string(parse_element(r1, "i.v").normal_form()) == "i.v");
  CHECK(to_string(parse_element(r1, "-i.v").normal_form()) == "-i.v");
  CHECK(to_string(parse_element(r1, "(1/2+i).v").normal_form()) == "(1/2+i).v");
  CHECK(to_string(parse_element(r1, "2*i.v").normal_form()) == "2*i.v");
  CHECK(parse_element(r1, "v - v").is_zero());
  CHECK(to_string(parse_element(r1, "v + v")) == "2.v");
}

TEST_CASE("print/parse round-trip on random elements") {
  std::mt19937 rng(2718);
  std::vector<std::shared_ptr<const Graph>> gs = {shared(rose(1)), shared(rose(2)),
                                                  shared(cuntz_splice(rose(2), "v"))};
  for (const auto& g : gs)
    for (int trial = 0; trial < 40; ++trial) {
      LeavittElement x = random_element(g, rng).normal_form();
      LeavittElement back = parse_element(g, to_string(x));
      CHECK(back.normal_form() == x);
    }
}

TEST_CASE("normal_form pinned examples") {
  auto r2 = shared(rose(2));
  CHECK(parse_element(r2, "e1^.e2").normal_form().is_zero());
  CHECK(to_string(parse_element(r2, "e2.e2^").normal_form()) == "v - e1.e1^");
  CHECK(to_string(parse_element(r2, "e1.e1^ + e2.e2^").normal_form()) == "v");
}

TEST_CASE("normal_form is idempotent and a congruence") {
  std::mt19937 rng(31);
  std::vector<std::shared_ptr<const Graph>> gs = {shared(rose(1)), shared(rose(2)),
                                                  shared(cuntz_splice(rose(2), "v"))};
  for (const auto& g : gs)
    for (int trial = 0; trial < 30; ++trial) {
      LeavittElement x = random_element(g, rng);
      LeavittElement y = random_element(g, rng);
      LeavittElement nfx = x.normal_form();
      CHECK(nfx.normal_form() == nfx);
      CHECK((x * y).normal_form() == (nfx * y.normal_form()).normal_form());
      CHECK((x + y).normal_form() == (nfx + y.normal_form()).normal_form());
    }
}

TEST_CASE("normal_form order independence") {
  // Redexes never overlap, so rewriting in any worklist order reaches
  // the same normal form as the deterministic engine.
  std::mt19937 rng(47);
  auto g = shared(cuntz_splice(rose(2), "v"));
  for (int trial = 0; trial < 25; ++trial) {
    LeavittElement x = random_element(g, rng, 5);
    LeavittElement expect = x.normal_form();

    std::vector<std::pair<PathMonomial, GaussianRational>> work(x.terms().begin(),
                                                                x.terms().end());
    LeavittElement out = LeavittElement::zero(g);
    while (!work.empty()) {
      std::uniform_int_distribution<size_t> pick(0, work.size() - 1);
      size_t k = pick(rng);
      auto [m, c] = work[k];
      work.erase(work.begin() + k);
      auto ex = r2_step(*g, m);
      if (!ex) {
        out.add_term(m, c);
        continue;
      }
      for (const auto& [mono, sign] : *ex)
        work.push_back({mono, sign > 0 ? c : -c});
    }
    CHECK(out == expect);
  }
}

TEST_CASE("ck relations as normal-form identities") {
  std::vector<std::shared_ptr<const Graph>> gs = {
      shared(rose(1)), shared(rose(2)), shared(rose(3)),
      shared(cuntz_splice(rose(2), "v"))};
  for (const auto& g : gs) {
    for (size_t e = 0; e < g->num_edges(); ++e)
      for (size_t f = 0; f < g->num_edges(); ++f) {
        LeavittElement prod =
            (LeavittElement::edge_star(g, e) * LeavittElement::edge(g, f)).normal_form();
        if (e == f)
          CHECK(prod == LeavittElement::vertex(g, g->edge_dst(e)));
        else
          CHECK(prod.is_zero());
      }
    for (size_t v = 0; v < g->num_vertices(); ++v) {
      LeavittElement sum = LeavittElement::zero(g);
      for (size_t e : g->out_edges(v))
        sum = sum + LeavittElement::edge(g, e) * LeavittElement::edge_star(g, e);
      CHECK(sum.normal_form() == LeavittElement::vertex(g, v));
    }
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(606);
  std::vector<std::shared_ptr<const Graph>> gs = {shared(rose(1)), shared(rose(2)),
                                                  shared(cuntz_splice(rose(2), "v"))};
  for (const auto& g : gs)
    for (int trial = 0; trial < 60; ++trial) {
      LeavittElement x = random_element(g, rng, 3);
      LeavittElement y = random_element(g, rng, 3);
      LeavittElement z = random_element(g, rng, 3);
      CHECK(((x * y) * z).normal_form() == (x * (y * z)).normal_form());
      CHECK((x * (y + z)).normal_form() == (x * y + x * z).normal_form());
      CHECK(((x + y) * z).normal_form() == (x * z + y * z).normal_form());
    }
}

TEST_CASE("involution is a semilinear anti-homomorphism") {
  auto r2 = shared(rose(2));
  LeavittElement ie = parse_element(r2, "i.e1.e2^");
  CHECK(to_string(ie.involute().normal_form()) == "-i.e2.e1^");

  auto r1 = shared(rose(1));
  CHECK((LeavittElement::edge(r1, 0) * LeavittElement::edge_star(r1, 0)).normal_form() ==
        LeavittElement::vertex(r1, 0));

  std::mt19937 rng(909);
  std::vector<std::shared_ptr<const Graph>> gs = {r1, r2,
                                                  shared(cuntz_splice(rose(2), "v"))};
  for (const auto& g : gs)
    for (int trial = 0; trial < 35; ++trial) {
      LeavittElement x = random_element(g, rng, 3);
      LeavittElement y = random_element(g, rng, 3);
      CHECK(x.involute().involute() == x);
      CHECK((x * y).involute().normal_form() ==
            (y.involute() * x.involute()).normal_form());
    }
}

TEST_CASE("unit acts as identity") {
  std::mt19937 rng(1111);
  auto g = shared(cuntz_splice(rose(2), "v"));
  LeavittElement one = LeavittElement::one(g);
  for (int trial = 0; trial < 20; ++trial) {
    LeavittElement x = random_element(g, rng);
    CHECK((one * x).normal_form() == x.normal_form());
    CHECK((x * one).normal_form() == x.normal_form());
  }
}

TEST_CASE("rewrite step bound fails loudly") {
  auto r2 = shared(rose(2));
  LeavittElement x = parse_element(r2, "e2.e2.e2^.e2^");
  CHECK_THROWS_AS((void)x.normal_form(1), LimitError);
}

TEST_CASE("verify_hom: identity maps") {
  for (size_t n = 1; n <= 3; ++n) {
    GeneratorMap m = identity_map(shared(rose(n)));
    HomReport rep = verify_hom(m);
    CHECK(rep.verified);
    CHECK(rep.unital);
    CHECK(m.verified);
  }
}

TEST_CASE("verify_hom: forced CK1 failure") {
  auto r2 = shared(rose(2));
  GeneratorMap m = identity_map(r2);
  m.edge_images[1] = LeavittElement::edge(r2, 0);  // e2 -> e1
  HomReport rep = verify_hom(m);
  CHECK(!rep.verified);
  bool saw_ck1 = false;
  for (const auto* f : rep.failures())
    if (f->name.find("phi(e1)^.phi(e2)") != std::string::npos) {
      saw_ck1 = true;
      CHECK(f->residue == "v");
    }
  CHECK(saw_ck1);
}

TEST_CASE("verify_hom: edge swap automorphism") {
  auto r2 = shared(rose(2));
  GeneratorMap m = identity_map(r2);
  std::swap(m.edge_images[0], m.edge_images[1]);
  HomReport rep = verify_hom(m);
  CHECK(rep.verified);
  CHECK(rep.unital);
}

TEST_CASE("verify_hom: unitality claim is checked both ways") {
  auto r2 = shared(rose(2));
  GeneratorMap m = identity_map(r2);
  m.unital_claim = false;  // identity is unital; claiming otherwise fails
  CHECK(!verify_hom(m).verified);
}

TEST_CASE("verify_hom: property (P) witness") {
  auto r2 = shared(rose(2));
  GeneratorMap m = identity_map(r2);
  m.p_witness = LeavittElement::edge(r2, 0);  // e1^.e1 = v = 1
  HomReport rep = verify_hom(m);
  CHECK(rep.verified);
  REQUIRE(rep.property_p.has_value());
  CHECK(*rep.property_p);

  GeneratorMap bad = identity_map(r2);
  bad.p_witness = parse_element(r2, "e1.e1^");  // not an isometry
  HomReport rep2 = verify_hom(bad);
  REQUIRE(rep2.property_p.has_value());
  CHECK(!*rep2.property_p);
  CHECK(!rep2.verified);
}

TEST_CASE("generator map JSON round-trip") {
  std::string text = R"({
    "source": {"vertices":["v"],"edges":[["e1","v","v"],["e2","v","v"]]},
    "target": {"vertices":["v"],"edges":[["e1","v","v"],["e2","v","v"]]},
    "vertex_images": {"v": "v"},
    "edge_images": {"e1": "e2", "e2": "e1"},
    "unital": true
  })";
  GeneratorMap m = parse_generator_map(text);
  CHECK(verify_hom(m).verified);
  GeneratorMap again = parse_generator_map(serialize_generator_map(m));
  CHECK(verify_hom(again).verified);
  CHECK(again.unital_claim == m.unital_claim);

  CHECK_THROWS_AS((void)parse_generator_map("{"), ParseError);
  CHECK_THROWS_AS((void)parse_generator_map(R"({"source": 3})"), DataError);
}

TEST_CASE("duality unitary of identity maps on roses") {
  for (size_t n = 1; n <= 4; ++n) {
    GeneratorMap m = identity_map(shared(rose(n)));
    verify_hom(m);
    DualityReport rep = duality_unitary(m);
    CHECK(rep.is_unitary);
    if (n == 1) CHECK(to_string(rep.unitary) == "e1 (x) e1^");
    if (n == 2) CHECK(to_string(rep.unitary) == "e1 (x) e1^ + e2 (x) e2^");
  }
  GeneratorMap unverified = identity_map(shared(rose(2)));
  CHECK_THROWS_AS((void)duality_unitary(unverified), DataError);
}

TEST_CASE("duality unitary of the edge swap") {
  auto r2 = shared(rose(2));
  GeneratorMap m = identity_map(r2);
  std::swap(m.edge_images[0], m.edge_images[1]);
  verify_hom(m);
  CHECK(duality_unitary(m).is_unitary);
}

TEST_CASE("duality element of a corner map is reported as computed") {
  // v -> e1 e1^, x -> e1 x e1^: a verified non-unital endomorphism.
  auto r2 = shared(rose(2));
  GeneratorMap m;
  m.source = r2;
  m.target = r2;
  m.vertex_images = {parse_element(r2, "e1.e1^")};
  m.edge_images = {parse_element(r2, "e1.e1.e1^"), parse_element(r2, "e1.e2.e1^")};
  m.unital_claim = false;
  REQUIRE(verify_hom(m).verified);
  DualityReport rep = duality_unitary(m);
  // The 1(x)1 summand compensates for the missing corner: expanding
  // u u^ by hand gives 1(x)1 - aa^(x)v + (aa(aa)^ + ab(ab)^)(x)v with
  // a = e1, b = e2, and the bracket collapses to aa^. So the verdict is
  // positive even for this non-unital map.
  CHECK(rep.is_unitary);
}

TEST_CASE("twist_hom") {
  auto r2 = shared(rose(2));

  GeneratorMap id = identity_map(r2);
  verify_hom(id);
  // Trivial twist by phi(1) = v.
  GeneratorMap same = twist_hom(id, parse_element(r2, "v"));
  CHECK(same.edge_images[0].normal_form() == LeavittElement::edge(r2, 0));
  CHECK(same.edge_images[1].normal_form() == LeavittElement::edge(r2, 1));

  // Self-adjoint unitary swap u = e1 e2^ + e2 e1^ dresses the edges.
  LeavittElement u = parse_element(r2, "e1.e2^ + e2.e1^");
  GeneratorMap tw = twist_hom(id, u);
  CHECK(tw.verified);
  CHECK(tw.edge_images[0].normal_form() == LeavittElement::edge(r2, 1));
  CHECK(tw.edge_images[1].normal_form() == LeavittElement::edge(r2, 0));

  // Non-unitary twist is rejected.
  CHECK_THROWS_AS((void)twist_hom(id, parse_element(r2, "e1.e1^")), DataError);

  GeneratorMap unverified = identity_map(r2);
  CHECK_THROWS_AS((void)twist_hom(unverified, u), DataError);
}
