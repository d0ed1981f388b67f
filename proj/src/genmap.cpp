#include "graphk/genmap.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "graphk/error.hpp"

namespace graphk {

LeavittElement GeneratorMap::image_of_one() const {
  LeavittElement s = LeavittElement::zero(target);
  for (const auto& img : vertex_images) s = s + img;
  return s;
}

std::vector<const RelationCheck*> HomReport::failures() const {
  std::vector<const RelationCheck*> out;
  for (const auto& c : checks)
    if (!c.ok) out.push_back(&c);
  return out;
}

namespace {

void check_equal(HomReport& report, const std::string& name,
                 const LeavittElement& lhs, const LeavittElement& rhs) {
  LeavittElement residue = (lhs - rhs).normal_form();
  report.checks.push_back({name, residue.is_zero(),
                           residue.is_zero() ? "" : to_string(residue)});
}

}  // namespace

HomReport verify_hom(GeneratorMap& m) {
  HomReport report;
  m.verified = false;
  const Graph& src = *m.source;
  if (m.vertex_images.size() != src.num_vertices() ||
      m.edge_images.size() != src.num_edges())
    throw DataError("verify_hom: image count does not match the source graph");

  auto vname = [&](size_t v) { return src.vertex(v); };
  auto ename = [&](size_t e) { return src.edge(e).id; };

  // Vertex images: self-adjoint orthogonal idempotents.
  for (size_t v = 0; v < src.num_vertices(); ++v) {
    const LeavittElement& pv = m.vertex_images[v];
    check_equal(report, "phi(" + vname(v) + ")^ = phi(" + vname(v) + ")",
                pv.involute(), pv);
    check_equal(report, "phi(" + vname(v) + ")^2 = phi(" + vname(v) + ")",
                pv * pv, pv);
    for (size_t w = v + 1; w < src.num_vertices(); ++w)
      check_equal(report,
                  "phi(" + vname(v) + ").phi(" + vname(w) + ") = 0",
                  pv * m.vertex_images[w], LeavittElement::zero(m.target));
  }

  // Edge compatibility: phi(s(e)) phi(e) = phi(e) = phi(e) phi(r(e)).
  for (size_t e = 0; e < src.num_edges(); ++e) {
    const LeavittElement& fe = m.edge_images[e];
    check_equal(report, "phi(s(" + ename(e) + ")).phi(" + ename(e) + ") = phi(" + ename(e) + ")",
                m.vertex_images[src.edge_src(e)] * fe, fe);
    check_equal(report, "phi(" + ename(e) + ").phi(r(" + ename(e) + ")) = phi(" + ename(e) + ")",
                fe * m.vertex_images[src.edge_dst(e)], fe);
  }

  // phi(e)^ phi(f) = delta_{e,f} phi(r(e)).
  for (size_t e = 0; e < src.num_edges(); ++e)
    for (size_t f = 0; f < src.num_edges(); ++f) {
      LeavittElement lhs = m.edge_images[e].involute() * m.edge_images[f];
      LeavittElement rhs = e == f ? m.vertex_images[src.edge_dst(e)]
                                  : LeavittElement::zero(m.target);
      check_equal(report,
                  "phi(" + ename(e) + ")^.phi(" + ename(f) + ") = " +
                      (e == f ? "phi(r(" + ename(e) + "))" : "0"),
                  lhs, rhs);
    }

  // Range relation at every vertex: phi(v) = sum over s(e)=v of
  // phi(e) phi(e)^.
  for (size_t v = 0; v < src.num_vertices(); ++v) {
    LeavittElement sum = LeavittElement::zero(m.target);
    for (size_t e : src.out_edges(v))
      sum = sum + m.edge_images[e] * m.edge_images[e].involute();
    check_equal(report, "sum_{s(e)=" + vname(v) + "} phi(e).phi(e)^ = phi(" + vname(v) + ")",
                sum, m.vertex_images[v]);
  }

  // Unitality holds iff claimed.
  LeavittElement phi1 = m.image_of_one();
  bool unital_holds = phi1.equivalent(LeavittElement::one(m.target));
  report.unital = unital_holds;
  report.checks.push_back(
      {"unitality claim matches (claimed " + std::string(m.unital_claim ? "yes" : "no") +
           ", computed " + (unital_holds ? "yes" : "no") + ")",
       unital_holds == m.unital_claim, ""});

  // Property (P) witness: t in phi(1) L(F) and t^ t = 1.
  if (m.p_witness) {
    const LeavittElement& t = *m.p_witness;
    LeavittElement corner = (phi1 * t - t).normal_form();
    LeavittElement isom = (t.involute() * t - LeavittElement::one(m.target)).normal_form();
    bool ok = corner.is_zero() && isom.is_zero();
    report.property_p = ok;
    report.checks.push_back({"p_witness: phi(1).t = t", corner.is_zero(),
                             corner.is_zero() ? "" : to_string(corner)});
    report.checks.push_back({"p_witness: t^.t = 1", isom.is_zero(),
                             isom.is_zero() ? "" : to_string(isom)});
    report.notes.push_back(
        "property (P) convention: the witness is only required to lie in "
        "phi(1).L(F) and to satisfy t^.t = 1; no condition is imposed on t.t^.");
  }

  report.verified = report.failures().empty();
  m.verified = report.verified;
  return report;
}

GeneratorMap twist_hom(const GeneratorMap& m, const LeavittElement& u) {
  if (!m.verified) throw DataError("twist_hom: map has not been verified");
  LeavittElement phi1 = m.image_of_one();
  if (!(u.involute() * u).equivalent(phi1) || !(u * u.involute()).equivalent(phi1))
    throw DataError("twist_hom: u is not unitary over phi(1) (u^.u = u.u^ = phi(1) required)");
  GeneratorMap t = m;
  t.verified = false;
  for (auto& img : t.edge_images) img = (u * img).normal_form();
  HomReport rep = verify_hom(t);
  if (!rep.verified) {
    std::string detail;
    for (const RelationCheck* c : rep.failures()) {
      detail += " " + c->name + ";";
      if (detail.size() > 300) break;
    }
    throw DataError("twist_hom: twisted map failed re-verification:" + detail);
  }
  return t;
}

namespace {

std::shared_ptr<const Graph> graph_from_json(const nlohmann::json& j,
                                             const std::string& key) {
  if (!j.contains(key))
    throw DataError("generator map: missing '" + key + "'");
  const auto& node = j[key];
  if (node.is_string()) {
    std::ifstream in(node.get<std::string>());
    if (!in) throw DataError("generator map: cannot open graph file '" +
                             node.get<std::string>() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::make_shared<Graph>(parse_graph(buf.str()));
  }
  return std::make_shared<Graph>(parse_graph(node.dump()));
}

}  // namespace

GeneratorMap parse_generator_map(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("generator map: ") + e.what(), e.byte);
  }
  GeneratorMap m;
  m.source = graph_from_json(j, "source");
  m.target = graph_from_json(j, "target");
  if (!j.contains("vertex_images") || !j.contains("edge_images"))
    throw DataError("generator map: missing 'vertex_images' or 'edge_images'");

  auto parse_images = [&](const nlohmann::json& table, bool vertices) {
    std::vector<LeavittElement> out;
    size_t count = vertices ? m.source->num_vertices() : m.source->num_edges();
    for (size_t i = 0; i < count; ++i) {
      std::string name = vertices ? m.source->vertex(i) : m.source->edge(i).id;
      if (!table.contains(name))
        throw DataError("generator map: missing image for '" + name + "'");
      if (!table[name].is_string())
        throw DataError("generator map: image of '" + name + "' must be an expression string");
      out.push_back(parse_element(m.target, table[name].get<std::string>()));
    }
    if (table.size() != count)
      throw DataError("generator map: extra image entries do not match the source graph");
    return out;
  };
  m.vertex_images = parse_images(j["vertex_images"], true);
  m.edge_images = parse_images(j["edge_images"], false);

  if (j.contains("unital")) {
    if (!j["unital"].is_boolean())
      throw DataError("generator map: 'unital' must be a boolean");
    m.unital_claim = j["unital"].get<bool>();
  } else {
    // No claim given: infer it, so the unitality check never trips.
    LeavittElement phi1 = m.image_of_one();
    m.unital_claim = phi1.equivalent(LeavittElement::one(m.target));
  }
  if (j.contains("p_witness")) {
    if (!j["p_witness"].is_string())
      throw DataError("generator map: 'p_witness' must be an expression string");
    m.p_witness = parse_element(m.target, j["p_witness"].get<std::string>());
  }
  return m;
}

std::string serialize_generator_map(const GeneratorMap& m) {
  nlohmann::ordered_json j;
  j["source"] = nlohmann::ordered_json::parse(serialize_graph(*m.source));
  j["target"] = nlohmann::ordered_json::parse(serialize_graph(*m.target));
  j["vertex_images"] = nlohmann::ordered_json::object();
  for (size_t v = 0; v < m.source->num_vertices(); ++v)
    j["vertex_images"][m.source->vertex(v)] = to_string(m.vertex_images[v]);
  j["edge_images"] = nlohmann::ordered_json::object();
  for (size_t e = 0; e < m.source->num_edges(); ++e)
    j["edge_images"][m.source->edge(e).id] = to_string(m.edge_images[e]);
  j["unital"] = m.unital_claim;
  if (m.p_witness) j["p_witness"] = to_string(*m.p_witness);
  return j.dump();
}

}  // namespace graphk
