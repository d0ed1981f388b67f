#include "graphk/graph.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "graphk/error.hpp"

namespace graphk {

Graph::Graph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].empty()) throw DataError("empty vertex identifier");
    if (!vertex_index_.emplace(vertices_[i], i).second)
      throw DataError("duplicate identifier '" + vertices_[i] + "'");
  }
  out_edges_.resize(vertices_.size());
  in_edges_.resize(vertices_.size());
  for (size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.id.empty()) throw DataError("empty edge identifier");
    if (vertex_index_.count(e.id) || !edge_index_.emplace(e.id, i).second)
      throw DataError("duplicate identifier '" + e.id + "'");
    auto s = vertex_index_.find(e.src);
    if (s == vertex_index_.end())
      throw DataError("edge '" + e.id + "' has undeclared endpoint '" + e.src + "'");
    auto d = vertex_index_.find(e.dst);
    if (d == vertex_index_.end())
      throw DataError("edge '" + e.id + "' has undeclared endpoint '" + e.dst + "'");
    edge_src_.push_back(s->second);
    edge_dst_.push_back(d->second);
    out_edges_[s->second].push_back(i);
    in_edges_[d->second].push_back(i);
  }
}

bool Graph::has_vertex(const std::string& name) const {
  return vertex_index_.count(name) > 0;
}

bool Graph::has_edge(const std::string& name) const {
  return edge_index_.count(name) > 0;
}

size_t Graph::vertex_index(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end())
    throw DataError("unknown vertex '" + name + "'");
  return it->second;
}

size_t Graph::edge_index(const std::string& name) const {
  auto it = edge_index_.find(name);
  if (it == edge_index_.end()) throw DataError("unknown edge '" + name + "'");
  return it->second;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.vertices_ != b.vertices_) return false;
  if (a.edges_.size() != b.edges_.size()) return false;
  for (size_t i = 0; i < a.edges_.size(); ++i) {
    const Edge& x = a.edges_[i];
    const Edge& y = b.edges_[i];
    if (x.id != y.id || x.src != y.src || x.dst != y.dst) return false;
  }
  return true;
}

Graph parse_graph(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("graph: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw DataError("graph: expected an object with 'vertices' and 'edges'");
  if (!j["vertices"].is_array() || !j["edges"].is_array())
    throw DataError("graph: 'vertices' and 'edges' must be arrays");
  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw DataError("graph: vertex names must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() ||
        !e[1].is_string() || !e[2].is_string())
      throw DataError("graph: each edge must be a [id, src, dst] triple of strings");
    edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(),
                     e[2].get<std::string>()});
  }
  return Graph(std::move(vertices), std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = g.vertices();
  j["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges())
    j["edges"].push_back({e.id, e.src, e.dst});
  return j.dump();
}

bool is_regular(const Graph& g) {
  for (size_t v = 0; v < g.num_vertices(); ++v)
    if (g.out_edges(v).empty()) return false;
  return true;
}

void require_regular(const Graph& g, const std::string& who) {
  if (!is_regular(g)) {
    for (size_t v = 0; v < g.num_vertices(); ++v)
      if (g.out_edges(v).empty())
        throw DataError(who + ": graph is not regular (vertex '" + g.vertex(v) +
                        "' emits no edge)");
  }
}

IntMatrix incidence_matrix(const Graph& g) {
  IntMatrix a(g.num_vertices(), g.num_vertices());
  for (size_t e = 0; e < g.num_edges(); ++e)
    a.at(g.edge_src(e), g.edge_dst(e)) += 1;
  return a;
}

Graph transpose_graph(const Graph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back({e.id, e.dst, e.src});
  return Graph(g.vertices(), std::move(edges));
}

Graph source_removal(const Graph& g) {
  require_regular(g, "source_removal");
  std::vector<std::string> vertices = g.vertices();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (;;) {
    std::set<std::string> receives;
    for (const Edge& e : edges) receives.insert(e.dst);
    std::vector<std::string> keep;
    for (const std::string& v : vertices)
      if (receives.count(v)) keep.push_back(v);
    if (keep.size() == vertices.size()) break;
    if (keep.empty())
      throw DataError("source_removal: removal exhausts the graph");
    std::set<std::string> kept(keep.begin(), keep.end());
    std::vector<Edge> remaining;
    for (const Edge& e : edges)
      if (kept.count(e.src)) remaining.push_back(e);
    vertices = std::move(keep);
    edges = std::move(remaining);
  }
  return Graph(std::move(vertices), std::move(edges));
}

Graph rose(size_t n) {
  if (n == 0) throw DataError("rose: need at least one loop");
  std::vector<Edge> edges;
  for (size_t i = 1; i <= n; ++i)
    edges.push_back({"e" + std::to_string(i), "v", "v"});
  return Graph({"v"}, std::move(edges));
}

namespace {

// Smallest suffix making all eight splice names fresh in g.
std::string splice_suffix(const Graph& g, const std::string& v) {
  auto taken = [&](const std::string& name) {
    return g.has_vertex(name) || g.has_edge(name);
  };
  for (size_t k = 0;; ++k) {
    std::string suffix = k == 0 ? "" : "_" + std::to_string(k + 1);
    std::vector<std::string> names = {"u1", "u2", "f1", "f2", "f3", "f4", "f5", "f6"};
    bool ok = true;
    for (auto& n : names)
      if (taken(n + suffix)) ok = false;
    (void)v;
    if (ok) return suffix;
  }
}

}  // namespace

Graph cuntz_splice(const Graph& g, const std::string& vertex) {
  size_t vi = g.vertex_index(vertex);
  (void)vi;
  std::string sfx = splice_suffix(g, vertex);
  std::string u1 = "u1" + sfx, u2 = "u2" + sfx;
  std::vector<std::string> vertices = g.vertices();
  vertices.push_back(u1);
  vertices.push_back(u2);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.push_back({"f1" + sfx, vertex, u1});
  edges.push_back({"f2" + sfx, u1, vertex});
  edges.push_back({"f3" + sfx, u1, u1});
  edges.push_back({"f4" + sfx, u1, u2});
  edges.push_back({"f5" + sfx, u2, u1});
  edges.push_back({"f6" + sfx, u2, u2});
  return Graph(std::move(vertices), std::move(edges));
}

}  // namespace graphk
