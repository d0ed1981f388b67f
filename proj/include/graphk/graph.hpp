// Finite directed graphs with named vertices and edges. Input order of
// vertices and edges is canonical: it fixes matrix indexing and thereby
// the coordinates of every derived group element.

#ifndef GRAPHK_GRAPH_HPP_
#define GRAPHK_GRAPH_HPP_

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "graphk/intmatrix.hpp"

namespace graphk {

struct Edge {
  std::string id;
  std::string src;
  std::string dst;
};

class Graph {
 public:
  Graph() = default;
  // Validates: unique identifiers (vertices and edges share one
  // namespace), declared endpoints.
  Graph(std::vector<std::string> vertices, std::vector<Edge> edges);

  size_t num_vertices() const { return vertices_.size(); }
  size_t num_edges() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::string& vertex(size_t i) const { return vertices_[i]; }
  const Edge& edge(size_t i) const { return edges_[i]; }

  bool has_vertex(const std::string& name) const;
  bool has_edge(const std::string& name) const;
  size_t vertex_index(const std::string& name) const;  // throws DataError
  size_t edge_index(const std::string& name) const;    // throws DataError

  size_t edge_src(size_t e) const { return edge_src_[e]; }
  size_t edge_dst(size_t e) const { return edge_dst_[e]; }

  // Edge indices with the given source, in input order.
  const std::vector<size_t>& out_edges(size_t v) const { return out_edges_[v]; }
  const std::vector<size_t>& in_edges(size_t v) const { return in_edges_[v]; }

  friend bool operator==(const Graph& a, const Graph& b);
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<size_t> edge_src_, edge_dst_;
  std::vector<std::vector<size_t>> out_edges_, in_edges_;
  std::unordered_map<std::string, size_t> vertex_index_, edge_index_;
};

// Graph file format: {"vertices": [...], "edges": [[id, src, dst], ...]}.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

// True iff every vertex emits at least one edge.
bool is_regular(const Graph& g);
void require_regular(const Graph& g, const std::string& who);

// A_E[v][w] counts edges v -> w. With this convention the Bowen-Franks
// group is Coker(I - A_E^t); both conventions occur in the literature.
IntMatrix incidence_matrix(const Graph& g);

// Same vertices, every edge reversed; edge ids are kept.
Graph transpose_graph(const Graph& g);

// Deletes vertices that receive no edges (with their outgoing edges)
// until none remain. Requires a regular input; the result is essential
// and regular, and the operation is idempotent.
Graph source_removal(const Graph& g);

// One vertex "v" and n loops "e1".."en".
Graph rose(size_t n);

// Adds two fresh vertices u1, u2 and the six edges
// v->u1, u1->v, u1->u1, u1->u2, u2->u1, u2->u2.
Graph cuntz_splice(const Graph& g, const std::string& vertex);

}  // namespace graphk

#endif  // GRAPHK_GRAPH_HPP_
