#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace bvc {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

VertexSet make_vertex_set(std::vector<Vertex> ids);
bool contains(const VertexSet& s, Vertex v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet full_set(int n);

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Throws InputError on out-of-range ids, self-loops, or repeated edges.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  std::size_t num_edges() const { return m_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  // Union of neighborhoods of s, excluding s itself.
  VertexSet open_neighborhood(const VertexSet& s) const;
  VertexSet closed_neighborhood(const VertexSet& s) const;
  bool is_independent(const VertexSet& s) const;
  bool is_vertex_cover(const VertexSet& s) const;

  bool operator==(const Graph& other) const = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

// Subgraph together with the id translation in both directions.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;    // new id -> old id
  std::vector<Vertex> from_parent;  // old id -> new id, or -1 if dropped

  VertexSet lift(const VertexSet& s) const;   // new ids -> old ids
  VertexSet lower(const VertexSet& s) const;  // old ids -> new ids, dropping absent ones
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& s);
Subgraph remove_vertices(const Graph& g, const VertexSet& s);

// Parts ordered by minimum vertex id.
std::vector<VertexSet> connected_components(const Graph& g);

Graph disjoint_union(const Graph& g1, const Graph& g2);

// Adds vertex n adjacent to exactly `nbrs`.
Graph add_apex(const Graph& g, const VertexSet& nbrs);
Graph add_edges(const Graph& g, std::span<const Edge> extra);

// Small named graphs used by tests, gadgets and the CLI.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph petersen_graph();

// d-uniform hypergraph; each edge is stored sorted.
struct Hypergraph {
  int n = 0;
  int arity = 2;
  std::vector<VertexSet> edges;

  void validate() const;
  bool is_vertex_cover(const VertexSet& s) const;
  bool operator==(const Hypergraph& other) const = default;
};

}  // namespace bvc
