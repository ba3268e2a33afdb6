#include "bvc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bvc/errors.hpp"

namespace bvc {

VertexSet make_vertex_set(std::vector<Vertex> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet full_set(int n) {
  VertexSet s(n);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

Graph::Graph(int n) : adj_(n < 0 ? 0 : n) {
  if (n < 0) throw InputError("negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range for n=" + std::to_string(n));
    if (u == v) throw InputError("self-loop at " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) throw InputError("repeated edge");
  }
  g.m_ = edges.size();
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < num_vertices(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet Graph::open_neighborhood(const VertexSet& s) const {
  std::vector<Vertex> out;
  for (Vertex v : s) out.insert(out.end(), adj_[v].begin(), adj_[v].end());
  return set_difference(make_vertex_set(std::move(out)), s);
}

VertexSet Graph::closed_neighborhood(const VertexSet& s) const { return set_union(open_neighborhood(s), s); }

bool Graph::is_independent(const VertexSet& s) const {
  for (Vertex v : s)
    for (Vertex u : adj_[v])
      if (contains(s, u)) return false;
  return true;
}

bool Graph::is_vertex_cover(const VertexSet& s) const {
  std::vector<char> in(num_vertices(), 0);
  for (Vertex v : s) in[v] = 1;
  for (Vertex u = 0; u < num_vertices(); ++u)
    if (!in[u])
      for (Vertex v : adj_[u])
        if (!in[v]) return false;
  return true;
}

VertexSet Subgraph::lift(const VertexSet& s) const {
  VertexSet out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(to_parent[v]);
  return make_vertex_set(std::move(out));
}

VertexSet Subgraph::lower(const VertexSet& s) const {
  VertexSet out;
  for (Vertex v : s)
    if (v >= 0 && v < static_cast<Vertex>(from_parent.size()) && from_parent[v] >= 0) out.push_back(from_parent[v]);
  return make_vertex_set(std::move(out));
}

namespace {
void check_ids(const Graph& g, const VertexSet& s) {
  for (Vertex v : s)
    if (v < 0 || v >= g.num_vertices())
      throw InputError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(g.num_vertices()));
}
}  // namespace

Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  check_ids(g, s);
  Subgraph sub;
  sub.from_parent.assign(g.num_vertices(), -1);
  for (Vertex v : s) {
    if (sub.from_parent[v] >= 0) continue;
    sub.from_parent[v] = static_cast<Vertex>(sub.to_parent.size());
    sub.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (Vertex nv = 0; nv < static_cast<Vertex>(sub.to_parent.size()); ++nv)
    for (Vertex u : g.neighbors(sub.to_parent[nv])) {
      Vertex nu = sub.from_parent[u];
      if (nu > nv) edges.emplace_back(nv, nu);
    }
  sub.graph = Graph::from_edges(static_cast<int>(sub.to_parent.size()), edges);
  return sub;
}

Subgraph remove_vertices(const Graph& g, const VertexSet& s) {
  check_ids(g, s);
  return induced_subgraph(g, set_difference(full_set(g.num_vertices()), make_vertex_set(s)));
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> parts;
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (seen[s]) continue;
    VertexSet part;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      part.push_back(v);
      for (Vertex u : g.neighbors(v))
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  std::vector<Edge> edges = g1.edges();
  const int shift = g1.num_vertices();
  for (auto [u, v] : g2.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edges(shift + g2.num_vertices(), edges);
}

Graph add_apex(const Graph& g, const VertexSet& nbrs) {
  check_ids(g, nbrs);
  std::vector<Edge> edges = g.edges();
  const Vertex apex = g.num_vertices();
  for (Vertex v : nbrs) edges.emplace_back(v, apex);
  return Graph::from_edges(apex + 1, edges);
}

Graph add_edges(const Graph& g, std::span<const Edge> extra) {
  std::vector<Edge> edges = g.edges();
  edges.insert(edges.end(), extra.begin(), extra.end());
  return Graph::from_edges(g.num_vertices(), edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, e);
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph::from_edges(10, e);
}

void Hypergraph::validate() const {
  if (n < 0) throw InputError("negative hypergraph vertex count");
  if (arity < 2) throw InputError("hyperedge arity must be at least 2");
  for (const auto& e : edges) {
    if (static_cast<int>(e.size()) != arity) throw InputError("hyperedge has wrong arity");
    if (!std::is_sorted(e.begin(), e.end()) || std::adjacent_find(e.begin(), e.end()) != e.end())
      throw InputError("hyperedge vertices must be distinct");
    for (Vertex v : e)
      if (v < 0 || v >= n) throw InputError("hyperedge vertex out of range");
  }
}

bool Hypergraph::is_vertex_cover(const VertexSet& s) const {
  return std::all_of(edges.begin(), edges.end(), [&](const VertexSet& e) {
    return std::any_of(e.begin(), e.end(), [&](Vertex v) { return contains(s, v); });
  });
}

}  // namespace bvc
