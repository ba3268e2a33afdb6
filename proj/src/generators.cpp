#include "bvc/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bvc/errors.hpp"

namespace bvc::gen {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Graph random_graph(Rng& rng, int n, double p) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng, p)) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph random_bipartite(Rng& rng, int n, double p) {
  std::vector<int> side(n);
  for (auto& s : side) s = coin(rng, 0.5);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (side[u] != side[v] && coin(rng, p)) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph random_forest(Rng& rng, int n) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v)
    if (coin(rng, 0.8)) e.emplace_back(uniform(rng, 0, v - 1), v);
  return Graph::from_edges(n, e);
}

Graph random_cluster(Rng& rng, int n, int q) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Edge> e;
  for (int i = 0; i < n;) {
    const int size = std::min(n - i, uniform(rng, 1, q));
    for (int a = i; a < i + size; ++a)
      for (int b = a + 1; b < i + size; ++b) e.emplace_back(std::min(order[a], order[b]), std::max(order[a], order[b]));
    i += size;
  }
  return Graph::from_edges(n, e);
}

VertexSet random_subset(Rng& rng, int n, double p) {
  VertexSet s;
  for (int v = 0; v < n; ++v)
    if (coin(rng, p)) s.push_back(v);
  return s;
}

VertexSet random_fixed_subset(Rng& rng, int n, int size) {
  if (size < 0 || size > n) throw InputError("subset size out of range");
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(size);
  return make_vertex_set(all);
}

Hypergraph random_hypergraph(Rng& rng, int n, int arity, int m) {
  Hypergraph h{n, arity, {}};
  std::set<VertexSet> seen;
  // Distinct edges; stops early when the sampler keeps hitting existing ones.
  for (int attempt = 0; static_cast<int>(h.edges.size()) < m && attempt < 50 * (m + 1); ++attempt) {
    VertexSet e = random_fixed_subset(rng, n, arity);
    if (seen.insert(e).second) h.edges.push_back(std::move(e));
  }
  h.validate();
  return h;
}

Graph random_member(Rng& rng, const ClassOracle& oracle, int n) {
  switch (oracle.tag().kind) {
    case ClassKind::empty:
      if (n != 0) throw InputError("the empty class has no nonempty members");
      return Graph(0);
    case ClassKind::indset: return Graph(n);
    case ClassKind::forest: return random_forest(rng, n);
    case ClassKind::bipartite: return random_bipartite(rng, n, 0.4);
    case ClassKind::cluster: return random_cluster(rng, n, oracle.tag().q);
    case ClassKind::lp:
      // Rejection sampling over sparse graphs; bipartite graphs are a safe fallback.
      for (int attempt = 0; attempt < 40; ++attempt) {
        Graph g = random_graph(rng, n, 0.25 + 0.1 * (attempt % 3));
        if (oracle.member(g)) return g;
      }
      return random_bipartite(rng, n, 0.4);
  }
  return Graph(n);
}

namespace {

struct Planter {
  Rng& rng;
  const ClassOracle& oracle;
  EliminationForest forest;
  std::vector<Edge> edges;
  int next_id = 0;

  // Plants a subtree over `n` fresh vertices; returns the vertices used.
  VertexSet plant(int n, int depth, int parent) {
    const bool empty_class = oracle.tag().kind == ClassKind::empty;
    const bool make_leaf = n == 0 || depth == 0 || (!empty_class && n <= 2) || (!empty_class && coin(rng, 0.2));
    if (make_leaf) {
      if (empty_class) {
        forest.add_leaf(parent, {});
        return {};
      }
      Graph member = random_member(rng, oracle, n);
      VertexSet ids(n);
      std::iota(ids.begin(), ids.end(), next_id);
      for (auto [u, v] : member.edges()) edges.emplace_back(next_id + u, next_id + v);
      next_id += n;
      forest.add_leaf(parent, ids);
      return ids;
    }
    const Vertex r = next_id++;
    const int node = forest.add_internal(parent, r);
    int remaining = n - 1;
    VertexSet below;
    if (remaining == 0) {
      forest.add_leaf(node, {});
    } else {
      const int parts = uniform(rng, 1, std::min(3, remaining));
      for (int i = 0; i < parts; ++i) {
        const int size = i + 1 == parts ? remaining : uniform(rng, 1, remaining - (parts - i - 1));
        remaining -= size;
        VertexSet sub = plant(size, depth - 1, node);
        below.insert(below.end(), sub.begin(), sub.end());
      }
    }
    for (Vertex w : below)
      if (coin(rng, 0.5)) edges.emplace_back(r, w);
    below.push_back(r);
    return make_vertex_set(std::move(below));
  }
};

}  // namespace

std::pair<Graph, EliminationForest> planted_graph(Rng& rng, const ClassOracle& oracle, int n, int depth) {
  Planter p{rng, oracle, {}, {}, 0};
  p.plant(n, depth, -1);
  return {Graph::from_edges(p.next_id, p.edges), std::move(p.forest)};
}

namespace {

// Wires `x_size` modulator vertices into h and shuffles all ids.
PlantedInstance wire_modulator(Rng& rng, const ClassOracle& oracle, const Graph& h, const EliminationForest& forest,
                               int x_size, int depth, double x_density) {
  const int hn = h.num_vertices();
  const int n = hn + x_size;
  std::vector<Edge> edges = h.edges();
  for (int a = hn; a < n; ++a) {
    for (int v = 0; v < hn; ++v)
      if (coin(rng, x_density)) edges.emplace_back(v, a);
    for (int b = a + 1; b < n; ++b)
      if (coin(rng, 0.3)) edges.emplace_back(a, b);
  }
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [u, v] : edges) {
    u = perm[u];
    v = perm[v];
    if (u > v) std::swap(u, v);
  }
  PlantedInstance out;
  out.inst.g = Graph::from_edges(n, edges);
  for (int a = hn; a < n; ++a) out.inst.x.push_back(perm[a]);
  out.inst.x = make_vertex_set(out.inst.x);
  out.inst.tag = oracle.tag();
  out.inst.depth = depth;
  Subgraph rest_graph = remove_vertices(out.inst.g, out.inst.x);
  std::vector<Vertex> h_to_rest(hn);
  for (int v = 0; v < hn; ++v) h_to_rest[v] = rest_graph.from_parent[perm[v]];
  out.forest = forest.project(forest.roots(), h_to_rest);
  return out;
}

void append_forest(EliminationForest& dst, const EliminationForest& src, int offset) {
  std::vector<int> id_map(src.nodes().size());
  for (std::size_t i = 0; i < src.nodes().size(); ++i) {
    const ForestNode& node = src.node(static_cast<int>(i));
    const int parent = node.parent < 0 ? -1 : id_map[node.parent];
    if (node.leaf) {
      VertexSet bag;
      for (Vertex v : node.bag) bag.push_back(v + offset);
      id_map[i] = dst.add_leaf(parent, std::move(bag));
    } else {
      id_map[i] = dst.add_internal(parent, node.bag.front() + offset);
    }
  }
}

}  // namespace

PlantedInstance planted_instance(Rng& rng, const ClassOracle& oracle, int rest, int x_size, int depth, double x_density) {
  auto [h, forest] = planted_graph(rng, oracle, rest, depth);
  return wire_modulator(rng, oracle, h, forest, x_size, depth, x_density);
}

PlantedInstance scattered_instance(Rng& rng, const ClassOracle& oracle, int rest, int max_part, int x_size, int depth,
                                   double x_density) {
  Graph h(0);
  EliminationForest forest;
  while (h.num_vertices() < rest) {
    const int size = std::min(uniform(rng, 1, std::max(1, max_part)), rest - h.num_vertices());
    auto [part, part_forest] = planted_graph(rng, oracle, size, depth);
    append_forest(forest, part_forest, h.num_vertices());
    h = disjoint_union(h, part);
  }
  return wire_modulator(rng, oracle, h, forest, x_size, depth, x_density);
}

}  // namespace bvc::gen
