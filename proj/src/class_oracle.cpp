#include "bvc/class_oracle.hpp"

#include <deque>

#include "bvc/errors.hpp"

namespace bvc {

namespace {

bool is_forest(const Graph& g) {
  return g.num_edges() + connected_components(g).size() == static_cast<std::size_t>(g.num_vertices());
}

bool is_cluster(const Graph& g, int q) {
  for (const auto& part : connected_components(g)) {
    if (static_cast<int>(part.size()) > q) return false;
    for (Vertex v : part)
      if (g.degree(v) + 1 != static_cast<int>(part.size())) return false;
  }
  return true;
}

// Repeatedly put the neighbour of a leaf into the cover.
Cover forest_cover(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<char> alive(n, 1);
  std::vector<int> deg(n);
  std::deque<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) leaves.push_back(v);
  }
  Cover c;
  while (!leaves.empty()) {
    Vertex v = leaves.front();
    leaves.pop_front();
    if (!alive[v] || deg[v] != 1) continue;
    Vertex u = -1;
    for (Vertex w : g.neighbors(v))
      if (alive[w]) u = w;
    c.set.push_back(u);
    alive[u] = 0;
    for (Vertex w : g.neighbors(u))
      if (alive[w] && --deg[w] == 1) leaves.push_back(w);
  }
  c.set = make_vertex_set(std::move(c.set));
  return c;
}

Cover cluster_cover(const Graph& g) {
  Cover c;
  for (const auto& part : connected_components(g)) c.set.insert(c.set.end(), part.begin() + 1, part.end());
  c.set = make_vertex_set(std::move(c.set));
  return c;
}

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

ClassOracle::ClassOracle(ClassTag tag) : tag_(tag) {
  if (tag_.kind == ClassKind::cluster && tag_.q < 1) throw UnsupportedClassError("cluster class needs q >= 1");
}

bool ClassOracle::hereditary() const { return tag_.kind != ClassKind::lp; }

int ClassOracle::beta() const {
  switch (tag_.kind) {
    case ClassKind::empty: return 0;
    case ClassKind::indset: return 1;
    case ClassKind::forest:
    case ClassKind::bipartite:
    case ClassKind::lp: return 2;
    case ClassKind::cluster: return tag_.q;
  }
  return 0;
}

std::optional<int> ClassOracle::f_robust(int c) const {
  if (tag_.kind == ClassKind::lp) return 2 * c + 2;
  return std::nullopt;
}

bool ClassOracle::member(const Graph& g) const {
  switch (tag_.kind) {
    case ClassKind::empty: return g.num_vertices() == 0;
    case ClassKind::indset: return g.num_edges() == 0;
    case ClassKind::forest: return is_forest(g);
    case ClassKind::bipartite: return bipartition(g).has_value();
    case ClassKind::cluster: return is_cluster(g, tag_.q);
    case ClassKind::lp:
      if (g.num_edges() == 0) return true;
      return lp_doubled(g) == 2 * solve_vc_exact(g, ExactOptions{.lp_bound = true}).size();
  }
  return false;
}

Cover ClassOracle::solve_in_class(const Graph& g) const {
  if (g.num_edges() == 0) return {};
  switch (tag_.kind) {
    case ClassKind::forest:
      if (is_forest(g)) return forest_cover(g);
      break;
    case ClassKind::bipartite:
      if (auto sides = bipartition(g)) return konig_cover(g, sides->first, sides->second);
      break;
    case ClassKind::cluster:
      if (is_cluster(g, tag_.q)) return cluster_cover(g);
      break;
    case ClassKind::lp: return solve_vc_exact(g, ExactOptions{.lp_bound = true});
    default: break;
  }
  return solve_vc_exact(g);
}

long long hereditary_blocking_bound(int beta, int d) {
  if (d < 0) throw InputError("depth must be non-negative");
  if (beta <= 0) return 0;
  if (beta == 1) return d == 0 ? 1 : (1LL << (d - 1)) + 1;
  return static_cast<long long>(beta - 1) * (1LL << d) + 1;
}

int ClassOracle::beta_upper_bound(int d) const {
  if (d < 0) throw InputError("depth must be non-negative");
  if (tag_.kind == ClassKind::empty) {
    // Elimination distance to the empty graph is one more than to edgeless graphs.
    return d == 0 ? 0 : static_cast<int>(hereditary_blocking_bound(1, d - 1));
  }
  if (hereditary()) return static_cast<int>(hereditary_blocking_bound(beta(), d));
  long long total = 0;
  for (int i = 0; i <= d; ++i) total += binomial(d, i) * *f_robust(i);
  return static_cast<int>(total - (1LL << d) + 1);
}

}  // namespace bvc
