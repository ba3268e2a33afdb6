#include "bvc/brute_force.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "bvc/errors.hpp"

namespace bvc::brute {

namespace {

using Mask = std::uint32_t;

void require_small(int n, int limit) {
  if (n > limit) throw ResourceError("brute force limited to " + std::to_string(limit) + " vertices");
}

bool covers(const std::vector<Edge>& edges, Mask s) {
  for (auto [u, v] : edges)
    if (!(s >> u & 1) && !(s >> v & 1)) return false;
  return true;
}

VertexSet to_set(Mask m) {
  VertexSet s;
  for (; m; m &= m - 1) s.push_back(std::countr_zero(m));
  return s;
}

Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) m |= Mask{1} << v;
  return m;
}

}  // namespace

int opt(const Graph& g) {
  const int n = g.num_vertices();
  require_small(n, 24);
  const auto edges = g.edges();
  int best = n;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    const int size = std::popcount(s);
    if (size < best && covers(edges, s)) best = size;
  }
  return best;
}

std::vector<VertexSet> all_minimum_covers(const Graph& g) {
  const int n = g.num_vertices();
  require_small(n, 24);
  const int best = opt(g);
  const auto edges = g.edges();
  std::vector<VertexSet> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s)
    if (std::popcount(s) == best && covers(edges, s)) out.push_back(to_set(s));
  return out;
}

bool blocking(const Graph& g, const VertexSet& y) {
  const Mask ym = to_mask(y);
  for (const auto& c : all_minimum_covers(g))
    if ((to_mask(c) & ym) == ym) return false;
  return true;
}

bool minimal_blocking(const Graph& g, const VertexSet& y) {
  const Mask ym = to_mask(y);
  if (ym == 0) return false;
  std::vector<Mask> mins;
  for (const auto& c : all_minimum_covers(g)) mins.push_back(to_mask(c));
  auto blocks = [&](Mask s) {
    return std::none_of(mins.begin(), mins.end(), [&](Mask c) { return (c & s) == s; });
  };
  if (!blocks(ym)) return false;
  for (Mask sub = (ym - 1) & ym;; sub = (sub - 1) & ym) {
    if (blocks(sub)) return false;
    if (sub == 0) break;
  }
  return true;
}

int beta(const Graph& g) {
  const int n = g.num_vertices();
  require_small(n, 16);
  std::vector<Mask> mins;
  for (const auto& c : all_minimum_covers(g)) mins.push_back(to_mask(c));
  std::vector<char> blocks(std::size_t{1} << n);
  for (Mask s = 0; s < (Mask{1} << n); ++s)
    blocks[s] = std::none_of(mins.begin(), mins.end(), [&](Mask c) { return (c & s) == s; });
  int best = 0;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    if (!blocks[s] || std::popcount(s) <= best) continue;
    bool minimal = true;
    for (Mask sub = (s - 1) & s; minimal; sub = (sub - 1) & s) {
      if (blocks[sub]) minimal = false;
      if (sub == 0) break;
    }
    if (minimal) best = std::popcount(s);
  }
  return best;
}

LpOptimum lp(const Graph& g) {
  const int n = g.num_vertices();
  require_small(n, 13);
  const auto edges = g.edges();
  std::vector<int> x(n, 0);  // doubled values in {0,1,2}
  LpOptimum best{2 * n + 1, n + 1};
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    int sum = 0, halves = 0;
    for (int i = 0; i < n; ++i) {
      x[i] = static_cast<int>(c % 3);
      c /= 3;
      sum += x[i];
      halves += x[i] == 1;
    }
    if (sum > best.doubled_value) continue;
    bool feasible = std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return x[e.first] + x[e.second] >= 2; });
    if (!feasible) continue;
    if (sum < best.doubled_value) best = {sum, halves};
    else best.min_half_support = std::min(best.min_half_support, halves);
  }
  return best;
}

int hypergraph_opt(const Hypergraph& h) {
  require_small(h.n, 24);
  std::vector<Mask> edges;
  for (const auto& e : h.edges) edges.push_back(to_mask(e));
  int best = h.n;
  for (Mask s = 0; s < (Mask{1} << h.n); ++s) {
    if (std::popcount(s) >= best) continue;
    if (std::all_of(edges.begin(), edges.end(), [&](Mask e) { return (e & s) != 0; })) best = std::popcount(s);
  }
  return best;
}

int path_treedepth(int n) {
  int d = 0;
  while ((1 << d) < n + 1) ++d;
  return d;
}

}  // namespace bvc::brute
