#pragma once

#include <optional>
#include <vector>

#include "bvc/graph.hpp"

namespace bvc {

struct Cover {
  VertexSet set;
  int size() const { return static_cast<int>(set.size()); }
};

// Matching edges are stored (left endpoint, right endpoint) when produced by
// the bipartite routines, sorted by left endpoint.
struct Matching {
  std::vector<Edge> edges;
  int size() const { return static_cast<int>(edges.size()); }
  bool is_valid(const Graph& g) const;
};

struct HalfIntegralSolution {
  VertexSet v0, v_half, v1;
  int doubled_value = 0;  // 2 * LP(G)
};

// Either the matching saturates `left`, or `violator` is a nonempty Hall
// violator and `matching` saturates left \ violator avoiding N[violator].
struct SaturationResult {
  Matching matching;
  VertexSet violator;
  bool saturating() const { return violator.empty(); }
};

struct ExactOptions {
  // Prune with the LP bound in addition to the greedy matching bound.
  bool lp_bound = false;
};

// Branch and bound: branch on max-degree vertex (smallest id on ties), taking
// the vertex before taking its neighborhood; the first optimum found is kept.
Cover solve_vc_exact(const Graph& g, ExactOptions opts = {});
// Minimum cover if OPT <= budget, nullopt otherwise.
std::optional<Cover> solve_vc_exact(const Graph& g, int budget, ExactOptions opts = {});
int opt_value(const Graph& g);

Matching max_matching_bipartite(const Graph& g, const VertexSet& left, const VertexSet& right);
SaturationResult saturate_or_violator(const Graph& g, const VertexSet& left, const VertexSet& right);

// Minimum vertex cover of a bipartite graph from a maximum matching.
Cover konig_cover(const Graph& g, const VertexSet& left, const VertexSet& right);

// 2 * LP(G), via a maximum matching of the bipartite double cover.
int lp_doubled(const Graph& g);
HalfIntegralSolution lp_half_integral(const Graph& g);

// lp_half_integral plus the persistence identities checked; throws
// InvariantViolation if they fail.
HalfIntegralSolution nemhauser_trotter(const Graph& g);

// Two-colouring, or nullopt if g has an odd cycle. Colour-0 side listed first.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

}  // namespace bvc
