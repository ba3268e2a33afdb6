#pragma once

#include <vector>

#include "bvc/graph.hpp"

// Exhaustive reference implementations. They share no code with the solvers
// they check and are only meant for graphs of at most ~20 vertices.
namespace bvc::brute {

// Minimum vertex cover size by scanning all subsets.
int opt(const Graph& g);

// All minimum vertex covers, as sorted vertex sets.
std::vector<VertexSet> all_minimum_covers(const Graph& g);

// Y blocks iff it is contained in no minimum cover.
bool blocking(const Graph& g, const VertexSet& y);

// Minimality against every proper subset, not just one-smaller ones.
bool minimal_blocking(const Graph& g, const VertexSet& y);

// Largest minimal blocking set size over all subsets of V; 0 on the empty graph.
int beta(const Graph& g);

struct LpOptimum {
  int doubled_value = 0;
  int min_half_support = 0;  // fewest half-valued vertices among optima
};
// Enumerates every {0, 1/2, 1} assignment (3^n, so n <= ~12).
LpOptimum lp(const Graph& g);

int hypergraph_opt(const Hypergraph& h);

// Treedepth of the path on n vertices: ceil(log2(n + 1)).
int path_treedepth(int n);

}  // namespace bvc::brute
