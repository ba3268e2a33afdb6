#pragma once

#include <cstdint>
#include <random>

#include "bvc/class_oracle.hpp"
#include "bvc/elimination.hpp"
#include "bvc/graph.hpp"
#include "bvc/instance.hpp"

// Seeded random instances for property tests and verification suites.
namespace bvc::gen {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20240611;

int uniform(Rng& rng, int lo, int hi);  // inclusive
bool coin(Rng& rng, double p);

Graph random_graph(Rng& rng, int n, double p);
Graph random_bipartite(Rng& rng, int n, double p);
Graph random_forest(Rng& rng, int n);
Graph random_cluster(Rng& rng, int n, int q);
VertexSet random_subset(Rng& rng, int n, double p);
// Exactly `size` distinct vertices out of n, sorted.
VertexSet random_fixed_subset(Rng& rng, int n, int size);

// Up to m distinct hyperedges of the given arity (fewer only when rejection keeps failing).
Hypergraph random_hypergraph(Rng& rng, int n, int arity, int m);

// A member of the oracle's class on exactly n vertices.
Graph random_member(Rng& rng, const ClassOracle& oracle, int n);

struct PlantedInstance {
  ModulatorInstance inst;
  EliminationForest forest;  // witness for g - x, in the ids of g - x
};

// G - X is built around a planted elimination forest of height <= depth
// with `rest` vertices; X has `x_size` vertices wired randomly into it.
PlantedInstance planted_instance(Rng& rng, const ClassOracle& oracle, int rest, int x_size, int depth, double x_density);

// Like planted_instance, but G - X is a disjoint union of planted parts with
// at most `max_part` vertices each, so Rule 1 has many components to weigh.
PlantedInstance scattered_instance(Rng& rng, const ClassOracle& oracle, int rest, int max_part, int x_size, int depth,
                                   double x_density);

// Graph with a planted forest of height <= depth over `n` vertices.
std::pair<Graph, EliminationForest> planted_graph(Rng& rng, const ClassOracle& oracle, int n, int depth);

}  // namespace bvc::gen
