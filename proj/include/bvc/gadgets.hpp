#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bvc/class_oracle.hpp"
#include "bvc/graph.hpp"
#include "bvc/instance.hpp"

namespace bvc {

// A graph with a claimed minimal blocking set, optimum and elimination distance.
struct GadgetWitness {
  Graph graph;
  VertexSet blocking_set;
  int claimed_opt = 0;
  int claimed_ed = 0;
  ClassTag base;
};

struct GadgetOptions {
  bool verify = true;     // check every constructed witness
  bool verify_ed = true;  // includes the (most expensive) distance check
};

// Throws InvariantViolation naming the first claim that fails.
void verify_witness(const GadgetWitness& w, bool check_ed = true);

// Wraps (h, y) after checking y is minimal blocking (ContractError otherwise);
// opt and distance are computed.
GadgetWitness make_witness(const Graph& h, const VertexSet& y, const ClassTag& base);

// Adds one vertex adjacent to exactly Y; the new blocking set is Y plus it.
GadgetWitness attach_blocker_apex(const GadgetWitness& w, GadgetOptions opts = {});

// Disjoint union joined by the edge {pick1, pick2}; both picks leave the
// blocking set. Requires |Y1| >= 2. pick2 defaults to the smallest id of Y2.
GadgetWitness glue_on_blockers(const GadgetWitness& w1, Vertex pick1, const GadgetWitness& w2,
                               std::optional<Vertex> pick2 = std::nullopt, GadgetOptions opts = {});

// Apex on Y, then glue a second copy onto the apex: blocking set 2|Y| - 1.
GadgetWitness double_blocking_gadget(const GadgetWitness& w, GadgetOptions opts = {});

// Member of the class carrying a minimal blocking set of size beta:
// K1 (indset), K_q (cluster:q), P4 ends (forest), C4 edge (bipartite), K2 (lp).
GadgetWitness base_witness(const ClassOracle& oracle);

// Levels 1..d of the lower-bound tower built from `base`.
std::vector<GadgetWitness> build_lb_tower_levels(const ClassOracle& oracle, const GadgetWitness& base, int d,
                                                 GadgetOptions opts = {});
GadgetWitness build_lb_tower(const ClassOracle& oracle, const GadgetWitness& base, int d, GadgetOptions opts = {});

// Blocking-set size the tower reaches at level d.
long long tower_blocking_size(int base_size, int d);

// One modulator vertex per hypergraph vertex and one copy of h per hyperedge;
// the q-th blocking vertex of copy j (ascending ids) is joined to the q-th
// vertex of edge j (ascending ids). k' = m * OPT(h) + k. Each copy must lie at
// distance <= depth from the tagged class.
ModulatorInstance transform_hypergraph_vc(const Hypergraph& hyp, int k, const Graph& h, const VertexSet& b,
                                          const ClassTag& tag, int depth = 0);

// Plain-text sidecar: blocking set, claimed opt, claimed distance, base class.
std::string emit_witness(const GadgetWitness& w);

}  // namespace bvc
