#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bvc/class_oracle.hpp"
#include "bvc/elimination.hpp"
#include "bvc/graph.hpp"
#include "bvc/instance.hpp"

namespace bvc {

// An independent subset of the modulator of bounded size.
struct Chunk {
  VertexSet z;
  bool operator==(const Chunk&) const = default;
};

// All independent subsets of x with 1..beta elements, by size and then
// lexicographically.
std::vector<Chunk> enumerate_chunks(const Graph& g, const VertexSet& x, int beta);

// Decides whether y (ids of h) is a blocking set of the component h.
using BlockingTester = std::function<bool(const Graph& h, const VertexSet& y)>;

// Exact solver on both sides of the deficit; valid on any graph.
BlockingTester exact_blocking_tester();

// One component of G - X together with what Rule 1 needs to know about it.
struct ComponentInfo {
  VertexSet vertices;  // ids in the instance graph
  Subgraph sub;
  EliminationForest forest;  // height <= depth, in ids of sub.graph
  int opt = 0;
};

// Splits G - X into components and attaches a forest and optimum to each.
// Throws ContractError if a component exceeds the instance depth.
std::vector<ComponentInfo> analyze_components(const ModulatorInstance& inst, const ClassOracle& oracle);

// Blocking test that only solves graphs inside the tractable family: the
// component minus Y over the projected forest when the class is hereditary,
// and the component plus an apex on Y otherwise.
bool component_blocks(const ComponentInfo& comp, const VertexSet& y_local, const ClassOracle& oracle);

// Bipartite auxiliary graph: vertices 0..chunks-1 are chunks, the rest are
// components in the given order.
struct ChunkComponentGraph {
  Graph graph;
  int num_chunks = 0;
  int num_components = 0;

  VertexSet chunk_side() const { return full_set(num_chunks); }
  VertexSet component_side() const;
};

// Edge {Z, H} iff N(Z) restricted to H blocks H. A null tester uses
// component_blocks.
ChunkComponentGraph build_chunk_component_graph(const ModulatorInstance& inst, const ClassOracle& oracle,
                                                const std::vector<Chunk>& chunks,
                                                const std::vector<ComponentInfo>& components,
                                                const BlockingTester& tester = nullptr);

// What one Rule 1 application (and possibly a depth step) did. Vertex ids are
// those of the instance the step was applied to.
struct ReductionTrace {
  int depth = 0;
  int beta = 0;  // chunk size bound used at this depth
  int modulator_size = 0;
  int chunk_count = 0;
  int aux_edge_count = 0;
  int components_before = 0;
  int components_after = 0;
  long long component_bound = 0;  // |x|^beta
  std::vector<VertexSet> violator;                      // chunks with too few neighbors
  std::vector<std::pair<VertexSet, VertexSet>> matching;  // chunk, component
  std::vector<VertexSet> deleted;                       // components removed
  int opt_of_deleted = 0;
  int k_decrement = 0;
  bool became_no = false;
  VertexSet moved_roots;  // forest roots added to the modulator (depth steps only)

  bool within_bound() const { return components_after <= component_bound; }
};

std::string emit_trace(const ReductionTrace& t);

struct RuleOutcome {
  ModulatorInstance inst;
  ReductionTrace trace;
  std::vector<Vertex> old_to_new;  // input id -> output id, -1 if deleted
};

// Deletes the components Rule 1 certifies as removable and lowers k by their
// optimum. A negative budget yields the canonical NO instance.
RuleOutcome apply_rule_1(const ModulatorInstance& inst, const ClassOracle& oracle,
                         const BlockingTester& tester = nullptr);

// Rule 1 followed by moving the internal roots of the forest of G - X into X.
// Requires depth >= 1.
RuleOutcome reduce_depth_once(const ModulatorInstance& inst, const ClassOracle& oracle);

struct KernelOutcome {
  ModulatorInstance inst;  // depth 0
  std::vector<ReductionTrace> traces;
};

// depth steps down to 0, then a final Rule 1 pass.
KernelOutcome kernelize_to_base(const ModulatorInstance& inst, const ClassOracle& oracle);

// X with |X| = 2 (OPT - LP) and OPT(G - X) = LP(G - X), built from a
// half-integral optimum, a minimum cover respecting it and a matching from
// the uncovered half-vertices into the covered ones.
VertexSet lp_modulator(const Graph& g);

struct ModulatorSizeReport {
  int depth = 0;
  int treedepth_modulator = 0;  // fewest deletions leaving treedepth <= depth
  int lp_modulator = 0;         // fewest deletions leaving ed to the LP class <= depth
  int twice_gap = 0;            // 2 (OPT - LP)
  bool holds() const { return lp_modulator <= treedepth_modulator && lp_modulator <= twice_gap; }
};

// Exhaustive over vertex subsets; ResourceError above 16 vertices.
ModulatorSizeReport compare_modulator_sizes(const Graph& g, int depth);

}  // namespace bvc
