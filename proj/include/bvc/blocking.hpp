#pragma once

#include <functional>
#include <optional>

#include "bvc/class_oracle.hpp"
#include "bvc/graph.hpp"

namespace bvc {

// Any routine returning OPT of a graph it is valid on.
using OptOracle = std::function<int(const Graph&)>;

OptOracle exact_opt();
OptOracle class_opt(const ClassOracle& oracle);

// Y is blocking iff no minimum vertex cover contains it, i.e. iff
// deficit = OPT(G-Y) + |Y| - OPT(G) is at least one.
struct BlockingVerdict {
  VertexSet y;
  bool is_blocking = false;
  std::optional<bool> is_minimal;
  int deficit = 0;
};

BlockingVerdict is_blocking_set(const Graph& g, const VertexSet& y, const OptOracle& solver = exact_opt());

// Same predicate via one extra vertex adjacent to exactly Y: OPT rises iff Y blocks.
bool is_blocking_set_apex(const Graph& g, const VertexSet& y, const OptOracle& solver = exact_opt());

// Blocking sets are closed upwards, so testing the |Y| one-smaller subsets suffices.
bool is_minimal_blocking_set(const Graph& g, const VertexSet& y, const OptOracle& solver = exact_opt());

// is_blocking_set with the minimality field filled in when Y blocks.
BlockingVerdict classify_blocking_set(const Graph& g, const VertexSet& y, const OptOracle& solver = exact_opt());

// Drops vertices while the remainder still blocks, trying the largest ids
// first. Throws ContractError if Y does not block.
VertexSet shrink_to_minimal(const Graph& g, const VertexSet& y, const OptOracle& solver = exact_opt());

// Vertices contained in every minimum cover.
VertexSet forced_vertices(const Graph& g, const OptOracle& solver = exact_opt());
// Vertices contained in no minimum cover (exactly the blocking singletons).
VertexSet excluded_vertices(const Graph& g, const OptOracle& solver = exact_opt());

struct BetaResult {
  int value = 0;
  bool truncated = false;    // value is cap + 1: beta <= cap could not be certified
  bool empty_graph = false;  // no blocking set exists; value reported as 0
  VertexSet witness;         // a largest minimal blocking set found
};

// Largest minimal blocking set, enumerating candidates by size then
// lexicographically over the non-forced vertices.
BetaResult max_minimal_blocking_set_size(const Graph& g, const OptOracle& solver = exact_opt(),
                                         std::optional<int> cap = std::nullopt);

struct BlockingBasicsReport {
  bool avoids_forced = false;        // no vertex lying in every minimum cover
  bool excluded_implies_single = false;  // a vertex in no minimum cover forces |Y| = 1
  bool single_component = false;
  bool deficit_one = false;
  bool all() const { return avoids_forced && excluded_implies_single && single_component && deficit_one; }
};

// Checks the structural facts every minimal blocking set satisfies. Throws
// ContractError if Y is not minimal blocking, InvariantViolation if a fact fails.
BlockingBasicsReport verify_blocking_basics(const Graph& g, const VertexSet& y, const OptOracle& solver = exact_opt());

}  // namespace bvc
