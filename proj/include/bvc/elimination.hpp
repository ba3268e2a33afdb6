#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bvc/class_oracle.hpp"
#include "bvc/graph.hpp"

namespace bvc {

struct ForestNode {
  int parent = -1;
  bool leaf = false;
  VertexSet bag;  // exactly one vertex on internal nodes; possibly empty on leaves
  int depth = 0;  // edges to the root
  std::vector<int> children;

  bool operator==(const ForestNode&) const = default;
};

// Rooted forest whose internal nodes each delete one vertex and whose leaves
// hold base components. Nodes are appended parent-first.
class EliminationForest {
 public:
  int add_internal(int parent, Vertex v);
  int add_leaf(int parent, VertexSet bag);

  const std::vector<ForestNode>& nodes() const { return nodes_; }
  const ForestNode& node(int id) const { return nodes_[id]; }
  std::vector<int> roots() const;
  // Largest number of internal nodes on a root-to-leaf path.
  int height() const;
  VertexSet subtree_vertices(int id) const;
  VertexSet leaf_vertices() const;
  VertexSet internal_vertices() const;

  // `node <id> parent <pid> vertex <v>` / `leaf <id> parent <pid> bag <v1,...>`
  std::string emit() const;
  static EliminationForest parse(std::string_view text);

  // Copies the subtrees under `roots`, renaming vertices through `old_to_new`
  // (-1 drops a vertex). Internal nodes of dropped vertices are spliced out so
  // their children hang from the nearest kept ancestor; leaf bags just shrink.
  EliminationForest project(std::span<const int> roots, const std::vector<Vertex>& old_to_new) const;

  // New internal root for vertex `apex` placed above every existing root.
  EliminationForest with_apex_root(Vertex apex) const;

  bool operator==(const EliminationForest&) const = default;

 private:
  int add_node(int parent, bool leaf, VertexSet bag);
  void copy_subtree(const EliminationForest& src, int id, int new_parent, const std::vector<Vertex>& old_to_new);

  std::vector<ForestNode> nodes_;
};

// Exact elimination distance when at most `limit`, nullopt otherwise.
// Memoised per call on vertex subsets, so g may have at most 64 vertices.
std::optional<int> elimination_distance(const Graph& g, const ClassOracle& oracle, int limit);

// A verified forest of height <= d, or nullopt iff the distance exceeds d.
std::optional<EliminationForest> elimination_forest(const Graph& g, const ClassOracle& oracle, int d);

// Structural validity plus leaf membership; heights are checked by callers.
bool verify_forest(const Graph& g, const EliminationForest& forest, const ClassOracle& oracle);
// Same checks, returning a description of the first failure (empty if valid).
std::string explain_forest(const Graph& g, const EliminationForest& forest, const ClassOracle& oracle);

// Minimum cover, recursing over the given forest. Throws ContractError if
// the forest is invalid for (g, oracle).
Cover solve_vc_bounded_ed(const Graph& g, const EliminationForest& forest, const ClassOracle& oracle);
// Same recursion without the up-front validity check; leaves may lie outside
// the class (their solves fall back to the exact solver).
Cover solve_vc_over_forest(const Graph& g, const EliminationForest& forest, const ClassOracle& oracle);

}  // namespace bvc
