#pragma once

#include <string>
#include <string_view>

#include "bvc/graph.hpp"

namespace bvc {

enum class ClassKind { empty, indset, forest, bipartite, cluster, lp };

// Names one of the registered base classes; `q` is only meaningful for cluster.
struct ClassTag {
  ClassKind kind = ClassKind::empty;
  int q = 0;

  std::string name() const;
  static ClassTag parse(std::string_view text);  // throws InputError
  bool operator==(const ClassTag&) const = default;
};

// A parameterized instance (G, k, X) with G - X at elimination distance
// at most `depth` from the tagged class. k == -1 marks the canonical NO.
struct ModulatorInstance {
  Graph g;
  int k = 0;
  VertexSet x;
  ClassTag tag;
  int depth = 0;

  bool is_no() const { return k < 0; }
  static ModulatorInstance canonical_no(const ClassTag& tag, int depth);
  void validate() const;
  bool operator==(const ModulatorInstance&) const = default;
};

}  // namespace bvc
