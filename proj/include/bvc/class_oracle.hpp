#pragma once

#include <optional>

#include "bvc/exact_solver.hpp"
#include "bvc/graph.hpp"
#include "bvc/instance.hpp"

namespace bvc {

// One of the registered base classes C.
class ClassOracle {
 public:
  explicit ClassOracle(ClassTag tag);

  const ClassTag& tag() const { return tag_; }
  bool hereditary() const;
  bool robust() const { return true; }

  // Largest minimal blocking set over members; 0 for the empty class.
  int beta() const;
  // Bound on blocking sets of graphs in C + c; set only for non-hereditary classes.
  std::optional<int> f_robust(int c) const;

  bool member(const Graph& g) const;

  // Minimum cover. Members take a class-specific path; anything else falls
  // back to the exact solver (LP-pruned for lp), so the result is always optimal.
  Cover solve_in_class(const Graph& g) const;
  int opt(const Graph& g) const { return solve_in_class(g).size(); }

  // Largest possible minimal blocking set in graphs at elimination distance <= d.
  int beta_upper_bound(int d) const;

 private:
  ClassTag tag_;
};

// Bound for a hereditary class with the given beta, as a closed form.
long long hereditary_blocking_bound(int beta, int d);

}  // namespace bvc
