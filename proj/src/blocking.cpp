#include "bvc/blocking.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>

#include "bvc/errors.hpp"
#include "bvc/io.hpp"

namespace bvc {

OptOracle exact_opt() {
  return [](const Graph& g) { return opt_value(g); };
}

OptOracle class_opt(const ClassOracle& oracle) {
  return [oracle](const Graph& g) { return oracle.opt(g); };
}

BlockingVerdict is_blocking_set(const Graph& g, const VertexSet& y, const OptOracle& solver) {
  BlockingVerdict v;
  v.y = make_vertex_set(y);
  const int rest = solver(remove_vertices(g, v.y).graph);
  v.deficit = rest + static_cast<int>(v.y.size()) - solver(g);
  if (v.deficit < 0) throw InvariantViolation("negative deficit for Y={" + format_set(v.y) + "}");
  v.is_blocking = v.deficit >= 1;
  return v;
}

bool is_blocking_set_apex(const Graph& g, const VertexSet& y, const OptOracle& solver) {
  return solver(add_apex(g, make_vertex_set(y))) > solver(g);
}

bool is_minimal_blocking_set(const Graph& g, const VertexSet& y, const OptOracle& solver) {
  const VertexSet ys = make_vertex_set(y);
  if (ys.empty() || !is_blocking_set(g, ys, solver).is_blocking) return false;
  for (Vertex v : ys)
    if (is_blocking_set(g, set_difference(ys, {v}), solver).is_blocking) return false;
  return true;
}

BlockingVerdict classify_blocking_set(const Graph& g, const VertexSet& y, const OptOracle& solver) {
  BlockingVerdict v = is_blocking_set(g, y, solver);
  if (v.is_blocking) {
    bool minimal = true;
    for (Vertex u : v.y)
      if (is_blocking_set(g, set_difference(v.y, {u}), solver).is_blocking) {
        minimal = false;
        break;
      }
    v.is_minimal = minimal;
  }
  return v;
}

VertexSet shrink_to_minimal(const Graph& g, const VertexSet& y, const OptOracle& solver) {
  VertexSet cur = make_vertex_set(y);
  if (!is_blocking_set(g, cur, solver).is_blocking)
    throw ContractError("shrink_to_minimal: {" + format_set(cur) + "} is not blocking");
  // Non-blocking sets are closed downwards, so a vertex that cannot be dropped
  // now never becomes droppable later; one pass reaches the fixpoint.
  for (auto it = cur.rbegin(); it != cur.rend();) {
    VertexSet without = set_difference(cur, {*it});
    if (is_blocking_set(g, without, solver).is_blocking) {
      std::size_t offset = static_cast<std::size_t>(it - cur.rbegin());
      cur = std::move(without);
      it = cur.rbegin() + static_cast<std::ptrdiff_t>(offset);
    } else {
      ++it;
    }
  }
  return cur;
}

VertexSet forced_vertices(const Graph& g, const OptOracle& solver) {
  const int opt = solver(g);
  VertexSet out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    // Some minimum cover avoids v iff taking all of N(v) is optimal.
    VertexSet closed = g.closed_neighborhood({v});
    if (solver(remove_vertices(g, closed).graph) + g.degree(v) > opt) out.push_back(v);
  }
  return out;
}

VertexSet excluded_vertices(const Graph& g, const OptOracle& solver) {
  VertexSet out;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (is_blocking_set(g, {v}, solver).is_blocking) out.push_back(v);
  return out;
}

BetaResult max_minimal_blocking_set_size(const Graph& g, const OptOracle& solver, std::optional<int> cap) {
  BetaResult result;
  if (g.num_vertices() == 0) {
    result.empty_graph = true;
    return result;
  }
  const VertexSet universe = set_difference(full_set(g.num_vertices()), forced_vertices(g, solver));
  const int u = static_cast<int>(universe.size());
  if (u > 63) throw ResourceError("too many candidate vertices for blocking-set enumeration");
  const int opt = solver(g);

  auto to_set = [&](std::uint64_t mask) {
    VertexSet s;
    for (int i = 0; i < u; ++i)
      if (mask >> i & 1) s.push_back(universe[i]);
    return s;
  };

  std::unordered_set<std::uint64_t> prev_blocking;
  std::vector<int> idx;
  for (int size = 1; size <= u; ++size) {
    if (cap && size > *cap + 1) {
      // Stopped with non-blocking sets still open: beta <= cap is not certified.
      result.value = *cap + 1;
      result.truncated = true;
      return result;
    }
    std::unordered_set<std::uint64_t> cur_blocking;
    bool any_non_blocking = false;
    idx.resize(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::uint64_t mask = 0;
      for (int i : idx) mask |= std::uint64_t{1} << i;
      bool has_blocking_subset = false;
      if (size > 1)
        for (int i : idx)
          if (prev_blocking.count(mask & ~(std::uint64_t{1} << i))) {
            has_blocking_subset = true;
            break;
          }
      if (has_blocking_subset) {
        cur_blocking.insert(mask);
      } else {
        VertexSet s = to_set(mask);
        if (solver(remove_vertices(g, s).graph) + size > opt) {
          cur_blocking.insert(mask);
          // Every one-smaller subset is non-blocking, so this set is minimal.
          if (size > result.value) {
            result.value = size;
            result.witness = std::move(s);
          }
        } else {
          any_non_blocking = true;
        }
      }
      int pos = size - 1;
      while (pos >= 0 && idx[pos] == u - size + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (cap && result.value > *cap) {
      result.value = *cap + 1;
      result.truncated = true;
      return result;
    }
    // Once every set of this size blocks, larger sets all have blocking
    // proper subsets and cannot be minimal.
    if (!any_non_blocking) break;
    prev_blocking = std::move(cur_blocking);
  }
  return result;
}

BlockingBasicsReport verify_blocking_basics(const Graph& g, const VertexSet& y, const OptOracle& solver) {
  const VertexSet ys = make_vertex_set(y);
  if (!is_minimal_blocking_set(g, ys, solver))
    throw ContractError("verify_blocking_basics: {" + format_set(ys) + "} is not a minimal blocking set");
  const std::string where = " (Y={" + format_set(ys) + "})";
  BlockingBasicsReport r;

  const VertexSet forced = set_intersection(ys, forced_vertices(g, solver));
  r.avoids_forced = forced.empty();
  if (!r.avoids_forced) throw InvariantViolation("minimal blocking set contains forced vertex " + std::to_string(forced[0]) + where);

  const VertexSet excluded = set_intersection(ys, excluded_vertices(g, solver));
  r.excluded_implies_single = excluded.empty() || ys.size() == 1;
  if (!r.excluded_implies_single)
    throw InvariantViolation("minimal blocking set of size >1 contains never-covered vertex " + std::to_string(excluded[0]) + where);

  int touched = 0;
  for (const auto& part : connected_components(g))
    if (!set_intersection(part, ys).empty()) ++touched;
  r.single_component = touched == 1;
  if (!r.single_component) throw InvariantViolation("minimal blocking set meets " + std::to_string(touched) + " components" + where);

  const int deficit = is_blocking_set(g, ys, solver).deficit;
  r.deficit_one = deficit == 1;
  if (!r.deficit_one) throw InvariantViolation("minimal blocking set has deficit " + std::to_string(deficit) + where);
  return r;
}

}  // namespace bvc
