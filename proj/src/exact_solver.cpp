#include "bvc/exact_solver.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "bvc/errors.hpp"
#include "bvc/io.hpp"

namespace bvc {

bool Matching::is_valid(const Graph& g) const {
  std::vector<char> used(g.num_vertices(), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= g.num_vertices() || v >= g.num_vertices()) return false;
    if (!g.has_edge(u, v) || used[u] || used[v]) return false;
    used[u] = used[v] = 1;
  }
  return true;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, ExactOptions opts, int best_size)
      : g_(g), opts_(opts), alive_(g.num_vertices(), 1), deg_(g.num_vertices()), best_size_(best_size) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) deg_[v] = g.degree(v);
    live_edges_ = static_cast<int>(g.num_edges());
  }

  std::optional<VertexSet> run() {
    search();
    if (!found_) return std::nullopt;
    return make_vertex_set(best_);
  }

 private:
  void remove(Vertex v) {
    alive_[v] = 0;
    for (Vertex u : g_.neighbors(v))
      if (alive_[u]) {
        --deg_[u];
        --live_edges_;
      }
    trail_.push_back(v);
  }

  void take(Vertex v) {
    chosen_.push_back(v);
    remove(v);
  }

  void undo(std::size_t trail_mark, std::size_t chosen_mark) {
    while (trail_.size() > trail_mark) {
      Vertex v = trail_.back();
      trail_.pop_back();
      for (Vertex u : g_.neighbors(v))
        if (alive_[u]) {
          ++deg_[u];
          ++live_edges_;
        }
      alive_[v] = 1;
    }
    chosen_.resize(chosen_mark);
  }

  // A pendant vertex's neighbour belongs to some optimum cover.
  void fold_pendants() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex v = 0; v < g_.num_vertices(); ++v) {
        if (!alive_[v] || deg_[v] != 1) continue;
        for (Vertex u : g_.neighbors(v))
          if (alive_[u]) {
            take(u);
            break;
          }
        changed = true;
      }
    }
  }

  int matching_bound() {
    std::vector<char> matched(g_.num_vertices(), 0);
    int size = 0;
    for (Vertex u = 0; u < g_.num_vertices(); ++u) {
      if (!alive_[u] || matched[u]) continue;
      for (Vertex v : g_.neighbors(u))
        if (alive_[v] && !matched[v]) {
          matched[u] = matched[v] = 1;
          ++size;
          break;
        }
    }
    return size;
  }

  int lp_bound() {
    VertexSet rest;
    for (Vertex v = 0; v < g_.num_vertices(); ++v)
      if (alive_[v] && deg_[v] > 0) rest.push_back(v);
    return (lp_doubled(induced_subgraph(g_, rest).graph) + 1) / 2;
  }

  void search() {
    const std::size_t trail_mark = trail_.size();
    const std::size_t chosen_mark = chosen_.size();
    fold_pendants();
    const int size = static_cast<int>(chosen_.size());
    if (live_edges_ == 0) {
      if (size < best_size_) {
        best_size_ = size;
        best_ = chosen_;
        found_ = true;
      }
      undo(trail_mark, chosen_mark);
      return;
    }
    int bound = matching_bound();
    if (size + bound < best_size_ && opts_.lp_bound) bound = std::max(bound, lp_bound());
    if (size + bound >= best_size_) {
      undo(trail_mark, chosen_mark);
      return;
    }
    Vertex pivot = -1;
    for (Vertex v = 0; v < g_.num_vertices(); ++v)
      if (alive_[v] && (pivot < 0 || deg_[v] > deg_[pivot])) pivot = v;

    const std::size_t t = trail_.size(), c = chosen_.size();
    take(pivot);
    search();
    undo(t, c);

    std::vector<Vertex> nbrs;
    for (Vertex u : g_.neighbors(pivot))
      if (alive_[u]) nbrs.push_back(u);
    for (Vertex u : nbrs) take(u);
    remove(pivot);
    search();
    undo(trail_mark, chosen_mark);
  }

  const Graph& g_;
  ExactOptions opts_;
  std::vector<char> alive_;
  std::vector<int> deg_;
  int live_edges_ = 0;
  std::vector<Vertex> chosen_, trail_, best_;
  int best_size_;
  bool found_ = false;
};

// Hopcroft-Karp over left indices 0..nl-1 and right indices 0..nr-1.
class BipartiteMatcher {
 public:
  BipartiteMatcher(int nl, int nr) : adj_(nl), mate_l_(nl, -1), mate_r_(nr, -1), dist_(nl) {}

  void add_edge(int l, int r) { adj_[l].push_back(r); }

  int run() {
    int size = 0;
    while (layer()) {
      for (int l = 0; l < static_cast<int>(adj_.size()); ++l)
        if (mate_l_[l] < 0 && augment(l)) ++size;
    }
    return size;
  }

  const std::vector<int>& mate_left() const { return mate_l_; }
  const std::vector<int>& mate_right() const { return mate_r_; }

  // Left and right indices reachable by alternating paths from free left vertices.
  std::pair<std::vector<char>, std::vector<char>> alternating_reach() const {
    std::vector<char> rl(adj_.size(), 0), rr(mate_r_.size(), 0);
    std::queue<int> q;
    for (int l = 0; l < static_cast<int>(adj_.size()); ++l)
      if (mate_l_[l] < 0) {
        rl[l] = 1;
        q.push(l);
      }
    while (!q.empty()) {
      int l = q.front();
      q.pop();
      for (int r : adj_[l]) {
        if (rr[r]) continue;
        rr[r] = 1;
        int next = mate_r_[r];
        if (next >= 0 && !rl[next]) {
          rl[next] = 1;
          q.push(next);
        }
      }
    }
    return {rl, rr};
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool layer() {
    std::queue<int> q;
    bool reached_free = false;
    for (int l = 0; l < static_cast<int>(adj_.size()); ++l) {
      if (mate_l_[l] < 0) {
        dist_[l] = 0;
        q.push(l);
      } else {
        dist_[l] = kInf;
      }
    }
    while (!q.empty()) {
      int l = q.front();
      q.pop();
      for (int r : adj_[l]) {
        int next = mate_r_[r];
        if (next < 0) reached_free = true;
        else if (dist_[next] == kInf) {
          dist_[next] = dist_[l] + 1;
          q.push(next);
        }
      }
    }
    return reached_free;
  }

  bool augment(int l) {
    for (int r : adj_[l]) {
      int next = mate_r_[r];
      if (next < 0 || (dist_[next] == dist_[l] + 1 && augment(next))) {
        mate_l_[l] = r;
        mate_r_[r] = l;
        return true;
      }
    }
    dist_[l] = kInf;
    return false;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> mate_l_, mate_r_, dist_;
};

struct SidedMatcher {
  VertexSet left, right;
  BipartiteMatcher matcher;
};

SidedMatcher build_sided(const Graph& g, const VertexSet& left_in, const VertexSet& right_in) {
  const int n = g.num_vertices();
  VertexSet left = make_vertex_set(left_in), right = make_vertex_set(right_in);
  std::vector<int> side(n, 0), index(n, -1);
  for (auto [set, tag] : {std::pair{&left, 1}, std::pair{&right, 2}}) {
    for (std::size_t i = 0; i < set->size(); ++i) {
      Vertex v = (*set)[i];
      if (v < 0 || v >= n) throw InputError("bipartition vertex " + std::to_string(v) + " out of range");
      if (side[v]) throw InputError("vertex " + std::to_string(v) + " on both sides");
      side[v] = tag;
      index[v] = static_cast<int>(i);
    }
  }
  for (auto [u, v] : g.edges())
    if (side[u] + side[v] != 3 || side[u] == 0 || side[v] == 0)
      throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} violates the bipartition");
  BipartiteMatcher m(static_cast<int>(left.size()), static_cast<int>(right.size()));
  for (std::size_t i = 0; i < left.size(); ++i)
    for (Vertex u : g.neighbors(left[i])) m.add_edge(static_cast<int>(i), index[u]);
  return {std::move(left), std::move(right), std::move(m)};
}

Matching extract(const SidedMatcher& s, const std::vector<char>* skip_left = nullptr) {
  Matching out;
  const auto& mate = s.matcher.mate_left();
  for (std::size_t i = 0; i < s.left.size(); ++i)
    if (mate[i] >= 0 && !(skip_left && (*skip_left)[i])) out.edges.emplace_back(s.left[i], s.right[mate[i]]);
  return out;
}

}  // namespace

Cover solve_vc_exact(const Graph& g, ExactOptions opts) {
  BranchAndBound bb(g, opts, g.num_vertices() + 1);
  return Cover{*bb.run()};
}

std::optional<Cover> solve_vc_exact(const Graph& g, int budget, ExactOptions opts) {
  if (budget < 0) return std::nullopt;
  BranchAndBound bb(g, opts, std::min(budget, g.num_vertices()) + 1);
  auto set = bb.run();
  if (!set) return std::nullopt;
  return Cover{std::move(*set)};
}

int opt_value(const Graph& g) { return solve_vc_exact(g).size(); }

Matching max_matching_bipartite(const Graph& g, const VertexSet& left, const VertexSet& right) {
  auto s = build_sided(g, left, right);
  s.matcher.run();
  return extract(s);
}

SaturationResult saturate_or_violator(const Graph& g, const VertexSet& left, const VertexSet& right) {
  auto s = build_sided(g, left, right);
  const int size = s.matcher.run();
  SaturationResult out;
  if (size == static_cast<int>(s.left.size())) {
    out.matching = extract(s);
    return out;
  }
  auto [reach_left, reach_right] = s.matcher.alternating_reach();
  for (std::size_t i = 0; i < s.left.size(); ++i)
    if (reach_left[i]) out.violator.push_back(s.left[i]);
  out.matching = extract(s, &reach_left);
  return out;
}

Cover konig_cover(const Graph& g, const VertexSet& left, const VertexSet& right) {
  auto s = build_sided(g, left, right);
  s.matcher.run();
  auto [reach_left, reach_right] = s.matcher.alternating_reach();
  Cover c;
  for (std::size_t i = 0; i < s.left.size(); ++i)
    if (!reach_left[i]) c.set.push_back(s.left[i]);
  for (std::size_t j = 0; j < s.right.size(); ++j)
    if (reach_right[j]) c.set.push_back(s.right[j]);
  c.set = make_vertex_set(std::move(c.set));
  return c;
}

int lp_doubled(const Graph& g) {
  const int n = g.num_vertices();
  BipartiteMatcher m(n, n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u)) m.add_edge(u, v);
  return m.run();
}

HalfIntegralSolution lp_half_integral(const Graph& g) {
  // Fix vertices to 0 greedily in id order whenever some optimum allows it.
  // A vertex that cannot be zeroed now cannot be zeroed later either, so one
  // pass suffices; the leftover residual has the all-half point as its only
  // optimum.
  const int n = g.num_vertices();
  HalfIntegralSolution sol;
  std::vector<char> in_rest(n, 1);
  auto rest_set = [&] {
    VertexSet r;
    for (Vertex v = 0; v < n; ++v)
      if (in_rest[v]) r.push_back(v);
    return r;
  };
  int current = lp_doubled(g);
  const int total = current;
  for (Vertex v = 0; v < n; ++v) {
    if (!in_rest[v]) continue;
    VertexSet nbrs;
    for (Vertex u : g.neighbors(v))
      if (in_rest[u]) nbrs.push_back(u);
    in_rest[v] = 0;
    for (Vertex u : nbrs) in_rest[u] = 0;
    const int reduced = lp_doubled(induced_subgraph(g, rest_set()).graph);
    if (reduced + 2 * static_cast<int>(nbrs.size()) == current) {
      sol.v0.push_back(v);
      sol.v1.insert(sol.v1.end(), nbrs.begin(), nbrs.end());
      current = reduced;
    } else {
      in_rest[v] = 1;
      for (Vertex u : nbrs) in_rest[u] = 1;
    }
  }
  sol.v_half = rest_set();
  sol.v0 = make_vertex_set(std::move(sol.v0));
  sol.v1 = make_vertex_set(std::move(sol.v1));
  sol.doubled_value = 2 * static_cast<int>(sol.v1.size()) + static_cast<int>(sol.v_half.size());
  if (sol.doubled_value != total)
    throw InvariantViolation("half-integral canonicalisation lost optimality: " + std::to_string(sol.doubled_value) +
                             " vs " + std::to_string(total));
  return sol;
}

HalfIntegralSolution nemhauser_trotter(const Graph& g) {
  HalfIntegralSolution sol = lp_half_integral(g);
  if (!g.is_independent(sol.v0)) throw InvariantViolation("V0 not independent: {" + format_set(sol.v0) + "}");
  for (Vertex v : sol.v0)
    for (Vertex u : g.neighbors(v))
      if (!contains(sol.v1, u))
        throw InvariantViolation("neighbour " + std::to_string(u) + " of V0 vertex " + std::to_string(v) + " not in V1");
  const int whole = opt_value(g);
  const int split = static_cast<int>(sol.v1.size()) + opt_value(induced_subgraph(g, sol.v_half).graph);
  if (whole != split)
    throw InvariantViolation("persistence failed: OPT " + std::to_string(whole) + " vs |V1|+OPT(G[Vh]) " +
                             std::to_string(split));
  return sol;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> colour(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex u : g.neighbors(v)) {
        if (colour[u] < 0) {
          colour[u] = 1 - colour[v];
          q.push(u);
        } else if (colour[u] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<VertexSet, VertexSet> sides;
  for (Vertex v = 0; v < n; ++v) (colour[v] == 0 ? sides.first : sides.second).push_back(v);
  return sides;
}

}  // namespace bvc
