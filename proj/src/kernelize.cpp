#include "bvc/kernelize.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <sstream>

#include "bvc/blocking.hpp"
#include "bvc/errors.hpp"
#include "bvc/exact_solver.hpp"
#include "bvc/io.hpp"

namespace bvc {

std::vector<Chunk> enumerate_chunks(const Graph& g, const VertexSet& x, int beta) {
  const VertexSet xs = make_vertex_set(x);
  const int n = static_cast<int>(xs.size());
  std::vector<Chunk> out;
  std::vector<int> idx;
  for (int size = 1; size <= std::min(beta, n); ++size) {
    idx.resize(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      VertexSet z;
      for (int i : idx) z.push_back(xs[i]);
      if (g.is_independent(z)) out.push_back({std::move(z)});
      int pos = size - 1;
      while (pos >= 0 && idx[pos] == n - size + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return out;
}

BlockingTester exact_blocking_tester() {
  return [](const Graph& h, const VertexSet& y) { return !y.empty() && is_blocking_set(h, y).is_blocking; };
}

std::vector<ComponentInfo> analyze_components(const ModulatorInstance& inst, const ClassOracle& oracle) {
  const Subgraph rest = remove_vertices(inst.g, inst.x);
  std::vector<ComponentInfo> out;
  for (const VertexSet& part : connected_components(rest.graph)) {
    ComponentInfo info;
    info.vertices = rest.lift(part);
    info.sub = induced_subgraph(inst.g, info.vertices);
    auto forest = elimination_forest(info.sub.graph, oracle, inst.depth);
    if (!forest)
      throw ContractError("component containing vertex " + std::to_string(info.vertices.front()) +
                          " is farther than " + std::to_string(inst.depth) + " from class " + oracle.tag().name());
    info.forest = std::move(*forest);
    info.opt = solve_vc_bounded_ed(info.sub.graph, info.forest, oracle).size();
    out.push_back(std::move(info));
  }
  return out;
}

bool component_blocks(const ComponentInfo& comp, const VertexSet& y_local, const ClassOracle& oracle) {
  if (y_local.empty()) return false;
  const Graph& h = comp.sub.graph;
  if (oracle.hereditary()) {
    // Deleting Y keeps every leaf inside the class, so the forest projects.
    const Subgraph rest = remove_vertices(h, y_local);
    const auto roots = comp.forest.roots();
    const EliminationForest projected = comp.forest.project(roots, rest.from_parent);
    const int rest_opt = solve_vc_over_forest(rest.graph, projected, oracle).size();
    return rest_opt + static_cast<int>(y_local.size()) > comp.opt;
  }
  // G - Y may leave the class; G plus an apex on Y stays one level deeper.
  const Graph with_apex = add_apex(h, y_local);
  const EliminationForest lifted = comp.forest.with_apex_root(h.num_vertices());
  return solve_vc_over_forest(with_apex, lifted, oracle).size() > comp.opt;
}

VertexSet ChunkComponentGraph::component_side() const {
  VertexSet s;
  for (int i = 0; i < num_components; ++i) s.push_back(num_chunks + i);
  return s;
}

ChunkComponentGraph build_chunk_component_graph(const ModulatorInstance& inst, const ClassOracle& oracle,
                                                const std::vector<Chunk>& chunks,
                                                const std::vector<ComponentInfo>& components,
                                                const BlockingTester& tester) {
  ChunkComponentGraph aux;
  aux.num_chunks = static_cast<int>(chunks.size());
  aux.num_components = static_cast<int>(components.size());
  std::vector<Edge> edges;
  // Different chunks often see the same trace in a component; test each once.
  std::vector<std::map<VertexSet, bool>> seen(components.size());
  for (int c = 0; c < aux.num_chunks; ++c) {
    const VertexSet nz = inst.g.open_neighborhood(chunks[c].z);
    for (int h = 0; h < aux.num_components; ++h) {
      const ComponentInfo& comp = components[h];
      const VertexSet y = comp.sub.lower(set_intersection(nz, comp.vertices));
      if (y.empty()) continue;
      auto [it, fresh] = seen[h].try_emplace(y, false);
      if (fresh) it->second = tester ? tester(comp.sub.graph, y) : component_blocks(comp, y, oracle);
      if (it->second) edges.emplace_back(c, aux.num_chunks + h);
    }
  }
  aux.graph = Graph::from_edges(aux.num_chunks + aux.num_components, edges);
  return aux;
}

namespace {

long long saturating_power(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<long long>::max() / base) return std::numeric_limits<long long>::max();
    r *= base;
  }
  return r;
}

std::vector<Vertex> identity_map(int n) {
  std::vector<Vertex> m(n);
  for (int i = 0; i < n; ++i) m[i] = i;
  return m;
}

}  // namespace

RuleOutcome apply_rule_1(const ModulatorInstance& inst, const ClassOracle& oracle, const BlockingTester& tester) {
  RuleOutcome out{inst, {}, identity_map(inst.g.num_vertices())};
  ReductionTrace& t = out.trace;
  t.depth = inst.depth;
  if (inst.is_no()) {
    t.became_no = true;
    return out;
  }
  t.beta = oracle.beta_upper_bound(inst.depth);
  t.modulator_size = static_cast<int>(inst.x.size());
  t.component_bound = saturating_power(t.modulator_size, t.beta);

  const auto components = analyze_components(inst, oracle);
  const auto chunks = enumerate_chunks(inst.g, inst.x, t.beta);
  const auto aux = build_chunk_component_graph(inst, oracle, chunks, components, tester);
  t.chunk_count = aux.num_chunks;
  t.aux_edge_count = static_cast<int>(aux.graph.num_edges());
  t.components_before = aux.num_components;

  const SaturationResult sat = saturate_or_violator(aux.graph, aux.chunk_side(), aux.component_side());
  std::vector<char> keep(components.size(), 0);
  for (Vertex h : aux.graph.open_neighborhood(sat.violator)) keep[h - aux.num_chunks] = 1;
  for (Vertex c : sat.violator) t.violator.push_back(chunks[c].z);
  for (auto [a, b] : sat.matching.edges) {
    const int c = std::min(a, b), h = std::max(a, b) - aux.num_chunks;
    keep[h] = 1;
    t.matching.emplace_back(chunks[c].z, components[h].vertices);
  }
  std::sort(t.matching.begin(), t.matching.end());

  VertexSet removed;
  for (std::size_t h = 0; h < components.size(); ++h) {
    if (keep[h]) continue;
    t.deleted.push_back(components[h].vertices);
    t.opt_of_deleted += components[h].opt;
    removed.insert(removed.end(), components[h].vertices.begin(), components[h].vertices.end());
  }
  t.k_decrement = t.opt_of_deleted;
  t.components_after = t.components_before - static_cast<int>(t.deleted.size());
  if (t.components_after > t.chunk_count || !t.within_bound())
    throw InvariantViolation("Rule 1 left " + std::to_string(t.components_after) + " components for " +
                             std::to_string(t.chunk_count) + " chunks");

  if (inst.k - t.k_decrement < 0) {
    t.became_no = true;
    out.inst = ModulatorInstance::canonical_no(inst.tag, inst.depth);
    out.old_to_new.assign(inst.g.num_vertices(), -1);
    return out;
  }
  const Subgraph reduced = remove_vertices(inst.g, make_vertex_set(std::move(removed)));
  out.inst.g = reduced.graph;
  out.inst.k = inst.k - t.k_decrement;
  out.inst.x = reduced.lower(inst.x);
  out.old_to_new = reduced.from_parent;
  return out;
}

RuleOutcome reduce_depth_once(const ModulatorInstance& inst, const ClassOracle& oracle) {
  if (inst.depth < 1) throw ContractError("reduce_depth_once needs depth at least 1");
  RuleOutcome r = apply_rule_1(inst, oracle);
  if (r.inst.is_no()) {
    r.inst = ModulatorInstance::canonical_no(inst.tag, inst.depth - 1);
    return r;
  }
  // Each surviving component has exactly one root; internal roots join X.
  VertexSet roots;
  for (const ComponentInfo& comp : analyze_components(r.inst, oracle))
    for (int id : comp.forest.roots()) {
      const ForestNode& node = comp.forest.node(id);
      if (!node.leaf) roots.push_back(comp.sub.to_parent[node.bag.front()]);
    }
  roots = make_vertex_set(std::move(roots));
  if (static_cast<long long>(roots.size()) > r.trace.component_bound)
    throw InvariantViolation("more forest roots than the component bound allows");
  r.trace.moved_roots = roots;
  r.inst.x = set_union(r.inst.x, roots);
  r.inst.depth = inst.depth - 1;
  return r;
}

KernelOutcome kernelize_to_base(const ModulatorInstance& inst, const ClassOracle& oracle) {
  if (inst.depth < 0) throw InputError("depth must be non-negative");
  KernelOutcome out{inst, {}};
  while (out.inst.depth > 0) {
    RuleOutcome r = reduce_depth_once(out.inst, oracle);
    out.traces.push_back(std::move(r.trace));
    out.inst = std::move(r.inst);
  }
  RuleOutcome last = apply_rule_1(out.inst, oracle);
  out.traces.push_back(std::move(last.trace));
  out.inst = std::move(last.inst);
  return out;
}

std::string emit_trace(const ReductionTrace& t) {
  auto sets = [](const std::vector<VertexSet>& v) {
    std::string s;
    for (const auto& part : v) s += (s.empty() ? "{" : " {") + format_set(part) + "}";
    return s.empty() ? std::string("-") : s;
  };
  std::ostringstream out;
  out << "depth " << t.depth << "\nbeta " << t.beta << "\nmodulator " << t.modulator_size << "\nchunks "
      << t.chunk_count << "\naux_edges " << t.aux_edge_count << "\ncomponents_before " << t.components_before
      << "\ncomponents_after " << t.components_after << "\ncomponent_bound " << t.component_bound << "\nviolator "
      << sets(t.violator) << "\nmatching";
  if (t.matching.empty()) out << " -";
  for (const auto& [z, h] : t.matching) out << " {" << format_set(z) << "}->{" << format_set(h) << "}";
  out << "\ndeleted " << sets(t.deleted) << "\nopt_deleted " << t.opt_of_deleted << "\nk_decrement " << t.k_decrement
      << "\nbecame_no " << (t.became_no ? 1 : 0) << "\nmoved_roots "
      << (t.moved_roots.empty() ? std::string("-") : format_set(t.moved_roots)) << '\n';
  return out.str();
}

VertexSet lp_modulator(const Graph& g) {
  const HalfIntegralSolution lp = nemhauser_trotter(g);
  // A minimum cover containing V1 and avoiding V0: V1 plus an optimum of G[V1/2].
  const Subgraph half = induced_subgraph(g, lp.v_half);
  const VertexSet covered = half.lift(solve_vc_exact(half.graph).set);
  const VertexSet uncovered = set_difference(lp.v_half, covered);
  std::vector<Edge> across;
  for (auto [u, v] : g.edges())
    if (contains(uncovered, u) != contains(uncovered, v) && contains(lp.v_half, u) && contains(lp.v_half, v))
      across.emplace_back(u, v);
  const Graph crossing = Graph::from_edges(g.num_vertices(), across);
  const SaturationResult sat = saturate_or_violator(crossing, uncovered, covered);
  if (!sat.saturating()) throw InvariantViolation("no matching saturates the uncovered half-vertices");
  VertexSet matched;
  for (auto [a, b] : sat.matching.edges) matched.push_back(contains(covered, a) ? a : b);
  const VertexSet x = set_difference(covered, make_vertex_set(std::move(matched)));

  const int opt = static_cast<int>(lp.v1.size() + covered.size());
  if (static_cast<int>(x.size()) != 2 * opt - lp.doubled_value)
    throw InvariantViolation("modulator size differs from twice the integrality gap");
  return x;
}

ModulatorSizeReport compare_modulator_sizes(const Graph& g, int depth) {
  const int n = g.num_vertices();
  if (n > 16) throw ResourceError("modulator comparison is exhaustive; at most 16 vertices");
  if (depth < 0) throw InputError("depth must be non-negative");
  ModulatorSizeReport r;
  r.depth = depth;
  r.twice_gap = 2 * opt_value(g) - lp_doubled(g);

  auto smallest = [&](const ClassOracle& oracle) {
    std::vector<std::uint32_t> masks(std::uint32_t{1} << n);
    for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
    for (std::uint32_t m : masks) {
      VertexSet s;
      for (int v = 0; v < n; ++v)
        if (m >> v & 1) s.push_back(v);
      if (elimination_distance(remove_vertices(g, s).graph, oracle, depth)) return static_cast<int>(s.size());
    }
    return n;
  };
  r.treedepth_modulator = smallest(ClassOracle(ClassTag{ClassKind::empty, 0}));
  r.lp_modulator = smallest(ClassOracle(ClassTag{ClassKind::lp, 0}));
  if (!r.holds()) throw InvariantViolation("LP-class modulator is larger than a bound it must meet");
  return r;
}

}  // namespace bvc
