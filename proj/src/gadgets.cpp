#include "bvc/gadgets.hpp"

#include <sstream>

#include "bvc/blocking.hpp"
#include "bvc/elimination.hpp"
#include "bvc/errors.hpp"
#include "bvc/exact_solver.hpp"
#include "bvc/io.hpp"

namespace bvc {

void verify_witness(const GadgetWitness& w, bool check_ed) {
  if (!is_minimal_blocking_set(w.graph, w.blocking_set))
    throw InvariantViolation("witness set {" + format_set(w.blocking_set) + "} is not a minimal blocking set");
  const int opt = opt_value(w.graph);
  if (opt != w.claimed_opt)
    throw InvariantViolation("witness claims OPT " + std::to_string(w.claimed_opt) + " but OPT is " + std::to_string(opt));
  if (check_ed && !elimination_distance(w.graph, ClassOracle(w.base), w.claimed_ed))
    throw InvariantViolation("witness exceeds claimed elimination distance " + std::to_string(w.claimed_ed));
}

GadgetWitness make_witness(const Graph& h, const VertexSet& y, const ClassTag& base) {
  if (!is_minimal_blocking_set(h, y)) throw ContractError("{" + format_set(y) + "} is not a minimal blocking set");
  GadgetWitness w{h, make_vertex_set(y), opt_value(h), 0, base};
  w.claimed_ed = *elimination_distance(h, ClassOracle(base), h.num_vertices());
  return w;
}

namespace {

void require_minimal(const GadgetWitness& w, const GadgetOptions& opts, const char* op) {
  if (opts.verify && !is_minimal_blocking_set(w.graph, w.blocking_set))
    throw ContractError(std::string(op) + ": {" + format_set(w.blocking_set) + "} is not a minimal blocking set");
}

void finish(const GadgetWitness& w, const GadgetOptions& opts) {
  if (opts.verify) verify_witness(w, opts.verify_ed);
}

}  // namespace

GadgetWitness attach_blocker_apex(const GadgetWitness& w, GadgetOptions opts) {
  require_minimal(w, opts, "attach_blocker_apex");
  const Vertex apex = w.graph.num_vertices();
  GadgetWitness out{add_apex(w.graph, w.blocking_set), set_union(w.blocking_set, {apex}), w.claimed_opt + 1,
                    w.claimed_ed + 1, w.base};
  finish(out, opts);
  return out;
}

GadgetWitness glue_on_blockers(const GadgetWitness& w1, Vertex pick1, const GadgetWitness& w2,
                               std::optional<Vertex> pick2, GadgetOptions opts) {
  if (w1.blocking_set.size() < 2) throw ContractError("glue_on_blockers: first blocking set needs at least two vertices");
  if (w2.blocking_set.empty()) throw ContractError("glue_on_blockers: second blocking set is empty");
  const Vertex second = pick2.value_or(w2.blocking_set.front());
  if (!contains(w1.blocking_set, pick1) || !contains(w2.blocking_set, second))
    throw ContractError("glue_on_blockers: picks must lie in the blocking sets");
  if (w1.base != w2.base) throw ContractError("glue_on_blockers: witnesses belong to different classes");
  require_minimal(w1, opts, "glue_on_blockers");
  require_minimal(w2, opts, "glue_on_blockers");

  const int shift = w1.graph.num_vertices();
  const Edge bridge{pick1, second + shift};
  const Graph joined = add_edges(disjoint_union(w1.graph, w2.graph), std::span<const Edge>(&bridge, 1));
  VertexSet blockers = set_difference(w1.blocking_set, {pick1});
  for (Vertex v : w2.blocking_set)
    if (v != second) blockers.push_back(v + shift);
  GadgetWitness out{joined, make_vertex_set(blockers), w1.claimed_opt + w2.claimed_opt,
                    std::max(w1.claimed_ed, w2.claimed_ed) + 1, w1.base};
  finish(out, opts);
  return out;
}

GadgetWitness double_blocking_gadget(const GadgetWitness& w, GadgetOptions opts) {
  require_minimal(w, opts, "double_blocking_gadget");
  GadgetOptions inner = opts;
  inner.verify = false;  // the combined result is verified once below
  GadgetWitness with_apex = attach_blocker_apex(w, inner);
  const Vertex apex = w.graph.num_vertices();
  GadgetWitness out = glue_on_blockers(with_apex, apex, w, std::nullopt, inner);
  // Deleting the apex separates the two copies of the input graph.
  out.claimed_ed = w.claimed_ed + 1;
  finish(out, opts);
  return out;
}

GadgetWitness base_witness(const ClassOracle& oracle) {
  const ClassTag tag = oracle.tag();
  switch (tag.kind) {
    case ClassKind::indset: return {Graph(1), {0}, 0, 0, tag};
    case ClassKind::cluster: return {complete_graph(tag.q), full_set(tag.q), tag.q - 1, 0, tag};
    case ClassKind::forest: return {path_graph(4), {0, 3}, 2, 0, tag};
    case ClassKind::bipartite: return {cycle_graph(4), {0, 1}, 2, 0, tag};
    case ClassKind::lp: return {complete_graph(2), {0, 1}, 1, 0, tag};
    case ClassKind::empty: break;
  }
  throw UnsupportedClassError("class " + tag.name() + " has no nonempty member to start a tower from");
}

long long tower_blocking_size(int base_size, int d) {
  if (d <= 0) return base_size;
  if (base_size == 1) return (1LL << (d - 1)) + 1;
  return static_cast<long long>(base_size - 1) * (1LL << d) + 1;
}

std::vector<GadgetWitness> build_lb_tower_levels(const ClassOracle& oracle, const GadgetWitness& base, int d,
                                                 GadgetOptions opts) {
  if (d < 1) throw InputError("tower depth must be at least 1");
  if (oracle.tag().kind == ClassKind::empty) throw UnsupportedClassError("no tower for the empty class");
  if (base.base != oracle.tag()) throw ContractError("base witness belongs to a different class");
  if (opts.verify && (!oracle.member(base.graph) || static_cast<int>(base.blocking_set.size()) != oracle.beta()))
    throw ContractError("base witness must be a class member with a blocking set of size beta");
  std::vector<GadgetWitness> levels;
  GadgetWitness cur = base;
  for (int level = 1; level <= d; ++level) {
    // With singleton blocking sets the first step adds an apex; doubling a
    // singleton would not grow it.
    cur = cur.blocking_set.size() == 1 ? attach_blocker_apex(cur, opts) : double_blocking_gadget(cur, opts);
    if (static_cast<long long>(cur.blocking_set.size()) != tower_blocking_size(static_cast<int>(base.blocking_set.size()), level))
      throw InvariantViolation("tower level " + std::to_string(level) + " has blocking set of unexpected size");
    if (level > 1 && cur.blocking_set.size() != 2 * levels.back().blocking_set.size() - 1)
      throw InvariantViolation("tower sizes do not telescope at level " + std::to_string(level));
    levels.push_back(cur);
  }
  return levels;
}

GadgetWitness build_lb_tower(const ClassOracle& oracle, const GadgetWitness& base, int d, GadgetOptions opts) {
  return build_lb_tower_levels(oracle, base, d, opts).back();
}

ModulatorInstance transform_hypergraph_vc(const Hypergraph& hyp, int k, const Graph& h, const VertexSet& b,
                                          const ClassTag& tag, int depth) {
  hyp.validate();
  if (k < 0) throw InputError("k must be non-negative");
  const VertexSet blockers = make_vertex_set(b);
  if (static_cast<int>(blockers.size()) != hyp.arity)
    throw ContractError("gadget blocking set has size " + std::to_string(blockers.size()) + " but hyperedges have " +
                        std::to_string(hyp.arity) + " vertices");
  if (!is_minimal_blocking_set(h, blockers)) throw ContractError("gadget set is not a minimal blocking set");
  if (!elimination_distance(h, ClassOracle(tag), depth))
    throw ContractError("gadget graph is not within distance " + std::to_string(depth) + " of class " + tag.name());

  const int hn = h.num_vertices();
  const int m = static_cast<int>(hyp.edges.size());
  std::vector<Edge> edges;
  for (int j = 0; j < m; ++j) {
    const int offset = hyp.n + j * hn;
    for (auto [u, v] : h.edges()) edges.emplace_back(offset + u, offset + v);
    for (int q = 0; q < hyp.arity; ++q) edges.emplace_back(hyp.edges[j][q], offset + blockers[q]);
  }
  ModulatorInstance inst;
  inst.g = Graph::from_edges(hyp.n + m * hn, edges);
  inst.k = m * opt_value(h) + k;
  inst.x = full_set(hyp.n);
  inst.tag = tag;
  inst.depth = depth;
  return inst;
}

std::string emit_witness(const GadgetWitness& w) {
  std::ostringstream out;
  out << "blocking " << format_set(w.blocking_set) << "\nsize " << w.blocking_set.size() << "\nopt " << w.claimed_opt
      << "\ned " << w.claimed_ed << "\nclass " << w.base.name() << '\n';
  return out.str();
}

}  // namespace bvc
