#include "bvc/elimination.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "bvc/errors.hpp"
#include "bvc/io.hpp"

namespace bvc {

// ---------------------------------------------------------------- forest --

int EliminationForest::add_node(int parent, bool leaf, VertexSet bag) {
  if (parent < -1 || parent >= static_cast<int>(nodes_.size())) throw InputError("forest parent id out of range");
  if (parent >= 0 && nodes_[parent].leaf) throw InputError("forest leaves cannot have children");
  ForestNode n;
  n.parent = parent;
  n.leaf = leaf;
  n.bag = std::move(bag);
  n.depth = parent < 0 ? 0 : nodes_[parent].depth + 1;
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(std::move(n));
  if (parent >= 0) nodes_[parent].children.push_back(id);
  return id;
}

int EliminationForest::add_internal(int parent, Vertex v) { return add_node(parent, false, {v}); }
int EliminationForest::add_leaf(int parent, VertexSet bag) { return add_node(parent, true, make_vertex_set(std::move(bag))); }

std::vector<int> EliminationForest::roots() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i)
    if (nodes_[i].parent < 0) out.push_back(i);
  return out;
}

int EliminationForest::height() const {
  int h = 0;
  for (const auto& n : nodes_)
    if (n.leaf) h = std::max(h, n.depth);
    else h = std::max(h, n.depth + 1);
  return h;
}

VertexSet EliminationForest::subtree_vertices(int id) const {
  std::vector<Vertex> out;
  std::vector<int> stack{id};
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    out.insert(out.end(), nodes_[cur].bag.begin(), nodes_[cur].bag.end());
    stack.insert(stack.end(), nodes_[cur].children.begin(), nodes_[cur].children.end());
  }
  return make_vertex_set(std::move(out));
}

VertexSet EliminationForest::leaf_vertices() const {
  std::vector<Vertex> out;
  for (const auto& n : nodes_)
    if (n.leaf) out.insert(out.end(), n.bag.begin(), n.bag.end());
  return make_vertex_set(std::move(out));
}

VertexSet EliminationForest::internal_vertices() const {
  std::vector<Vertex> out;
  for (const auto& n : nodes_)
    if (!n.leaf) out.insert(out.end(), n.bag.begin(), n.bag.end());
  return make_vertex_set(std::move(out));
}

std::string EliminationForest::emit() const {
  std::ostringstream out;
  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
    const auto& n = nodes_[i];
    if (n.leaf) {
      out << "leaf " << i << " parent " << n.parent << " bag";
      if (!n.bag.empty()) out << ' ' << format_set(n.bag);
    } else {
      out << "node " << i << " parent " << n.parent << " vertex " << n.bag.at(0);
    }
    out << '\n';
  }
  return out.str();
}

EliminationForest EliminationForest::parse(std::string_view text) {
  using Kind = ParseError::Kind;
  EliminationForest f;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    auto num = [&](const std::string& s) {
      try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
      } catch (const std::exception&) {
        throw ParseError(Kind::malformed_line, line, "expected integer, got '" + s + "'");
      }
    };
    const bool is_leaf = tok[0] == "leaf";
    if ((tok[0] != "node" && !is_leaf) || tok.size() < 5 || tok[2] != "parent" || tok[4] != (is_leaf ? "bag" : "vertex"))
      throw ParseError(Kind::malformed_line, line, "expected a node or leaf record");
    if (num(tok[1]) != static_cast<int>(f.nodes_.size()))
      throw ParseError(Kind::malformed_line, line, "forest node ids must be consecutive from 0");
    const int parent = num(tok[3]);
    if (parent < -1 || parent >= static_cast<int>(f.nodes_.size()) || (parent >= 0 && f.nodes_[parent].leaf))
      throw ParseError(Kind::id_out_of_range, line, "invalid parent id " + tok[3]);
    if (is_leaf) {
      if (tok.size() > 6) throw ParseError(Kind::malformed_line, line, "bag must be one comma-separated list");
      VertexSet bag;
      try {
        if (tok.size() == 6) bag = parse_set(tok[5]);
      } catch (const InputError& e) {
        throw ParseError(Kind::malformed_line, line, e.what());
      }
      f.add_leaf(parent, bag);
    } else {
      if (tok.size() != 6) throw ParseError(Kind::malformed_line, line, "internal node needs exactly one vertex");
      f.add_internal(parent, num(tok[5]));
    }
  }
  return f;
}

void EliminationForest::copy_subtree(const EliminationForest& src, int id, int new_parent,
                                     const std::vector<Vertex>& old_to_new) {
  const ForestNode& n = src.nodes_[id];
  if (n.leaf) {
    VertexSet bag;
    for (Vertex v : n.bag)
      if (old_to_new[v] >= 0) bag.push_back(old_to_new[v]);
    add_leaf(new_parent, std::move(bag));
    return;
  }
  const Vertex mapped = old_to_new[n.bag[0]];
  const int here = mapped >= 0 ? add_internal(new_parent, mapped) : new_parent;
  for (int c : n.children) copy_subtree(src, c, here, old_to_new);
}

EliminationForest EliminationForest::project(std::span<const int> roots, const std::vector<Vertex>& old_to_new) const {
  EliminationForest out;
  for (int r : roots) out.copy_subtree(*this, r, -1, old_to_new);
  return out;
}

EliminationForest EliminationForest::with_apex_root(Vertex apex) const {
  EliminationForest out;
  const int top = out.add_internal(-1, apex);
  std::vector<Vertex> identity;
  for (const auto& n : nodes_)
    for (Vertex v : n.bag)
      if (v >= static_cast<Vertex>(identity.size())) identity.resize(v + 1);
  for (Vertex v = 0; v < static_cast<Vertex>(identity.size()); ++v) identity[v] = v;
  for (int r : roots()) out.copy_subtree(*this, r, top, identity);
  if (nodes_.empty()) out.add_leaf(top, {});
  return out;
}

// -------------------------------------------------------------- distance --

namespace {

using Mask = std::uint64_t;

class DistanceSolver {
 public:
  DistanceSolver(const Graph& g, const ClassOracle& oracle) : g_(g), oracle_(oracle) {
    if (g.num_vertices() > 64) throw ResourceError("elimination distance is limited to 64 vertices");
    adj_.assign(g.num_vertices(), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      for (Vertex u : g.neighbors(v)) adj_[v] |= Mask{1} << u;
  }

  Mask all() const { return g_.num_vertices() == 64 ? ~Mask{0} : (Mask{1} << g_.num_vertices()) - 1; }

  bool member(Mask m) {
    auto it = member_.find(m);
    if (it != member_.end()) return it->second;
    return member_[m] = oracle_.member(induced_subgraph(g_, to_set(m)).graph);
  }

  std::vector<Mask> components(Mask m) const {
    std::vector<Mask> out;
    while (m) {
      Mask comp = m & (~m + 1), frontier = comp;
      while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
        next &= m & ~comp;
        comp |= next;
        frontier = next;
      }
      out.push_back(comp);
      m &= ~comp;
    }
    return out;
  }

  // Distance of an arbitrary vertex set if at most `budget`, else budget + 1.
  int of_set(Mask m, int budget) {
    if (m == 0 || member(m)) return 0;
    int worst = 0;
    for (Mask c : components(m)) {
      int r = of_connected(c, budget);
      if (r > budget) return budget + 1;
      worst = std::max(worst, r);
    }
    return worst;
  }

  static VertexSet to_set(Mask m) {
    VertexSet s;
    for (; m; m &= m - 1) s.push_back(std::countr_zero(m));
    return s;
  }

 private:
  struct Entry {
    int value;
    bool exact;  // otherwise a lower bound
  };

  int of_connected(Mask m, int budget) {
    int known_lower = 0;
    if (auto it = memo_.find(m); it != memo_.end()) {
      if (it->second.exact) return std::min(it->second.value, budget + 1);
      if (it->second.value > budget) return budget + 1;
      known_lower = it->second.value;
    }
    if (member(m)) {
      memo_[m] = {0, true};
      return 0;
    }
    int best = budget + 1;
    if (budget >= 1) {
      for (Mask rest = m; rest && best > 1; rest &= rest - 1) {
        const Mask v = rest & (~rest + 1);
        const int r = of_set(m & ~v, best - 2);
        if (r <= best - 2) best = r + 1;
      }
    }
    if (best <= budget) memo_[m] = {best, true};
    else memo_[m] = {std::max(known_lower, budget + 1), false};
    return best;
  }

  const Graph& g_;
  const ClassOracle& oracle_;
  std::vector<Mask> adj_;
  std::unordered_map<Mask, Entry> memo_;
  std::unordered_map<Mask, bool> member_;
};

void build_forest(DistanceSolver& ds, Mask m, int parent, int budget, EliminationForest& out) {
  if (m == 0) return;
  if (ds.member(m)) {
    out.add_leaf(parent, DistanceSolver::to_set(m));
    return;
  }
  for (Mask c : ds.components(m)) {
    if (ds.member(c)) {
      out.add_leaf(parent, DistanceSolver::to_set(c));
      continue;
    }
    const int e = ds.of_set(c, budget);
    for (Mask rest = c; rest; rest &= rest - 1) {
      const Mask v = rest & (~rest + 1);
      if (ds.of_set(c & ~v, e - 1) <= e - 1) {
        const int id = out.add_internal(parent, std::countr_zero(v));
        if ((c & ~v) == 0) out.add_leaf(id, {});
        else build_forest(ds, c & ~v, id, e - 1, out);
        break;
      }
    }
  }
}

}  // namespace

std::optional<int> elimination_distance(const Graph& g, const ClassOracle& oracle, int limit) {
  if (limit < 0) throw InputError("limit must be non-negative");
  DistanceSolver ds(g, oracle);
  const int r = ds.of_set(ds.all(), limit);
  if (r > limit) return std::nullopt;
  return r;
}

std::optional<EliminationForest> elimination_forest(const Graph& g, const ClassOracle& oracle, int d) {
  if (d < 0) throw InputError("depth must be non-negative");
  DistanceSolver ds(g, oracle);
  const int e = ds.of_set(ds.all(), d);
  if (e > d) return std::nullopt;
  EliminationForest f;
  build_forest(ds, ds.all(), -1, e, f);
  const std::string problem = explain_forest(g, f, oracle);
  if (!problem.empty()) throw InvariantViolation("constructed elimination forest is invalid: " + problem);
  if (f.height() != e) throw InvariantViolation("constructed elimination forest has the wrong height");
  return f;
}

std::string explain_forest(const Graph& g, const EliminationForest& forest, const ClassOracle& oracle) {
  const auto& nodes = forest.nodes();
  const int n = g.num_vertices();
  std::vector<int> home(n, -1);
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    const ForestNode& node = nodes[i];
    const std::string at = "node " + std::to_string(i) + ": ";
    if (node.parent >= i) return at + "parent must precede child";
    const int want_depth = node.parent < 0 ? 0 : nodes[node.parent].depth + 1;
    if (node.depth != want_depth) return at + "stored depth inconsistent";
    if (node.parent >= 0) {
      const auto& siblings = nodes[node.parent].children;
      if (std::find(siblings.begin(), siblings.end(), i) == siblings.end()) return at + "missing from parent's children";
    }
    if (node.leaf && !node.children.empty()) return at + "leaf has children";
    if (!node.leaf && node.bag.size() != 1) return at + "internal node must hold exactly one vertex";
    if (!node.leaf && node.children.empty()) return at + "internal node has no children";
    for (Vertex v : node.bag) {
      if (v < 0 || v >= n) return at + "vertex " + std::to_string(v) + " out of range";
      if (home[v] >= 0) return at + "vertex " + std::to_string(v) + " appears in two bags";
      home[v] = i;
    }
    if (node.leaf && !oracle.member(induced_subgraph(g, node.bag).graph))
      return at + "leaf bag {" + format_set(node.bag) + "} is not in class " + oracle.tag().name();
  }
  for (Vertex v = 0; v < n; ++v)
    if (home[v] < 0) return "vertex " + std::to_string(v) + " lies in no bag";
  auto is_ancestor = [&](int a, int b) {
    for (int cur = nodes[b].parent; cur >= 0; cur = nodes[cur].parent)
      if (cur == a) return true;
    return false;
  };
  for (auto [u, v] : g.edges()) {
    const int a = home[u], b = home[v];
    if (a != b && !is_ancestor(a, b) && !is_ancestor(b, a))
      return "edge {" + std::to_string(u) + "," + std::to_string(v) + "} joins unrelated nodes";
  }
  return {};
}

bool verify_forest(const Graph& g, const EliminationForest& forest, const ClassOracle& oracle) {
  return explain_forest(g, forest, oracle).empty();
}

// ---------------------------------------------------------------- solver --

namespace {

Cover solve_forest_rec(const Graph& g, const EliminationForest& f, const ClassOracle& oracle);

// g is spanned by the single tree of f, whose root is internal.
Cover solve_rooted(const Graph& g, const EliminationForest& f, const ClassOracle& oracle) {
  const int root = f.roots().at(0);
  const Vertex r = f.node(root).bag[0];
  const auto& children = f.node(root).children;
  const VertexSet nbrs(g.neighbors(r).begin(), g.neighbors(r).end());

  // Branch 1: r joins the cover.
  Subgraph without_r = remove_vertices(g, {r});
  Cover take_r{set_union(without_r.lift(solve_forest_rec(without_r.graph, f.project(children, without_r.from_parent), oracle).set), {r})};

  Cover take_nbrs;
  if (oracle.hereditary()) {
    // Branch 2: all of N(r) joins the cover.
    Subgraph rest = remove_vertices(g, g.closed_neighborhood({r}));
    take_nbrs.set = set_union(rest.lift(solve_forest_rec(rest.graph, f.project(children, rest.from_parent), oracle).set), nbrs);
  } else {
    // Branch 2 without heredity: neighbours inside base components stay, and
    // each touched base component gets one fresh vertex adjacent to them.
    const VertexSet kept = set_intersection(nbrs, f.leaf_vertices());
    const VertexSet dropped = set_difference(nbrs, kept);
    Subgraph rest = remove_vertices(g, set_union(dropped, {r}));
    EliminationForest hat_forest = f.project(children, rest.from_parent);
    const VertexSet kept_local = rest.lower(kept);

    std::vector<Edge> apex_edges;
    std::vector<std::pair<int, VertexSet>> touched;
    int next = rest.graph.num_vertices();
    for (int id = 0; id < static_cast<int>(hat_forest.nodes().size()); ++id) {
      const ForestNode& node = hat_forest.node(id);
      if (!node.leaf) continue;
      VertexSet hit = set_intersection(node.bag, kept_local);
      if (hit.empty()) continue;
      for (Vertex v : hit) apex_edges.emplace_back(v, next);
      touched.emplace_back(id, set_union(node.bag, {next}));
      ++next;
    }
    const int first_apex = rest.graph.num_vertices();
    Graph hat = Graph::from_edges(next, [&] {
      auto e = rest.graph.edges();
      e.insert(e.end(), apex_edges.begin(), apex_edges.end());
      return e;
    }());
    // Rebuild the forest with apexes appended to their leaf bags.
    EliminationForest widened;
    std::vector<int> remap(hat_forest.nodes().size(), -1);
    for (int id = 0; id < static_cast<int>(hat_forest.nodes().size()); ++id) {
      const ForestNode& node = hat_forest.node(id);
      const int parent = node.parent < 0 ? -1 : remap[node.parent];
      if (!node.leaf) {
        remap[id] = widened.add_internal(parent, node.bag[0]);
        continue;
      }
      VertexSet bag = node.bag;
      for (const auto& [tid, wide] : touched)
        if (tid == id) bag = wide;
      remap[id] = widened.add_leaf(parent, bag);
    }
    const VertexSet hat_cover = solve_forest_rec(hat, widened, oracle).set;

    VertexSet lifted;
    bool uses_apex = false;
    for (Vertex v : hat_cover) {
      if (v >= first_apex) uses_apex = true;
      else lifted.push_back(rest.to_parent[v]);
    }
    take_nbrs.set = set_union(make_vertex_set(lifted), dropped);
    if (uses_apex) take_nbrs.set = set_union(take_nbrs.set, {r});
  }
  return take_nbrs.size() < take_r.size() ? take_nbrs : take_r;
}

Cover solve_forest_rec(const Graph& g, const EliminationForest& f, const ClassOracle& oracle) {
  std::vector<Vertex> cover;
  for (int root : f.roots()) {
    const ForestNode& node = f.node(root);
    if (node.leaf) {
      Subgraph sub = induced_subgraph(g, node.bag);
      for (Vertex v : sub.lift(oracle.solve_in_class(sub.graph).set)) cover.push_back(v);
      continue;
    }
    Subgraph sub = induced_subgraph(g, f.subtree_vertices(root));
    const int roots[] = {root};
    EliminationForest local = f.project(roots, sub.from_parent);
    for (Vertex v : sub.lift(solve_rooted(sub.graph, local, oracle).set)) cover.push_back(v);
  }
  return Cover{make_vertex_set(std::move(cover))};
}

}  // namespace

Cover solve_vc_over_forest(const Graph& g, const EliminationForest& forest, const ClassOracle& oracle) {
  return solve_forest_rec(g, forest, oracle);
}

Cover solve_vc_bounded_ed(const Graph& g, const EliminationForest& forest, const ClassOracle& oracle) {
  const std::string problem = explain_forest(g, forest, oracle);
  if (!problem.empty()) throw ContractError("solve_vc_bounded_ed: invalid forest: " + problem);
  return solve_forest_rec(g, forest, oracle);
}

}  // namespace bvc
