#include "bvc/verify.hpp"

#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <map>
#include <sstream>

#include "bvc/blocking.hpp"
#include "bvc/brute_force.hpp"
#include "bvc/elimination.hpp"
#include "bvc/errors.hpp"
#include "bvc/exact_solver.hpp"
#include "bvc/gadgets.hpp"
#include "bvc/generators.hpp"
#include "bvc/io.hpp"
#include "bvc/kernelize.hpp"

namespace bvc {

namespace {

constexpr std::size_t kMaxMessages = 5;

class Checker {
 public:
  explicit Checker(SuiteResult& r) : r_(r) {}

  void check(bool ok, const std::string& what) {
    ++r_.cases;
    if (!ok) fail(what);
  }

  // Runs one case; an exception counts as a failure of that case.
  void guarded(const std::string& label, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      ++r_.cases;
      fail(label + ": " + e.what());
    }
  }

 private:
  void fail(const std::string& what) {
    ++r_.failures;
    if (r_.messages.size() < kMaxMessages) r_.messages.push_back(what);
  }

  SuiteResult& r_;
};

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.num_vertices() << " edges=";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    out << (first ? "" : ",") << u << '-' << v;
    first = false;
  }
  return out.str();
}

const ClassTag kIndset{ClassKind::indset, 0};
const ClassTag kForest{ClassKind::forest, 0};
const ClassTag kBipartite{ClassKind::bipartite, 0};
const ClassTag kTriangles{ClassKind::cluster, 3};
const ClassTag kLp{ClassKind::lp, 0};

// --- acceptance experiments -------------------------------------------------

void tower_suite(Checker& c, const ClassTag& tag, int max_d, int exhaustive_up_to, std::string& summary) {
  ClassOracle oracle(tag);
  const GadgetWitness base = base_witness(oracle);
  const auto levels = build_lb_tower_levels(oracle, base, max_d);
  std::string sizes;
  for (int d = 1; d <= max_d; ++d) {
    const GadgetWitness& w = levels[d - 1];
    const long long size = static_cast<long long>(w.blocking_set.size());
    sizes += (d > 1 ? "," : "") + std::to_string(size);
    const long long closed = tag.kind == ClassKind::indset ? (1LL << (d - 1)) + 1
                                                           : static_cast<long long>(oracle.beta() - 1) * (1LL << d) + 1;
    const std::string at = tag.name() + " d=" + std::to_string(d);
    c.check(size == closed, at + ": blocking set " + std::to_string(size) + " vs closed form " + std::to_string(closed));
    c.check(size == oracle.beta_upper_bound(d), at + ": blocking set differs from the upper bound");
    c.check(is_minimal_blocking_set(w.graph, w.blocking_set), at + ": not minimal blocking");
    c.check(w.claimed_ed <= d && elimination_distance(w.graph, oracle, d).has_value(), at + ": distance exceeds d");
    c.check(opt_value(w.graph) == w.claimed_opt, at + ": claimed OPT wrong");
    if (d <= exhaustive_up_to) {
      const BetaResult beta = max_minimal_blocking_set_size(w.graph);
      c.check(!beta.truncated && beta.value == size,
              at + ": exhaustive beta " + std::to_string(beta.value) + " differs from " + std::to_string(size));
      if (w.graph.num_vertices() <= 10)
        c.check(brute::beta(w.graph) == size, at + ": brute-force beta differs");
    }
  }
  summary = tag.name() + " tower sizes " + sizes;
}

SuiteResult tower_indset(std::uint64_t) {
  SuiteResult r;
  Checker c(r);
  c.guarded("tower", [&] { tower_suite(c, kIndset, 3, 3, r.summary); });
  return r;
}

SuiteResult tower_cluster(std::uint64_t) {
  SuiteResult r;
  Checker c(r);
  c.guarded("tower", [&] { tower_suite(c, kTriangles, 2, 1, r.summary); });
  return r;
}

SuiteResult rule1(std::uint64_t seed) {
  SuiteResult r;
  Checker c(r);
  gen::Rng rng(seed);
  int deleted = 0, with_violator = 0, became_no = 0;
  for (const ClassTag& tag : {kForest, kBipartite, kTriangles, kLp}) {
    ClassOracle oracle(tag);
    for (int trial = 0; trial < 300; ++trial) {
      const int x_size = gen::uniform(rng, 0, 5);
      const int rest = gen::uniform(rng, 1, 18 - x_size);
      auto planted = gen::scattered_instance(rng, oracle, rest, gen::uniform(rng, 1, 5), x_size, 0,
                                             0.1 + 0.1 * gen::uniform(rng, 0, 3));
      ModulatorInstance inst = planted.inst;
      const std::string at = tag.name() + " #" + std::to_string(trial) + " " + describe(inst.g);
      c.guarded(at, [&] {
        const int opt = opt_value(inst.g);
        inst.k = std::max(0, opt + gen::uniform(rng, -2, 2));
        const RuleOutcome out = apply_rule_1(inst, oracle);
        deleted += static_cast<int>(out.trace.deleted.size());
        with_violator += !out.trace.violator.empty();
        c.check(out.trace.within_bound(), at + ": component bound exceeded");
        if (out.inst.is_no()) {
          ++became_no;
          c.check(opt > inst.k, at + ": NO produced for a yes-instance");
        } else {
          c.check(opt - opt_value(out.inst.g) == inst.k - out.inst.k, at + ": OPT shift differs from k shift");
        }
      });
    }
  }
  r.summary = "1200 instances, " + std::to_string(deleted) + " components deleted, " + std::to_string(with_violator) +
              " with a Hall violator, " + std::to_string(became_no) + " NO";
  return r;
}

SuiteResult transform(std::uint64_t seed) {
  SuiteResult r;
  Checker c(r);
  gen::Rng rng(seed);
  const Graph k3 = complete_graph(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Hypergraph hyp = gen::random_hypergraph(rng, gen::uniform(rng, 3, 6), 3, gen::uniform(rng, 0, 3));
    c.guarded("hypergraph #" + std::to_string(trial), [&] {
      const ModulatorInstance inst = transform_hypergraph_vc(hyp, 0, k3, {0, 1, 2}, kTriangles);
      const int hyp_opt = brute::hypergraph_opt(hyp);
      const int g_opt = brute::opt(inst.g);
      for (int k = 0; k <= hyp.n; ++k)
        c.check((hyp_opt <= k) == (g_opt <= inst.k + k), "hypergraph #" + std::to_string(trial) + " k=" + std::to_string(k));
    });
  }
  c.guarded("figure instance", [&] {
    ClassOracle indset(kIndset);
    const GadgetWitness gadget = build_lb_tower(indset, base_witness(indset), 2);
    const Hypergraph hyp{6, 3, {{0, 1, 2}, {0, 2, 3}, {3, 4, 5}}};
    const ModulatorInstance inst = transform_hypergraph_vc(hyp, 2, gadget.graph, gadget.blocking_set, kIndset, 2);
    c.check(brute::hypergraph_opt(hyp) == 2, "figure: hypergraph cover of size 2 expected");
    c.check(inst.k == 2 + 3 * 3, "figure: k' should be 2 + 3*3");
    c.check(brute::opt(inst.g) == 2 + 3 * 3, "figure: transformed OPT should be 2 + 3*3");
  });
  r.summary = "200 sampled hypergraphs with K3 gadget, figure instance OPT 2+3*3";
  return r;
}

SuiteResult lp_machinery(std::uint64_t seed) {
  SuiteResult r;
  Checker c(r);
  gen::Rng rng(seed);
  int bipartite = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = gen::uniform(rng, 1, 14);
    const bool bip = trial % 3 == 0;
    const Graph g = bip ? gen::random_bipartite(rng, n, 0.35) : gen::random_graph(rng, n, 0.1 + 0.05 * gen::uniform(rng, 0, 6));
    const std::string at = describe(g);
    c.guarded(at, [&] {
      const int opt = brute::opt(g);
      const int dlp = lp_doubled(g);
      if (n <= 9) c.check(brute::lp(g).doubled_value == dlp, at + ": LP differs from enumeration");
      c.check(dlp <= 2 * opt && opt <= dlp, at + ": LP <= OPT <= 2 LP fails");
      if (bip) {
        ++bipartite;
        const auto sides = bipartition(g);
        c.check(sides.has_value(), at + ": bipartite sample not two-colourable");
        const int mm = max_matching_bipartite(g, sides->first, sides->second).size();
        c.check(dlp == 2 * mm && mm == opt, at + ": LP = MM = OPT fails on a bipartite graph");
      }
      const HalfIntegralSolution nt = nemhauser_trotter(g);
      const int half_opt = brute::opt(induced_subgraph(g, nt.v_half).graph);
      c.check(opt == static_cast<int>(nt.v1.size()) + half_opt, at + ": OPT = |V1| + OPT(G[V1/2]) fails");
      c.check(nt.doubled_value == dlp, at + ": half-integral value differs from LP");
    });
  }
  r.summary = "500 graphs (" + std::to_string(bipartite) + " bipartite)";
  return r;
}

SuiteResult lp_modulator_suite(std::uint64_t seed) {
  SuiteResult r;
  Checker c(r);
  gen::Rng rng(seed);
  ClassOracle lp(kLp);
  int total_gap = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = gen::random_graph(rng, gen::uniform(rng, 1, 14), 0.15 + 0.05 * gen::uniform(rng, 0, 5));
    const std::string at = describe(g);
    c.guarded(at, [&] {
      const VertexSet x = lp_modulator(g);
      const int gap2 = 2 * brute::opt(g) - lp_doubled(g);
      total_gap += gap2;
      c.check(static_cast<int>(x.size()) == gap2, at + ": |X| differs from 2(OPT - LP)");
      c.check(lp.member(remove_vertices(g, x).graph), at + ": G - X outside the LP class");
    });
  }
  r.summary = "200 graphs, total |X| " + std::to_string(total_gap);
  return r;
}

SuiteResult bounded_ed(std::uint64_t seed) {
  SuiteResult r;
  Checker c(r);
  gen::Rng rng(seed);
  for (int trial = 0; trial < 200; ++trial) {
    const ClassOracle oracle(trial % 2 == 0 ? kForest : kLp);
    const int d = gen::uniform(rng, 0, 2);
    auto [g, forest] = gen::planted_graph(rng, oracle, gen::uniform(rng, 1, 16), d);
    const std::string at = oracle.tag().name() + " d=" + std::to_string(d) + " " + describe(g);
    c.guarded(at, [&] {
      c.check(forest.height() <= d, at + ": planted forest too tall");
      const Cover cover = solve_vc_bounded_ed(g, forest, oracle);
      c.check(g.is_vertex_cover(cover.set), at + ": not a cover");
      c.check(cover.size() == brute::opt(g), at + ": size differs from the brute-force optimum");
    });
  }
  r.summary = "200 planted forests (forest and lp, d <= 2)";
  return r;
}

SuiteResult kernelize_suite(std::uint64_t seed) {
  SuiteResult r;
  Checker c(r);
  gen::Rng rng(seed);
  const ClassTag tags[] = {kIndset, kForest, kBipartite, kTriangles, kLp};
  int shrunk = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const ClassOracle oracle(tags[trial % 5]);
    const int d = gen::uniform(rng, 0, 2);
    const int x_size = gen::uniform(rng, 1, 3);
    auto planted = gen::scattered_instance(rng, oracle, gen::uniform(rng, 2, 18 - x_size), gen::uniform(rng, 2, 6),
                                           x_size, d, 0.2);
    ModulatorInstance inst = planted.inst;
    const std::string at = oracle.tag().name() + " d=" + std::to_string(d) + " " + describe(inst.g);
    c.guarded(at, [&] {
      const int opt = opt_value(inst.g);
      inst.k = std::max(0, opt - (trial % 4 == 0 ? 1 : 0));
      const KernelOutcome out = kernelize_to_base(inst, oracle);
      c.check(out.inst.depth == 0, at + ": output depth not 0");
      c.check(out.traces.size() == static_cast<std::size_t>(d + 1), at + ": wrong number of levels");
      for (const ReductionTrace& t : out.traces) c.check(t.within_bound(), at + ": component bound exceeded");
      const bool yes_before = opt <= inst.k;
      if (out.inst.is_no()) {
        c.check(!yes_before, at + ": yes-instance became NO");
        return;
      }
      const int opt_after = opt_value(out.inst.g);
      c.check(yes_before == (opt_after <= out.inst.k), at + ": answer changed");
      c.check(opt - opt_after == inst.k - out.inst.k, at + ": OPT shift differs from k shift");
      c.check(oracle.member(remove_vertices(out.inst.g, out.inst.x).graph), at + ": G - X not in the class");
      shrunk += out.inst.g.num_vertices() < inst.g.num_vertices();
    });
  }
  r.summary = "100 instances, " + std::to_string(shrunk) + " shrunk";
  return r;
}

SuiteResult blocking_suite(std::uint64_t seed) {
  SuiteResult r;
  Checker c(r);
  gen::Rng rng(seed);
  int blocking = 0, minimal = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = gen::uniform(rng, 1, 10);
    const Graph g = gen::random_graph(rng, n, 0.15 + 0.05 * gen::uniform(rng, 0, 6));
    const VertexSet y = gen::random_subset(rng, n, 0.1 + 0.1 * gen::uniform(rng, 0, 3));
    const std::string at = describe(g) + " Y={" + format_set(y) + "}";
    c.guarded(at, [&] {
      const BlockingVerdict v = classify_blocking_set(g, y);
      c.check(v.is_blocking == is_blocking_set_apex(g, y), at + ": deficit and apex tests disagree");
      c.check(v.is_blocking == brute::blocking(g, y), at + ": disagrees with cover enumeration");
      if (!v.is_blocking) return;
      ++blocking;
      c.check(*v.is_minimal == brute::minimal_blocking(g, y), at + ": minimality disagrees with enumeration");
      if (!*v.is_minimal) return;
      ++minimal;
      c.check(v.deficit == 1, at + ": minimal set with deficit " + std::to_string(v.deficit));
      int touched = 0;
      for (const VertexSet& part : connected_components(g)) touched += !set_intersection(part, y).empty();
      c.check(touched == 1, at + ": minimal set meets " + std::to_string(touched) + " components");
      c.check(verify_blocking_basics(g, y).all(), at + ": structural facts fail");
    });
  }
  r.summary = "500 pairs, " + std::to_string(blocking) + " blocking, " + std::to_string(minimal) + " minimal";
  return r;
}

SuiteResult lp_bound(std::uint64_t seed) {
  SuiteResult r;
  Checker c(r);
  gen::Rng rng(seed);
  ClassOracle lp(kLp);
  const int bound = lp.beta_upper_bound(1);
  int largest = 0, trial = 0, attempts = 0;
  while (trial < 100 && attempts < 20000) {
    ++attempts;
    const int n = gen::uniform(rng, 1, 12);
    Graph g = attempts % 2 ? gen::planted_graph(rng, lp, n, 1).first
                           : gen::random_graph(rng, n, 0.2 + 0.05 * gen::uniform(rng, 0, 4));
    if (g.num_vertices() > 12 || !elimination_distance(g, lp, 1)) continue;
    ++trial;
    const std::string at = describe(g);
    c.guarded(at, [&] {
      const BetaResult beta = max_minimal_blocking_set_size(g);
      largest = std::max(largest, beta.value);
      c.check(!beta.truncated && beta.value <= bound, at + ": beta " + std::to_string(beta.value) + " exceeds 5");
      if (g.num_vertices() <= 8) c.check(brute::beta(g) == beta.value, at + ": beta differs from enumeration");
    });
  }
  c.check(trial == 100, "could not sample 100 graphs with ed_lp <= 1");
  r.summary = std::to_string(trial) + " graphs with ed_lp <= 1, largest beta " + std::to_string(largest) +
              " (bound " + std::to_string(bound) + ")";
  return r;
}

// --- module invariants --------------------------------------------------------

SuiteResult graph_io(std::uint64_t seed) {
  SuiteResult r;
  Checker c(r);
  gen::Rng rng(seed);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = gen::random_graph(rng, gen::uniform(rng, 0, 20), 0.2);
    c.guarded(describe(g), [&] {
      c.check(parse_graph(emit_instance(g)) == g, describe(g) + ": graph round trip");
      ModulatorInstance inst{g, gen::uniform(rng, 0, 10), gen::random_subset(rng, g.num_vertices(), 0.2), kForest,
                             gen::uniform(rng, 0, 3)};
      c.check(parse_modulator_instance(emit_instance(inst)) == inst, describe(g) + ": instance round trip");
      if (g.num_vertices() >= 3) {
        const Hypergraph h = gen::random_hypergraph(rng, g.num_vertices(), 3, gen::uniform(rng, 0, 5));
        c.check(parse_hypergraph(emit_instance(h)) == h, describe(g) + ": hypergraph round trip");
      }
      for (auto [u, v] : g.edges()) c.check(g.has_edge(v, u), describe(g) + ": asymmetric adjacency");
    });
  }
  r.summary = "100 random graphs through every text format";
  return r;
}

SuiteResult exact_solver_suite(std::uint64_t seed) {
  SuiteResult r;
  Checker c(r);
  gen::Rng rng(seed);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = gen::random_graph(rng, gen::uniform(rng, 0, 14), 0.1 + 0.05 * gen::uniform(rng, 0, 8));
    const std::string at = describe(g);
    c.guarded(at, [&] {
      const int opt = brute::opt(g);
      const Cover cover = solve_vc_exact(g);
      c.check(cover.size() == opt && g.is_vertex_cover(cover.set), at + ": exact solver disagrees with enumeration");
      c.check(!solve_vc_exact(g, opt - 1).has_value() && solve_vc_exact(g, opt).has_value(),
              at + ": budgeted search inconsistent");
      c.check(solve_vc_exact(g, ExactOptions{true}).size() == opt, at + ": LP-pruned search differs");
    });
  }
  r.summary = "200 random graphs against enumeration";
  return r;
}

SuiteResult class_oracles(std::uint64_t seed) {
  SuiteResult r;
  Checker c(r);
  gen::Rng rng(seed);
  for (const char* name : {"indset", "forest", "bipartite", "cluster:2", "cluster:3", "lp"}) {
    ClassOracle oracle(ClassTag::parse(name));
    for (int trial = 0; trial < 40; ++trial) {
      const Graph g = gen::random_member(rng, oracle, gen::uniform(rng, 0, 12));
      const std::string at = std::string(name) + " " + describe(g);
      c.guarded(at, [&] {
        c.check(oracle.member(g), at + ": generated member rejected");
        const Cover cover = oracle.solve_in_class(g);
        c.check(g.is_vertex_cover(cover.set) && cover.size() == brute::opt(g), at + ": class solver not optimal");
        if (g.num_vertices() <= 8) {
          const int beta = brute::beta(g);
          c.check(beta <= oracle.beta(), at + ": member beta " + std::to_string(beta) + " above class beta");
        }
      });
    }
  }
  r.summary = "240 class members: membership, class solvers, beta";
  return r;
}

SuiteResult elimination_suite(std::uint64_t seed) {
  SuiteResult r;
  Checker c(r);
  gen::Rng rng(seed);
  ClassOracle empty(ClassTag{ClassKind::empty, 0});
  for (int n = 1; n <= 15; ++n)
    c.guarded("path " + std::to_string(n), [&] {
      c.check(elimination_distance(path_graph(n), empty, n) == brute::path_treedepth(n), "path treedepth " + std::to_string(n));
    });
  for (const char* name : {"empty", "indset", "forest", "bipartite", "cluster:3", "lp"}) {
    ClassOracle oracle(ClassTag::parse(name));
    for (int trial = 0; trial < 25; ++trial) {
      const Graph g = gen::random_graph(rng, gen::uniform(rng, 1, 10), 0.3);
      const std::string at = std::string(name) + " " + describe(g);
      c.guarded(at, [&] {
        const auto ed = elimination_distance(g, oracle, g.num_vertices());
        c.check(ed.has_value(), at + ": no distance found");
        const auto forest = elimination_forest(g, oracle, *ed);
        c.check(forest && forest->height() == *ed && verify_forest(g, *forest, oracle), at + ": forest invalid");
        if (*ed > 0) c.check(!elimination_forest(g, oracle, *ed - 1), at + ": smaller forest exists");
        c.check((*ed == 0) == oracle.member(g), at + ": distance 0 differs from membership");
        c.check(solve_vc_bounded_ed(g, *forest, oracle).size() == brute::opt(g), at + ": bounded-ed solve differs");
      });
    }
  }
  r.summary = "paths against treedepth, 150 random graphs across classes";
  return r;
}

SuiteResult gadget_suite(std::uint64_t) {
  SuiteResult r;
  Checker c(r);
  const std::pair<const char*, int> plans[] = {{"indset", 4}, {"cluster:2", 3}, {"cluster:3", 2},
                                               {"forest", 2}, {"bipartite", 2}, {"lp", 2}};
  for (auto [name, max_d] : plans) {
    ClassOracle oracle(ClassTag::parse(name));
    c.guarded(name, [&] {
      const GadgetWitness base = base_witness(oracle);
      const auto levels = build_lb_tower_levels(oracle, base, max_d);
      for (int d = 1; d <= max_d; ++d) {
        const auto& w = levels[d - 1];
        const long long size = static_cast<long long>(w.blocking_set.size());
        const std::string at = std::string(name) + " d=" + std::to_string(d);
        c.check(size == tower_blocking_size(static_cast<int>(base.blocking_set.size()), d), at + ": size");
        if (oracle.hereditary())
          c.check(size == oracle.beta_upper_bound(d), at + ": not tight against the upper bound");
        else
          c.check(size <= oracle.beta_upper_bound(d), at + ": above the upper bound");
        if (d > 1) c.check(size == 2 * static_cast<long long>(levels[d - 2].blocking_set.size()) - 1, at + ": telescoping");
        c.check(w.claimed_ed <= d, at + ": claimed distance above d");
      }
    });
  }
  r.summary = "towers for six classes, verified level by level";
  return r;
}

using SuiteFn = SuiteResult (*)(std::uint64_t);

struct SuiteEntry {
  SuiteInfo info;
  SuiteFn fn;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries = {
      {{"tower-indset", "blocking-set tower for edgeless graphs reaches 2, 3, 5 and is extremal", 1}, tower_indset},
      {{"tower-cluster", "blocking-set tower from K3 reaches 5, 9", 2}, tower_cluster},
      {{"rule1", "Rule 1 safeness and component bound on 1200 instances", 3}, rule1},
      {{"transform", "hypergraph transformation preserves answers", 4}, transform},
      {{"lp", "LP bounds, König and persistence", 5}, lp_machinery},
      {{"lp-modulator", "LP-class modulator has size 2(OPT - LP)", 6}, lp_modulator_suite},
      {{"bounded-ed", "bounded-distance solver matches brute force", 7}, bounded_ed},
      {{"kernelize", "depth reduction down to a class modulator", 8}, kernelize_suite},
      {{"blocking", "blocking predicates agree; minimal sets are tight", 9}, blocking_suite},
      {{"lp-bound", "beta of graphs one step from the LP class is at most 5", 10}, lp_bound},
      {{"graph-io", "text formats round trip", 0}, graph_io},
      {{"exact-solver", "exact solver against enumeration", 0}, exact_solver_suite},
      {{"class-oracles", "class membership and class solvers", 0}, class_oracles},
      {{"elimination", "elimination distance and forests", 0}, elimination_suite},
      {{"gadgets", "gadget towers for every class", 0}, gadget_suite},
  };
  return entries;
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> v;
    for (const auto& e : registry()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
  for (const auto& e : registry()) {
    if (e.info.name != name) continue;
    const auto start = std::chrono::steady_clock::now();
    SuiteResult r = e.fn(seed);
    r.name = name;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw InputError("unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_suites(const std::string& selector, std::uint64_t seed) {
  std::vector<SuiteResult> out;
  if (selector == "all" || selector == "acceptance") {
    for (const auto& e : registry())
      if (selector == "all" || e.info.criterion > 0) out.push_back(run_suite(e.info.name, seed));
    return out;
  }
  out.push_back(run_suite(selector, seed));
  return out;
}

}  // namespace bvc
