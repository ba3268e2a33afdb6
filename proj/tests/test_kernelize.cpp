#include <doctest.h>

#include "bvc/brute_force.hpp"
#include "bvc/errors.hpp"
#include "bvc/exact_solver.hpp"
#include "bvc/generators.hpp"
#include "bvc/kernelize.hpp"

using namespace bvc;

namespace {

ModulatorInstance make_instance(Graph g, int k, VertexSet x, const char* tag, int depth) {
  ModulatorInstance inst;
  inst.g = std::move(g);
  inst.k = k;
  inst.x = std::move(x);
  inst.tag = ClassTag::parse(tag);
  inst.depth = depth;
  return inst;
}

// Modulator vertex 0 with two pendant edges hanging off it and one isolated vertex.
ModulatorInstance pendant_example(int k) {
  return make_instance(Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 3}, {3, 4}}), k, {0}, "forest", 0);
}

bool all_components_in_class(const ModulatorInstance& inst) {
  ClassOracle oracle(inst.tag);
  return oracle.member(remove_vertices(inst.g, inst.x).graph);
}

}  // namespace

TEST_SUITE("kernelize") {
  TEST_CASE("chunk enumeration") {
    CHECK(enumerate_chunks(complete_graph(2), {0, 1}, 2) == std::vector<Chunk>{{{0}}, {{1}}});
    CHECK(enumerate_chunks(Graph(2), {0, 1}, 2) == std::vector<Chunk>{{{0}}, {{1}}, {{0, 1}}});
    CHECK(enumerate_chunks(Graph(4), {0, 1, 2, 3}, 2).size() == 10);
    CHECK(enumerate_chunks(Graph(4), {0, 1, 2, 3}, 1).size() == 4);
    CHECK(enumerate_chunks(Graph(3), {}, 3).empty());
  }

  TEST_CASE("auxiliary graph edges") {
    // Chunk {0} sees one end of the edge 1-2, all of the triangle 3-4-5, and nothing of 6.
    Graph g = Graph::from_edges(7, std::vector<Edge>{{1, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 1}, {0, 3}, {0, 4}, {0, 5}});
    auto inst = make_instance(g, 10, {0}, "cluster:3", 0);
    ClassOracle oracle(inst.tag);
    auto comps = analyze_components(inst, oracle);
    REQUIRE(comps.size() == 3);
    auto aux = build_chunk_component_graph(inst, oracle, enumerate_chunks(g, inst.x, 3), comps);
    CHECK(aux.num_chunks == 1);
    CHECK(aux.graph.num_edges() == 1);
    CHECK(aux.graph.has_edge(0, 2));  // the triangle
    auto exact = build_chunk_component_graph(inst, oracle, enumerate_chunks(g, inst.x, 3), comps, exact_blocking_tester());
    CHECK(exact.graph == aux.graph);
  }

  TEST_CASE("worked example: every component goes") {
    ClassOracle forest(ClassTag{ClassKind::forest, 0});
    auto r = apply_rule_1(pendant_example(3), forest);
    CHECK(r.trace.deleted.size() == 3);
    CHECK(r.trace.k_decrement == 2);
    CHECK(r.trace.components_after == 0);
    CHECK(r.inst.g.num_vertices() == 1);
    CHECK(r.inst.k == 1);
    CHECK(r.inst.x == VertexSet{0});
    CHECK(opt_value(pendant_example(3).g) - opt_value(r.inst.g) == 2);
    CHECK_FALSE(r.trace.became_no);

    auto no = apply_rule_1(pendant_example(1), forest);
    CHECK(no.inst.is_no());
    CHECK(no.inst.g.num_vertices() == 0);
    CHECK(no.trace.became_no);
  }

  TEST_CASE("identity cases") {
    ClassOracle forest(ClassTag{ClassKind::forest, 0});
    auto only_x = make_instance(complete_graph(3), 2, {0, 1, 2}, "forest", 0);
    auto r = apply_rule_1(only_x, forest);
    CHECK(r.inst == only_x);
    CHECK(r.trace.deleted.empty());

    auto no = ModulatorInstance::canonical_no(ClassTag{ClassKind::forest, 0}, 2);
    CHECK(apply_rule_1(no, forest).inst == no);
    auto k = kernelize_to_base(no, forest);
    CHECK(k.inst.is_no());
    CHECK(k.inst.depth == 0);
  }

  TEST_CASE("Rule 1 is safe, bounded and idempotent on random instances") {
    gen::Rng rng(gen::kDefaultSeed + 1);
    for (const char* name : {"forest", "bipartite", "cluster:3", "lp"}) {
      CAPTURE(name);
      ClassOracle oracle(ClassTag::parse(name));
      for (int trial = 0; trial < 40; ++trial) {
        const int x_size = gen::uniform(rng, 0, 4);
        auto planted = gen::scattered_instance(rng, oracle, gen::uniform(rng, 2, 13), 4, x_size, 0, 0.25);
        ModulatorInstance inst = planted.inst;
        const int opt = brute::opt(inst.g);
        inst.k = opt + gen::uniform(rng, -1, 2);
        if (inst.k < 0) inst.k = 0;
        auto r = apply_rule_1(inst, oracle);
        CHECK(r.trace.within_bound());
        if (r.inst.is_no()) {
          CHECK(opt > inst.k);
          continue;
        }
        CHECK(opt - brute::opt(r.inst.g) == inst.k - r.inst.k);
        auto again = apply_rule_1(r.inst, oracle);
        CHECK(again.inst == r.inst);
        CHECK(again.trace.deleted.empty());
      }
    }
  }

  TEST_CASE("after Rule 1 some optimum meets every matched chunk") {
    gen::Rng rng(gen::kDefaultSeed + 2);
    ClassOracle oracle(ClassTag{ClassKind::forest, 0});
    int with_matching = 0;
    for (int trial = 0; trial < 40; ++trial) {
      auto planted = gen::scattered_instance(rng, oracle, gen::uniform(rng, 4, 10), 3, gen::uniform(rng, 1, 4), 0, 0.4);
      ModulatorInstance inst = planted.inst;
      inst.k = inst.g.num_vertices();
      auto r = apply_rule_1(inst, oracle);
      if (r.trace.matching.empty()) continue;
      ++with_matching;
      bool found = false;
      for (const VertexSet& cover : brute::all_minimum_covers(r.inst.g)) {
        bool meets_all = true;
        for (const auto& [z, h] : r.trace.matching) {
          VertexSet mapped;
          for (Vertex v : z) mapped.push_back(r.old_to_new[v]);
          if (set_intersection(cover, mapped).empty()) meets_all = false;
        }
        if (meets_all) {
          found = true;
          break;
        }
      }
      CHECK(found);
    }
    CHECK(with_matching > 0);
  }

  TEST_CASE("one depth step lands in the class") {
    gen::Rng rng(gen::kDefaultSeed + 3);
    ClassOracle indset(ClassTag{ClassKind::indset, 0});
    for (int trial = 0; trial < 20; ++trial) {
      auto planted = gen::scattered_instance(rng, indset, gen::uniform(rng, 3, 12), 5, gen::uniform(rng, 1, 3), 1, 0.2);
      ModulatorInstance inst = planted.inst;
      inst.k = inst.g.num_vertices();
      auto r = reduce_depth_once(inst, indset);
      CHECK(r.inst.depth == 0);
      CHECK(all_components_in_class(r.inst));
      CHECK(static_cast<long long>(r.trace.moved_roots.size()) <= r.trace.component_bound);
      CHECK(opt_value(inst.g) - opt_value(r.inst.g) == inst.k - r.inst.k);
    }
    CHECK_THROWS_AS(reduce_depth_once(pendant_example(3), indset), ContractError);
  }

  TEST_CASE("an instance already in the class just lowers the depth") {
    ClassOracle forest(ClassTag{ClassKind::forest, 0});
    auto inst = pendant_example(5);
    inst.depth = 1;
    auto r = reduce_depth_once(inst, forest);
    CHECK(r.trace.moved_roots.empty());
    CHECK(r.inst.depth == 0);
  }

  TEST_CASE("kernelize down to depth zero") {
    gen::Rng rng(gen::kDefaultSeed + 4);
    for (const char* name : {"indset", "forest", "lp"}) {
      CAPTURE(name);
      ClassOracle oracle(ClassTag::parse(name));
      for (int trial = 0; trial < 8; ++trial) {
        const int depth = gen::uniform(rng, 0, 2);
        auto planted = gen::scattered_instance(rng, oracle, gen::uniform(rng, 3, 13), 6, gen::uniform(rng, 1, 3), depth, 0.2);
        ModulatorInstance inst = planted.inst;
        const int opt = opt_value(inst.g);
        inst.k = opt + gen::uniform(rng, -1, 1);
        if (inst.k < 0) inst.k = 0;
        auto out = kernelize_to_base(inst, oracle);
        CHECK(out.inst.depth == 0);
        CHECK(out.traces.size() == static_cast<std::size_t>(depth + 1));
        for (const auto& t : out.traces) CHECK(t.within_bound());
        const bool yes_before = opt <= inst.k;
        const bool yes_after = !out.inst.is_no() && opt_value(out.inst.g) <= out.inst.k;
        CHECK(yes_before == yes_after);
        if (!out.inst.is_no()) CHECK(all_components_in_class(out.inst));
      }
    }
  }

  TEST_CASE("trace text is line oriented") {
    ClassOracle forest(ClassTag{ClassKind::forest, 0});
    auto text = emit_trace(apply_rule_1(pendant_example(3), forest).trace);
    CHECK(text.find("deleted {1,2} {3,4} {5}\n") != std::string::npos);
    CHECK(text.find("k_decrement 2\n") != std::string::npos);
    CHECK(text.find("violator {0}\n") != std::string::npos);
  }

  TEST_CASE("LP modulator examples") {
    CHECK(lp_modulator(complete_graph(3)).size() == 1);
    CHECK(lp_modulator(cycle_graph(6)).empty());
    CHECK(lp_modulator(disjoint_union(complete_graph(3), complete_graph(3))).size() == 2);
    auto x = lp_modulator(petersen_graph());
    CHECK(static_cast<int>(x.size()) == 2 * 6 - 10);
  }

  TEST_CASE("LP modulator on random graphs") {
    gen::Rng rng(gen::kDefaultSeed + 5);
    ClassOracle lp(ClassTag{ClassKind::lp, 0});
    for (int trial = 0; trial < 60; ++trial) {
      Graph g = gen::random_graph(rng, gen::uniform(rng, 1, 12), 0.3);
      VertexSet x = lp_modulator(g);
      CHECK(static_cast<int>(x.size()) == 2 * brute::opt(g) - brute::lp(g).doubled_value);
      CHECK(lp.member(remove_vertices(g, x).graph));
    }
  }

  TEST_CASE("modulator size relations") {
    auto bip = compare_modulator_sizes(cycle_graph(6), 0);
    CHECK(bip.lp_modulator == 0);
    CHECK(bip.twice_gap == 0);
    auto k3 = compare_modulator_sizes(complete_graph(3), 0);
    CHECK(k3.lp_modulator == 1);
    CHECK(k3.twice_gap == 1);
    CHECK(k3.treedepth_modulator == 3);
    auto k4 = compare_modulator_sizes(complete_graph(4), 1);
    CHECK(k4.holds());
    CHECK(k4.treedepth_modulator == 3);
    CHECK_THROWS_AS(compare_modulator_sizes(Graph(17), 0), ResourceError);
  }
}
