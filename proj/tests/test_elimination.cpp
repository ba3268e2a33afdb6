#include <doctest.h>

#include "bvc/brute_force.hpp"
#include "bvc/elimination.hpp"
#include "bvc/errors.hpp"
#include "bvc/generators.hpp"

using namespace bvc;

namespace {

const ClassOracle kEmpty({ClassKind::empty});
const ClassOracle kIndset({ClassKind::indset});
const ClassOracle kForest({ClassKind::forest});
const ClassOracle kLp({ClassKind::lp});

}  // namespace

TEST_SUITE("elimination") {
  TEST_CASE("distance examples") {
    CHECK(elimination_distance(path_graph(3), kIndset, 5) == 1);
    CHECK(elimination_distance(path_graph(6), kForest, 5) == 0);
    CHECK(elimination_distance(path_graph(7), kEmpty, 5) == 3);
    CHECK(elimination_distance(complete_graph(4), kForest, 5) == 2);
    CHECK(elimination_distance(complete_graph(4), kForest, 1) == std::nullopt);
    CHECK(elimination_distance(Graph(0), kEmpty, 0) == 0);
    CHECK(elimination_distance(Graph(1), kEmpty, 3) == 1);
    CHECK(elimination_distance(complete_graph(3), kLp, 3) == 1);
  }

  TEST_CASE("treedepth of paths matches the closed form") {
    for (int n = 1; n <= 15; ++n)
      CHECK(elimination_distance(path_graph(n), kEmpty, 6) == brute::path_treedepth(n));
  }

  TEST_CASE("forest examples") {
    auto p3 = elimination_forest(path_graph(3), kIndset, 1);
    REQUIRE(p3.has_value());
    auto roots = p3->roots();
    REQUIRE(roots.size() == 1);
    CHECK_FALSE(p3->node(roots[0]).leaf);
    CHECK(p3->node(roots[0]).bag == VertexSet{1});
    CHECK(p3->height() == 1);
    CHECK(p3->leaf_vertices() == VertexSet{0, 2});

    auto member = elimination_forest(cycle_graph(6), ClassOracle({ClassKind::bipartite}), 0);
    REQUIRE(member.has_value());
    REQUIRE(member->nodes().size() == 1);
    CHECK(member->node(0).leaf);
    CHECK(member->node(0).bag == full_set(6));

    CHECK_FALSE(elimination_forest(complete_graph(4), kForest, 1).has_value());
    auto k4 = elimination_forest(complete_graph(4), kForest, 2);
    REQUIRE(k4.has_value());
    CHECK(k4->height() == 2);

    auto k1 = elimination_forest(Graph(1), kEmpty, 1);
    REQUIRE(k1.has_value());
    CHECK(k1->height() == 1);
    CHECK(verify_forest(Graph(1), *k1, kEmpty));
  }

  TEST_CASE("verify_forest rejects broken witnesses") {
    Graph p3 = path_graph(3);
    EliminationForest good;
    int r = good.add_internal(-1, 1);
    good.add_leaf(r, {0});
    good.add_leaf(r, {2});
    CHECK(verify_forest(p3, good, kIndset));

    // Edge 0-1 between sibling leaves.
    EliminationForest siblings;
    int s = siblings.add_internal(-1, 2);
    siblings.add_leaf(s, {0});
    siblings.add_leaf(s, {1});
    CHECK_FALSE(verify_forest(p3, siblings, kIndset));

    EliminationForest not_member;
    not_member.add_leaf(-1, {0, 1, 2});
    CHECK_FALSE(verify_forest(p3, not_member, kIndset));

    EliminationForest missing;
    int m = missing.add_internal(-1, 1);
    missing.add_leaf(m, {0});
    CHECK_FALSE(verify_forest(p3, missing, kIndset));

    EliminationForest childless;
    childless.add_internal(-1, 1);
    childless.add_leaf(-1, {0, 2});
    CHECK_FALSE(verify_forest(p3, childless, kIndset));
  }

  TEST_CASE("forest serialisation round-trips") {
    auto f = elimination_forest(petersen_graph(), kForest, 3);
    REQUIRE(f.has_value());
    CHECK(EliminationForest::parse(f->emit()) == *f);
    auto empty_leaf = elimination_forest(Graph(1), kEmpty, 1);
    CHECK(EliminationForest::parse(empty_leaf->emit()) == *empty_leaf);
    CHECK(empty_leaf->emit() == "node 0 parent -1 vertex 0\nleaf 1 parent 0 bag\n");
    CHECK_THROWS_AS(EliminationForest::parse("node 0 parent 3 vertex 1\n"), ParseError);
    CHECK_THROWS_AS(EliminationForest::parse("leaf 1 parent -1 bag 0\n"), ParseError);
  }

  TEST_CASE("forests exist exactly when the distance fits") {
    gen::Rng rng(51);
    for (const ClassOracle* oracle : {&kEmpty, &kIndset, &kForest, &kLp}) {
      for (int t = 0; t < 25; ++t) {
        Graph g = gen::random_graph(rng, gen::uniform(rng, 0, 9), 0.35);
        const int d = gen::uniform(rng, 0, 3);
        auto ed = elimination_distance(g, *oracle, d);
        auto f = elimination_forest(g, *oracle, d);
        CHECK(ed.has_value() == f.has_value());
        if (f) {
          CHECK(verify_forest(g, *f, *oracle));
          CHECK(f->height() == *ed);
        }
      }
    }
  }

  TEST_CASE("distance is the maximum over components") {
    gen::Rng rng(52);
    for (int t = 0; t < 40; ++t) {
      Graph a = gen::random_graph(rng, gen::uniform(rng, 1, 7), 0.5);
      Graph b = gen::random_graph(rng, gen::uniform(rng, 1, 7), 0.5);
      auto ea = elimination_distance(a, kIndset, 10), eb = elimination_distance(b, kIndset, 10);
      CHECK(elimination_distance(disjoint_union(a, b), kIndset, 10) == std::max(*ea, *eb));
    }
  }

  TEST_CASE("hereditary distance is monotone under deletion") {
    gen::Rng rng(53);
    for (int t = 0; t < 40; ++t) {
      Graph g = gen::random_graph(rng, gen::uniform(rng, 2, 10), 0.4);
      const Vertex v = gen::uniform(rng, 0, g.num_vertices() - 1);
      CHECK(*elimination_distance(remove_vertices(g, {v}).graph, kForest, 10) <= *elimination_distance(g, kForest, 10));
    }
  }

  TEST_CASE("bounded-distance solver examples") {
    Graph tree = Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}});
    auto f0 = elimination_forest(tree, kForest, 0);
    CHECK(solve_vc_bounded_ed(tree, *f0, kForest).size() == kForest.solve_in_class(tree).size());

    EliminationForest p3f;
    int r = p3f.add_internal(-1, 1);
    p3f.add_leaf(r, {0});
    p3f.add_leaf(r, {2});
    CHECK(solve_vc_bounded_ed(path_graph(3), p3f, kIndset).set == VertexSet{1});

    Graph k3_pendant = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {2, 3}});
    // The pendant lifts LP to 2 = OPT, so this graph already lies in C_LP.
    CHECK(elimination_distance(k3_pendant, kLp, 2) == 0);
    EliminationForest lf;
    int top = lf.add_internal(-1, 2);
    lf.add_leaf(top, {0, 1, 3});
    CHECK(solve_vc_bounded_ed(k3_pendant, lf, kLp).size() == opt_value(k3_pendant));
    CHECK(elimination_distance(cycle_graph(5), kLp, 2) == 1);
    auto c5 = elimination_forest(cycle_graph(5), kLp, 1);
    CHECK(solve_vc_bounded_ed(cycle_graph(5), *c5, kLp).size() == 3);

    EliminationForest bad;
    bad.add_leaf(-1, {0, 1, 2});
    CHECK_THROWS_AS(solve_vc_bounded_ed(path_graph(3), bad, kIndset), ContractError);
  }

  TEST_CASE("bounded-distance solver is exact on planted forests") {
    gen::Rng rng(54);
    for (const ClassOracle* oracle : {&kForest, &kLp, &kIndset, &kEmpty}) {
      for (int t = 0; t < 40; ++t) {
        auto [g, f] = gen::planted_graph(rng, *oracle, gen::uniform(rng, 1, 14), gen::uniform(rng, 0, 3));
        REQUIRE(verify_forest(g, f, *oracle));
        Cover c = solve_vc_bounded_ed(g, f, *oracle);
        CHECK(g.is_vertex_cover(c.set));
        CHECK(c.size() == brute::opt(g));
      }
    }
  }

  TEST_CASE("forest projection splices deleted internal vertices") {
    auto f = elimination_forest(path_graph(7), kEmpty, 3);
    REQUIRE(f.has_value());
    Subgraph rest = remove_vertices(path_graph(7), {3});
    EliminationForest p = f->project(f->roots(), rest.from_parent);
    CHECK(verify_forest(rest.graph, p, kEmpty));
    EliminationForest apex = p.with_apex_root(rest.graph.num_vertices());
    Graph with_apex = add_apex(rest.graph, {0, 5});
    CHECK(verify_forest(with_apex, apex, kEmpty));
    CHECK(apex.height() == p.height() + 1);
  }
}
