#include <doctest.h>

#include "bvc/blocking.hpp"
#include "bvc/brute_force.hpp"
#include "bvc/class_oracle.hpp"
#include "bvc/errors.hpp"
#include "bvc/generators.hpp"

using namespace bvc;

namespace {

const std::vector<ClassTag> kTags = {{ClassKind::indset, 0}, {ClassKind::forest, 0}, {ClassKind::bipartite, 0},
                                     {ClassKind::cluster, 3}, {ClassKind::lp, 0}};

}  // namespace

TEST_SUITE("class_oracles") {
  TEST_CASE("membership examples") {
    CHECK_FALSE(ClassOracle({ClassKind::forest}).member(cycle_graph(4)));
    CHECK(ClassOracle({ClassKind::lp}).member(complete_graph(2)));
    CHECK_FALSE(ClassOracle({ClassKind::lp}).member(complete_graph(3)));
    CHECK(ClassOracle({ClassKind::bipartite}).member(cycle_graph(6)));
    CHECK(ClassOracle({ClassKind::cluster, 3}).member(disjoint_union(complete_graph(3), complete_graph(2))));
    CHECK_FALSE(ClassOracle({ClassKind::cluster, 2}).member(complete_graph(3)));
    CHECK_FALSE(ClassOracle({ClassKind::cluster, 3}).member(path_graph(3)));
    CHECK(ClassOracle({ClassKind::empty}).member(Graph(0)));
    CHECK_FALSE(ClassOracle({ClassKind::empty}).member(Graph(1)));
    CHECK(ClassOracle({ClassKind::indset}).member(Graph(4)));
  }

  TEST_CASE("class solvers") {
    CHECK(ClassOracle({ClassKind::forest}).solve_in_class(path_graph(3)).set == VertexSet{1});
    CHECK(ClassOracle({ClassKind::cluster, 3}).solve_in_class(disjoint_union(complete_graph(3), complete_graph(2))).size() == 3);
    CHECK(ClassOracle({ClassKind::bipartite}).solve_in_class(cycle_graph(4)).size() == 2);
    // Non-members fall back to an exact solve.
    CHECK(ClassOracle({ClassKind::forest}).solve_in_class(petersen_graph()).size() == 6);
  }

  TEST_CASE("class solvers are optimal on random members") {
    gen::Rng rng(31);
    for (const auto& tag : kTags) {
      ClassOracle oracle(tag);
      for (int t = 0; t < 40; ++t) {
        Graph g = gen::random_member(rng, oracle, gen::uniform(rng, 0, 14));
        REQUIRE(oracle.member(g));
        Cover c = oracle.solve_in_class(g);
        CHECK(g.is_vertex_cover(c.set));
        CHECK(c.size() == brute::opt(g));
      }
    }
  }

  TEST_CASE("hereditary classes are closed under vertex deletion") {
    gen::Rng rng(32);
    for (const auto& tag : kTags) {
      ClassOracle oracle(tag);
      if (!oracle.hereditary()) continue;
      for (int t = 0; t < 30; ++t) {
        Graph g = gen::random_member(rng, oracle, gen::uniform(rng, 1, 12));
        CHECK(oracle.member(remove_vertices(g, gen::random_subset(rng, g.num_vertices(), 0.3)).graph));
      }
    }
  }

  TEST_CASE("lp is not hereditary") {
    CHECK_FALSE(ClassOracle({ClassKind::lp}).hereditary());
    // A triangle with a pendant at every corner has OPT = LP = 3; the bare
    // triangle does not.
    std::vector<Edge> e{{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}, {2, 5}};
    Graph sun = Graph::from_edges(6, e);
    ClassOracle lp({ClassKind::lp});
    CHECK(lp.member(sun));
    CHECK_FALSE(lp.member(remove_vertices(sun, {3, 4, 5}).graph));
  }

  TEST_CASE("robust classes: disjoint union and component deletion") {
    gen::Rng rng(33);
    for (const auto& tag : kTags) {
      ClassOracle oracle(tag);
      for (int t = 0; t < 20; ++t) {
        Graph a = gen::random_member(rng, oracle, gen::uniform(rng, 0, 8));
        Graph b = gen::random_member(rng, oracle, gen::uniform(rng, 0, 8));
        Graph u = disjoint_union(a, b);
        CHECK(oracle.member(u));
        for (const auto& part : connected_components(u)) CHECK(oracle.member(induced_subgraph(u, part).graph));
      }
    }
  }

  TEST_CASE("closed-form blocking bounds") {
    CHECK(ClassOracle({ClassKind::indset}).beta_upper_bound(3) == 5);
    CHECK(ClassOracle({ClassKind::indset}).beta_upper_bound(0) == 1);
    CHECK(ClassOracle({ClassKind::indset}).beta_upper_bound(1) == 2);
    CHECK(ClassOracle({ClassKind::cluster, 3}).beta_upper_bound(2) == 9);
    CHECK(ClassOracle({ClassKind::lp}).beta_upper_bound(2) == 13);
    CHECK(ClassOracle({ClassKind::lp}).beta_upper_bound(1) == 5);
    CHECK(ClassOracle({ClassKind::lp}).beta_upper_bound(0) == 2);
    CHECK(ClassOracle({ClassKind::forest}).beta_upper_bound(0) == 2);
    CHECK(ClassOracle({ClassKind::empty}).beta_upper_bound(0) == 0);
    CHECK(ClassOracle({ClassKind::empty}).beta_upper_bound(2) == 2);
    for (int d = 0; d <= 8; ++d)
      CHECK(ClassOracle({ClassKind::lp}).beta_upper_bound(d) == (d + 1) * (1 << d) + 1);
    for (const auto& tag : kTags) {
      ClassOracle oracle(tag);
      if (!oracle.hereditary()) continue;
      for (int d = 1; d <= 6; ++d) CHECK(oracle.beta_upper_bound(d - 1) < oracle.beta_upper_bound(d));
    }
  }

  TEST_CASE("declared beta bounds every member's minimal blocking sets") {
    gen::Rng rng(34);
    for (const auto& tag : kTags) {
      ClassOracle oracle(tag);
      for (int t = 0; t < 25; ++t) {
        Graph g = gen::random_member(rng, oracle, gen::uniform(rng, 1, 10));
        CHECK(brute::beta(g) <= oracle.beta());
      }
    }
  }
}
