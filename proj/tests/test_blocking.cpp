#include <doctest.h>

#include "bvc/blocking.hpp"
#include "bvc/brute_force.hpp"
#include "bvc/errors.hpp"
#include "bvc/generators.hpp"

using namespace bvc;

TEST_SUITE("blocking") {
  TEST_CASE("blocking verdict examples") {
    Graph p3 = path_graph(3);
    auto end = is_blocking_set(p3, {0});
    CHECK(end.is_blocking);
    CHECK(end.deficit == 1);
    auto mid = is_blocking_set(p3, {1});
    CHECK_FALSE(mid.is_blocking);
    CHECK(mid.deficit == 0);
    CHECK_FALSE(is_blocking_set(complete_graph(3), {0, 1}).is_blocking);
    CHECK(is_blocking_set(complete_graph(3), {0, 1, 2}).is_blocking);
    CHECK_FALSE(is_blocking_set(petersen_graph(), {}).is_blocking);
  }

  TEST_CASE("apex test examples") {
    CHECK(is_blocking_set_apex(path_graph(3), {0}));
    CHECK_FALSE(is_blocking_set_apex(path_graph(3), {1}));
    CHECK_FALSE(is_blocking_set_apex(cycle_graph(5), {}));
  }

  TEST_CASE("minimality examples") {
    CHECK_FALSE(is_minimal_blocking_set(path_graph(3), {0, 2}));
    CHECK(is_minimal_blocking_set(cycle_graph(4), {0, 1}));
    CHECK(is_minimal_blocking_set(complete_graph(3), {0, 1, 2}));
    CHECK_FALSE(is_minimal_blocking_set(complete_graph(3), {}));
    auto v = classify_blocking_set(cycle_graph(4), {0, 1});
    REQUIRE(v.is_minimal.has_value());
    CHECK(*v.is_minimal);
    CHECK_FALSE(classify_blocking_set(cycle_graph(4), {0, 2}).is_minimal.has_value());
  }

  TEST_CASE("shrinking to a minimal blocking set") {
    CHECK(shrink_to_minimal(path_graph(3), {0, 2}) == VertexSet{0});
    CHECK(shrink_to_minimal(complete_graph(3), {0, 1, 2}) == VertexSet{0, 1, 2});
    VertexSet c4 = shrink_to_minimal(cycle_graph(4), {0, 1, 2, 3});
    CHECK(c4.size() == 2);
    CHECK(is_minimal_blocking_set(cycle_graph(4), c4));
    CHECK_THROWS_AS(shrink_to_minimal(path_graph(3), {1}), ContractError);

    gen::Rng rng(41);
    for (int t = 0; t < 60; ++t) {
      Graph g = gen::random_graph(rng, gen::uniform(rng, 1, 9), 0.4);
      VertexSet y = gen::random_subset(rng, g.num_vertices(), 0.6);
      if (!brute::blocking(g, y)) continue;
      VertexSet m = shrink_to_minimal(g, y);
      CHECK(brute::minimal_blocking(g, m));
      CHECK(set_difference(m, y).empty());
    }
  }

  TEST_CASE("beta examples") {
    CHECK(max_minimal_blocking_set_size(complete_graph(3)).value == 3);
    CHECK(max_minimal_blocking_set_size(cycle_graph(4)).value == 2);
    CHECK(max_minimal_blocking_set_size(path_graph(3)).value == 1);
    auto empty = max_minimal_blocking_set_size(Graph(0));
    CHECK(empty.value == 0);
    CHECK(empty.empty_graph);
    auto capped = max_minimal_blocking_set_size(complete_graph(5), exact_opt(), 2);
    CHECK(capped.truncated);
    CHECK(capped.value == 3);
    auto k5 = max_minimal_blocking_set_size(complete_graph(5));
    CHECK(k5.value == 5);
    CHECK(is_minimal_blocking_set(complete_graph(5), k5.witness));
  }

  TEST_CASE("single-deletion minimality equals full-subset minimality (n <= 8)") {
    gen::Rng rng(42);
    for (int t = 0; t < 300; ++t) {
      Graph g = gen::random_graph(rng, gen::uniform(rng, 1, 8), gen::uniform(rng, 2, 7) / 10.0);
      VertexSet y = gen::random_subset(rng, g.num_vertices(), 0.4);
      CHECK(is_minimal_blocking_set(g, y) == brute::minimal_blocking(g, y));
      CHECK(is_blocking_set(g, y).is_blocking == brute::blocking(g, y));
    }
  }

  TEST_CASE("beta enumeration matches exhaustive search") {
    gen::Rng rng(43);
    for (int t = 0; t < 80; ++t) {
      Graph g = gen::random_graph(rng, gen::uniform(rng, 0, 9), gen::uniform(rng, 2, 8) / 10.0);
      CHECK(max_minimal_blocking_set_size(g).value == brute::beta(g));
    }
  }

  TEST_CASE("upward closure") {
    gen::Rng rng(44);
    for (int t = 0; t < 150; ++t) {
      Graph g = gen::random_graph(rng, gen::uniform(rng, 1, 10), 0.35);
      VertexSet y = gen::random_subset(rng, g.num_vertices(), 0.3);
      if (!is_blocking_set(g, y).is_blocking) continue;
      VertexSet bigger = set_union(y, gen::random_subset(rng, g.num_vertices(), 0.3));
      CHECK(is_blocking_set(g, bigger).is_blocking);
    }
  }

  TEST_CASE("apex test agrees and minimal sets behave (n <= 10)") {
    gen::Rng rng(45);
    for (int t = 0; t < 200; ++t) {
      Graph g = gen::random_graph(rng, gen::uniform(rng, 1, 10), gen::uniform(rng, 1, 6) / 10.0);
      VertexSet y = gen::random_subset(rng, g.num_vertices(), 0.35);
      auto v = classify_blocking_set(g, y);
      CHECK(v.is_blocking == is_blocking_set_apex(g, y));
      if (v.is_minimal.value_or(false)) CHECK_NOTHROW(verify_blocking_basics(g, y));
    }
  }

  TEST_CASE("basic facts on named graphs") {
    CHECK(verify_blocking_basics(cycle_graph(4), {0, 1}).all());
    CHECK(verify_blocking_basics(complete_graph(3), {0, 1, 2}).all());
    Graph two_paths = disjoint_union(path_graph(3), path_graph(3));
    VertexSet y = shrink_to_minimal(two_paths, {0, 3});
    CHECK(verify_blocking_basics(two_paths, y).single_component);
    CHECK_THROWS_AS(verify_blocking_basics(path_graph(3), {1}), ContractError);
  }

  TEST_CASE("deleting part of an optimum cover keeps the rest blocking") {
    gen::Rng rng(46);
    int checked = 0;
    for (int t = 0; t < 300; ++t) {
      Graph g = gen::random_graph(rng, gen::uniform(rng, 2, 9), 0.4);
      VertexSet y = gen::random_subset(rng, g.num_vertices(), 0.4);
      VertexSet z = gen::random_subset(rng, g.num_vertices(), 0.3);
      if (!is_blocking_set(g, y).is_blocking || is_blocking_set(g, z).deficit != 0) continue;
      Subgraph rest = remove_vertices(g, z);
      CHECK(is_blocking_set(rest.graph, rest.lower(set_difference(y, z))).is_blocking);
      ++checked;
    }
    CHECK(checked > 20);
  }

  TEST_CASE("class solvers can drive the blocking test") {
    gen::Rng rng(47);
    ClassOracle forest({ClassKind::forest});
    for (int t = 0; t < 60; ++t) {
      Graph g = gen::random_forest(rng, gen::uniform(rng, 1, 12));
      VertexSet y = gen::random_subset(rng, g.num_vertices(), 0.3);
      CHECK(is_blocking_set(g, y, class_opt(forest)).deficit == is_blocking_set(g, y).deficit);
    }
  }

  TEST_CASE("bipartite graphs have minimal blocking sets of size at most two") {
    gen::Rng rng(48);
    for (int t = 0; t < 100; ++t) {
      Graph g = gen::random_bipartite(rng, gen::uniform(rng, 1, 12), 0.35);
      CHECK(max_minimal_blocking_set_size(g).value <= 2);
    }
  }
}
