#include <doctest.h>

#include "bvc/brute_force.hpp"
#include "bvc/errors.hpp"
#include "bvc/exact_solver.hpp"
#include "bvc/generators.hpp"

using namespace bvc;

namespace {

bool is_hall_violator(const Graph& g, const VertexSet& z) {
  return g.open_neighborhood(z).size() < z.size();
}

}  // namespace

TEST_SUITE("exact_solver") {
  TEST_CASE("small fixed graphs") {
    CHECK(solve_vc_exact(complete_graph(3)).size() == 2);
    CHECK(solve_vc_exact(path_graph(3)).set == VertexSet{1});
    CHECK(opt_value(petersen_graph()) == 6);
    CHECK(brute::opt(petersen_graph()) == 6);
    CHECK(opt_value(Graph(0)) == 0);
    CHECK(opt_value(complete_graph(2)) == 1);
    CHECK(opt_value(cycle_graph(5)) == 3);
    CHECK(brute::opt(cycle_graph(5)) == 3);
  }

  TEST_CASE("budgeted solving treats infeasibility as a value") {
    CHECK_FALSE(solve_vc_exact(petersen_graph(), 5).has_value());
    auto c = solve_vc_exact(petersen_graph(), 6);
    REQUIRE(c.has_value());
    CHECK(c->size() == 6);
    CHECK(petersen_graph().is_vertex_cover(c->set));
    CHECK_FALSE(solve_vc_exact(complete_graph(2), -1).has_value());
    CHECK(solve_vc_exact(Graph(3), 0).has_value());
  }

  TEST_CASE("exact solver agrees with subset enumeration (n <= 12)") {
    gen::Rng rng(21);
    for (int t = 0; t < 250; ++t) {
      const int n = gen::uniform(rng, 0, 12);
      Graph g = gen::random_graph(rng, n, gen::uniform(rng, 1, 8) / 10.0);
      Cover c = solve_vc_exact(g);
      CHECK(g.is_vertex_cover(c.set));
      CHECK(c.size() == brute::opt(g));
      CHECK(solve_vc_exact(g, ExactOptions{.lp_bound = true}).size() == c.size());
      CHECK(solve_vc_exact(g).set == c.set);  // deterministic
    }
  }

  TEST_CASE("larger sparse graphs solve quickly") {
    gen::Rng rng(22);
    for (int t = 0; t < 5; ++t) {
      Graph g = gen::random_graph(rng, 50, 0.08);
      Cover c = solve_vc_exact(g);
      CHECK(g.is_vertex_cover(c.set));
      CHECK(2 * c.size() >= lp_doubled(g));
    }
  }

  TEST_CASE("bipartite matching") {
    Graph c4 = cycle_graph(4);
    CHECK(max_matching_bipartite(c4, {0, 2}, {1, 3}).size() == 2);
    Graph star = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
    CHECK(max_matching_bipartite(star, {0}, {1, 2, 3}).size() == 1);
    Graph cherry = Graph::from_edges(3, std::vector<Edge>{{0, 2}, {1, 2}});
    Matching m = max_matching_bipartite(cherry, {0, 1}, {2});
    CHECK(m.size() == 1);
    CHECK(m.is_valid(cherry));
    CHECK_THROWS_AS(max_matching_bipartite(complete_graph(3), {0}, {1, 2}), InputError);
    CHECK_THROWS_AS(max_matching_bipartite(c4, {0, 1}, {1, 2, 3}), InputError);
  }

  TEST_CASE("saturation or Hall violator") {
    Graph c4 = cycle_graph(4);
    auto sat = saturate_or_violator(c4, {0, 2}, {1, 3});
    CHECK(sat.saturating());
    CHECK(sat.matching.size() == 2);

    Graph cherry = Graph::from_edges(3, std::vector<Edge>{{0, 2}, {1, 2}});
    auto vio = saturate_or_violator(cherry, {0, 1}, {2});
    CHECK_FALSE(vio.saturating());
    CHECK(vio.violator == VertexSet{0, 1});
    CHECK(cherry.open_neighborhood(vio.violator) == VertexSet{2});
    CHECK(vio.matching.size() == 0);

    Graph single = Graph::from_edges(3, std::vector<Edge>{{0, 1}});
    auto one = saturate_or_violator(single, {0}, {1, 2});
    CHECK(one.saturating());
    CHECK(one.matching.edges == std::vector<Edge>{{0, 1}});
  }

  TEST_CASE("violator properties on random bipartite graphs") {
    gen::Rng rng(23);
    for (int t = 0; t < 200; ++t) {
      const int nl = gen::uniform(rng, 1, 7), nr = gen::uniform(rng, 0, 7);
      std::vector<Edge> edges;
      for (int a = 0; a < nl; ++a)
        for (int b = 0; b < nr; ++b)
          if (gen::coin(rng, 0.3)) edges.emplace_back(a, nl + b);
      Graph g = Graph::from_edges(nl + nr, edges);
      VertexSet left = full_set(nl), right;
      for (int b = 0; b < nr; ++b) right.push_back(nl + b);
      auto res = saturate_or_violator(g, left, right);
      const int mm = max_matching_bipartite(g, left, right).size();
      CHECK(res.matching.is_valid(g));
      if (res.saturating()) {
        CHECK(res.matching.size() == nl);
      } else {
        CHECK(mm < nl);
        CHECK(is_hall_violator(g, res.violator));
        const VertexSet closed = g.closed_neighborhood(res.violator);
        for (auto [a, b] : res.matching.edges) {
          CHECK_FALSE(contains(closed, a));
          CHECK_FALSE(contains(closed, b));
        }
        CHECK(res.matching.size() == nl - static_cast<int>(res.violator.size()));
      }
      CHECK(konig_cover(g, left, right).size() == mm);
      CHECK(mm == brute::opt(g));
    }
  }

  TEST_CASE("half-integral LP examples") {
    auto k3 = lp_half_integral(complete_graph(3));
    CHECK(k3.doubled_value == 3);
    CHECK(k3.v_half == VertexSet{0, 1, 2});
    CHECK(brute::lp(complete_graph(3)).doubled_value == 3);

    auto k2 = lp_half_integral(complete_graph(2));
    CHECK(k2.doubled_value == 2);
    CHECK(k2.v_half.empty());
    CHECK(k2.v1.size() == 1);

    auto c4 = lp_half_integral(cycle_graph(4));
    CHECK(c4.doubled_value == 4);
    CHECK(opt_value(cycle_graph(4)) == 2);
  }

  TEST_CASE("LP optimum and minimum half support match exhaustive enumeration") {
    gen::Rng rng(24);
    for (int t = 0; t < 200; ++t) {
      const int n = gen::uniform(rng, 0, 8);
      Graph g = gen::random_graph(rng, n, gen::uniform(rng, 2, 7) / 10.0);
      auto sol = lp_half_integral(g);
      auto ref = brute::lp(g);
      CHECK(sol.doubled_value == ref.doubled_value);
      CHECK(static_cast<int>(sol.v_half.size()) == ref.min_half_support);
      CHECK(sol.v0.size() + sol.v_half.size() + sol.v1.size() == static_cast<std::size_t>(n));
      for (auto [u, v] : g.edges()) {
        auto x = [&](Vertex w) { return contains(sol.v0, w) ? 0 : contains(sol.v_half, w) ? 1 : 2; };
        CHECK(x(u) + x(v) >= 2);
      }
    }
  }

  TEST_CASE("Nemhauser-Trotter persistence") {
    auto p3 = nemhauser_trotter(path_graph(3));
    CHECK(p3.v1 == VertexSet{1});
    CHECK(p3.v0 == VertexSet{0, 2});
    CHECK(p3.v_half.empty());

    auto k3 = nemhauser_trotter(complete_graph(3));
    CHECK(k3.v_half.size() == 3);

    Graph isolated = Graph::from_edges(4, std::vector<Edge>{{0, 1}});
    auto iso = nemhauser_trotter(isolated);
    CHECK(contains(iso.v0, 2));
    CHECK(contains(iso.v0, 3));

    gen::Rng rng(25);
    for (int t = 0; t < 150; ++t) {
      Graph g = gen::random_graph(rng, gen::uniform(rng, 0, 13), gen::uniform(rng, 1, 6) / 10.0);
      CHECK_NOTHROW(nemhauser_trotter(g));
      const int opt = brute::opt(g), lp2 = lp_doubled(g);
      CHECK(lp2 <= 2 * opt);
      CHECK(opt <= lp2);
    }
  }

  TEST_CASE("Konig equality on bipartite graphs") {
    gen::Rng rng(26);
    for (int t = 0; t < 100; ++t) {
      Graph g = gen::random_bipartite(rng, gen::uniform(rng, 0, 12), 0.35);
      auto sides = bipartition(g);
      REQUIRE(sides.has_value());
      const int mm = max_matching_bipartite(g, sides->first, sides->second).size();
      CHECK(lp_doubled(g) == 2 * mm);
      CHECK(brute::opt(g) == mm);
    }
    CHECK_FALSE(bipartition(cycle_graph(5)).has_value());
  }
}
