#include <doctest.h>

#include <nlohmann/json.hpp>
#include <random>

#include "oracles.hpp"
#include "sgg/error.hpp"
#include "sgg/graph.hpp"
#include "sgg/group_spec.hpp"
#include "sgg/lattice.hpp"

using namespace sgg;

TEST_CASE("construction normalizes edges") {
  const SimpleGraph g(3, {{1, 0}, {0, 1}, {2, 1}});
  CHECK(g.edge_count() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK_THROWS_AS(SimpleGraph(2, {{1, 1}}), Error);
  CHECK_THROWS_AS(SimpleGraph(2, {{0, 2}}), Error);
}

TEST_CASE("basic constructors and predicates") {
  const auto k23 = complete_bipartite(2, 3);
  CHECK(k23.vertex_count() == 5);
  CHECK(k23.edge_count() == 6);
  CHECK(is_triangle_free(complete_bipartite(3, 3)));
  CHECK_FALSE(is_triangle_free(complete(3)));
  CHECK(is_bipartite(hypercube(3)));
  CHECK_FALSE(is_bipartite(cycle_graph(5)));
  CHECK(connected_components(SimpleGraph(4, {})).size() == 4);
  CHECK(degree_sequence(complete_bipartite(2, 3)) == std::vector<std::size_t>{3, 3, 2, 2, 2});
  CHECK(complete(5).edge_count() == 10);
  CHECK(hypercube(4).edge_count() == 32);
  CHECK(grid_graph(3, 4).edge_count() == 17);
  CHECK(is_forest(path_graph(5)));
  CHECK_FALSE(is_forest(cycle_graph(3)));
  CHECK(is_triangle_free(hasse_graph(all_subgroups(build_group("A(2,3)")))));
}

TEST_CASE("complete bipartite graphs") {
  for (std::size_t m = 1; m <= 5; ++m)
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto g = complete_bipartite(m, n);
      CHECK(g.edge_count() == m * n);
      CHECK(is_triangle_free(g));
    }
}

TEST_CASE("components partition the vertices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = oracle::random_graph(rng, 10, 0.15);
    const auto comps = connected_components(g);
    std::vector<int> which(g.vertex_count(), -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (auto v : comps[c]) {
        CHECK(which[v] == -1);
        which[v] = static_cast<int>(c);
      }
    for (auto w : which) CHECK(w >= 0);
    for (auto [u, v] : g.edges()) CHECK(which[u] == which[v]);
  }
}

TEST_CASE("small isomorphism") {
  CHECK(graph_isomorphic_small(hasse_graph(all_subgroups(build_group("A(2,2)"))), complete_bipartite(2, 3)));
  CHECK_FALSE(graph_isomorphic_small(complete(4), cycle_graph(4)));
  // Same degree sequence, different graphs: C6 versus two triangles.
  const SimpleGraph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(graph_isomorphic_small(cycle_graph(6), two_triangles));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = oracle::random_graph(rng, 9, 0.4);
    std::vector<std::size_t> perm(9);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto h = g.permuted(perm);
    CHECK(graph_isomorphic_small(g, g));
    CHECK(graph_isomorphic_small(g, h));
    CHECK(graph_isomorphic_small(h, g));
    if (g.edge_count() > 0) {
      const auto smaller = h.without_edge(h.edges().front());
      CHECK_FALSE(graph_isomorphic_small(g, smaller));
    }
  }
  CHECK_THROWS_AS(graph_isomorphic_small(hypercube(4), hypercube(4)), Error);
}

TEST_CASE("dot and json export") {
  const SimpleGraph g({"a", "b \"q\"", "c"}, {{0, 1}, {1, 2}});
  const std::string dot = to_dot(g, "G");
  CHECK(dot == "graph \"G\" {\n  0 [label=\"a\"];\n  1 [label=\"b \\\"q\\\"\"];\n  2 [label=\"c\"];\n"
               "  0 -- 1;\n  1 -- 2;\n}\n");
  CHECK(to_dot(g, "G") == dot);
  const auto j = to_json(g);
  CHECK(j.dump() == R"({"edges":[[0,1],[1,2]],"vertices":["a","b \"q\"","c"]})");
  CHECK(graph_from_json(j) == g);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"vertices":2})")), Error);
}
