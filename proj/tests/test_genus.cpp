#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sgg/error.hpp"
#include "sgg/genus.hpp"
#include "sgg/omega.hpp"

using namespace sgg;

namespace {

SimpleGraph petersen() {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return SimpleGraph(10, e);
}

int genus_value(const SimpleGraph& g, bool fast_path = true) {
  GenusBudget b;
  b.planarity_fast_path = fast_path;
  const auto r = exact_genus(g, b);
  REQUIRE(r.genus.has_value());
  return *r.genus;
}

}  // namespace

TEST_CASE("planarity") {
  CHECK(is_planar(complete_bipartite(2, 3)));
  CHECK_FALSE(is_planar(complete(5)));
  CHECK_FALSE(is_planar(complete_bipartite(3, 3)));
  CHECK(is_planar(complete(4)));
  CHECK_FALSE(is_planar(petersen()));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) CHECK(is_planar(oracle::random_tree(rng, 15)));
  CHECK(is_planar(SimpleGraph(0, {})));
}

TEST_CASE("euler lower bound") {
  const auto k33 = euler_lower_bound(complete_bipartite(3, 3));
  CHECK(k33.raw == Rational(1, 4));
  CHECK(k33.integer == 1);

  // A lone edge is a tree: no positive part.
  const auto edge = euler_lower_bound(SimpleGraph(2, {{0, 1}}));
  CHECK(edge.integer == 0);
  CHECK(edge.raw == 0);

  const auto layers = euler_lower_bound(induced_omega_graph(rank_layer_family(5, 3)));
  CHECK(layers.raw == Rational(33, 2));
  CHECK(layers.integer == 17);

  CHECK_THROWS_AS(euler_lower_bound(complete(3)), Error);

  // Two K33 copies, an isolated vertex and a path: bounds add per component.
  std::vector<Edge> e;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 3; b < 6; ++b) {
      e.emplace_back(a, b);
      e.emplace_back(a + 6, b + 6);
    }
  e.emplace_back(13, 14);
  e.emplace_back(14, 15);
  const auto many = euler_lower_bound(SimpleGraph(16, e));
  CHECK(many.components.size() == 3);
  CHECK(many.integer == 2);
  REQUIRE(many.components.size() == 3);
  CHECK(many.components[2].acyclic);
  CHECK(many.components[2].integer == 0);
}

TEST_CASE("euler bound matches the triangle-free formula on cyclic components") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_graph(rng, 9, 0.35);
    if (!is_triangle_free(g)) continue;
    const auto b = euler_lower_bound(g);
    CHECK(b.integer >= 0);
    if (b.raw > 0) CHECK(Rational(b.integer) >= b.raw);
    for (const auto& c : b.components) {
      const Rational formula = Rational(static_cast<std::int64_t>(c.edge_count), 4) -
                               Rational(static_cast<std::int64_t>(c.vertices.size()), 2) + 1;
      if (c.edge_count >= 2) CHECK(c.raw == formula);
      if (c.acyclic) CHECK(c.integer == 0);
    }
  }
}

TEST_CASE("genus of a rotation") {
  const SimpleGraph edge(2, {{0, 1}});
  CHECK(count_faces(edge, RotationSystem::sorted(edge)) == 1);
  CHECK(genus_of_rotation(edge, RotationSystem::sorted(edge)) == 0);

  // Planar K4: vertex 3 in the middle of triangle 0-1-2.
  const auto k4 = complete(4);
  const RotationSystem flat({{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}});
  CHECK(count_faces(k4, flat) == 4);
  CHECK(genus_of_rotation(k4, flat) == 0);

  std::set<int> seen;
  std::vector<std::vector<std::size_t>> rot = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
  for (int mask = 0; mask < 16; ++mask) {
    auto r = rot;
    for (int v = 0; v < 4; ++v)
      if (mask >> v & 1) std::swap(r[v][1], r[v][2]);
    const RotationSystem rs(r);
    const int g = genus_of_rotation(k4, rs);
    CHECK(g == static_cast<int>(2 - 4 + 6 - oracle::trace_faces(r)) / 2);
    seen.insert(g);
  }
  CHECK(seen == std::set<int>{0, 1});

  CHECK_THROWS_AS(genus_of_rotation(SimpleGraph(4, {{0, 1}, {2, 3}}),
                                    RotationSystem::sorted(SimpleGraph(4, {{0, 1}, {2, 3}}))),
                  Error);
  CHECK_THROWS_AS(count_faces(k4, RotationSystem({{1, 2}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}})), Error);
}

TEST_CASE("exact genus of named graphs") {
  CHECK(genus_value(complete(5)) == 1);
  CHECK(genus_value(complete_bipartite(3, 3)) == 1);
  CHECK(genus_value(complete(6)) == 1);
  CHECK(genus_value(complete(7)) == 1);
  CHECK(genus_value(complete(8)) == 2);
  CHECK(genus_value(complete_bipartite(4, 4)) == 1);
  CHECK(genus_value(complete_bipartite(4, 5)) == 2);
  CHECK(genus_value(complete_bipartite(3, 6)) == 1);
  CHECK(genus_value(complete_bipartite(3, 7)) == 2);
  CHECK(genus_value(petersen()) == 1);
  CHECK(genus_value(hypercube(4)) == 1);
  CHECK(genus_value(grid_graph(4, 4), false) == 0);
  CHECK(genus_value(complete(4), false) == 0);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 10; ++i) CHECK(genus_value(oracle::random_tree(rng, 12)) == 0);
  // Genus adds over components.
  std::vector<Edge> two;
  const auto k5 = complete(5);
  for (auto [u, v] : k5.edges()) {
    two.emplace_back(u, v);
    two.emplace_back(u + 5, v + 5);
  }
  CHECK(genus_value(SimpleGraph(10, two)) == 2);
}

TEST_CASE("exact genus agrees with exhaustive rotation search") {
  std::mt19937_64 rng(2024);
  int compared = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> size(3, 7);
    std::uniform_real_distribution<double> density(0.3, 0.95);
    const auto g = oracle::random_graph(rng, static_cast<std::size_t>(size(rng)), density(rng));
    const int truth = oracle::brute_force_genus(g, 300'000);
    if (truth < 0) continue;
    ++compared;
    CAPTURE(g.edges().size());
    CHECK(genus_value(g, false) == truth);
    CHECK(genus_value(g, true) == truth);
    CHECK(is_planar(g) == (truth == 0));
  }
  CHECK(compared >= 150);
}

TEST_CASE("witness embeddings") {
  for (const auto& g : {complete(5), complete(6), complete_bipartite(3, 4), petersen(), hypercube(3),
                        grid_graph(3, 3)}) {
    const auto r = exact_genus(g);
    REQUIRE(r.genus);
    REQUIRE(r.embedding);
    CHECK(r.embedding->is_valid_for(g));
    CHECK(genus_of_rotation(g, *r.embedding) == *r.genus);
  }
}

TEST_CASE("soundness chain, relabeling and monotonicity") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = oracle::random_graph(rng, 8, 0.45);
    const int gen = genus_value(g, false);
    CHECK(is_planar(g) == (gen == 0));
    if (is_triangle_free(g)) CHECK(euler_lower_bound(g).integer <= gen);
    std::vector<std::size_t> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(genus_value(g.permuted(perm)) == gen);
    if (g.edge_count() > 0) {
      std::uniform_int_distribution<std::size_t> pick(0, g.edge_count() - 1);
      CHECK(genus_value(g.without_edge(g.edges()[pick(rng)])) <= gen);
    }
  }
}

TEST_CASE("budget exhaustion is reported as unknown") {
  GenusBudget tiny;
  tiny.max_nodes = 10;
  const auto r = exact_genus(complete(8), tiny);
  CHECK_FALSE(r.genus.has_value());
  REQUIRE(r.components.size() == 1);
  CHECK(r.components[0].lower_bound <= 2);
  CHECK(r.components[0].upper_bound >= 2);
}
