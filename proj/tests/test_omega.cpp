#include <doctest.h>

#include <nlohmann/json.hpp>

#include "sgg/bounds.hpp"
#include "sgg/error.hpp"
#include "sgg/genus.hpp"
#include "sgg/group_spec.hpp"
#include "sgg/number_theory.hpp"
#include "sgg/omega.hpp"

using namespace sgg;

namespace {

bool invariants_hold(const OmegaFamily& f) {
  bool ok = true;
  for (const auto& c : check_family_invariants(f)) {
    INFO(c.name << " " << c.detail);
    CHECK(c.passed);
    ok = ok && c.passed;
  }
  return ok;
}

}  // namespace

TEST_CASE("full lattice family reproduces the hasse graph") {
  for (auto spec : {"C(12)", "D(4)", "S(4)", "A(2,3)"}) {
    const auto l = all_subgroups(build_group(spec));
    CHECK(induced_omega_graph(lattice_family(l)) == hasse_graph(l));
  }
}

TEST_CASE("two-member family is an edge") {
  const auto g = build_group("D(5)");
  const OmegaFamily f(OmegaKind::Custom, g, {trivial_subgroup(g), whole_group(g)}, {"1", "G"}, {});
  const auto h = induced_omega_graph(f);
  CHECK(h.vertex_count() == 2);
  CHECK(h.edges() == std::vector<Edge>{{0, 1}});
  CHECK_THROWS_AS(OmegaFamily(OmegaKind::Custom, g, {whole_group(g), whole_group(g)}, {"a", "b"}, {}), Error);
}

TEST_CASE("sylow hypercubes") {
  struct Case {
    const char* spec;
    std::size_t t;
  };
  for (auto c : {Case{"C(30)", 3}, Case{"D(15)", 3}, Case{"C(4)", 1}, Case{"S(4)", 2}, Case{"C(6) x D(5)", 3},
                 Case{"Alt(4)", 2}, Case{"C(1)", 0}}) {
    CAPTURE(c.spec);
    const auto f = sylow_hypercube(build_group(c.spec));
    const auto g = induced_omega_graph(f);
    CHECK(f.parameter("t") == c.t);
    CHECK(g.vertex_count() == std::size_t{1} << c.t);
    CHECK(g.edge_count() == (c.t == 0 ? 0 : c.t << (c.t - 1)));
    CHECK(is_triangle_free(g));
    invariants_hold(f);
    // H_J has order prod of the chosen Sylow orders.
    const auto primes = f.parent()->prime_divisors();
    for (std::size_t mask = 0; mask < f.members().size(); ++mask) {
      std::size_t order = 1;
      for (std::size_t j = 0; j < primes.size(); ++j)
        if (mask >> j & 1) order *= p_part(f.parent()->order(), primes[j]);
      CHECK(f.members()[mask].order() == order);
    }
  }
  EnumerationOptions big;
  big.order_cap = 30000;
  const auto f210 = sylow_hypercube(cyclic(210, big.order_cap), big);
  CHECK(induced_omega_graph(f210).edge_count() == 32);
  try {
    sylow_hypercube(build_group("Alt(5)"));
    FAIL("A5 has no Sylow basis");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoSylowBasisFound);
  }
}

TEST_CASE("rank layer families") {
  struct Case {
    std::uint64_t p;
    unsigned t;
    std::size_t v, e;
  };
  for (auto c : {Case{2, 3, 14, 21}, Case{3, 2, 5, 4}, Case{5, 3, 62, 186}, Case{2, 2, 4, 3},
                 Case{2, 4, 50, 105}, Case{3, 3, 26, 52}}) {
    CAPTURE(c.p);
    CAPTURE(c.t);
    const auto f = rank_layer_family(c.p, c.t);
    const auto g = induced_omega_graph(f);
    CHECK(g.vertex_count() == c.v);
    CHECK(g.edge_count() == c.e);
    CHECK(is_bipartite(g));
    CHECK(is_triangle_free(g));
    CHECK(euler_lower_bound(g).raw == rango_bound(c.p, c.t) + 1);
    invariants_hold(f);
  }
  // t = 2 gives the star K(1,p+1).
  const auto star = induced_omega_graph(rank_layer_family(3, 2));
  CHECK(graph_isomorphic_small(star, complete_bipartite(1, 4)));
  CHECK_THROWS_AS(rank_layer_family(2, 1), Error);
  CHECK_THROWS_AS(rank_layer_family(2, 15), Error);
}

TEST_CASE("dihedral families") {
  const auto f = psl_dihedral_family(11);
  CHECK(f.parameter("n") == 6);
  CHECK(f.parameter("a") == 2);
  CHECK(f.parameter("b") == 3);
  const auto g = induced_omega_graph(f);
  CHECK(g.vertex_count() == 13);
  CHECK(g.edge_count() == 23);
  CHECK(euler_lower_bound(g).raw == Rational(1, 4));
  CHECK(induced_omega_graph(psl_dihedral_family(13)).edge_count() == 23);
  invariants_hold(f);
  try {
    psl_dihedral_family(9);
    FAIL("q = 9 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ExcludedQ);
  }

  // Count formulas hold for every coprime split of n.
  for (std::uint64_t n : {6, 10, 12, 15, 20, 30, 36, 60}) {
    for (auto a : divisors(n)) {
      const auto b = n / a;
      if (a < 2 || b < 2 || std::gcd(a, b) != 1) continue;
      CAPTURE(n);
      CAPTURE(a);
      const auto fam = dihedral_omega_family(n, a, b);
      const auto h = induced_omega_graph(fam);
      const auto counts = pls_counts(n, a, b);
      CHECK(h.vertex_count() == counts.vertices);
      CHECK(h.edge_count() == counts.edges);
      CHECK(is_triangle_free(h));
      CHECK(euler_lower_bound(h).raw == pls_raw(n, a, b));
      invariants_hold(fam);
    }
  }
  CHECK_THROWS_AS(dihedral_omega_family(12, 2, 6), Error);
}

TEST_CASE("psl families inside the actual group") {
  for (std::uint64_t q : {11, 13}) {
    CAPTURE(q);
    const auto v = verify_psl_family(q);
    CHECK(v.passed);
    CHECK(v.dihedral_a_count == v.n / v.a);
    CHECK(v.dihedral_b_count == v.n / v.b);
    CHECK(v.involution_count == v.n);
    CHECK(v.each_a_contains_a);
    CHECK(v.each_b_contains_b);
  }
  const auto v11 = verify_psl_family(11);
  CHECK(v11.dihedral_a_count == 3);
  CHECK(v11.dihedral_b_count == 2);
  CHECK(v11.involution_count == 6);
  CHECK(v11.lattice_size == 620);
  try {
    verify_psl_family(9);
    FAIL("q = 9 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ExcludedQ);
  }
}

TEST_CASE("family bounds and json") {
  const auto f = rank_layer_family(5, 3);
  const auto b = family_bounds(f);
  CHECK(b.vertices == 62);
  CHECK(b.edges == 186);
  CHECK(b.euler_raw == Rational(33, 2));
  CHECK(b.euler_integer == 17);
  CHECK(b.has_closed_form);
  CHECK(b.closed_form == Rational(31, 2));
  const auto j = to_json(psl_dihedral_family(11));
  CHECK(j["kind"] == "psl-dihedral");
  CHECK(j["parameters"]["q"] == 11);
  CHECK(j["members"].size() == 13);
  CHECK(j["members"][0]["label"] == "M");
  CHECK(j["graph"]["edges"].size() == 23);
}
