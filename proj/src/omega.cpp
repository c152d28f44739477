#include "sgg/omega.hpp"

#include <algorithm>
#include <functional>
#include <nlohmann/json.hpp>
#include <numeric>
#include <unordered_set>

#include "sgg/bounds.hpp"
#include "sgg/error.hpp"
#include "sgg/genus.hpp"
#include "sgg/number_theory.hpp"
#include "sgg/perm_group.hpp"

namespace sgg {

std::string_view to_string(OmegaKind kind) noexcept {
  switch (kind) {
    case OmegaKind::Custom: return "custom";
    case OmegaKind::SylowHypercube: return "sylow-hypercube";
    case OmegaKind::RankLayers: return "rank-layers";
    case OmegaKind::PslDihedral: return "psl-dihedral";
  }
  return "custom";
}

OmegaFamily::OmegaFamily(OmegaKind kind, GroupPtr parent, std::vector<Subgroup> members,
                         std::vector<std::string> labels,
                         std::map<std::string, std::uint64_t> parameters)
    : kind_(kind),
      parent_(std::move(parent)),
      members_(std::move(members)),
      labels_(std::move(labels)),
      parameters_(std::move(parameters)) {
  if (labels_.size() != members_.size()) fail(ErrorKind::InvalidArgument, "one label per member");
  std::unordered_set<Bitset, BitsetHash> seen;
  for (const auto& h : members_) {
    if (h.parent() != parent_ && h.parent()->order() != parent_->order())
      fail(ErrorKind::InvalidArgument, "member from a different group");
    if (!seen.insert(h.members()).second) fail(ErrorKind::InvalidArgument, "members must be distinct");
  }
}

std::uint64_t OmegaFamily::parameter(const std::string& key) const {
  auto it = parameters_.find(key);
  if (it == parameters_.end()) fail(ErrorKind::InvalidArgument, "family has no parameter " + key);
  return it->second;
}

OmegaFamily lattice_family(const Lattice& l) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < l.size(); ++i) labels.push_back(subgroup_label(l[i], i));
  return OmegaFamily(OmegaKind::Custom, l.group(), l.subgroups(), std::move(labels), {});
}

SimpleGraph induced_omega_graph(const OmegaFamily& family) {
  const auto& m = family.members();
  std::vector<std::vector<std::size_t>> below(m.size());
  for (std::size_t j = 0; j < m.size(); ++j)
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i].order() < m[j].order() && m[i].is_subgroup_of(m[j])) below[j].push_back(i);
  return SimpleGraph(family.labels(), covering_pairs(below));
}

OmegaFamily sylow_hypercube(const GroupPtr& g, const EnumerationOptions& options) {
  const Lattice lattice = all_subgroups(g, options);
  const auto primes = g->prime_divisors();
  const std::size_t t = primes.size();
  std::vector<std::vector<Subgroup>> sylow;
  for (auto p : primes) sylow.push_back(sylow_subgroups(lattice, p));

  auto permutable = [](const Subgroup& x, const Subgroup& y) {
    return join(x, y.generators()).order() == x.order() * y.order();
  };

  std::vector<std::size_t> choice(t, 0);
  std::function<bool(std::size_t)> search = [&](std::size_t k) {
    if (k == t) return true;
    for (std::size_t c = 0; c < sylow[k].size(); ++c) {
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) ok = permutable(sylow[j][choice[j]], sylow[k][c]);
      if (!ok) continue;
      choice[k] = c;
      if (search(k + 1)) return true;
    }
    return false;
  };
  if (!search(0))
    fail(ErrorKind::NoSylowBasisFound, "no pairwise permutable Sylow tuple in " + g->name());

  std::vector<Subgroup> members;
  std::vector<std::string> labels;
  for (std::size_t mask = 0; mask < (std::size_t{1} << t); ++mask) {
    Subgroup h = trivial_subgroup(g);
    std::size_t expected = 1;
    std::string label = "H{";
    for (std::size_t j = 0; j < t; ++j) {
      if (!(mask >> j & 1)) continue;
      const Subgroup& p = sylow[j][choice[j]];
      h = join(h, p.generators());
      expected *= p.order();
      if (label.size() > 2) label += ",";
      label += std::to_string(primes[j]);
    }
    if (h.order() != expected) fail(ErrorKind::Internal, "Hall subgroup has the wrong order");
    members.push_back(std::move(h));
    labels.push_back(label + "}");
  }
  return OmegaFamily(OmegaKind::SylowHypercube, g, std::move(members), std::move(labels),
                     {{"t", t}});
}

OmegaFamily rank_layer_family(std::uint64_t p, unsigned t, std::size_t cap) {
  if (t < 2) fail(ErrorKind::InvalidArgument, "rank-layer family needs t >= 2");
  const GroupPtr g = elementary_abelian(p, t, cap);
  const std::size_t n = g->order();
  const Subgroup trivial = trivial_subgroup(g);

  std::vector<Subgroup> lines;
  std::vector<std::size_t> line_of(n, SIZE_MAX);
  for (Element x = 0; x < n; ++x) {
    if (x == g->identity() || line_of[x] != SIZE_MAX) continue;
    Subgroup c = join(trivial, std::span<const Element>(&x, 1));
    for (auto y : c.elements())
      if (y != g->identity()) line_of[y] = lines.size();
    lines.push_back(std::move(c));
  }

  std::vector<Subgroup> planes;
  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<std::size_t> done(lines.size(), SIZE_MAX);
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (done[j] == i) continue;
      Subgroup plane = join(lines[i], lines[j].generators());
      for (auto y : plane.elements())
        if (y != g->identity()) done[line_of[y]] = i;
      if (seen.insert(plane.members()).second) planes.push_back(std::move(plane));
    }

  std::vector<Subgroup> members = std::move(lines);
  members.insert(members.end(), std::make_move_iterator(planes.begin()),
                 std::make_move_iterator(planes.end()));
  std::sort(members.begin(), members.end(), lattice_less);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < members.size(); ++i) labels.push_back(subgroup_label(members[i], i));
  return OmegaFamily(OmegaKind::RankLayers, g, std::move(members), std::move(labels),
                     {{"p", p}, {"t", t}});
}

std::vector<std::pair<std::uint64_t, unsigned>> constructible_layer_parameters(
    std::size_t cap, std::size_t max_members) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= cap; ++p) {
    if (!is_prime(p)) continue;
    std::uint64_t order = p * p;
    for (unsigned t = 2; order <= cap; ++t, order *= p) {
      if (qbin(t, 1, p) + qbin(t, 2, p) > max_members) break;
      out.emplace_back(p, t);
    }
  }
  return out;
}

OmegaFamily dihedral_omega_family(std::uint64_t n, std::uint64_t a, std::uint64_t b,
                                  std::size_t cap) {
  if (a < 2 || b < 2 || a * b != n || std::gcd(a, b) != 1)
    fail(ErrorKind::InvalidArgument, "need n = a*b with coprime a, b > 1");
  const GroupPtr m = dihedral(n, cap);
  auto reflection = [n](std::uint64_t k) { return static_cast<Element>(n + k % n); };
  auto rotation = [n](std::uint64_t k) { return static_cast<Element>(k % n); };

  std::vector<Subgroup> members;
  std::vector<std::string> labels;
  members.push_back(whole_group(m));
  labels.push_back("M");
  for (std::uint64_t i = 0; i < n / a; ++i) {
    const Element seed[] = {rotation(n / a), reflection(i)};
    members.push_back(generated_subgroup(m, seed));
    labels.push_back("H" + std::to_string(i));
  }
  for (std::uint64_t j = 0; j < n / b; ++j) {
    const Element seed[] = {rotation(n / b), reflection(j)};
    members.push_back(generated_subgroup(m, seed));
    labels.push_back("K" + std::to_string(j));
  }
  for (std::uint64_t k = 0; k < n; ++k) {
    const Element seed[] = {reflection(k)};
    members.push_back(generated_subgroup(m, seed));
    labels.push_back("J" + std::to_string(k));
  }
  members.push_back(trivial_subgroup(m));
  labels.push_back("1");
  return OmegaFamily(OmegaKind::PslDihedral, m, std::move(members), std::move(labels),
                     {{"n", n}, {"a", a}, {"b", b}});
}

OmegaFamily psl_dihedral_family(std::uint64_t q, std::size_t cap) {
  const auto params = select_pls_parameters(q);
  const auto fam = dihedral_omega_family(params.n, params.a, params.b, cap);
  auto parameters = fam.parameters();
  parameters["q"] = q;
  return OmegaFamily(fam.kind(), fam.parent(), fam.members(), fam.labels(), std::move(parameters));
}

namespace {

// Order multiset and per-order subgroup counts; the isomorphism-agnostic
// fingerprint used to recognise dihedral subgroups.
struct Fingerprint {
  std::vector<std::size_t> orders;
  std::map<std::size_t, std::size_t> census;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint_of(const GroupPtr& g) {
  return {g->order_multiset(), subgroup_census(all_subgroups(g))};
}

Fingerprint fingerprint_in(const Lattice& l, std::size_t index) {
  const Subgroup& x = l[index];
  Fingerprint f;
  for (auto e : x.elements()) f.orders.push_back(l.group()->element_order(e));
  std::sort(f.orders.begin(), f.orders.end());
  f.census[x.order()] = 1;
  for (auto k : l.strictly_below(index)) ++f.census[l[k].order()];
  return f;
}

}  // namespace

PslVerification verify_psl_family(std::uint64_t q, const EnumerationOptions& options) {
  if (q > 13) fail(ErrorKind::InvalidArgument, "concrete verification is limited to q <= 13");
  const auto params = select_pls_parameters(q);
  PslVerification out;
  out.q = q;
  out.n = params.n;
  out.a = params.a;
  out.b = params.b;

  const GroupPtr g = psl2(static_cast<std::uint32_t>(q), options.order_cap).table();
  const Lattice l = all_subgroups(g, options);
  out.lattice_size = l.size();

  const Fingerprint dn = fingerprint_of(dihedral(params.n));
  const Fingerprint da = fingerprint_of(dihedral(params.a));
  const Fingerprint db = fingerprint_of(dihedral(params.b));

  std::optional<std::size_t> m_index;
  for (std::size_t i = 0; i < l.size() && !m_index; ++i)
    if (l[i].order() == 2 * params.n && fingerprint_in(l, i) == dn) m_index = i;
  if (!m_index)
    fail(ErrorKind::FamilyNotFound, "no subgroup of PSL(2," + std::to_string(q) + ") matches D_" +
                                        std::to_string(params.n));
  out.m_index = *m_index;
  const Subgroup& m = l[*m_index];

  std::vector<Element> center;
  for (auto z : m.elements()) {
    bool central = true;
    for (auto y : m.elements()) central = central && g->mul(z, y) == g->mul(y, z);
    if (central) center.push_back(z);
  }

  std::vector<std::size_t> h_idx, k_idx, j_idx;
  for (auto i : l.strictly_below(*m_index)) {
    const Subgroup& x = l[i];
    if (x.order() == 2 * params.a && fingerprint_in(l, i) == da) h_idx.push_back(i);
    if (x.order() == 2 * params.b && fingerprint_in(l, i) == db) k_idx.push_back(i);
    if (x.order() == 2) {
      const Element inv = x.generators().front();
      if (std::find(center.begin(), center.end(), inv) == center.end()) j_idx.push_back(i);
    }
  }
  out.dihedral_a_count = h_idx.size();
  out.dihedral_b_count = k_idx.size();
  out.involution_count = j_idx.size();

  auto holds = [&](const std::vector<std::size_t>& tops, std::size_t expected) {
    for (auto t : tops) {
      std::size_t c = 0;
      for (auto j : j_idx) c += l.contains(j, t) ? 1 : 0;
      if (c != expected) return false;
    }
    return true;
  };
  out.each_a_contains_a = holds(h_idx, params.a);
  out.each_b_contains_b = holds(k_idx, params.b);

  std::vector<Subgroup> members{m};
  std::vector<std::string> labels{"M"};
  for (auto i : h_idx) {
    members.push_back(l[i]);
    labels.push_back("H" + std::to_string(members.size() - 2));
  }
  for (auto i : k_idx) {
    members.push_back(l[i]);
    labels.push_back("K" + std::to_string(members.size() - 2 - h_idx.size()));
  }
  for (auto i : j_idx) {
    members.push_back(l[i]);
    labels.push_back("J" + std::to_string(members.size() - 2 - h_idx.size() - k_idx.size()));
  }
  members.push_back(l[0]);
  labels.push_back("1");
  const OmegaFamily concrete(OmegaKind::PslDihedral, g, std::move(members), std::move(labels),
                             {{"q", q}, {"n", params.n}, {"a", params.a}, {"b", params.b}});
  const SimpleGraph graph = induced_omega_graph(concrete);
  out.vertices = graph.vertex_count();
  out.edges = graph.edge_count();

  const auto expected = pls_counts(params.n, params.a, params.b);
  out.passed = out.dihedral_a_count == params.n / params.a &&
               out.dihedral_b_count == params.n / params.b && out.involution_count == params.n &&
               out.each_a_contains_a && out.each_b_contains_b && out.vertices == expected.vertices &&
               out.edges == expected.edges;
  return out;
}

FamilyBounds family_bounds(const OmegaFamily& family) {
  const SimpleGraph graph = induced_omega_graph(family);
  const GenusBound eb = euler_lower_bound(graph);
  FamilyBounds out;
  out.vertices = graph.vertex_count();
  out.edges = graph.edge_count();
  out.euler_raw = eb.raw;
  out.euler_integer = eb.integer;
  switch (family.kind()) {
    case OmegaKind::SylowHypercube:
      if (family.parameter("t") >= 1) {
        out.has_closed_form = true;
        out.closed_form = ciclo_bound(static_cast<unsigned>(family.parameter("t")));
      }
      break;
    case OmegaKind::RankLayers:
      out.has_closed_form = true;
      out.closed_form = rango_bound(family.parameter("p"), static_cast<unsigned>(family.parameter("t")));
      break;
    case OmegaKind::PslDihedral:
      out.has_closed_form = true;
      out.closed_form = pls_raw(family.parameter("n"), family.parameter("a"), family.parameter("b"));
      break;
    case OmegaKind::Custom:
      break;
  }
  return out;
}

std::vector<InvariantCheck> check_family_invariants(const OmegaFamily& family) {
  std::vector<InvariantCheck> checks;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  };
  const SimpleGraph graph = induced_omega_graph(family);
  const std::size_t V = graph.vertex_count(), E = graph.edge_count();
  const bool tf = is_triangle_free(graph);
  add("triangle-free", tf);
  add("vertices are members", V == family.members().size());
  if (!tf) return checks;
  const Rational raw = euler_lower_bound(graph).raw;

  switch (family.kind()) {
    case OmegaKind::SylowHypercube: {
      const auto t = static_cast<unsigned>(family.parameter("t"));
      const std::size_t cube_edges = t == 0 ? 0 : t * (std::size_t{1} << (t - 1));
      add("|V| = 2^t", V == (std::size_t{1} << t), std::to_string(V));
      add("|E| = t 2^(t-1)", E == cube_edges, std::to_string(E));
      bool regular = true;
      for (std::size_t v = 0; v < V; ++v) regular = regular && graph.degree(v) == t;
      add("t-regular", regular);
      add("bipartite", is_bipartite(graph));
      if (V <= kIsomorphismVertexLimit) add("isomorphic to Q_t", graph_isomorphic_small(graph, hypercube(t)));
      if (t >= 2) {
        add("Euler raw = edge-count sum form", raw == ciclo_exact_euler(t), raw.str());
        add("Euler raw >= closed form", raw >= ciclo_bound(t), ciclo_bound(t).str());
      }
      break;
    }
    case OmegaKind::RankLayers: {
      const auto p = family.parameter("p");
      const auto t = static_cast<unsigned>(family.parameter("t"));
      const auto counts = rango_counts(p, t);
      add("|V| = [t 1] + [t 2]", BigInt(V) == counts.vertices, std::to_string(V));
      add("|E| = [t 2](p^2-1)/(p-1)", BigInt(E) == counts.edges, std::to_string(E));
      const BigInt line_degree = qbin(t - 1, 1, p);
      bool degrees = true;
      for (std::size_t v = 0; v < V; ++v) {
        const auto order = family.members()[v].order();
        degrees = degrees && (order == p * p ? graph.degree(v) == p + 1 : BigInt(graph.degree(v)) == line_degree);
      }
      add("member degrees", degrees);
      add("bipartite", is_bipartite(graph));
      add("Euler raw = rango_bound + 1", raw == rango_bound(p, t) + 1,
          raw.str() + " vs " + (rango_bound(p, t) + 1).str());
      break;
    }
    case OmegaKind::PslDihedral: {
      const auto n = family.parameter("n"), a = family.parameter("a"), b = family.parameter("b");
      const auto counts = pls_counts(n, a, b);
      add("v = 2 + n + n/a + n/b", V == counts.vertices, std::to_string(V));
      add("e = 3n + n/a + n/b", E == counts.edges, std::to_string(E));
      const auto& m = family.members();
      bool h_ok = true, k_ok = true;
      for (std::size_t i = 0; i < m.size(); ++i) {
        const char kind = family.labels()[i].front();
        if (kind != 'H' && kind != 'K') continue;
        std::size_t c = 0;
        for (std::size_t j = 0; j < m.size(); ++j)
          if (family.labels()[j].front() == 'J' && m[j].is_subgroup_of(m[i])) ++c;
        if (kind == 'H') h_ok = h_ok && c == a;
        else k_ok = k_ok && c == b;
      }
      add("each D_a holds a involution subgroups", h_ok);
      add("each D_b holds b involution subgroups", k_ok);
      add("Euler raw = (n/4)(1-1/a-1/b)", raw == pls_raw(n, a, b), raw.str());
      add("Euler raw >= n/24", raw >= Rational(static_cast<std::int64_t>(n), 24));
      break;
    }
    case OmegaKind::Custom:
      break;
  }
  return checks;
}

nlohmann::json to_json(const OmegaFamily& family) {
  nlohmann::json members = nlohmann::json::array();
  for (std::size_t i = 0; i < family.members().size(); ++i) {
    const auto& h = family.members()[i];
    members.push_back({{"label", family.labels()[i]},
                       {"order", h.order()},
                       {"elements", std::vector<Element>(h.elements().begin(), h.elements().end())}});
  }
  return {{"kind", std::string(to_string(family.kind()))},
          {"parameters", family.parameters()},
          {"parent", family.parent()->name()},
          {"members", std::move(members)},
          {"graph", to_json(induced_omega_graph(family))}};
}

}  // namespace sgg
