// Naive reference implementations used to cross-check the library. None of
// these share code with src/.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "sgg/graph.hpp"
#include "sgg/group.hpp"

namespace oracle {

using sgg::Element;
using sgg::GroupTable;
using sgg::SimpleGraph;

inline std::size_t element_order(const GroupTable& g, Element a) {
  std::size_t k = 1;
  for (Element x = a; x != g.identity(); x = g.mul(x, a)) ++k;
  return k;
}

/// Every subset containing the identity and closed under products. Feasible
/// for orders up to about 16.
inline std::set<std::vector<Element>> subgroups_by_subsets(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<Element> others;
  for (Element x = 0; x < n; ++x)
    if (x != g.identity()) others.push_back(x);
  std::set<std::vector<Element>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << others.size()); ++mask) {
    std::vector<bool> in(n, false);
    in[g.identity()] = true;
    for (std::size_t i = 0; i < others.size(); ++i)
      if (mask >> i & 1) in[others[i]] = true;
    bool closed = true;
    for (Element a = 0; a < n && closed; ++a)
      for (Element b = 0; b < n && closed; ++b)
        if (in[a] && in[b] && !in[g.mul(a, b)]) closed = false;
    if (!closed) continue;
    std::vector<Element> s;
    for (Element x = 0; x < n; ++x)
      if (in[x]) s.push_back(x);
    out.insert(s);
  }
  return out;
}

/// Covering pairs from a naive triple loop over a containment predicate.
template <class Le>
std::vector<sgg::Edge> covers(std::size_t n, Le le) {
  std::vector<sgg::Edge> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !le(a, b)) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n && direct; ++k)
        if (k != a && k != b && le(a, k) && le(k, b)) direct = false;
      if (direct) out.emplace_back(std::min(a, b), std::max(a, b));
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// Faces of the embedding given by per-vertex cyclic neighbour lists;
/// dart (u,v) is followed by (v, successor of u around v).
inline std::size_t trace_faces(const std::vector<std::vector<std::size_t>>& rot) {
  std::map<std::pair<std::size_t, std::size_t>, bool> seen;
  for (std::size_t u = 0; u < rot.size(); ++u)
    for (auto v : rot[u]) seen[{u, v}] = false;
  std::size_t faces = 0;
  for (auto& [dart, used] : seen) {
    if (used) continue;
    ++faces;
    auto d = dart;
    while (!seen[d]) {
      seen[d] = true;
      const auto& around = rot[d.second];
      const auto pos = std::find(around.begin(), around.end(), d.first) - around.begin();
      d = {d.second, around[(pos + 1) % around.size()]};
    }
  }
  return faces;
}

/// Minimum genus of a connected graph by trying every rotation system.
/// Returns -1 when more than limit systems would be needed.
inline int brute_force_genus_connected(const SimpleGraph& g, std::uint64_t limit = 2'000'000) {
  const std::size_t n = g.vertex_count();
  if (g.edge_count() == 0) return 0;
  std::uint64_t total = 1;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t k = 2; k < g.degree(v); ++k) {
      total *= k;
      if (total > limit) return -1;
    }
  std::vector<std::vector<std::size_t>> rot(n);
  for (std::size_t v = 0; v < n; ++v) rot[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  std::size_t best_faces = 0;
  // Odometer over vertices; each vertex permutes its tail after the first slot.
  std::function<void(std::size_t)> go = [&](std::size_t v) {
    if (v == n) {
      best_faces = std::max(best_faces, trace_faces(rot));
      return;
    }
    if (rot[v].size() <= 2) {
      go(v + 1);
      return;
    }
    std::sort(rot[v].begin() + 1, rot[v].end());
    do {
      go(v + 1);
    } while (std::next_permutation(rot[v].begin() + 1, rot[v].end()));
  };
  go(0);
  const long long twice = 2 - static_cast<long long>(n) + static_cast<long long>(g.edge_count()) -
                          static_cast<long long>(best_faces);
  return static_cast<int>(twice / 2);
}

/// Genus as a sum over components, or -1 when any component is too large.
inline int brute_force_genus(const SimpleGraph& g, std::uint64_t limit = 2'000'000) {
  int total = 0;
  for (const auto& comp : sgg::connected_components(g)) {
    const int c = brute_force_genus_connected(g.induced_subgraph(comp), limit);
    if (c < 0) return -1;
    total += c;
  }
  return total;
}

/// Number of k-dimensional subspaces of GF(p)^t, by collecting the spans of
/// all k-subsets of vectors.
inline std::uint64_t count_subspaces(std::uint64_t p, unsigned t, unsigned k) {
  std::uint64_t n = 1;
  for (unsigned i = 0; i < t; ++i) n *= p;
  auto add = [&](std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0, w = 1;
    for (unsigned i = 0; i < t; ++i, a /= p, b /= p, w *= p) r += ((a % p + b % p) % p) * w;
    return r;
  };
  auto span = [&](const std::vector<std::uint64_t>& gens) {
    std::set<std::uint64_t> s{0};
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::uint64_t> cur(s.begin(), s.end());
      for (auto x : cur)
        for (auto gch : gens)
          if (s.insert(add(x, gch)).second) grew = true;
    }
    return s;
  };
  std::uint64_t want = 1;
  for (unsigned i = 0; i < k; ++i) want *= p;
  std::set<std::set<std::uint64_t>> found;
  std::vector<std::uint64_t> pick;
  std::function<void(std::uint64_t)> choose = [&](std::uint64_t from) {
    if (pick.size() == k) {
      auto s = span(pick);
      if (s.size() == want) found.insert(std::move(s));
      return;
    }
    for (std::uint64_t x = from; x < n; ++x) {
      pick.push_back(x);
      choose(x + 1);
      pick.pop_back();
    }
  };
  choose(1);
  return k == 0 ? 1 : found.size();
}

inline SimpleGraph random_graph(std::mt19937_64& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<sgg::Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return SimpleGraph(n, std::move(edges));
}

inline SimpleGraph random_tree(std::mt19937_64& rng, std::size_t n) {
  std::vector<sgg::Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> parent(0, v - 1);
    edges.emplace_back(parent(rng), v);
  }
  return SimpleGraph(n, std::move(edges));
}

}  // namespace oracle
