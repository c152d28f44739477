#include "sgg/graph.hpp"

#include <algorithm>
#include <functional>
#include <nlohmann/json.hpp>
#include <numeric>
#include <sstream>

#include "sgg/error.hpp"

namespace sgg {

namespace {

std::vector<std::string> index_labels(std::size_t n) {
  std::vector<std::string> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::to_string(i);
  return out;
}

}  // namespace

SimpleGraph::SimpleGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : SimpleGraph(index_labels(vertex_count), std::move(edges)) {}

SimpleGraph::SimpleGraph(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  build();
}

void SimpleGraph::build() {
  const std::size_t n = labels_.size();
  for (auto& [u, v] : edges_) {
    if (u >= n || v >= n) fail(ErrorKind::InvalidArgument, "edge endpoint out of range");
    if (u == v) fail(ErrorKind::InvalidArgument, "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  adjacency_.assign(n, {});
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

bool SimpleGraph::adjacent(std::size_t u, std::size_t v) const {
  const auto& a = adjacency_.at(u);
  return std::binary_search(a.begin(), a.end(), v);
}

SimpleGraph SimpleGraph::induced_subgraph(std::span<const std::size_t> vertices) const {
  std::vector<std::size_t> position(vertex_count(), SIZE_MAX);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    position[vertices[i]] = i;
    labels.push_back(labels_.at(vertices[i]));
  }
  std::vector<Edge> edges;
  for (auto [u, v] : edges_)
    if (position[u] != SIZE_MAX && position[v] != SIZE_MAX) edges.emplace_back(position[u], position[v]);
  return SimpleGraph(std::move(labels), std::move(edges));
}

SimpleGraph SimpleGraph::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != vertex_count()) fail(ErrorKind::InvalidArgument, "permutation size mismatch");
  std::vector<std::string> labels(vertex_count());
  for (std::size_t v = 0; v < vertex_count(); ++v) labels.at(perm[v]) = labels_[v];
  std::vector<Edge> edges;
  for (auto [u, v] : edges_) edges.emplace_back(perm[u], perm[v]);
  return SimpleGraph(std::move(labels), std::move(edges));
}

SimpleGraph SimpleGraph::without_edge(Edge e) const {
  if (e.first > e.second) std::swap(e.first, e.second);
  std::vector<Edge> edges;
  for (const auto& x : edges_)
    if (x != e) edges.push_back(x);
  return SimpleGraph(labels_, std::move(edges));
}

bool is_triangle_free(const SimpleGraph& g) {
  for (auto [u, v] : g.edges()) {
    auto a = g.neighbors(u), b = g.neighbors(v);
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return false;
      a[i] < b[j] ? ++i : ++j;
    }
  }
  return true;
}

bool is_bipartite(const SimpleGraph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (auto v : g.neighbors(u)) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          stack.push_back(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::vector<std::size_t>> connected_components(const SimpleGraph& g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(g.vertex_count(), false);
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s}, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (auto v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = true;
          comp.push_back(v);
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const SimpleGraph& g) { return connected_components(g).size() <= 1; }

bool is_forest(const SimpleGraph& g) {
  return g.edge_count() + connected_components(g).size() == g.vertex_count();
}

std::vector<std::size_t> degree_sequence(const SimpleGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out.push_back(g.degree(v));
  std::sort(out.rbegin(), out.rend());
  return out;
}

SimpleGraph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph complete_bipartite(std::size_t m, std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < n; ++v) edges.emplace_back(u, m + v);
  return SimpleGraph(m + n, std::move(edges));
}

SimpleGraph cycle_graph(std::size_t n) {
  if (n < 3) fail(ErrorKind::InvalidArgument, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph grid_graph(std::size_t rows, std::size_t cols) {
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const auto v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  return SimpleGraph(rows * cols, std::move(edges));
}

SimpleGraph hypercube(unsigned t) {
  const std::size_t n = std::size_t{1} << t;
  std::vector<Edge> edges;
  for (std::size_t s = 0; s < n; ++s)
    for (unsigned i = 0; i < t; ++i)
      if (!(s >> i & 1)) edges.emplace_back(s, s | (std::size_t{1} << i));
  return SimpleGraph(n, std::move(edges));
}

bool graph_isomorphic_small(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.vertex_count() > kIsomorphismVertexLimit || b.vertex_count() > kIsomorphismVertexLimit)
    fail(ErrorKind::TooLarge, "isomorphism check is limited to 12 vertices");
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;

  // Map vertices of a in order of decreasing degree.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto x, auto y) { return a.degree(x) > a.degree(y); });
  std::vector<std::size_t> image(n, SIZE_MAX);
  std::vector<bool> used(n, false);

  std::function<bool(std::size_t)> extend = [&](std::size_t k) {
    if (k == n) return true;
    const auto u = order[k];
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || b.degree(w) != a.degree(u)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const auto x = order[j];
        ok = a.adjacent(u, x) == b.adjacent(w, image[x]);
      }
      if (!ok) continue;
      image[u] = w;
      used[w] = true;
      if (extend(k + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return extend(0);
}

std::string to_dot(const SimpleGraph& g, std::string_view name) {
  auto quote = [](std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "graph " << quote(name) << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    os << "  " << v << " [label=" << quote(g.label(v)) << "];\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

nlohmann::json to_json(const SimpleGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"vertices", g.labels()}, {"edges", std::move(edges)}};
}

SimpleGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") ||
      !j["vertices"].is_array() || !j["edges"].is_array())
    fail(ErrorKind::InvalidArgument, "graph JSON needs \"vertices\" and \"edges\" arrays");
  std::vector<std::string> labels;
  for (const auto& v : j["vertices"]) labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      fail(ErrorKind::InvalidArgument, "each edge must be a pair of vertex indices");
    edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  return SimpleGraph(std::move(labels), std::move(edges));
}

}  // namespace sgg
