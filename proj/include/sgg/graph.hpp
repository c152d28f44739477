#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace sgg {

/// Unordered vertex pair stored with first < second.
using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected simple graph. Construction normalizes the edge list: each
/// edge is stored once, sorted; loops and out-of-range endpoints throw.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(std::size_t vertex_count, std::vector<Edge> edges);
  SimpleGraph(std::vector<std::string> labels, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t v) const { return labels_.at(v); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Sorted ascending.
  std::span<const std::size_t> neighbors(std::size_t v) const { return adjacency_.at(v); }
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }
  bool adjacent(std::size_t u, std::size_t v) const;

  /// Vertices keep the order given; labels carry over.
  SimpleGraph induced_subgraph(std::span<const std::size_t> vertices) const;
  /// Vertex v becomes vertex perm[v].
  SimpleGraph permuted(std::span<const std::size_t> perm) const;
  SimpleGraph without_edge(Edge e) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void build();

  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

bool is_triangle_free(const SimpleGraph& g);
bool is_bipartite(const SimpleGraph& g);
bool is_forest(const SimpleGraph& g);

/// Components ordered by smallest vertex; each component sorted ascending.
std::vector<std::vector<std::size_t>> connected_components(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);

/// Vertex degrees in non-increasing order.
std::vector<std::size_t> degree_sequence(const SimpleGraph& g);

SimpleGraph complete(std::size_t n);
SimpleGraph complete_bipartite(std::size_t m, std::size_t n);
SimpleGraph cycle_graph(std::size_t n);
SimpleGraph path_graph(std::size_t n);
SimpleGraph grid_graph(std::size_t rows, std::size_t cols);
/// Vertices are subsets of {0..t-1} as bitmasks; edges join sets differing
/// in one element.
SimpleGraph hypercube(unsigned t);

inline constexpr std::size_t kIsomorphismVertexLimit = 12;

/// Exhaustive degree-pruned search. Throws TooLarge beyond 12 vertices.
bool graph_isomorphic_small(const SimpleGraph& a, const SimpleGraph& b);

/// One `graph` block, quoted labels, vertices then edges in sorted order.
std::string to_dot(const SimpleGraph& g, std::string_view name = "G");

/// {"vertices": [labels], "edges": [[i, j], ...]}
nlohmann::json to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const nlohmann::json& j);

}  // namespace sgg
