#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "sgg/graph.hpp"
#include "sgg/rational.hpp"

namespace sgg {

/// Boyer-Myrvold edge-addition planarity test.
bool is_planar(const SimpleGraph& g);

struct ComponentBound {
  std::vector<std::size_t> vertices;
  std::size_t edge_count = 0;
  bool acyclic = false;
  Rational raw;    // |E_c|/4 - |V_c|/2 + 1, or 0 for a single-edge component
  BigInt integer;  // 0 for acyclic components, else max(0, ceil(raw))
};

struct GenusBound {
  Rational raw;
  BigInt integer;
  std::vector<ComponentBound> components;  // components with at least one edge
};

/// Triangle-free Euler bound, applied per connected component. Throws
/// NotTriangleFree when the hypothesis fails.
GenusBound euler_lower_bound(const SimpleGraph& g);

/// Cyclic order of neighbours around each vertex. For a simple graph this is
/// the same as a cyclic order of incident edges.
class RotationSystem {
 public:
  RotationSystem() = default;
  explicit RotationSystem(std::vector<std::vector<std::size_t>> order) : order_(std::move(order)) {}

  /// Each vertex's neighbours in ascending order.
  static RotationSystem sorted(const SimpleGraph& g);

  std::size_t vertex_count() const noexcept { return order_.size(); }
  const std::vector<std::size_t>& at(std::size_t v) const { return order_.at(v); }
  const std::vector<std::vector<std::size_t>>& orders() const noexcept { return order_; }

  bool is_valid_for(const SimpleGraph& g) const;

 private:
  std::vector<std::vector<std::size_t>> order_;
};

/// Number of faces traced by the embedding. Throws InvalidArgument when rot
/// does not belong to g.
std::size_t count_faces(const SimpleGraph& g, const RotationSystem& rot);

/// (2 - V + E - F) / 2 for a connected graph. Throws Disconnected.
int genus_of_rotation(const SimpleGraph& g, const RotationSystem& rot);

struct GenusBudget {
  std::uint64_t max_nodes = 10'000'000;
  std::chrono::milliseconds time_limit = std::chrono::seconds(60);
  bool planarity_fast_path = true;
};

struct ComponentGenus {
  std::vector<std::size_t> vertices;
  std::optional<int> genus;  // nullopt when the budget ran out
  int lower_bound = 0;
  int upper_bound = 0;
  std::uint64_t nodes = 0;
};

struct GenusResult {
  std::optional<int> genus;  // sum over components; nullopt means unknown
  std::vector<ComponentGenus> components;
  /// An embedding achieving the returned genus, per component, when known.
  std::optional<RotationSystem> embedding;
  std::uint64_t nodes = 0;
};

/// Minimum genus over all rotation systems, summed over components. The
/// budget applies per component.
GenusResult exact_genus(const SimpleGraph& g, const GenusBudget& budget = {});

/// Lower bound valid for any simple connected graph: Euler with faces of
/// length >= 3, or >= 4 when triangle-free.
int simple_genus_lower_bound(const SimpleGraph& connected);

}  // namespace sgg
