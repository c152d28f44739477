#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sgg/group.hpp"

namespace sgg {

/// Images of the points 0..m-1.
using Permutation = std::vector<std::uint32_t>;

/// A permutation group given by generators. The Cayley table is built on
/// first request. Elements are indexed in lexicographic order of their image
/// vectors, so the identity is element 0. The product a*b applies a first.
class PermGroup {
 public:
  /// When expected_order is nonzero, materialization checks the generated
  /// order against it.
  PermGroup(std::string name, std::size_t degree, std::vector<Permutation> generators,
            std::size_t cap = kDefaultOrderCap, std::size_t expected_order = 0);

  const std::string& name() const noexcept { return name_; }
  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::size_t order_cap() const noexcept { return cap_; }

  /// Throws OrderCapExceeded once the closure grows past the cap.
  GroupPtr table() const;
  const std::vector<Permutation>& elements() const;

 private:
  struct Cache;
  void materialize() const;

  std::string name_;
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::size_t cap_;
  std::size_t expected_order_;
  std::shared_ptr<Cache> cache_;
};

PermGroup symmetric(unsigned n, std::size_t cap = kDefaultOrderCap);
PermGroup alternating(unsigned n, std::size_t cap = kDefaultOrderCap);

/// PSL(2,q) acting on the q+1 points of the projective line over GF(q).
/// Point k < q is the field element with encoding k; point q is infinity.
/// Generated by x -> x+1, x -> -1/x and x -> a^2 x for the field's fixed
/// primitive element a. Requires 4 <= q <= 49.
PermGroup psl2(std::uint32_t q, std::size_t cap = kDefaultOrderCap);

/// q(q^2-1)/gcd(2,q-1).
std::uint64_t psl2_order(std::uint64_t q) noexcept;

}  // namespace sgg
