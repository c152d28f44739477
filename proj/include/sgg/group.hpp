#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace sgg {

using Element = std::uint32_t;

/// Default ceiling on group orders that constructors will materialize.
inline constexpr std::size_t kDefaultOrderCap = 20000;

/// A finite group given by its full Cayley table. Immutable once built.
class GroupTable {
 public:
  /// Builds from a row-major n*n product table. Validates the group axioms:
  /// associativity exhaustively for n <= 256, otherwise on 10*n^2 triples
  /// (a, b, c) with b drawn from a fixed-seed sample of 10 elements.
  GroupTable(std::string name, std::size_t order, std::vector<Element> table);

  std::size_t order() const noexcept { return n_; }
  const std::string& name() const noexcept { return name_; }
  Element identity() const noexcept { return identity_; }

  Element mul(Element a, Element b) const noexcept { return table_[std::size_t{a} * n_ + b]; }
  Element inv(Element a) const noexcept { return inverse_[a]; }
  std::size_t element_order(Element a) const noexcept { return orders_[a]; }
  std::span<const std::size_t> element_orders() const noexcept { return orders_; }

  /// Distinct primes dividing the order, ascending.
  std::vector<std::uint64_t> prime_divisors() const;

  /// Sorted multiset of element orders.
  std::vector<std::size_t> order_multiset() const;

  bool is_abelian() const noexcept;
  std::vector<Element> center() const;

  /// Copy of this group under a different display name.
  GroupTable renamed(std::string name) const;

 private:
  std::string name_;
  std::size_t n_;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
  std::vector<std::size_t> orders_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

void check_order_cap(std::size_t order, std::size_t cap, const std::string& what);

/// Z/n; element k is the residue k.
GroupPtr cyclic(std::size_t n, std::size_t cap = kDefaultOrderCap);

/// (Z/p)^t; element index is the base-p encoding of the coordinate vector.
GroupPtr elementary_abelian(std::uint64_t p, unsigned t, std::size_t cap = kDefaultOrderCap);

/// Order 2n, <r,s | r^n = s^2 = 1, srs = r^-1>. Index k is r^k and index
/// n + k is s r^k.
GroupPtr dihedral(std::size_t n, std::size_t cap = kDefaultOrderCap);

/// Componentwise product; (g, h) has index g * |H| + h.
GroupPtr direct_product(const GroupTable& g, const GroupTable& h,
                        std::size_t cap = kDefaultOrderCap);

}  // namespace sgg
