#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sgg/bitset.hpp"
#include "sgg/graph.hpp"
#include "sgg/group.hpp"

namespace sgg {

/// A subgroup of a parent GroupTable, held as an element bitset together with
/// its sorted element list and a generating set.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, Bitset members, std::vector<Element> generators);

  const GroupPtr& parent() const noexcept { return parent_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const Bitset& members() const noexcept { return members_; }
  std::span<const Element> elements() const noexcept { return elements_; }
  std::span<const Element> generators() const noexcept { return generators_; }

  bool contains(Element g) const noexcept { return members_.test(g); }
  /// Containment via the generating set of *this.
  bool is_subgroup_of(const Subgroup& other) const noexcept;

  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept {
    return a.members_ == b.members_;
  }

 private:
  GroupPtr parent_;
  Bitset members_;
  std::vector<Element> elements_;
  std::vector<Element> generators_;
};

/// Ordering used for lattice indices: by order, then lexicographically by the
/// sorted element list.
bool lattice_less(const Subgroup& a, const Subgroup& b) noexcept;

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_group(const GroupPtr& g);

/// Smallest subgroup containing the seed.
Subgroup generated_subgroup(const GroupPtr& g, std::span<const Element> seed);

/// <h, extra>, computed by coset-wise extension of h.
Subgroup join(const Subgroup& h, std::span<const Element> extra);

struct EnumerationOptions {
  std::size_t order_cap = kDefaultOrderCap;
  std::chrono::milliseconds timeout = std::chrono::seconds(300);
};

/// All subgroups of a group with the containment order. Immutable.
class Lattice {
 public:
  /// Sorts, deduplicates and computes containment.
  Lattice(GroupPtr group, std::vector<Subgroup> subgroups);

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return subgroups_.size(); }
  const Subgroup& operator[](std::size_t i) const { return subgroups_.at(i); }
  const std::vector<Subgroup>& subgroups() const noexcept { return subgroups_; }

  /// H_i <= H_j.
  bool contains(std::size_t i, std::size_t j) const { return above_.at(i).test(j); }
  /// Indices k != j with H_k < H_j, ascending.
  const std::vector<std::size_t>& strictly_below(std::size_t j) const { return below_.at(j); }

  std::optional<std::size_t> index_of(const Bitset& members) const;
  /// Index of H_i intersect H_j; throws Internal when the lattice is not
  /// closed under intersection.
  std::size_t meet(std::size_t i, std::size_t j) const;

 private:
  GroupPtr group_;
  std::vector<Subgroup> subgroups_;
  std::vector<Bitset> above_;
  std::vector<std::vector<std::size_t>> below_;
  std::unordered_map<Bitset, std::size_t, BitsetHash> index_;
};

/// Cyclic subgroups closed under joins until a fixed point.
Lattice all_subgroups(const GroupPtr& g, const EnumerationOptions& options = {});

/// Independent enumeration used as an oracle: subgroups are built order by
/// order, each by extending a smaller subgroup with one element, using plain
/// right-multiplication closure.
Lattice all_subgroups_by_extension(const GroupPtr& g, const EnumerationOptions& options = {});

std::vector<Subgroup> subgroups_of_order(const Lattice& l, std::size_t m);

/// Subgroups of order equal to the full p-part of |G|.
std::vector<Subgroup> sylow_subgroups(const Lattice& l, std::uint64_t p);

/// Number of subgroups per order.
std::map<std::size_t, std::size_t> subgroup_census(const Lattice& l);

/// Covering pairs (lower, upper) of a finite poset given its strict
/// down-sets; output sorted.
std::vector<Edge> covering_pairs(const std::vector<std::vector<std::size_t>>& strictly_below);

/// The subgroup graph L(G): the covering graph of the lattice.
SimpleGraph hasse_graph(const Lattice& l);

/// {group, order, subgroups: [{order, elements}], containment: [[bool]]}
/// where containment[i][j] is H_i <= H_j.
nlohmann::json to_json(const Lattice& l);

std::string subgroup_label(const Subgroup& h, std::size_t index);

}  // namespace sgg
