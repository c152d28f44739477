#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sgg/graph.hpp"
#include "sgg/lattice.hpp"
#include "sgg/rational.hpp"

namespace sgg {

enum class OmegaKind { Custom, SylowHypercube, RankLayers, PslDihedral };

std::string_view to_string(OmegaKind kind) noexcept;

/// A chosen set of subgroups of one parent group. Members are pairwise
/// distinct; the induced graph uses covering relative to the family only.
class OmegaFamily {
 public:
  OmegaFamily(OmegaKind kind, GroupPtr parent, std::vector<Subgroup> members,
              std::vector<std::string> labels, std::map<std::string, std::uint64_t> parameters);

  OmegaKind kind() const noexcept { return kind_; }
  const GroupPtr& parent() const noexcept { return parent_; }
  const std::vector<Subgroup>& members() const noexcept { return members_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::map<std::string, std::uint64_t>& parameters() const noexcept { return parameters_; }
  std::uint64_t parameter(const std::string& key) const;

 private:
  OmegaKind kind_;
  GroupPtr parent_;
  std::vector<Subgroup> members_;
  std::vector<std::string> labels_;
  std::map<std::string, std::uint64_t> parameters_;
};

/// Every subgroup of the lattice; its induced graph is hasse_graph(l).
OmegaFamily lattice_family(const Lattice& l);

/// Edge {H1, H2} iff H1 < H2 with no member strictly between.
SimpleGraph induced_omega_graph(const OmegaFamily& family);

/// H_J for all subsets J of the primes dividing |G|, built from the first
/// pairwise permutable tuple of Sylow subgroups in lattice order. Members
/// are indexed by the bitmask of J over the ascending primes. Throws
/// NoSylowBasisFound.
OmegaFamily sylow_hypercube(const GroupPtr& g, const EnumerationOptions& options = {});

/// Subgroups of order p and p^2 of A(p,t), t >= 2, in lattice order.
OmegaFamily rank_layer_family(std::uint64_t p, unsigned t, std::size_t cap = kDefaultOrderCap);

/// Every (p, t), p prime and t >= 2, with p^t <= cap and at most
/// max_members subgroups of order p or p^2, ordered by p then t.
std::vector<std::pair<std::uint64_t, unsigned>> constructible_layer_parameters(
    std::size_t cap = kDefaultOrderCap, std::size_t max_members = 50000);

/// Inside D_n: the whole group M, the n/a subgroups <r^(n/a), s r^i> ~ D_a,
/// the n/b subgroups ~ D_b, the n reflection subgroups <s r^k> and 1.
/// Requires n = a*b with a, b coprime, both > 1.
OmegaFamily dihedral_omega_family(std::uint64_t n, std::uint64_t a, std::uint64_t b,
                                  std::size_t cap = kDefaultOrderCap);

/// dihedral_omega_family with (n, a, b) from select_pls_parameters(q).
OmegaFamily psl_dihedral_family(std::uint64_t q, std::size_t cap = kDefaultOrderCap);

struct PslVerification {
  std::uint64_t q = 0, n = 0, a = 0, b = 0;
  std::size_t lattice_size = 0;
  std::size_t m_index = 0;          // lattice index of the located D_n
  std::size_t dihedral_a_count = 0;  // subgroups of M matching D_a
  std::size_t dihedral_b_count = 0;
  std::size_t involution_count = 0;  // order-2 subgroups non-central in M
  bool each_a_contains_a = false;    // every D_a holds exactly a of them
  bool each_b_contains_b = false;
  std::size_t vertices = 0, edges = 0;  // induced graph of the concrete family
  bool passed = false;
};

/// Locates the family inside the full subgroup lattice of PSL(2,q) for odd
/// admissible q <= 13 and checks it against the abstract counts. Throws
/// FamilyNotFound when no subgroup of order 2n matches D_n.
PslVerification verify_psl_family(std::uint64_t q, const EnumerationOptions& options = {});

struct InvariantCheck {
  std::string name;
  bool passed;
  std::string detail;
};

/// The kind-specific count, degree and bound invariants of a family.
std::vector<InvariantCheck> check_family_invariants(const OmegaFamily& family);

/// Euler lower bound raw value of the induced graph and the kind's closed
/// form (ciclo_bound, rango_bound or pls_raw); Custom families have none.
struct FamilyBounds {
  std::size_t vertices = 0, edges = 0;
  Rational euler_raw;
  BigInt euler_integer;
  bool has_closed_form = false;
  Rational closed_form;
};
FamilyBounds family_bounds(const OmegaFamily& family);

/// {kind, parameters, parent, members: [{label, order, elements}], graph}
nlohmann::json to_json(const OmegaFamily& family);

}  // namespace sgg
