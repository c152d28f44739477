#include "sgg/lattice.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

#include "sgg/error.hpp"
#include "sgg/number_theory.hpp"

namespace sgg {

Subgroup::Subgroup(GroupPtr parent, Bitset members, std::vector<Element> generators)
    : parent_(std::move(parent)), members_(std::move(members)) {
  for (auto i : members_.indices()) elements_.push_back(static_cast<Element>(i));
  for (auto g : generators)
    if (g != parent_->identity() && std::find(generators_.begin(), generators_.end(), g) == generators_.end())
      generators_.push_back(g);
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const noexcept {
  if (other.order() % order() != 0) return false;
  for (auto g : generators_)
    if (!other.contains(g)) return false;
  return true;
}

bool lattice_less(const Subgroup& a, const Subgroup& b) noexcept {
  if (a.order() != b.order()) return a.order() < b.order();
  const auto x = a.elements(), y = b.elements();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

Subgroup trivial_subgroup(const GroupPtr& g) {
  Bitset b(g->order());
  b.set(g->identity());
  return Subgroup(g, std::move(b), {});
}

Subgroup whole_group(const GroupPtr& g) {
  Bitset b(g->order());
  std::vector<Element> all;
  for (Element x = 0; x < g->order(); ++x) {
    b.set(x);
    all.push_back(x);
  }
  // Reduce to a small generating set.
  Subgroup h = trivial_subgroup(g);
  for (auto x : all)
    if (!h.contains(x)) h = join(h, std::span<const Element>(&x, 1));
  return h;
}

Subgroup generated_subgroup(const GroupPtr& g, std::span<const Element> seed) {
  for (auto x : seed)
    if (x >= g->order()) fail(ErrorKind::InvalidArgument, "seed element out of range");
  return join(trivial_subgroup(g), seed);
}

Subgroup join(const Subgroup& h, std::span<const Element> extra) {
  const GroupTable& G = *h.parent();
  const std::size_t n = G.order();
  std::vector<std::uint8_t> in(n, 0);
  std::vector<Element> elems(h.elements().begin(), h.elements().end());
  for (auto x : elems) in[x] = 1;
  std::vector<Element> gens(h.generators().begin(), h.generators().end());

  for (auto g : extra) {
    if (in[g]) continue;
    gens.push_back(g);
    // elems is a subgroup; grow it by whole right cosets until closed under
    // right multiplication by every generator.
    const std::vector<Element> prev = elems;
    std::vector<Element> reps{G.identity()};
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (auto s : gens) {
        const Element y = G.mul(reps[i], s);
        if (in[y]) continue;
        for (auto x : prev) {
          const Element z = G.mul(x, y);
          in[z] = 1;
          elems.push_back(z);
        }
        reps.push_back(y);
      }
  }
  Bitset bits(n);
  for (auto x : elems) bits.set(x);
  return Subgroup(h.parent(), std::move(bits), std::move(gens));
}

Lattice::Lattice(GroupPtr group, std::vector<Subgroup> subgroups)
    : group_(std::move(group)), subgroups_(std::move(subgroups)) {
  std::sort(subgroups_.begin(), subgroups_.end(), lattice_less);
  subgroups_.erase(std::unique(subgroups_.begin(), subgroups_.end()), subgroups_.end());
  const std::size_t m = subgroups_.size();
  if (m == 0 || subgroups_.front().order() != 1 || subgroups_.back().order() != group_->order())
    fail(ErrorKind::InvalidArgument, "lattice must contain the trivial subgroup and the whole group");

  above_.assign(m, Bitset(m));
  below_.assign(m, {});
  for (std::size_t i = 0; i < m; ++i) {
    index_.emplace(subgroups_[i].members(), i);
    for (std::size_t j = i; j < m; ++j)
      if (subgroups_[i].is_subgroup_of(subgroups_[j])) {
        above_[i].set(j);
        if (i != j) below_[j].push_back(i);
      }
  }
}

std::optional<std::size_t> Lattice::index_of(const Bitset& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Lattice::meet(std::size_t i, std::size_t j) const {
  auto idx = index_of(subgroups_.at(i).members() & subgroups_.at(j).members());
  if (!idx) fail(ErrorKind::Internal, "lattice is not closed under intersection");
  return *idx;
}

namespace {

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds budget)
      : end_(std::chrono::steady_clock::now() + budget), budget_(budget) {}

  void check() {
    if (++ticks_ % 256 != 0) return;
    if (std::chrono::steady_clock::now() > end_)
      fail(ErrorKind::Timeout, "subgroup enumeration exceeded " + std::to_string(budget_.count()) + " ms");
  }

 private:
  std::chrono::steady_clock::time_point end_;
  std::chrono::milliseconds budget_;
  std::size_t ticks_ = 0;
};

Subgroup naive_closure(const GroupPtr& g, std::vector<Element> gens) {
  const GroupTable& G = *g;
  std::vector<std::uint8_t> in(G.order(), 0);
  std::vector<Element> list{G.identity()};
  in[G.identity()] = 1;
  for (std::size_t head = 0; head < list.size(); ++head)
    for (auto s : gens) {
      const Element y = G.mul(list[head], s);
      if (!in[y]) {
        in[y] = 1;
        list.push_back(y);
      }
    }
  Bitset bits(G.order());
  for (auto x : list) bits.set(x);
  return Subgroup(g, std::move(bits), std::move(gens));
}

}  // namespace

Lattice all_subgroups(const GroupPtr& g, const EnumerationOptions& options) {
  check_order_cap(g->order(), options.order_cap, g->name());
  Deadline deadline(options.timeout);
  const std::size_t n = g->order();

  std::vector<Subgroup> found;
  std::unordered_map<Bitset, std::size_t, BitsetHash> seen;
  auto insert = [&](Subgroup h) {
    if (seen.emplace(h.members(), found.size()).second) found.push_back(std::move(h));
  };

  const Subgroup trivial = trivial_subgroup(g);
  insert(trivial);
  std::vector<Subgroup> cyclics;
  std::vector<std::uint8_t> covered(n, 0);
  for (Element x = 0; x < n; ++x) {
    if (covered[x] || x == g->identity()) continue;
    Subgroup c = join(trivial, std::span<const Element>(&x, 1));
    for (auto y : c.elements())
      if (g->element_order(y) == c.order()) covered[y] = 1;
    cyclics.push_back(c);
    insert(std::move(c));
  }

  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& c : cyclics) {
      deadline.check();
      if (found[i].contains(c.generators().front())) continue;
      insert(join(found[i], c.generators()));
    }
  }
  return Lattice(g, std::move(found));
}

Lattice all_subgroups_by_extension(const GroupPtr& g, const EnumerationOptions& options) {
  check_order_cap(g->order(), options.order_cap, g->name());
  Deadline deadline(options.timeout);
  const std::size_t n = g->order();

  std::map<std::size_t, std::vector<Subgroup>> by_order;
  std::unordered_map<Bitset, std::size_t, BitsetHash> seen;
  auto insert = [&](Subgroup h) {
    if (seen.emplace(h.members(), seen.size()).second) by_order[h.order()].push_back(std::move(h));
  };
  insert(naive_closure(g, {}));

  for (auto& [order, layer] : by_order) {
    // Extensions only land in strictly larger orders, so this layer is stable.
    for (std::size_t k = 0; k < layer.size(); ++k) {
      const Subgroup& h = layer[k];
      for (Element x = 0; x < n; ++x) {
        if (h.contains(x)) continue;
        deadline.check();
        std::vector<Element> gens(h.generators().begin(), h.generators().end());
        gens.push_back(x);
        insert(naive_closure(g, std::move(gens)));
      }
    }
  }

  std::vector<Subgroup> all;
  for (auto& [order, layer] : by_order)
    for (auto& h : layer) all.push_back(std::move(h));
  return Lattice(g, std::move(all));
}

std::vector<Subgroup> subgroups_of_order(const Lattice& l, std::size_t m) {
  std::vector<Subgroup> out;
  for (const auto& h : l.subgroups())
    if (h.order() == m) out.push_back(h);
  return out;
}

std::vector<Subgroup> sylow_subgroups(const Lattice& l, std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  const std::size_t n = l.group()->order();
  if (n % p != 0)
    fail(ErrorKind::PrimeDoesNotDivideOrder,
         std::to_string(p) + " does not divide the group order " + std::to_string(n));
  return subgroups_of_order(l, p_part(n, p));
}

std::map<std::size_t, std::size_t> subgroup_census(const Lattice& l) {
  std::map<std::size_t, std::size_t> out;
  for (const auto& h : l.subgroups()) ++out[h.order()];
  return out;
}

std::vector<Edge> covering_pairs(const std::vector<std::vector<std::size_t>>& strictly_below) {
  const std::size_t m = strictly_below.size();
  std::vector<std::size_t> blocked(m, SIZE_MAX);
  std::vector<Edge> out;
  for (std::size_t j = 0; j < m; ++j) {
    for (auto k : strictly_below[j])
      for (auto i : strictly_below[k]) blocked[i] = j;
    for (auto i : strictly_below[j])
      if (blocked[i] != j) out.emplace_back(i, j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string subgroup_label(const Subgroup& h, std::size_t index) {
  return "H" + std::to_string(index) + " |" + std::to_string(h.order()) + "|";
}

SimpleGraph hasse_graph(const Lattice& l) {
  std::vector<std::vector<std::size_t>> below(l.size());
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < l.size(); ++j) {
    below[j] = l.strictly_below(j);
    labels.push_back(subgroup_label(l[j], j));
  }
  return SimpleGraph(std::move(labels), covering_pairs(below));
}

nlohmann::json to_json(const Lattice& l) {
  nlohmann::json subs = nlohmann::json::array();
  for (const auto& h : l.subgroups())
    subs.push_back({{"order", h.order()},
                    {"elements", std::vector<Element>(h.elements().begin(), h.elements().end())}});
  nlohmann::json containment = nlohmann::json::array();
  for (std::size_t i = 0; i < l.size(); ++i) {
    std::vector<bool> row(l.size());
    for (std::size_t j = 0; j < l.size(); ++j) row[j] = l.contains(i, j);
    containment.push_back(row);
  }
  return {{"group", l.group()->name()},
          {"order", l.group()->order()},
          {"subgroups", std::move(subs)},
          {"containment", std::move(containment)}};
}

}  // namespace sgg
