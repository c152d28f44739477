#include "sgg/perm_group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "sgg/error.hpp"
#include "sgg/finite_field.hpp"
#include "sgg/number_theory.hpp"

namespace sgg {

struct PermGroup::Cache {
  std::once_flag once;
  GroupPtr table;
  std::vector<Permutation> elements;
};

PermGroup::PermGroup(std::string name, std::size_t degree, std::vector<Permutation> generators,
                     std::size_t cap, std::size_t expected_order)
    : name_(std::move(name)),
      degree_(degree),
      generators_(std::move(generators)),
      cap_(cap),
      expected_order_(expected_order),
      cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) {
    if (g.size() != degree_) fail(ErrorKind::InvalidArgument, "generator has wrong degree");
    std::vector<std::uint8_t> hit(degree_, 0);
    for (auto x : g) {
      if (x >= degree_ || hit[x]) fail(ErrorKind::InvalidArgument, "generator is not a permutation");
      hit[x] = 1;
    }
  }
}

void PermGroup::materialize() const {
  const std::size_t m = degree_;
  auto compose = [m](const Permutation& a, const Permutation& b) {
    Permutation r(m);
    for (std::size_t x = 0; x < m; ++x) r[x] = b[a[x]];
    return r;
  };

  Permutation id(m);
  std::iota(id.begin(), id.end(), 0u);

  // Breadth-first closure; parent[i], via[i] record element i = parent * gen.
  std::vector<Permutation> found{id};
  std::map<Permutation, std::size_t> index{{id, 0}};
  std::vector<std::size_t> parent{0}, via{0};
  for (std::size_t head = 0; head < found.size(); ++head)
    for (std::size_t gi = 0; gi < generators_.size(); ++gi) {
      Permutation next = compose(found[head], generators_[gi]);
      if (index.count(next)) continue;
      if (found.size() + 1 > cap_)
        fail(ErrorKind::OrderCapExceeded,
             name_ + " generates more than the cap of " + std::to_string(cap_) + " elements");
      index.emplace(next, found.size());
      parent.push_back(head);
      via.push_back(gi);
      found.push_back(std::move(next));
    }

  const std::size_t n = found.size();
  if (expected_order_ != 0 && n != expected_order_)
    fail(ErrorKind::Internal, name_ + " generated order " + std::to_string(n) + ", expected " +
                                  std::to_string(expected_order_));
  const std::size_t ng = generators_.size();
  // Lexicographic relabeling: index map iterates in sorted order.
  std::vector<std::size_t> rank(n);
  std::vector<Permutation> sorted;
  sorted.reserve(n);
  for (const auto& [perm, bfs] : index) {
    rank[bfs] = sorted.size();
    sorted.push_back(perm);
  }

  std::vector<std::size_t> right(n * ng);  // BFS index of found[i] * gen
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t gi = 0; gi < ng; ++gi) right[i * ng + gi] = index.at(compose(found[i], generators_[gi]));

  // a * e = (a * parent(e)) * gen, filled in BFS order of e.
  std::vector<std::size_t> bfs_table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    bfs_table[a * n + 0] = a;
    for (std::size_t e = 1; e < n; ++e)
      bfs_table[a * n + e] = right[bfs_table[a * n + parent[e]] * ng + via[e]];
  }
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t e = 0; e < n; ++e)
      table[rank[a] * n + rank[e]] = static_cast<Element>(rank[bfs_table[a * n + e]]);

  cache_->elements = std::move(sorted);
  cache_->table = std::make_shared<const GroupTable>(name_, n, std::move(table));
}

GroupPtr PermGroup::table() const {
  std::call_once(cache_->once, [this] { materialize(); });
  return cache_->table;
}

const std::vector<Permutation>& PermGroup::elements() const {
  table();
  return cache_->elements;
}

namespace {

std::uint64_t saturating_factorial(unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i) {
    if (r > (std::uint64_t{1} << 40)) return r;
    r *= i;
  }
  return r;
}

}  // namespace

PermGroup symmetric(unsigned n, std::size_t cap) {
  const std::string name = "S(" + std::to_string(n) + ")";
  if (n == 0) fail(ErrorKind::InvalidArgument, "symmetric group needs n >= 1");
  check_order_cap(saturating_factorial(n), cap, name);
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation swap(n), cycle(n);
    std::iota(swap.begin(), swap.end(), 0u);
    std::swap(swap[0], swap[1]);
    for (unsigned i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    gens = {swap, cycle};
  }
  return PermGroup(name, n, std::move(gens), cap, saturating_factorial(n));
}

PermGroup alternating(unsigned n, std::size_t cap) {
  const std::string name = "Alt(" + std::to_string(n) + ")";
  if (n == 0) fail(ErrorKind::InvalidArgument, "alternating group needs n >= 1");
  check_order_cap(n >= 2 ? saturating_factorial(n) / 2 : 1, cap, name);
  std::vector<Permutation> gens;
  for (unsigned k = 2; k < n; ++k) {
    Permutation c(n);
    std::iota(c.begin(), c.end(), 0u);
    c[0] = 1;
    c[1] = k;
    c[k] = 0;
    gens.push_back(std::move(c));
  }
  return PermGroup(name, n, std::move(gens), cap, n >= 2 ? saturating_factorial(n) / 2 : 1);
}

std::uint64_t psl2_order(std::uint64_t q) noexcept {
  return q * (q * q - 1) / (q % 2 == 1 ? 2 : 1);
}

PermGroup psl2(std::uint32_t q, std::size_t cap) {
  const std::string name = "PSL(2," + std::to_string(q) + ")";
  if (!as_prime_power(q)) fail(ErrorKind::NotAPrimePower, std::to_string(q) + " is not a prime power");
  if (q < 4 || q > 49) fail(ErrorKind::InvalidArgument, name + " needs 4 <= q <= 49");
  check_order_cap(psl2_order(q), cap, name);

  const FiniteField F = make_field(q);
  const std::uint32_t inf = q;
  const auto a2 = F.mul(F.primitive_element(), F.primitive_element());
  Permutation shift(q + 1), invert(q + 1), scale(q + 1);
  for (std::uint32_t x = 0; x < q; ++x) {
    shift[x] = F.add(x, F.one());
    invert[x] = x == 0 ? inf : F.neg(F.inv(x));
    scale[x] = F.mul(a2, x);
  }
  shift[inf] = inf;
  invert[inf] = 0;
  scale[inf] = inf;

  return PermGroup(name, q + 1, {shift, invert, scale}, cap, psl2_order(q));
}

}  // namespace sgg
