#include "sgg/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "sgg/error.hpp"
#include "sgg/number_theory.hpp"

namespace sgg {

namespace {

void verify_associativity(const GroupTable& g) {
  const std::size_t n = g.order();
  auto check = [&](Element a, Element b, Element c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
      fail(ErrorKind::InvalidArgument, "table of " + g.name() + " is not associative");
  };
  if (n <= 256) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) check(a, b, c);
    return;
  }
  // 10 random middle elements b, each against every pair (a, c): 10 n^2
  // triples, read row by row.
  std::mt19937_64 rng(0x5eed5eedULL ^ n);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  std::vector<Element> left(n), right(n);
  for (int round = 0; round < 10; ++round) {
    const Element b = pick(rng);
    for (Element a = 0; a < n; ++a) {
      left[a] = g.mul(a, b);
      right[a] = g.mul(b, a);
    }
    for (Element a = 0; a < n; ++a)
      for (Element c = 0; c < n; ++c)
        if (g.mul(left[a], c) != g.mul(a, right[c]))
          fail(ErrorKind::InvalidArgument, "table of " + g.name() + " is not associative");
  }
}

}  // namespace

GroupTable::GroupTable(std::string name, std::size_t order, std::vector<Element> table)
    : name_(std::move(name)), n_(order), table_(std::move(table)) {
  if (n_ == 0) fail(ErrorKind::InvalidArgument, "group must be nonempty");
  if (table_.size() != n_ * n_) fail(ErrorKind::InvalidArgument, "table size mismatch");
  for (Element x : table_)
    if (x >= n_) fail(ErrorKind::InvalidArgument, "table entry out of range");

  bool found = false;
  for (Element e = 0; e < n_ && !found; ++e) {
    bool ok = true;
    for (Element a = 0; a < n_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) fail(ErrorKind::InvalidArgument, "no identity element");

  inverse_.assign(n_, 0);
  for (Element a = 0; a < n_; ++a) {
    std::size_t count = 0;
    for (Element b = 0; b < n_; ++b)
      if (mul(a, b) == identity_) {
        inverse_[a] = b;
        ++count;
      }
    if (count != 1 || mul(inverse_[a], a) != identity_)
      fail(ErrorKind::InvalidArgument, "element without a unique two-sided inverse");
  }

  // Quasigroup property: every row is a permutation.
  std::vector<std::uint8_t> seen(n_);
  for (Element a = 0; a < n_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < n_; ++b) {
      if (seen[mul(a, b)]) fail(ErrorKind::InvalidArgument, "row is not a permutation");
      seen[mul(a, b)] = 1;
    }
  }

  verify_associativity(*this);

  orders_.assign(n_, 0);
  for (Element a = 0; a < n_; ++a) {
    std::size_t k = 1;
    for (Element x = a; x != identity_; x = mul(x, a)) ++k;
    if (n_ % k != 0) fail(ErrorKind::Internal, "element order does not divide group order");
    orders_[a] = k;
  }
}

std::vector<std::uint64_t> GroupTable::prime_divisors() const {
  return distinct_prime_divisors(n_);
}

std::vector<std::size_t> GroupTable::order_multiset() const {
  std::vector<std::size_t> out(orders_.begin(), orders_.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool GroupTable::is_abelian() const noexcept {
  for (Element a = 0; a < n_; ++a)
    for (Element b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<Element> GroupTable::center() const {
  std::vector<Element> out;
  for (Element a = 0; a < n_; ++a) {
    bool central = true;
    for (Element b = 0; b < n_ && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) out.push_back(a);
  }
  return out;
}

GroupTable GroupTable::renamed(std::string name) const {
  GroupTable copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

void check_order_cap(std::size_t order, std::size_t cap, const std::string& what) {
  if (order > cap)
    fail(ErrorKind::OrderCapExceeded, what + " has order " + std::to_string(order) +
                                          " above the cap " + std::to_string(cap));
}

GroupPtr cyclic(std::size_t n, std::size_t cap) {
  const std::string name = "C(" + std::to_string(n) + ")";
  if (n == 0) fail(ErrorKind::InvalidArgument, "cyclic group order must be positive");
  check_order_cap(n, cap, name);
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>((a + b) % n);
  return std::make_shared<const GroupTable>(name, n, std::move(table));
}

GroupPtr elementary_abelian(std::uint64_t p, unsigned t, std::size_t cap) {
  const std::string name = "A(" + std::to_string(p) + "," + std::to_string(t) + ")";
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  std::size_t n = 1;
  for (unsigned i = 0; i < t; ++i) {
    n *= p;
    check_order_cap(n, cap, name);
  }
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t x = a, y = b, r = 0, scale = 1;
      for (unsigned i = 0; i < t; ++i) {
        r += ((x % p + y % p) % p) * scale;
        x /= p;
        y /= p;
        scale *= p;
      }
      table[a * n + b] = static_cast<Element>(r);
    }
  return std::make_shared<const GroupTable>(name, n, std::move(table));
}

GroupPtr dihedral(std::size_t n, std::size_t cap) {
  const std::string name = "D(" + std::to_string(n) + ")";
  if (n == 0) fail(ErrorKind::InvalidArgument, "dihedral parameter must be positive");
  check_order_cap(2 * n, cap, name);
  const std::size_t m = 2 * n;
  std::vector<Element> table(m * m);
  // r^a r^b = r^(a+b), r^a s r^b = s r^(b-a), s r^a r^b = s r^(a+b),
  // s r^a s r^b = r^(b-a).
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      const bool xs = x >= n, ys = y >= n;
      const std::size_t a = x % n, b = y % n;
      const std::size_t k = ys ? (b + n - a) % n : (a + b) % n;
      table[x * m + y] = static_cast<Element>((xs != ys ? n : 0) + k);
    }
  return std::make_shared<const GroupTable>(name, m, std::move(table));
}

GroupPtr direct_product(const GroupTable& g, const GroupTable& h, std::size_t cap) {
  auto wrap = [](const std::string& s) {
    return s.find(" x ") != std::string::npos ? "(" + s + ")" : s;
  };
  const std::string name = g.name() + " x " + wrap(h.name());
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  check_order_cap(n, cap, name);
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto ga = static_cast<Element>(a / nh), ha = static_cast<Element>(a % nh);
      const auto gb = static_cast<Element>(b / nh), hb = static_cast<Element>(b % nh);
      table[a * n + b] = static_cast<Element>(std::size_t{g.mul(ga, gb)} * nh + h.mul(ha, hb));
    }
  return std::make_shared<const GroupTable>(name, n, std::move(table));
}

}  // namespace sgg
