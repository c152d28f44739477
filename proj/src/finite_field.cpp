#include "sgg/finite_field.hpp"

#include <string>

#include "sgg/error.hpp"
#include "sgg/number_theory.hpp"

namespace sgg {
namespace {

using Poly = std::vector<std::uint32_t>;  // lowest degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inverse_mod_prime(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, base = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(r);
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inverse_mod_prime(m.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = c * m[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& g, std::uint32_t p) {
  const unsigned f = static_cast<unsigned>(g.size() - 1);
  for (unsigned d = 1; d <= f / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly div(d + 1);
      std::uint64_t c = code;
      for (unsigned i = 0; i < d; ++i) {
        div[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      div[d] = 1;
      if (poly_mod(g, div, p).empty()) return false;
    }
  }
  return true;
}

// Least monic irreducible of degree f, comparing coefficient tuples with the
// constant term most significant.
Poly least_irreducible(std::uint32_t p, unsigned f) {
  const std::uint64_t count = ipow(p, f);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly g(f + 1);
    std::uint64_t c = idx;
    for (unsigned i = f; i-- > 0;) {
      g[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    g[f] = 1;
    if (is_irreducible(g, p)) return g;
  }
  fail(ErrorKind::Internal, "no irreducible polynomial found");
}

}  // namespace

FiniteField::Element FiniteField::add(Element a, Element b) const noexcept {
  if (f_ == 1) return (a + b) % p_;
  Element r = 0, scale = 1;
  for (unsigned i = 0; i < f_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Element FiniteField::neg(Element a) const noexcept {
  if (f_ == 1) return (p_ - a % p_) % p_;
  Element r = 0, scale = 1;
  for (unsigned i = 0; i < f_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Element FiniteField::mul(Element a, Element b) const noexcept {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

FiniteField::Element FiniteField::inv(Element a) const {
  if (a == 0 || a >= q_) fail(ErrorKind::InvalidArgument, "zero has no inverse");
  return inverse_[a];
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(log_[a] * (e % (q_ - 1))) % (q_ - 1)];
}

std::uint32_t FiniteField::multiplicative_order(Element a) const {
  if (a == 0 || a >= q_) fail(ErrorKind::InvalidArgument, "order of zero");
  std::uint32_t k = 1;
  for (Element x = a; x != 1; x = mul(x, a)) ++k;
  return k;
}

FiniteField make_field(std::uint32_t q) {
  if (q > (1u << 16))
    fail(ErrorKind::InvalidArgument, "field order " + std::to_string(q) + " exceeds 2^16");
  const auto pp = as_prime_power(q);
  if (!pp) fail(ErrorKind::NotAPrimePower, std::to_string(q) + " is not a prime power");
  using Element = FiniteField::Element;

  FiniteField F;
  F.p_ = static_cast<std::uint32_t>(pp->prime);
  F.f_ = pp->exponent;
  F.q_ = q;
  F.modulus_ = F.f_ == 1 ? Poly{0, 1} : least_irreducible(F.p_, F.f_);

  const std::uint32_t p = F.p_;
  const unsigned f = F.f_;
  auto to_poly = [&](Element a) {
    Poly r(f);
    for (unsigned i = 0; i < f; ++i) {
      r[i] = a % p;
      a /= p;
    }
    return r;
  };
  auto from_poly = [&](const Poly& r) {
    Element a = 0;
    for (std::size_t i = r.size(); i-- > 0;) a = a * p + r[i];
    return a;
  };
  auto slow_mul = [&](Element a, Element b) {
    const Poly x = to_poly(a), y = to_poly(b);
    Poly prod(2 * f - 1, 0);
    for (unsigned i = 0; i < f; ++i)
      for (unsigned j = 0; j < f; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % p);
    return from_poly(poly_mod(prod, F.modulus_, p));
  };
  auto slow_pow = [&](Element a, std::uint64_t e) {
    Element r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };

  const std::uint32_t m = q - 1;
  const auto primes = distinct_prime_divisors(m);
  F.generator_ = 0;
  for (Element a = 1; a < q && F.generator_ == 0; ++a) {
    bool primitive = true;
    for (auto r : primes)
      if (slow_pow(a, m / r) == 1) {
        primitive = false;
        break;
      }
    if (primitive) F.generator_ = a;
  }
  if (F.generator_ == 0) fail(ErrorKind::Internal, "no primitive element");

  F.exp_.resize(m == 0 ? 1 : m);
  F.log_.assign(q, 0);
  Element x = 1;
  for (std::uint32_t k = 0; k < m; ++k) {
    F.exp_[k] = x;
    F.log_[x] = k;
    x = slow_mul(x, F.generator_);
  }
  if (m == 0) F.exp_[0] = 1;

  F.inverse_.assign(q, 0);
  for (Element a = 1; a < q; ++a) {
    F.inverse_[a] = F.exp_[(m - F.log_[a]) % m];
    if (slow_mul(a, F.inverse_[a]) != 1) fail(ErrorKind::Internal, "inverse table check failed");
  }
  return F;
}

}  // namespace sgg
