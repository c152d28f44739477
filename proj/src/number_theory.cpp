#include "sgg/number_theory.hpp"

namespace sgg {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.push_back({d, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::optional<PrimePower> as_prime_power(std::uint64_t n) {
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

std::vector<std::uint64_t> distinct_prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& pp : factorize(n)) out.push_back(pp.prime);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t ipow(std::uint64_t base, unsigned exponent) noexcept {
  std::uint64_t r = 1;
  while (exponent--) r *= base;
  return r;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) noexcept {
  std::uint64_t r = 1;
  if (p < 2 || n == 0) return r;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

}  // namespace sgg
