#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sgg {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

bool is_prime(std::uint64_t n) noexcept;

/// Prime factorization in ascending prime order; empty for n <= 1.
std::vector<PrimePower> factorize(std::uint64_t n);

/// Returns (p, f) with n = p^f, or nullopt when n is not a prime power.
std::optional<PrimePower> as_prime_power(std::uint64_t n);

std::vector<std::uint64_t> distinct_prime_divisors(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Exact power; the caller guarantees no overflow.
std::uint64_t ipow(std::uint64_t base, unsigned exponent) noexcept;

/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p) noexcept;

}  // namespace sgg
