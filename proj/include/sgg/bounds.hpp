#pragma once

#include <cstdint>

#include "sgg/rational.hpp"

namespace sgg {

/// Gaussian binomial [t choose k]_base. Out-of-range k throws
/// InvalidArgument unless zero_outside_range is set, in which case it is 0.
BigInt qbin(std::int64_t t, std::int64_t k, std::uint64_t base, bool zero_outside_range = false);

/// 2^(t-1) (t/8 - 1) + 1.
Rational ciclo_bound(unsigned t);

/// Euler bound of the t-cube, evaluated from the edge-count sum
/// sum_{0<=i<=t-1} C(t,i)(t-i)/4 - 2^t/2 + 1.
Rational ciclo_exact_euler(unsigned t);

struct LayerCounts {
  BigInt vertices;
  BigInt edges;
};

/// Vertex and edge counts of the order-p / order-p^2 layer graph of A(p,t).
LayerCounts rango_counts(std::uint64_t p, unsigned t);

/// (1/4) [t 2]_p (p - 1 - 2(p^2-1)/(p^(t-1)-1)); t >= 2.
Rational rango_bound(std::uint64_t p, unsigned t);

/// The same bound in Euler form |E|/4 - |V|/2 + 1 = rango_bound + 1.
Rational rango_euler(std::uint64_t p, unsigned t);

/// n in {(q-1)/2, (q+1)/2} with two distinct prime divisors (smaller if both)
/// and n = a*b with a the full power of the smallest prime dividing n.
struct PslParameters {
  std::uint64_t q;
  std::uint64_t n;
  std::uint64_t a;
  std::uint64_t b;
};

/// Throws NotAPrimePower, or ExcludedQ for q even, q < 4 or
/// q in {5, 7, 9, 17}.
PslParameters select_pls_parameters(std::uint64_t q);

struct PlsCounts {
  std::uint64_t vertices;  // 2 + n + n/a + n/b
  std::uint64_t edges;     // 3n + n/a + n/b
};
PlsCounts pls_counts(std::uint64_t n, std::uint64_t a, std::uint64_t b);

/// (n/4)(1 - 1/a - 1/b).
Rational pls_raw(std::uint64_t n, std::uint64_t a, std::uint64_t b);

struct PlsBound {
  PslParameters params;
  Rational raw;          // (n/4)(1 - 1/a - 1/b)
  Rational floor_bound;  // n/24
};
PlsBound pls_bound(std::uint64_t q);

/// |E|/4 - |V|/2 + 1.
Rational euler_formula(const BigInt& vertices, const BigInt& edges);

}  // namespace sgg
