#include "sgg/bounds.hpp"

#include <string>

#include "sgg/error.hpp"
#include "sgg/number_theory.hpp"

namespace sgg {

namespace {

BigInt big_pow(std::uint64_t base, std::int64_t e) {
  BigInt r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= base;
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

BigInt qbin(std::int64_t t, std::int64_t k, std::uint64_t base, bool zero_outside_range) {
  if (base < 2) fail(ErrorKind::InvalidArgument, "Gaussian binomial base must be at least 2");
  if (k < 0 || k > t) {
    if (zero_outside_range) return 0;
    fail(ErrorKind::InvalidArgument,
         "qbin needs 0 <= k <= t, got t=" + std::to_string(t) + " k=" + std::to_string(k));
  }
  BigInt num = 1, den = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    num *= big_pow(base, t - k + i) - 1;
    den *= big_pow(base, i) - 1;
  }
  if (num % den != 0) fail(ErrorKind::Internal, "Gaussian binomial is not integral");
  return num / den;
}

Rational euler_formula(const BigInt& vertices, const BigInt& edges) {
  return Rational(edges, 4) - Rational(vertices, 2) + 1;
}

Rational ciclo_bound(unsigned t) {
  if (t < 1) fail(ErrorKind::InvalidArgument, "ciclo_bound needs t >= 1");
  return Rational(big_pow(2, t - 1)) * (Rational(t, 8) - 1) + 1;
}

Rational ciclo_exact_euler(unsigned t) {
  if (t < 1) fail(ErrorKind::InvalidArgument, "ciclo_exact_euler needs t >= 1");
  Rational sum = 0;
  for (unsigned i = 0; i + 1 <= t; ++i) sum += Rational(binomial(t, i) * (t - i), 4);
  return sum - Rational(big_pow(2, t), 2) + 1;
}

LayerCounts rango_counts(std::uint64_t p, unsigned t) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (t < 2) fail(ErrorKind::InvalidArgument, "layer counts need t >= 2");
  const BigInt planes = qbin(t, 2, p), lines = qbin(t, 1, p);
  return {planes + lines, planes * (p * p - 1) / (p - 1)};
}

Rational rango_bound(std::uint64_t p, unsigned t) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (t < 2) fail(ErrorKind::InvalidArgument, "rango_bound needs t >= 2");
  const Rational ratio(BigInt(2 * (p * p - 1)), big_pow(p, t - 1) - 1);
  return Rational(qbin(t, 2, p), 4) * (Rational(static_cast<std::int64_t>(p)) - 1 - ratio);
}

Rational rango_euler(std::uint64_t p, unsigned t) {
  const auto c = rango_counts(p, t);
  return euler_formula(c.vertices, c.edges);
}

PslParameters select_pls_parameters(std::uint64_t q) {
  if (!as_prime_power(q)) fail(ErrorKind::NotAPrimePower, std::to_string(q) + " is not a prime power");
  if (q % 2 == 0 || q < 4 || q == 5 || q == 7 || q == 9 || q == 17)
    fail(ErrorKind::ExcludedQ, "q = " + std::to_string(q) + " is outside the dihedral family's range");
  for (std::uint64_t n : {(q - 1) / 2, (q + 1) / 2}) {
    const auto f = factorize(n);
    if (f.size() < 2) continue;
    const std::uint64_t a = ipow(f.front().prime, f.front().exponent);
    return {q, n, a, n / a};
  }
  fail(ErrorKind::NoValidN, "neither (q-1)/2 nor (q+1)/2 has two prime divisors for q = " +
                                std::to_string(q));
}

PlsCounts pls_counts(std::uint64_t n, std::uint64_t a, std::uint64_t b) {
  return {2 + n + n / a + n / b, 3 * n + n / a + n / b};
}

Rational pls_raw(std::uint64_t n, std::uint64_t a, std::uint64_t b) {
  const auto N = static_cast<std::int64_t>(n);
  return Rational(N, 4) * (Rational(1) - Rational(1, static_cast<std::int64_t>(a)) -
                           Rational(1, static_cast<std::int64_t>(b)));
}

PlsBound pls_bound(std::uint64_t q) {
  const auto params = select_pls_parameters(q);
  return {params, pls_raw(params.n, params.a, params.b),
          Rational(static_cast<std::int64_t>(params.n), 24)};
}

}  // namespace sgg
