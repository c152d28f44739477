#pragma once

#include <cstdint>
#include <vector>

namespace sgg {

/// GF(p^f) with elements encoded as integers 0..q-1: the base-p digit i of
/// an element is its coefficient of x^i. Zero is 0 and one is 1.
class FiniteField {
 public:
  using Element = std::uint32_t;

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return f_; }
  std::uint32_t order() const noexcept { return q_; }

  /// Monic, f+1 coefficients, lowest degree first.
  const std::vector<std::uint32_t>& reduction_polynomial() const noexcept {
    return modulus_;
  }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }

  Element add(Element a, Element b) const noexcept;
  Element neg(Element a) const noexcept;
  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
  Element mul(Element a, Element b) const noexcept;
  /// Throws InvalidArgument for zero.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const noexcept;

  /// A fixed generator of the cyclic group of nonzero elements: the smallest
  /// encoded element of multiplicative order q-1.
  Element primitive_element() const noexcept { return generator_; }
  std::uint32_t multiplicative_order(Element a) const;

  friend FiniteField make_field(std::uint32_t q);

 private:
  FiniteField() = default;

  std::uint32_t p_ = 0;
  unsigned f_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Element generator_ = 0;
  std::vector<Element> exp_;          // exp_[k] = g^k, k in [0, q-1)
  std::vector<std::uint32_t> log_;    // log_[a] for a != 0
  std::vector<Element> inverse_;
};

/// q must be a prime power with q <= 2^16.
FiniteField make_field(std::uint32_t q);

}  // namespace sgg
