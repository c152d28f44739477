#include "sgg/rational.hpp"

#include "sgg/error.hpp"

namespace sgg {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorKind::InvalidArgument, "zero denominator");
  // cpp_rational rejects a negative denominator, so move the sign up
  value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) fail(ErrorKind::InvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

BigInt Rational::floor() const {
  const BigInt n = numerator(), d = denominator();
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) --q;
  return q;
}

BigInt Rational::ceil() const {
  const BigInt n = numerator(), d = denominator();
  BigInt q = n / d;
  if (n > 0 && q * d != n) ++q;
  return q;
}

std::string Rational::str() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

}  // namespace sgg
