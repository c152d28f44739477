#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgg {

enum class ErrorKind {
  InvalidArgument,
  NotAPrimePower,
  NotPrime,
  OrderCapExceeded,
  Timeout,
  PrimeDoesNotDivideOrder,
  TooLarge,
  NotTriangleFree,
  Disconnected,
  NoSylowBasisFound,
  ExcludedQ,
  NoValidN,
  FamilyNotFound,
  ParseError,
  Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for failures caused by a configured resource limit.
  bool is_resource_limit() const noexcept {
    return kind_ == ErrorKind::OrderCapExceeded || kind_ == ErrorKind::Timeout ||
           kind_ == ErrorKind::TooLarge;
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace sgg
