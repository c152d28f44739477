#include "sgg/error.hpp"

namespace sgg {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotAPrimePower: return "NotAPrimePower";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::Timeout: return "Timeout";
    case ErrorKind::PrimeDoesNotDivideOrder: return "PrimeDoesNotDivideOrder";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotTriangleFree: return "NotTriangleFree";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NoSylowBasisFound: return "NoSylowBasisFound";
    case ErrorKind::ExcludedQ: return "ExcludedQ";
    case ErrorKind::NoValidN: return "NoValidN";
    case ErrorKind::FamilyNotFound: return "FamilyNotFound";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace sgg
