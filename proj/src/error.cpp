#include "stabletype/error.hpp"

namespace stabletype {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::GeneratingSetTooLarge: return "GeneratingSetTooLarge";
    case ErrorCode::ActionInconsistent: return "ActionInconsistent";
    case ErrorCode::UnknownFamilyLabel: return "UnknownFamilyLabel";
    case ErrorCode::OutMismatch: return "OutMismatch";
    case ErrorCode::NotNormalSylow: return "NotNormalSylow";
    case ErrorCode::NotReducedCyclicModP: return "NotReducedCyclicModP";
    case ErrorCode::PosetInconsistent: return "PosetInconsistent";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadPrime: return "BadPrime";
  }
  return "Unknown";
}

}  // namespace stabletype
