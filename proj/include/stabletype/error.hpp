#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stabletype {

enum class ErrorCode {
  CapExceeded,
  InvalidPermutation,
  BadParameter,
  NotNormal,
  GeneratingSetTooLarge,
  ActionInconsistent,
  UnknownFamilyLabel,
  OutMismatch,
  NotNormalSylow,
  NotReducedCyclicModP,
  PosetInconsistent,
  ParseError,
  BadPrime,
};

const char* to_string(ErrorCode code);

/// Base of every library error. `code()` is the machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

namespace detail {
template <ErrorCode C>
class TypedError : public Error {
 public:
  explicit TypedError(const std::string& what) : Error(C, what) {}
};
}  // namespace detail

using CapExceeded = detail::TypedError<ErrorCode::CapExceeded>;
using InvalidPermutation = detail::TypedError<ErrorCode::InvalidPermutation>;
using BadParameter = detail::TypedError<ErrorCode::BadParameter>;
using NotNormal = detail::TypedError<ErrorCode::NotNormal>;
using GeneratingSetTooLarge = detail::TypedError<ErrorCode::GeneratingSetTooLarge>;
using ActionInconsistent = detail::TypedError<ErrorCode::ActionInconsistent>;
using UnknownFamilyLabel = detail::TypedError<ErrorCode::UnknownFamilyLabel>;
using OutMismatch = detail::TypedError<ErrorCode::OutMismatch>;
using NotNormalSylow = detail::TypedError<ErrorCode::NotNormalSylow>;
using NotReducedCyclicModP = detail::TypedError<ErrorCode::NotReducedCyclicModP>;
using PosetInconsistent = detail::TypedError<ErrorCode::PosetInconsistent>;
using BadPrime = detail::TypedError<ErrorCode::BadPrime>;

/// Descriptor syntax error; `position()` is a 0-based offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorCode::ParseError, what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace stabletype
