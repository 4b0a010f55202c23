#pragma once

#include <stdexcept>

namespace casg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct AlphabetError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct EnumerationError : Error { using Error::Error; };
struct IsoError : Error { using Error::Error; };
struct FoldError : Error { using Error::Error; };

}  // namespace casg
