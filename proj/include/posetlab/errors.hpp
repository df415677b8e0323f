#pragma once

#include <stdexcept>
#include <string>

namespace posetlab {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// core
struct CycleDetected : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct PatternTooLarge : Error {
  using Error::Error;
};
struct ArityMismatch : Error {
  using Error::Error;
};
struct EmptyBlock : Error {
  using Error::Error;
};
struct SizeMismatch : Error {
  using Error::Error;
};
struct SearchBoundExceeded : Error {
  using Error::Error;
};

// recognition
struct NotIntervalOrder : Error {
  using Error::Error;
};
struct NotSemiorder : Error {
  using Error::Error;
};

// ordinal / input parsing
struct ParseError : Error {
  using Error::Error;
};

// structure
struct BoundaryTooLarge : Error {
  using Error::Error;
};
struct LevelInfinite : Error {
  using Error::Error;
};
struct TooLargeForExhaustive : Error {
  using Error::Error;
};
struct TowerTooTall : Error {
  using Error::Error;
};
struct TooLarge : Error {
  using Error::Error;
};

// omega
struct MalformedPresentation : Error {
  using Error::Error;
};
struct NotStrictOrder : Error {
  using Error::Error;
};

// symdyn
struct NotProlongable : Error {
  using Error::Error;
};
struct PrefixTooShort : Error {
  using Error::Error;
};
struct NotFactorClosed : Error {
  using Error::Error;
};
struct MarginTooSmall : Error {
  using Error::Error;
};

}  // namespace posetlab
