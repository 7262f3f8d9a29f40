#ifndef HOLOSPEC_ERRORS_HPP
#define HOLOSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace holospec {

// Common base so callers can catch everything from this library at once.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct SingularMatrix : Error {
  using Error::Error;
};
struct NonUnitDeterminant : Error {
  using Error::Error;
};
struct NotLoxodromic : Error {
  using Error::Error;
};
struct DegenerateLength : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct InvalidDescriptor : Error {
  using Error::Error;
};
struct UnsupportedKind : Error {
  using Error::Error;
};
struct ExplosionLimit : Error {
  using Error::Error;
};
struct EvenKind : Error {
  using Error::Error;
};
struct OddKind : Error {
  using Error::Error;
};
struct EmptySample : Error {
  using Error::Error;
};
struct IncompleteSpectrum : Error {
  using Error::Error;
};
struct InvariantViolation : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

}  // namespace holospec

#endif
