#pragma once

#include <stdexcept>
#include <string>

namespace orefrac {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Mixing elements of distinct monoid instances, dimension/modulus
/// mismatches, bad generator indices.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Malformed word, monoid selector, or JSON input.
class ParseError : public Error {
public:
  using Error::Error;
};

/// left_cancel(a, c) was asked for b with a*b = c, but c is not a right
/// multiple of a.
class NotLeftMultiple : public Error {
public:
  using Error::Error;
};

/// The abstract contract admits monoids where two elements have no common
/// right multiple. None of the shipped instances raise this.
class NoCommonMultiple : public Error {
public:
  using Error::Error;
};

/// A brute-force enumeration could not be completed within its configured
/// word-length (or element-count) bound. Oracles fail loudly instead of
/// silently truncating.
class SearchBoundExceeded : public Error {
public:
  using Error::Error;
};

/// Subword reversing exceeded its step cap. Cannot occur for valid braid
/// input; guards future instances.
class StepBoundExceeded : public Error {
public:
  using Error::Error;
};

/// A pair-sequence query needs more pairs than were built.
class InsufficientPairs : public Error {
public:
  using Error::Error;
};

/// An internal consistency check failed; continuing would produce wrong
/// mathematics. The CLI maps this to exit code 3.
class InternalInvariantViolation : public Error {
public:
  using Error::Error;
};

}  // namespace orefrac
