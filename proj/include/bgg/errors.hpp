#ifndef BGG_ERRORS_HPP
#define BGG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bgg {

/// Bad user input: malformed specs, unsupported ranks, shape mismatches.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A requested module or coefficient cannot be realized (non-dominant
/// weight, dimension guard, non-relative coefficient).
struct RepresentabilityError : std::runtime_error {
  explicit RepresentabilityError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A mathematical invariant the library guarantees failed to hold.
/// Signals a bug, not bad input.
struct InternalError : std::runtime_error {
  explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace bgg

#endif
