// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eulertower {

/// Malformed or out-of-contract input supplied by a caller.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Text input that failed to parse. `location` is a 1-based line number or
/// a 0-based character offset depending on the format.
class ParseError : public InputError {
public:
  enum class Where { Line, Offset };

  ParseError(const std::string& message, Where where, std::size_t location)
      : InputError(render(message, where, location)), where_(where),
        location_(location) {}

  Where where() const { return where_; }
  std::size_t location() const { return location_; }

private:
  static std::string render(const std::string& message, Where where,
                            std::size_t location) {
    return (where == Where::Line ? "line " : "position ") +
           std::to_string(location) + ": " + message;
  }

  Where where_;
  std::size_t location_;
};

/// An identity the library relies on failed on data it constructed itself.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline void require(bool condition, const char* what) {
  if (!condition) throw InvariantViolation(what);
}

} // namespace eulertower
