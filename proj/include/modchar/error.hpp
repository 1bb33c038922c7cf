#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modchar {

struct ZeroDivisionError : std::domain_error {
  using std::domain_error::domain_error;
};

// Operands live in different fields or (p, r) contexts.
struct ContextMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A monomial failed the (q-1) | weight test where an invariant class was required.
struct NotInvariant : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed external input; `field` locates the offending entry, e.g. generators[1][0][2].
struct InputError : std::runtime_error {
  InputError(const std::string& field, const std::string& what)
      : std::runtime_error(field.empty() ? what : field + ": " + what), field(field) {}
  std::string field;
};

}  // namespace modchar
