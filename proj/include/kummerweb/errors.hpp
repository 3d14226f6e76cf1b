#ifndef KUMMERWEB_ERRORS_HPP_
#define KUMMERWEB_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kummerweb {

// Base class for every error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed expression text. `position` is a 0-based byte offset into the input.
struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// A rational function was evaluated at a zero of its denominator.
// `where` renders the vanishing denominator.
struct PoleError : Error {
  PoleError(const std::string& what, std::string where)
      : Error(what + ": " + where), where(std::move(where)) {}
  std::string where;
};

// Argument within epsilon of a deleted branch cut.
struct OnCutError : Error {
  using Error::Error;
};

// Argument at (or too close to) 0, 1 or infinity for a single-valued function.
struct SingularPointError : Error {
  using Error::Error;
};

// Input outside an operation's stated domain.
struct DomainError : Error {
  using Error::Error;
};

// A 3-web triple whose pairwise wedge vanishes identically.
struct DegenerateTripleError : Error {
  using Error::Error;
};

// A formal-sum construction hit a vanishing denominator.
struct DegenerateArgumentError : Error {
  using Error::Error;
};

}  // namespace kummerweb

#endif  // KUMMERWEB_ERRORS_HPP_
