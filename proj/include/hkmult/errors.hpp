#pragma once

#include <stdexcept>
#include <string>

namespace hkmult {

/// Caller passed arguments outside an operation's stated domain.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Quotient is not Artinian (some variable lacks a pure-power bound), or an
/// ideal is not primary to the maximal ideal.
class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Semigroup generators do not span a full-rank lattice.
class RankError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (presentation, semigroup or monomial-ideal files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant was violated; indicates a bug, never bad input.
class InternalInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hkmult
