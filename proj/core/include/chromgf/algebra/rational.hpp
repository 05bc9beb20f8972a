#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace chromgf {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator (0 is 0/1).
using Rat = mpq_class;

/// Raised by exact operations whose precondition fails at run time
/// ("inexact division", "singular system", ...).
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical decimal form: "n" for integers, "n/d" otherwise.
std::string to_string(const Rat& value);

/// Parses "n" or "n/d" (optional leading '-'); throws std::invalid_argument.
Rat parse_rat(std::string_view text);

inline bool is_integer(const Rat& value) { return value.get_den() == 1; }

}  // namespace chromgf
