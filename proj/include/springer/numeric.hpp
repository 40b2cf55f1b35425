#pragma once

// Exact scalar types and the error types shared by every module.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace springer {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Bad input: unsupported type/rank, malformed coordinates, violated
/// preconditions. Maps to the CLI's input-error status.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical invariant that must hold did not. Maps to the CLI's
/// invariant-violation status.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

Rational make_rational(long num, long den = 1);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "p/q" and "-p/q" (surrounding blanks ignored).
Rational parse_rational(std::string_view text);

/// Comma separated list of rationals, e.g. "1/2,0,1/2".
RatVector parse_rational_list(std::string_view text);

Integer floor(const Rational& q);
/// q - floor(q), always in [0,1).
Rational frac(const Rational& q);
bool is_integer(const Rational& q);

/// Nonnegative gcd; gcd(0,0) = 0.
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

std::size_t hash_value(const Rational& q);

} // namespace springer
