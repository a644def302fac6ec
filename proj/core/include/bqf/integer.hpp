#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace bqf {

/// Arbitrary precision integer used for every coefficient in the library.
using Int = mpz_class;
/// Exact rational, always kept canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// Raised when an operation's mathematical precondition fails
/// (non positive definite form, zero form, composite modulus, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised on malformed text input (forms, points, words, elements).
class parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses an optionally signed base-10 integer; whitespace is not accepted.
Int parse_int(std::string_view text);

std::string to_string(const Int& v);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& v);

/// Largest d > 0 with d | bound and d*d | value. `bound` must be nonzero.
/// Only the gcd of the two is ever factored, and only past cheap gcd fast paths.
Int largest_square_divisor(const Int& bound, const Int& value);

inline std::size_t bit_length(const Int& v) {
    return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

}  // namespace bqf
