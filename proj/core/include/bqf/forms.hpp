#pragma once

#include "bqf/integer.hpp"

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bqf {

/// Integral binary quadratic form aX^2 + bXY + cY^2, written [a,b,c].
///
/// Any triple is representable, including the zero form; operations that
/// need more (content, base point, reduction) validate their own input.
struct QuadraticForm {
    Int a;
    Int b;
    Int c;

    QuadraticForm() = default;
    QuadraticForm(Int a_, Int b_, Int c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}

    friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
    /// Lexicographic on (a, b, c).
    friend std::strong_ordering operator<=>(const QuadraticForm& x, const QuadraticForm& y);
};

/// b^2 - 4ac. Always congruent to 0 or 1 mod 4.
struct Discriminant {
    Int value;

    bool admissible() const;
    friend bool operator==(const Discriminant&, const Discriminant&) = default;
};

Discriminant discriminant(const QuadraticForm& f);

Int evaluate(const QuadraticForm& f, const Int& x, const Int& y);

/// gcd(a,b,c) > 0. Throws domain_error for the zero form.
Int content(const QuadraticForm& f);
bool is_primitive(const QuadraticForm& f);

bool is_positive_definite(const QuadraticForm& f);

/// Positive definite with |b| <= a <= c.
bool is_almost_reduced(const QuadraticForm& f);

/// Almost reduced, plus the boundary rules: |b| = a forces b = a, and
/// a = c forces b >= 0. Exactly one such form per proper class.
bool is_reduced(const QuadraticForm& f);

/// [a, -b, c].
QuadraticForm mirror(const QuadraticForm& f);

/// "a,b,c"
std::string to_string(const QuadraticForm& f);
QuadraticForm parse_form(std::string_view text);
std::ostream& operator<<(std::ostream& os, const QuadraticForm& f);

// Throws domain_error with `what` unless f is positive definite.
void require_positive_definite(const QuadraticForm& f, const char* what);

}  // namespace bqf
