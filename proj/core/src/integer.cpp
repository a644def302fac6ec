#include "bqf/integer.hpp"

#include <cctype>

namespace bqf {

Int parse_int(std::string_view text) {
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
    if (i == text.size()) throw parse_error("expected an integer, got '" + std::string(text) + "'");
    for (std::size_t k = i; k < text.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            throw parse_error("expected an integer, got '" + std::string(text) + "'");
    }
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return Int(digits, 10);
}

std::string to_string(const Int& v) { return v.get_str(10); }

std::string to_string(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str(10);
    return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

namespace {

// Largest s with s*s | n, for n > 0. Trial division up to the cube root of
// what is left; the cofactor then has at most two prime factors, so it
// contributes to the square part only if it is itself a square.
Int square_root_of_square_part(Int n) {
    Int root = 1;
    for (Int k = 2; k * k * k <= n; ++k) {
        while (mpz_divisible_p(n.get_mpz_t(), k.get_mpz_t())) {
            n /= k;
            if (mpz_divisible_p(n.get_mpz_t(), k.get_mpz_t())) {
                n /= k;
                root *= k;
            } else {
                break;
            }
        }
    }
    if (n > 1 && mpz_perfect_square_p(n.get_mpz_t())) {
        Int s;
        mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
        root *= s;
    }
    return root;
}

}  // namespace

Int largest_square_divisor(const Int& bound, const Int& value) {
    if (bound == 0) throw domain_error("largest_square_divisor: bound must be nonzero");
    Int g = abs(bound);
    Int v = abs(value);
    if (v == 0) return g;

    Int d = 1;
    for (;;) {
        Int rest_bound = g / d;
        Int rest_value = v / (d * d);
        Int e = gcd(rest_bound, rest_value);
        if (e == 1) return d;
        if (mpz_divisible_p(rest_value.get_mpz_t(), Int(e * e).get_mpz_t())) {
            d *= e;
            continue;
        }
        Int f = gcd(e, Int(rest_value / e));
        if (f > 1) {
            d *= f;
            continue;
        }
        // Every prime of e now appears in rest_value with exponent at most its
        // exponent in rest_bound, so only the square part of e is missing.
        return d * square_root_of_square_part(e);
    }
}

}  // namespace bqf
