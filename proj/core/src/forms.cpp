#include "bqf/forms.hpp"

#include "text_util.hpp"

#include <ostream>

namespace bqf {

namespace {

std::strong_ordering cmp_int(const Int& x, const Int& y) {
    int r = cmp(x, y);
    if (r < 0) return std::strong_ordering::less;
    if (r > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering operator<=>(const QuadraticForm& x, const QuadraticForm& y) {
    if (auto r = cmp_int(x.a, y.a); r != 0) return r;
    if (auto r = cmp_int(x.b, y.b); r != 0) return r;
    return cmp_int(x.c, y.c);
}

bool Discriminant::admissible() const {
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), 4);
    return r == 0 || r == 1;
}

Discriminant discriminant(const QuadraticForm& f) { return {f.b * f.b - 4 * f.a * f.c}; }

Int evaluate(const QuadraticForm& f, const Int& x, const Int& y) {
    return f.a * x * x + f.b * x * y + f.c * y * y;
}

Int content(const QuadraticForm& f) {
    if (f.a == 0 && f.b == 0 && f.c == 0) throw domain_error("zero form has no content");
    Int g = gcd(f.a, f.b);
    return gcd(g, f.c);
}

bool is_primitive(const QuadraticForm& f) { return content(f) == 1; }

bool is_positive_definite(const QuadraticForm& f) {
    return f.a > 0 && f.c > 0 && discriminant(f).value < 0;
}

bool is_almost_reduced(const QuadraticForm& f) {
    return is_positive_definite(f) && abs(f.b) <= f.a && f.a <= f.c;
}

bool is_reduced(const QuadraticForm& f) {
    if (!is_almost_reduced(f)) return false;
    if (abs(f.b) == f.a && f.b != f.a) return false;
    if (f.a == f.c && f.b < 0) return false;
    return true;
}

QuadraticForm mirror(const QuadraticForm& f) { return {f.a, -f.b, f.c}; }

std::string to_string(const QuadraticForm& f) {
    return to_string(f.a) + "," + to_string(f.b) + "," + to_string(f.c);
}

QuadraticForm parse_form(std::string_view text) {
    auto parts = detail::split(text, ',');
    if (parts.size() != 3) throw parse_error("expected a form 'a,b,c', got '" + std::string(text) + "'");
    return {parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2])};
}

std::ostream& operator<<(std::ostream& os, const QuadraticForm& f) { return os << to_string(f); }

void require_positive_definite(const QuadraticForm& f, const char* what) {
    if (!is_positive_definite(f)) throw domain_error(what);
}

}  // namespace bqf
