#include "bqf/geometry.hpp"

#include "text_util.hpp"

#include <ostream>

namespace bqf {

AlgebraicPoint::AlgebraicPoint(Int p, Int q, Int d) : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
    if (q_ <= 0) throw domain_error("point denominator q must be positive");
    if (d_ >= 0) throw domain_error("point radicand D must be negative (upper half plane)");
    Int g = gcd(p_, q_);
    if (g == 1) return;
    Int k = largest_square_divisor(g, d_);
    if (k == 1) return;
    p_ /= k;
    q_ /= k;
    d_ /= k * k;
}

Rational re(const AlgebraicPoint& z) {
    Rational x(z.p(), z.q());
    x.canonicalize();
    return x;
}

Rational abs_sq(const AlgebraicPoint& z) {
    Rational x(z.p() * z.p() - z.d(), z.q() * z.q());
    x.canonicalize();
    return x;
}

Rational im_sq(const AlgebraicPoint& z) {
    Rational x(-z.d(), z.q() * z.q());
    x.canonicalize();
    return x;
}

bool point_equals(const AlgebraicPoint& z1, const AlgebraicPoint& z2) {
    bool same_triple = z1 == z2;
    bool same_invariants = re(z1) == re(z2) && im_sq(z1) == im_sq(z2);
    if (same_triple != same_invariants) throw std::logic_error("point normalization is not canonical");
    return same_triple;
}

AlgebraicPoint base_point(const QuadraticForm& f) {
    require_positive_definite(f, "base point defined only for positive definite forms");
    return {f.b, 2 * f.a, discriminant(f).value};
}

PointForm form_from_point(const AlgebraicPoint& w) {
    const Int& p = w.p();
    const Int& q = w.q();
    Int norm_num = p * p - w.d();  // q^2 |w|^2
    QuadraticForm scaled{q * q, 2 * p * q, norm_num};
    Int g = content(scaled);
    QuadraticForm form{scaled.a / g, scaled.b / g, scaled.c / g};
    Rational scale(g, norm_num);
    scale.canonicalize();
    return {std::move(form), std::move(scale)};
}

bool in_fundamental_domain_pi(const AlgebraicPoint& z) {
    return 2 * abs(z.p()) <= z.q() && z.p() * z.p() - z.d() >= z.q() * z.q();
}

bool in_fundamental_domain_pibar(const AlgebraicPoint& z) {
    QuadraticForm g = form_from_point(z).form;
    return is_reduced(g) && g.b >= 0;
}

AlgebraicPoint act_on_point(const GroupElement& g, const AlgebraicPoint& z) {
    // Write w = (p + e sqrt(D))/q with e = det(g), so w = z for det +1 and
    // w = conj(z) for det -1. Multiplying through by the conjugate of the
    // denominator, the sqrt(D) coefficient is e * q * det(g) = q in both cases.
    const Int &p = z.p(), &q = z.q(), &d = z.d();
    Int num = g.r() * p + g.s() * q;
    Int den = g.t() * p + g.u() * q;
    return {num * den - g.r() * g.t() * d, den * den - g.t() * g.t() * d, q * q * d};
}

GroupElement form_action_on_base_point(const GroupElement& g) {
    const GroupElement mirror = generator_element(Letter::R);
    return compose(compose(mirror, inverse(g)), mirror);
}

std::string to_string(const AlgebraicPoint& z) {
    return to_string(z.p()) + "," + to_string(z.q()) + "," + to_string(z.d());
}

AlgebraicPoint parse_point(std::string_view text) {
    auto parts = detail::split(text, ',');
    if (parts.size() != 3) throw parse_error("expected a point 'p,q,D', got '" + std::string(text) + "'");
    return {parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2])};
}

std::ostream& operator<<(std::ostream& os, const AlgebraicPoint& z) { return os << to_string(z); }

}  // namespace bqf
