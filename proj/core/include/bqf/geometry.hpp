#pragma once

#include "bqf/forms.hpp"
#include "bqf/integer.hpp"
#include "bqf/modular_group.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace bqf {

/// Exact point z = (p + sqrt(D)) / q of the upper half plane, D < 0, q > 0,
/// with sqrt(D) = i*sqrt(-D).
///
/// The representation is canonical: p and q carry no common factor d with
/// d^2 | D, which makes q as small as possible. Two points are equal iff
/// their triples are equal.
class AlgebraicPoint {
public:
    /// Throws domain_error unless q > 0 and D < 0. Normalizes to the
    /// canonical triple.
    AlgebraicPoint(Int p, Int q, Int d);

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    const Int& d() const { return d_; }

    friend bool operator==(const AlgebraicPoint&, const AlgebraicPoint&) = default;

private:
    Int p_, q_, d_;
};

/// The rational real part p/q.
Rational re(const AlgebraicPoint& z);
/// |z|^2 = (p^2 - D)/q^2.
Rational abs_sq(const AlgebraicPoint& z);
/// Im(z)^2 = -D/q^2.
Rational im_sq(const AlgebraicPoint& z);

/// Canonical-triple equality, cross-checked against the rational invariants.
bool point_equals(const AlgebraicPoint& z1, const AlgebraicPoint& z2);

/// z(F) = (b + sqrt(b^2 - 4ac)) / (2a), the point with
/// F = a (X + zY)(X + conj(z) Y).
///
/// The real part is +b/(2a). The classical convention uses -b/(2a); with
/// the +b choice, base_point(mirror(F)) is the classical base point of F.
AlgebraicPoint base_point(const QuadraticForm& f);

struct PointForm {
    /// Primitive positive definite form with base point w.
    QuadraticForm form;
    /// scale * form == [1/|w|^2, 2 Re(w)/|w|^2, 1].
    Rational scale;
};

PointForm form_from_point(const AlgebraicPoint& w);

/// |Re z| <= 1/2 and |z| >= 1 (closed).
bool in_fundamental_domain_pi(const AlgebraicPoint& z);

/// The reduced-form half of the region: the primitive form of z is reduced
/// and has b >= 0, i.e. 0 <= Re z <= 1/2 and |z| >= 1.
bool in_fundamental_domain_pibar(const AlgebraicPoint& z);

/// Linear fractional action. det +1: z -> (rz + s)/(tz + u).
/// det -1: z -> (r conj(z) + s)/(t conj(z) + u), so R acts as z -> -conj(z).
/// This is a left action: act_on_point(g, act_on_point(h, z)) equals
/// act_on_point(compose(g, h), z).
AlgebraicPoint act_on_point(const GroupElement& g, const AlgebraicPoint& z);

/// The element g' with base_point(act_on_form(g, F)) == act_on_point(g', base_point(F)),
/// namely R g^-1 R. For det +1 g = (r,s;t,u) this is z -> (uz + s)/(tz + r).
GroupElement form_action_on_base_point(const GroupElement& g);

/// "p,q,D"
std::string to_string(const AlgebraicPoint& z);
AlgebraicPoint parse_point(std::string_view text);
std::ostream& operator<<(std::ostream& os, const AlgebraicPoint& z);

}  // namespace bqf
