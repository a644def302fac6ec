#pragma once

#include "bqf/forms.hpp"
#include "bqf/geometry.hpp"
#include "bqf/modular_group.hpp"

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bqf {

/// alpha = (a + sqrt(-n)) / c with n > 0, c != 0 and c | a^2 + n.
///
/// Stored with c > 0. A triple with c < 0 is identified with (-a, -c, n):
/// both denote the same element once the branch of sqrt(-n) is chosen so
/// that alpha lies in the upper half plane.
class QuadFieldElement {
public:
    const Int& a() const { return a_; }
    const Int& c() const { return c_; }
    const Int& n() const { return n_; }
    /// (a^2 + n) / c
    const Int& b() const { return b_; }

    /// The same number as an upper-half-plane point.
    AlgebraicPoint point() const;

    friend bool operator==(const QuadFieldElement&, const QuadFieldElement&) = default;
    /// Ordered by (n, c, a); used for sorted orbit listings.
    friend std::strong_ordering operator<=>(const QuadFieldElement& x, const QuadFieldElement& y);

private:
    friend std::optional<QuadFieldElement> membership(const Int& a, const Int& c, const Int& n);
    QuadFieldElement(Int a, Int c, Int n, Int b)
        : a_(std::move(a)), c_(std::move(c)), n_(std::move(n)), b_(std::move(b)) {}

    Int a_, c_, n_, b_;
};

/// The element (a + sqrt(-n))/c if c != 0 and c | a^2 + n, else nullopt.
/// Throws domain_error for n <= 0.
std::optional<QuadFieldElement> membership(const Int& a, const Int& c, const Int& n);

/// Like membership, but throws domain_error when the triple is not a member.
QuadFieldElement make_element(const Int& a, const Int& c, const Int& n);

/// Additionally requires gcd(a, b, c) = 1.
bool is_primitive_element(const QuadFieldElement& alpha);

/// alpha * conj(alpha) = (a^2 + n) / c^2 = b / c.
Rational norm(const QuadFieldElement& alpha);

/// [c, -2a, b], discriminant -4n. Content is kept; any other form relating
/// to alpha the same way is a rational multiple of this one.
QuadraticForm element_form(const QuadFieldElement& alpha);

/// (r alpha + s)/(t alpha + u) for det +1 elements; stays inside the set
/// with the same n. det -1 throws domain_error.
QuadFieldElement act(const GroupElement& g, const QuadFieldElement& alpha);

struct OrbitOptions {
    std::size_t max_depth = 12;
};

/// Every element reachable from alpha by words over {T, U, V} of length at
/// most depth, sorted. depth > options.max_depth throws domain_error.
std::vector<QuadFieldElement> orbit_explore(const QuadFieldElement& alpha, std::size_t depth,
                                            const OrbitOptions& options = {});

struct OrbitFormReport {
    /// beta was found by the bounded search from alpha.
    bool reachable = false;
    /// element_form(alpha) and element_form(beta) are properly equivalent.
    bool forms_equivalent = false;
    std::size_t depth = 0;

    /// Reachable but forms inequivalent: impossible if the correspondence holds.
    bool violation() const { return reachable && !forms_equivalent; }
    /// Forms equivalent but not found: the search depth was too small.
    bool truncated() const { return forms_equivalent && !reachable; }
};

/// Throws domain_error when alpha and beta have different n.
OrbitFormReport same_orbit_form_check(const QuadFieldElement& alpha, const QuadFieldElement& beta,
                                      std::size_t depth, const OrbitOptions& options = {});

/// "a/c/n"
std::string to_string(const QuadFieldElement& alpha);
/// Parses "a/c/n" and checks membership (domain_error when not a member).
QuadFieldElement parse_field_element(std::string_view text);
std::ostream& operator<<(std::ostream& os, const QuadFieldElement& alpha);

}  // namespace bqf
