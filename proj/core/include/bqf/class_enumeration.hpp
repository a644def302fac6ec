#pragma once

#include "bqf/forms.hpp"

#include <cstddef>
#include <vector>

namespace bqf {

/// A negative discriminant to enumerate. Construction rejects delta >= 0
/// and delta = 2, 3 (mod 4) with domain_error.
class DiscriminantQuery {
public:
    explicit DiscriminantQuery(Int delta, bool primitive_only = false);

    const Int& delta() const { return delta_; }
    bool primitive_only() const { return primitive_only_; }

private:
    Int delta_;
    bool primitive_only_;
};

/// All reduced forms of the discriminant, sorted by (a, b, c).
///
/// Every reduced form has 3a^2 <= -delta, so a is scanned up to
/// floor(sqrt(-delta/3)) and b over -a..a with b = delta (mod 2); c is then
/// forced by c = (b^2 - delta) / 4a.
std::vector<QuadraticForm> enumerate_reduced(const DiscriminantQuery& q);

/// Same scan with the almost-reduced predicate (no boundary rules).
std::vector<QuadraticForm> enumerate_almost_reduced(const DiscriminantQuery& q);

/// h(delta): number of primitive reduced forms. The query's primitive flag
/// is ignored; the class number always counts primitive forms.
std::size_t class_number(const DiscriminantQuery& q);

/// Number of almost reduced forms (the query's primitive flag applies).
std::size_t almost_reduced_count(const DiscriminantQuery& q);

}  // namespace bqf
