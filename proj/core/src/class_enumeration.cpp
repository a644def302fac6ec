#include "bqf/class_enumeration.hpp"

#include <algorithm>

namespace bqf {

DiscriminantQuery::DiscriminantQuery(Int delta, bool primitive_only)
    : delta_(std::move(delta)), primitive_only_(primitive_only) {
    if (delta_ >= 0) throw domain_error("discriminant must be negative, got " + to_string(delta_));
    if (!Discriminant{delta_}.admissible())
        throw domain_error("discriminant must be 0 or 1 mod 4, got " + to_string(delta_));
}

namespace {

template <class Accept>
std::vector<QuadraticForm> scan(const DiscriminantQuery& q, Accept accept) {
    const Int& delta = q.delta();
    Int bound;  // floor(sqrt(-delta / 3))
    {
        Int third = -delta / 3;
        mpz_sqrt(bound.get_mpz_t(), third.get_mpz_t());
    }
    const bool odd = mpz_odd_p(delta.get_mpz_t()) != 0;

    std::vector<QuadraticForm> out;
    for (Int a = 1; a <= bound; ++a) {
        Int start = -a;
        if ((mpz_odd_p(start.get_mpz_t()) != 0) != odd) ++start;
        for (Int b = start; b <= a; b += 2) {
            Int num = b * b - delta;
            Int den = 4 * a;
            if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) continue;
            QuadraticForm f{a, b, num / den};
            if (!accept(f)) continue;
            if (q.primitive_only() && !is_primitive(f)) continue;
            out.push_back(std::move(f));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<QuadraticForm> enumerate_reduced(const DiscriminantQuery& q) {
    return scan(q, [](const QuadraticForm& f) { return is_reduced(f); });
}

std::vector<QuadraticForm> enumerate_almost_reduced(const DiscriminantQuery& q) {
    return scan(q, [](const QuadraticForm& f) { return is_almost_reduced(f); });
}

std::size_t class_number(const DiscriminantQuery& q) {
    return enumerate_reduced(DiscriminantQuery(q.delta(), true)).size();
}

std::size_t almost_reduced_count(const DiscriminantQuery& q) { return enumerate_almost_reduced(q).size(); }

}  // namespace bqf
