#include "bqf/quad_field.hpp"

#include "bqf/reduction.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <ostream>
#include <set>

namespace bqf {

namespace {

std::strong_ordering cmp_int(const Int& x, const Int& y) {
    int r = cmp(x, y);
    return r < 0 ? std::strong_ordering::less : r > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering operator<=>(const QuadFieldElement& x, const QuadFieldElement& y) {
    if (auto r = cmp_int(x.n_, y.n_); r != 0) return r;
    if (auto r = cmp_int(x.c_, y.c_); r != 0) return r;
    return cmp_int(x.a_, y.a_);
}

AlgebraicPoint QuadFieldElement::point() const { return {a_, c_, -n_}; }

std::optional<QuadFieldElement> membership(const Int& a, const Int& c, const Int& n) {
    if (n <= 0) throw domain_error("n must be positive for Q*(sqrt(-n))");
    if (c == 0) return std::nullopt;
    Int num = a * a + n;
    if (!mpz_divisible_p(num.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
    if (c < 0) return QuadFieldElement(-a, -c, n, num / -c);
    return QuadFieldElement(a, c, n, num / c);
}

QuadFieldElement make_element(const Int& a, const Int& c, const Int& n) {
    auto alpha = membership(a, c, n);
    if (!alpha)
        throw domain_error("(" + to_string(a) + " + sqrt(-" + to_string(n) + "))/" + to_string(c) +
                           " is not in Q*(sqrt(-n)): c must be nonzero and divide a^2 + n");
    return *alpha;
}

bool is_primitive_element(const QuadFieldElement& alpha) {
    return gcd(gcd(alpha.a(), alpha.b()), alpha.c()) == 1;
}

Rational norm(const QuadFieldElement& alpha) {
    Rational x(alpha.a() * alpha.a() + alpha.n(), alpha.c() * alpha.c());
    x.canonicalize();
    return x;
}

QuadraticForm element_form(const QuadFieldElement& alpha) { return {alpha.c(), -2 * alpha.a(), alpha.b()}; }

QuadFieldElement act(const GroupElement& g, const QuadFieldElement& alpha) {
    if (g.det() != 1) throw domain_error("Q*(sqrt(-n)) action uses PSL(2,Z) only");
    const Int &a = alpha.a(), &c = alpha.c(), &n = alpha.n();
    // Rationalizing (r alpha + s)/(t alpha + u) leaves sqrt(-n) with
    // coefficient c (ru - st) / (den^2 + n t^2) = c / (den^2 + n t^2).
    Int num = g.r() * a + g.s() * c;
    Int den = g.t() * a + g.u() * c;
    Int a2 = num * den + g.r() * g.t() * n;
    Int c2 = den * den + n * g.t() * g.t();
    if (!mpz_divisible_p(a2.get_mpz_t(), c.get_mpz_t()) || !mpz_divisible_p(c2.get_mpz_t(), c.get_mpz_t()))
        throw std::logic_error("Q*(sqrt(-n)) is not closed under the action");
    auto image = membership(a2 / c, c2 / c, n);
    if (!image) throw std::logic_error("Q*(sqrt(-n)) is not closed under the action");
    return *image;
}

std::vector<QuadFieldElement> orbit_explore(const QuadFieldElement& alpha, std::size_t depth,
                                            const OrbitOptions& options) {
    if (depth > options.max_depth)
        throw domain_error("orbit depth " + std::to_string(depth) + " exceeds the maximum " +
                           std::to_string(options.max_depth));
    static const GroupElement generators[] = {generator_element(Letter::T), generator_element(Letter::U),
                                              generator_element(Letter::V)};
    std::set<QuadFieldElement> seen{alpha};
    std::vector<QuadFieldElement> frontier{alpha};
    for (std::size_t level = 0; level < depth && !frontier.empty(); ++level) {
        std::vector<QuadFieldElement> next;
        for (const auto& x : frontier) {
            for (const auto& g : generators) {
                auto y = act(g, x);
                if (seen.insert(y).second) next.push_back(std::move(y));
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

OrbitFormReport same_orbit_form_check(const QuadFieldElement& alpha, const QuadFieldElement& beta,
                                      std::size_t depth, const OrbitOptions& options) {
    if (alpha.n() != beta.n()) throw domain_error("elements must share n");
    OrbitFormReport report;
    report.depth = depth;
    auto orbit = orbit_explore(alpha, depth, options);
    report.reachable = std::binary_search(orbit.begin(), orbit.end(), beta);
    report.forms_equivalent =
        equivalent(element_form(alpha), element_form(beta), EquivalenceMode::proper).has_value();
    return report;
}

std::string to_string(const QuadFieldElement& alpha) {
    return to_string(alpha.a()) + "/" + to_string(alpha.c()) + "/" + to_string(alpha.n());
}

QuadFieldElement parse_field_element(std::string_view text) {
    auto parts = detail::split(text, '/');
    if (parts.size() != 3) throw parse_error("expected an element 'a/c/n', got '" + std::string(text) + "'");
    return make_element(parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2]));
}

std::ostream& operator<<(std::ostream& os, const QuadFieldElement& alpha) { return os << to_string(alpha); }

}  // namespace bqf
