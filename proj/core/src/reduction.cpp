#include "bqf/reduction.hpp"

namespace bqf {

namespace {

GroupElement translation(const Int& m) { return {1, m, 0, 1}; }

}  // namespace

ReductionResult reduce(const QuadraticForm& f) {
    require_positive_definite(f, "reduction needs a positive definite form");

    ReductionResult out;
    QuadraticForm cur = f;
    GroupElement witness = GroupElement::identity();
    const GroupElement swap = generator_element(Letter::T);

    auto apply = [&](const GroupElement& g) {
        cur = act_on_form(g, cur);
        witness = compose(witness, g);
        ++out.steps;
    };
    // b -> b + 2am lands in (-a, a] for m = floor((a - b) / 2a).
    auto normalize = [&] {
        if (-cur.a < cur.b && cur.b <= cur.a) return;
        Int m;
        Int num = cur.a - cur.b;
        Int den = 2 * cur.a;
        mpz_fdiv_q(m.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        apply(translation(m));
    };

    normalize();
    while (cur.a > cur.c) {
        apply(swap);
        normalize();
    }
    if (cur.a == cur.c && cur.b < 0) apply(swap);

    out.reduced = std::move(cur);
    out.witness = witness;
    out.word = element_to_word(witness);
    return out;
}

std::optional<GroupElement> equivalent(const QuadraticForm& f, const QuadraticForm& g,
                                       EquivalenceMode mode) {
    require_positive_definite(f, "equivalence needs positive definite forms");
    require_positive_definite(g, "equivalence needs positive definite forms");
    if (discriminant(f) != discriminant(g)) return std::nullopt;

    // G w_G = red = F w_F, hence G (w_G w_F^-1) = F.
    ReductionResult rf = reduce(f);
    ReductionResult rg = reduce(g);
    if (rf.reduced == rg.reduced) return compose(rg.witness, inverse(rf.witness));
    if (mode == EquivalenceMode::proper) return std::nullopt;

    // G R = mirror(G).
    ReductionResult rm = reduce(mirror(g));
    if (rf.reduced == rm.reduced)
        return compose(compose(generator_element(Letter::R), rm.witness), inverse(rf.witness));
    return std::nullopt;
}

Int minimum_represented(const QuadraticForm& f) {
    require_positive_definite(f, "minimum is defined only for positive definite forms");
    return reduce(f).reduced.a;
}

}  // namespace bqf
