#pragma once

#include "bqf/forms.hpp"
#include "bqf/modular_group.hpp"

#include <cstddef>
#include <optional>

namespace bqf {

struct ReductionResult {
    QuadraticForm reduced;
    /// det +1, act_on_form(witness, original) == reduced.
    GroupElement witness = GroupElement::identity();
    /// Normal-form word with word_to_element(word) == witness.
    GeneratorWord word;
    /// Elementary moves applied: one per translation (whatever its length),
    /// one per swap.
    std::size_t steps = 0;
};

/// Gauss reduction of a positive definite form to the reduced
/// representative of its proper class.
///
/// Moves: translate by (TU)^m to bring b into (-a, a], swap by T while
/// a > c, and a final T when a == c with b < 0. The witness is always
/// proper; mirror classes are only merged by equivalent(..., extended).
///
/// Throws domain_error for input that is not positive definite.
ReductionResult reduce(const QuadraticForm& f);

enum class EquivalenceMode { proper, extended };

/// Returns g with act_on_form(g, G) == F, or nullopt when F and G are not
/// equivalent. Proper mode only searches det +1; extended mode also tries the
/// mirror of G and may return a det -1 witness.
std::optional<GroupElement> equivalent(const QuadraticForm& f, const QuadraticForm& g,
                                       EquivalenceMode mode);

/// Smallest value F(x,y) over (x,y) != (0,0): the leading coefficient of the
/// reduced form.
Int minimum_represented(const QuadraticForm& f);

}  // namespace bqf
