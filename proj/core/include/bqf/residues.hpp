#pragma once

#include "bqf/integer.hpp"

#include <optional>
#include <vector>

namespace bqf {

/// Primality test. Deterministic below 2^64 (Miller-Rabin with the prime
/// bases up to 37); above that, 40 rounds of GMP's probabilistic test, so a
/// composite slips through with probability below 2^-80.
bool is_prime(const Int& n);

/// An odd prime, validated on construction (domain_error otherwise).
class OddPrime {
public:
    explicit OddPrime(Int p);
    const Int& value() const { return p_; }

private:
    Int p_;
};

/// Legendre symbol (lambda / p) by Euler's criterion:
/// lambda^((p-1)/2) mod p is 1, p-1 or 0.
int legendre(const Int& lambda, const OddPrime& p);

/// Sorted set { r^2 mod p : 1 <= r <= p-1 }, of size (p-1)/2. Tables are
/// memoized per p; p above 10^7 is rejected with domain_error.
const std::vector<Int>& quadratic_residues(const OddPrime& p);

/// Whether p - a is a residue, for a residue a of p. The answer is known in
/// advance (yes iff p = 1 mod 4); a disagreement throws std::logic_error.
/// Throws domain_error when a is not a nonzero residue of p.
bool residue_complement_law(const OddPrime& p, const Int& a);

/// The scaled-form criterion: x^2 + p y^2 and lambda (x^2 + p y^2) are
/// declared equivalent iff (lambda / p) = 1. Kept separate from
/// equivalent(): for lambda < 0 no substitution can realize it.
bool scaled_form_criterion(const Int& lambda, const OddPrime& p);

struct RepresentationWitness {
    Int r;
    Int t;
    friend bool operator==(const RepresentationWitness&, const RepresentationWitness&) = default;
};

/// Searches |r|, |t| <= bound for r^2 + p t^2 == lambda, smallest |t| first,
/// returning nonnegative r and t. bound must be in [1, 10^4].
std::optional<RepresentationWitness> scaled_representation_oracle(const Int& lambda, const OddPrime& p,
                                                                  const Int& bound);

}  // namespace bqf
