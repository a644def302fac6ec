#include "bqf/residues.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace bqf {

namespace {

bool miller_rabin_round(const Int& n, const Int& d, unsigned long s, unsigned long base) {
    Int a = base;
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    Int n1 = n - 1;
    if (x == 1 || x == n1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    static constexpr unsigned long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned long b : bases) {
        if (n == b) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
    }
    if (bit_length(n) > 64) return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;

    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    for (unsigned long b : bases)
        if (!miller_rabin_round(n, d, s, b)) return false;
    return true;
}

OddPrime::OddPrime(Int p) : p_(std::move(p)) {
    if (p_ == 2 || !is_prime(p_)) throw domain_error("p must be an odd prime, got " + to_string(p_));
}

int legendre(const Int& lambda, const OddPrime& p) {
    const Int& m = p.value();
    Int x;
    mpz_fdiv_r(x.get_mpz_t(), lambda.get_mpz_t(), m.get_mpz_t());
    if (x == 0) return 0;
    Int e = (m - 1) / 2;
    mpz_powm(x.get_mpz_t(), x.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    if (x == 1) return 1;
    if (x == m - 1) return -1;
    throw std::logic_error("Euler criterion produced " + to_string(x) + " for modulus " + to_string(m));
}

const std::vector<Int>& quadratic_residues(const OddPrime& p) {
    static std::shared_mutex mutex;
    static std::map<unsigned long, std::unique_ptr<const std::vector<Int>>> cache;

    if (p.value() > 10'000'000) throw domain_error("residue table limited to p <= 10^7");
    const unsigned long m = p.value().get_ui();
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(m); it != cache.end()) return *it->second;
    }

    std::vector<bool> seen(m, false);
    for (unsigned long r = 1; r <= m / 2; ++r) seen[(r * r) % m] = true;
    auto table = std::make_unique<std::vector<Int>>();
    table->reserve((m - 1) / 2);
    for (unsigned long v = 1; v < m; ++v)
        if (seen[v]) table->emplace_back(v);

    std::unique_lock lock(mutex);
    auto [it, inserted] = cache.try_emplace(m, std::move(table));
    return *it->second;
}

bool residue_complement_law(const OddPrime& p, const Int& a) {
    if (legendre(a, p) != 1) throw domain_error(to_string(a) + " is not a quadratic residue of " + to_string(p.value()));
    const bool complement_is_residue = legendre(p.value() - a, p) == 1;
    const bool predicted = mpz_fdiv_ui(p.value().get_mpz_t(), 4) == 1;
    if (complement_is_residue != predicted)
        throw std::logic_error("complement law violated for p = " + to_string(p.value()));
    return complement_is_residue;
}

bool scaled_form_criterion(const Int& lambda, const OddPrime& p) { return legendre(lambda, p) == 1; }

std::optional<RepresentationWitness> scaled_representation_oracle(const Int& lambda, const OddPrime& p,
                                                                  const Int& bound) {
    if (bound < 1 || bound > 10'000) throw domain_error("search bound must lie in [1, 10^4]");
    for (Int t = 0; t <= bound; ++t) {
        Int rest = lambda - p.value() * t * t;
        if (rest < 0) break;
        if (!mpz_perfect_square_p(rest.get_mpz_t())) continue;
        Int r;
        mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
        if (r <= bound) return RepresentationWitness{r, t};
    }
    return std::nullopt;
}

}  // namespace bqf
