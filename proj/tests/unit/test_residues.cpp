#include <doctest.h>

#include "test_util.hpp"

using namespace bqf;

namespace {

OddPrime P(long p) { return OddPrime(p); }

std::vector<Int> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_SUITE("residues") {

TEST_CASE("primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(37));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(-7));
    CHECK_FALSE(is_prime(561));            // Carmichael
    CHECK_FALSE(is_prime(3215031751L));    // strong pseudoprime to 2, 3, 5, 7
    CHECK(is_prime(Int("18446744073709551557")));  // largest prime below 2^64
    CHECK(is_prime(Int("170141183460469231731687303715884105727")));  // 2^127 - 1
    CHECK_FALSE(is_prime(Int("170141183460469231731687303715884105729")));
    auto primes = oracle::odd_primes_below(5000);
    std::size_t count = 0;
    for (long n = 3; n < 5000; n += 2) count += is_prime(n);
    CHECK(count == primes.size());
}

TEST_CASE("odd prime validation") {
    CHECK_THROWS_AS(P(2), bqf::domain_error);
    CHECK_THROWS_AS(P(9), bqf::domain_error);
    CHECK_THROWS_AS(P(-3), bqf::domain_error);
    CHECK_NOTHROW(P(3));
}

TEST_CASE("legendre symbol") {
    CHECK(legendre(-1, P(37)) == 1);
    CHECK(legendre(-1, P(79)) == -1);
    CHECK(legendre(37, P(37)) == 0);
    CHECK(legendre(0, P(5)) == 0);
    CHECK(legendre(2, P(7)) == 1);
    CHECK(legendre(3, P(7)) == -1);
    CHECK(legendre(Int("1000000000000000000000"), P(13)) == legendre(Int("1000000000000000000000") % 13, P(13)));
}

TEST_CASE("Euler criterion agrees with exhaustive squaring") {
    for (auto p : oracle::odd_primes_below(2000)) {
        oracle::SquaringTable table(p);
        OddPrime op(p);
        for (long x = -3; x < p + 3; ++x) REQUIRE(legendre(x, op) == table.symbol(x));
    }
}

TEST_CASE("multiplicativity") {
    std::mt19937_64 rng(51);
    auto primes = oracle::odd_primes_below(10000);
    for (int i = 0; i < 5000; ++i) {
        auto p = primes[testutil::uniform(rng, 0, static_cast<long>(primes.size()) - 1)];
        long a = testutil::uniform(rng, -100000, 100000), b = testutil::uniform(rng, -100000, 100000);
        if ((Int(a) * b) % p == 0) continue;
        REQUIRE(legendre(Int(a) * b, P(p)) == legendre(a, P(p)) * legendre(b, P(p)));
    }
}

TEST_CASE("quadratic residues") {
    CHECK(quadratic_residues(P(7)) == ints({1, 2, 4}));
    CHECK(quadratic_residues(P(13)) == ints({1, 3, 4, 9, 10, 12}));
    CHECK(quadratic_residues(P(3)) == ints({1}));
    CHECK(&quadratic_residues(P(13)) == &quadratic_residues(P(13)));  // memoized
    for (auto p : oracle::odd_primes_below(3000))
        REQUIRE(quadratic_residues(P(p)).size() == static_cast<std::size_t>((p - 1) / 2));
    CHECK_THROWS_AS(quadratic_residues(P(10000019)), bqf::domain_error);
}

TEST_CASE("complement law") {
    CHECK(residue_complement_law(P(13), 3));
    CHECK_FALSE(residue_complement_law(P(7), 2));
    CHECK(residue_complement_law(P(5), 1));
    CHECK_THROWS_AS(residue_complement_law(P(7), 3), bqf::domain_error);
    CHECK_THROWS_AS(residue_complement_law(P(7), 7), bqf::domain_error);
}

TEST_CASE("scaled form criterion and witness search") {
    CHECK(scaled_form_criterion(-1, P(37)));
    CHECK_FALSE(scaled_form_criterion(-1, P(79)));
    for (auto p : oracle::odd_primes_below(200)) REQUIRE(scaled_form_criterion(1, P(p)));

    CHECK(scaled_representation_oracle(1, P(37), 10) == RepresentationWitness{1, 0});
    CHECK(scaled_representation_oracle(38, P(37), 10) == RepresentationWitness{1, 1});
    CHECK_FALSE(scaled_representation_oracle(-1, P(37), 100));
    CHECK_THROWS_AS(scaled_representation_oracle(1, P(37), 0), bqf::domain_error);
    CHECK_THROWS_AS(scaled_representation_oracle(1, P(37), 10001), bqf::domain_error);
}

TEST_CASE("a witness forces the criterion when p does not divide lambda") {
    for (auto p : oracle::odd_primes_below(60)) {
        for (long lambda = -50; lambda <= 3000; ++lambda) {
            auto witness = scaled_representation_oracle(lambda, P(p), 60);
            if (!witness) continue;
            REQUIRE(witness->r * witness->r + p * witness->t * witness->t == lambda);
            if (lambda % p != 0) REQUIRE(scaled_form_criterion(lambda, P(p)));
        }
    }
    // p | lambda: a witness exists yet the symbol is 0
    CHECK(scaled_representation_oracle(37, P(37), 10) == RepresentationWitness{0, 1});
    CHECK_FALSE(scaled_form_criterion(37, P(37)));
}

}  // TEST_SUITE
