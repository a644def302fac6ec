#include <doctest.h>

#include "test_util.hpp"

using namespace bqf;
using testutil::form;

namespace {

std::vector<oracle::Form> as_oracle(const std::vector<QuadraticForm>& forms) {
    std::vector<oracle::Form> out;
    for (const auto& f : forms) out.push_back(testutil::to_oracle(f));
    return out;
}

}  // namespace

TEST_SUITE("class_enumeration") {

TEST_CASE("query validation") {
    CHECK_THROWS_AS(DiscriminantQuery(5), bqf::domain_error);
    CHECK_THROWS_AS(DiscriminantQuery(0), bqf::domain_error);
    CHECK_THROWS_AS(DiscriminantQuery(-5), bqf::domain_error);   // 3 mod 4
    CHECK_THROWS_AS(DiscriminantQuery(-6), bqf::domain_error);   // 2 mod 4
    CHECK_NOTHROW(DiscriminantQuery(-7));
}

TEST_CASE("reduced forms") {
    using V = std::vector<QuadraticForm>;
    CHECK(enumerate_reduced(DiscriminantQuery(-4)) == V{form(1, 0, 1)});
    CHECK(enumerate_reduced(DiscriminantQuery(-23)) == V{form(1, 1, 6), form(2, -1, 3), form(2, 1, 3)});
    CHECK(enumerate_reduced(DiscriminantQuery(-3)) == V{form(1, 1, 1)});
    // Delta = -12 has the imprimitive [2,2,2]
    CHECK(enumerate_reduced(DiscriminantQuery(-12)) == V{form(1, 0, 3), form(2, 2, 2)});
    CHECK(enumerate_reduced(DiscriminantQuery(-12, true)) == V{form(1, 0, 3)});
}

TEST_CASE("almost reduced forms") {
    using V = std::vector<QuadraticForm>;
    CHECK(enumerate_almost_reduced(DiscriminantQuery(-23)) ==
          V{form(1, -1, 6), form(1, 1, 6), form(2, -1, 3), form(2, 1, 3)});
    CHECK(enumerate_almost_reduced(DiscriminantQuery(-4)) == V{form(1, 0, 1)});
    CHECK(enumerate_almost_reduced(DiscriminantQuery(-3)) == V{form(1, -1, 1), form(1, 1, 1)});
    CHECK(almost_reduced_count(DiscriminantQuery(-23)) == 4);
}

TEST_CASE("class numbers") {
    CHECK(class_number(DiscriminantQuery(-3)) == 1);
    CHECK(class_number(DiscriminantQuery(-4)) == 1);
    CHECK(class_number(DiscriminantQuery(-19)) == 1);
    CHECK(class_number(DiscriminantQuery(-20)) == 2);
    CHECK(class_number(DiscriminantQuery(-23)) == 3);
    CHECK(class_number(DiscriminantQuery(-163)) == 1);
    CHECK(class_number(DiscriminantQuery(-12)) == 1);  // primitive even if the query is not
    CHECK(class_number(DiscriminantQuery(-47)) == 5);
}

TEST_CASE("bounded scan matches the full-rectangle brute force") {
    for (long delta = -3; delta >= -500; --delta) {
        if (!Discriminant{delta}.admissible()) continue;
        for (bool primitive : {false, true}) {
            DiscriminantQuery q(delta, primitive);
            REQUIRE(as_oracle(enumerate_reduced(q)) == oracle::reduced_forms(delta, false, primitive));
            REQUIRE(as_oracle(enumerate_almost_reduced(q)) == oracle::reduced_forms(delta, true, primitive));
        }
    }
}

TEST_CASE("output forms are reduced, of the right discriminant, pairwise inequivalent") {
    for (long delta = -3; delta >= -200; --delta) {
        if (!Discriminant{delta}.admissible()) continue;
        auto forms = enumerate_reduced(DiscriminantQuery(delta));
        for (std::size_t i = 0; i < forms.size(); ++i) {
            REQUIRE(is_reduced(forms[i]));
            REQUIRE(discriminant(forms[i]).value == delta);
            for (std::size_t j = i + 1; j < forms.size(); ++j)
                REQUIRE_FALSE(equivalent(forms[i], forms[j], EquivalenceMode::proper));
        }
        for (const auto& f : enumerate_almost_reduced(DiscriminantQuery(delta)))
            REQUIRE(is_almost_reduced(f));
    }
}

TEST_CASE("every primitive form reduces into the list") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 2000; ++i) {
        auto f = testutil::random_primitive_positive_definite(rng, 200);
        auto forms = enumerate_reduced(DiscriminantQuery(discriminant(f).value, true));
        REQUIRE(std::binary_search(forms.begin(), forms.end(), reduce(f).reduced));
    }
}

}  // TEST_SUITE
