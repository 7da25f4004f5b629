#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latpol/sylvester.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace latpol;
using namespace testutil;

TEST_CASE("first terms") {
    CHECK(sylvester(1) == 2);
    CHECK(sylvester(2) == 3);
    CHECK(sylvester(3) == 7);
    CHECK(sylvester(4) == 43);
    CHECK(sylvester(5) == 1807);
    CHECK(sylvester(8) == BigInt("113423713055421844361000443"));
}

TEST_CASE("recurrence agrees with the product definition") {
    auto ref = oracle::sylvester_by_product(kSylvesterMaxIndex);
    for (unsigned i = 1; i <= kSylvesterMaxIndex; ++i) CHECK(sylvester(i) == ref[i - 1]);
}

TEST_CASE("index range") {
    CHECK(kind_of([] { sylvester(0); }) == ErrorKind::ParameterOutOfRange);
    CHECK(kind_of([] { sylvester(sylvester_max_index() + 1); }) == ErrorKind::ParameterOutOfRange);
    unsigned old = sylvester_max_index();
    set_sylvester_max_index(14);
    CHECK(sylvester(14) == sylvester(13) * sylvester(13) - sylvester(13) + 1);
    set_sylvester_max_index(old);
}

TEST_CASE("unit sum defect") {
    CHECK(unit_sum_defect(1) == Rational(1, 2));
    CHECK(unit_sum_defect(3) == Rational(1, 42));
    CHECK(unit_sum_defect(4) == Rational(1, 1806));
    for (unsigned i = 1; i < kSylvesterMaxIndex; ++i) {
        Rational direct = 1;
        for (unsigned j = 1; j <= i; ++j) direct -= Rational(1) / Rational(sylvester(j));
        CHECK(unit_sum_defect(i) == direct);
        CHECK(unit_sum_defect(i) * Rational(sylvester(i + 1) - 1) == 1);
    }
}

TEST_CASE("growth bounds") {
    for (unsigned i = 1; i <= 8; ++i) {
        BigInt lo = BigInt(1) << ((i >= 2) ? (1u << (i - 2)) : 0u);
        BigInt hi = BigInt(1) << (1u << (i - 1));
        CHECK(lo <= sylvester(i));
        CHECK(sylvester(i) <= hi);
        if (i >= 2) CHECK(lo + 1 <= sylvester(i));
    }
}

TEST_CASE("pairwise coprime and divisibility") {
    for (unsigned i = 1; i <= kSylvesterMaxIndex; ++i)
        for (unsigned j = 1; j < i; ++j) {
            CHECK(oracle::gcd(sylvester(i), sylvester(j)) == 1);
            CHECK((sylvester(i) - 1) % sylvester(j) == 0);
        }
}

TEST_CASE("coprime divisibility split") {
    CHECK(coprime_divisibility_split(ints({2, 3}), ints({2, 3})) == ints({1, 1}));
    CHECK(coprime_divisibility_split(ints({2, 3, 7}), ints({4, -6, 14})) == ints({2, -2, 2}));
    CHECK(kind_of([] { coprime_divisibility_split(ints({2, 3}), ints({1, 1})); }) == ErrorKind::NotIntegralSum);
    CHECK(kind_of([] { coprime_divisibility_split(ints({2, 4}), ints({2, 4})); }) == ErrorKind::NotCoprime);
}
