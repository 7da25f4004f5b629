#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "latpol/families.hpp"
#include "latpol/ik.hpp"
#include "latpol/sylvester.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace latpol;
using namespace testutil;

namespace {

double to_double(const Rational& q) { return q.convert_to<double>(); }

bool has(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("feasible set membership") {
    CHECK(chi_membership(xbar(5, 3)).member);
    auto bad = chi_membership({1, 0, 0});
    CHECK_FALSE(bad.member);
    CHECK(has(bad.violations, "PS(1)"));
    CHECK(chi_membership({Rational(1, 2), Rational(1, 4), Rational(1, 4)}).member);
    auto unsorted = chi_membership({Rational(1, 4), Rational(3, 4)});
    CHECK_FALSE(unsorted.member);
    CHECK(has(unsorted.violations, "ORD(1)"));
    auto sum = chi_membership({Rational(1, 2), Rational(1, 3)});
    CHECK(has(sum.violations, "SUM"));
    auto neg = chi_membership({Rational(3, 2), Rational(-1, 2)});
    CHECK(has(neg.violations, "ORD(2)"));
}

TEST_CASE("membership agrees with the oracle on a grid") {
    for (unsigned n = 2; n <= 4; ++n) {
        std::mt19937_64 rng(n);
        std::uniform_int_distribution<int> k(0, 12);
        for (int trial = 0; trial < 300; ++trial) {
            RatVec x(n);
            for (auto& q : x) q = Rational(k(rng), 12);
            CHECK(chi_membership(x).member == oracle::in_chi(x));
        }
    }
}

TEST_CASE("candidate set") {
    auto c2 = candidate_set(2);
    REQUIRE(c2.size() == 2);
    CHECK(c2[0] == RatVec{Rational(1, 2), Rational(1, 2)});
    CHECK(c2[1] == c2[0]);
    auto c4 = candidate_set(4);
    CHECK(c4.size() == 4);
    CHECK(c4[3] == RatVec{Rational(1, 2), Rational(1, 3), Rational(1, 7), Rational(1, 42)});
    for (unsigned n = 2; n <= 10; ++n)
        for (const auto& x : candidate_set(n)) CHECK(chi_membership(x).member);
}

TEST_CASE("instance validation") {
    CHECK(kind_of([] { validate(IKInstance{4, 3, 2}); }) == ErrorKind::ParameterOutOfRange);
    CHECK(kind_of([] { validate(IKInstance{4, 1, 5}); }) == ErrorKind::ParameterOutOfRange);
    CHECK(kind_of([] { validate(IKInstance{1, 1, 1}); }) == ErrorKind::ParameterOutOfRange);
    CHECK(kind_of([] { validate(IKInstance{4, 0, 2}); }) == ErrorKind::ParameterOutOfRange);
    CHECK(objective({4, 2, 3}, {Rational(1, 2), Rational(1, 3), Rational(1, 7), Rational(1, 42)}) == Rational(1, 21));
}

TEST_CASE("exact solver") {
    auto s = solve_over_candidates({10, 1, 3});
    CHECK(s.value == Rational(1, 1000));
    CHECK(s.minimizers == std::vector<unsigned>{1});
    CHECK(s.unique);
    CHECK(s.candidate_values[1] == Rational(1, 648));
    CHECK(s.candidate_values[2] == Rational(1, 288));

    for (unsigned a = 1; a <= 2; ++a) {
        auto t = solve_over_candidates({4, a, 3});
        CHECK(t.minimizers == std::vector<unsigned>{2, 3});
        CHECK_FALSE(t.unique);
    }

    for (unsigned n = 2; n <= 8; ++n) {
        auto u = solve_over_candidates({n, 1, n});
        Rational v = 1;
        for (unsigned i = 1; i < n; ++i) v /= Rational(sylvester(i));
        v /= Rational(sylvester(n) - 1);
        if (n > 2) {
            CHECK(u.minimizers == std::vector<unsigned>{n});
            CHECK(u.unique);
        }
        CHECK(u.value == v);
    }
}

TEST_CASE("coordinate lower bound") {
    for (unsigned n = 2; n <= 8; ++n) CHECK(coordinate_lower_bound(n, 1) == Rational(1, n));
    CHECK(coordinate_lower_bound(5, 5) == Rational(1, 1806));
    CHECK(coordinate_lower_bound(4, 3) == Rational(1, 12));
    CHECK(kind_of([] { coordinate_lower_bound(4, 5); }) == ErrorKind::ParameterOutOfRange);
    CHECK(kind_of([] { coordinate_lower_bound(4, 0); }) == ErrorKind::ParameterOutOfRange);
    // the bound is the exact optimum of the single-coordinate objective
    for (unsigned n = 2; n <= 8; ++n)
        for (unsigned i = 1; i <= n; ++i) CHECK(solve_over_candidates({n, i, i}).value == coordinate_lower_bound(n, i));
}

TEST_CASE("exact optimum is below every feasible grid point") {
    for (unsigned n = 3; n <= 5; ++n) {
        unsigned N = n == 5 ? 30 : 60;
        for (unsigned b = 1; b <= n; ++b)
            for (unsigned a = 1; a <= b; ++a) {
                if (!(b + 1 >= n || a == b)) continue;
                IKInstance inst{n, a, b};
                Rational best = solve_over_candidates(inst).value;
                bool below = true;
                oracle::grid_chi(n, N, [&](const RatVec& x) {
                    Rational v = 1;
                    for (unsigned i = a; i <= b; ++i) v *= x[i - 1];
                    if (v < best) below = false;
                });
                CHECK_MESSAGE(below, "n=" << n << " a=" << a << " b=" << b);
            }
    }
}

TEST_CASE("numeric oracle") {
    auto r = numeric_refine({10, 1, 3}, 1e-9, 8, 1);
    CHECK(std::abs(r.value - 1e-3) <= 1e-6);
    CHECK(r.value >= 1e-3 - 1e-9);
    auto q = numeric_refine({4, 4, 4}, 1e-9, 8, 1);
    CHECK(std::abs(q.value - 1.0 / 42) <= 1e-6);
    auto p = numeric_refine({5, 1, 5}, 1e-9, 8, 1);
    double expect = 1.0 / (2.0 * 3 * 7 * 43 * 1806);
    CHECK(std::abs(p.value - expect) <= 1e-6);
    CHECK(std::abs(p.log10_value - std::log10(expect)) <= 1e-6);
    REQUIRE(p.point.size() == 5);
    double sum = 0;
    for (double x : p.point) sum += x;
    CHECK(std::abs(sum - 1) <= 1e-9);
    CHECK(kind_of([] { numeric_refine({4, 1, 2}, 0, 8, 1); }) == ErrorKind::ParameterOutOfRange);
    CHECK(kind_of([] { numeric_refine({4, 1, 2}, 1e-9, 0, 1); }) == ErrorKind::ParameterOutOfRange);
}

TEST_CASE("numeric oracle never beats the exact optimum by more than the tolerance") {
    for (unsigned n = 2; n <= 7; ++n)
        for (unsigned b = 1; b <= n; ++b)
            for (unsigned a = 1; a <= b; ++a) {
                IKInstance inst{n, a, b};
                double exact = to_double(solve_over_candidates(inst).value);
                auto r = numeric_refine(inst, 1e-9, 4, 7);
                CHECK_MESSAGE(r.value >= exact - 1e-9 * std::max(1.0, exact), "n=" << n << " a=" << a << " b=" << b);
            }
}

TEST_CASE("localization cases") {
    for (unsigned n = 4; n <= 12; ++n)
        for (unsigned b = 1; b <= n; ++b) {
            auto loc = locate_optimum({n, b, b});
            CHECK(loc.applicable);
            CHECK(loc.label == 'a');
            CHECK(loc.pass);
        }
    for (unsigned n = 4; n <= 10; ++n)
        for (unsigned a = 2; a < n; ++a) {
            auto loc = locate_optimum({n, a, n});
            CHECK(loc.label == 'd');
            CHECK(loc.pass);
        }
    auto e = locate_optimum({4, 2, 3});
    CHECK(e.label == 'e');
    CHECK(e.pass);
    CHECK_FALSE(locate_optimum({3, 1, 2}).applicable);
    for (unsigned n = 4; n <= 10; ++n)
        for (unsigned b = 1; b <= n; ++b)
            for (unsigned a = 1; a <= b; ++a) CHECK(locate_optimum({n, a, b}).pass);
}

TEST_CASE("random feasible points") {
    std::mt19937_64 rng(3);
    for (unsigned n = 2; n <= 10; ++n)
        for (int k = 0; k < 20; ++k) {
            auto x = random_chi_point(n, rng);
            CHECK(chi_membership(x).member);
            CHECK(oracle::in_chi(x));
        }
}
