#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "latpol/equivalence.hpp"
#include "latpol/families.hpp"
#include "latpol/ik.hpp"
#include "latpol/lattice_points.hpp"
#include "latpol/simplex.hpp"
#include "latpol/sylvester.hpp"
#include "latpol/verifier.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace latpol;
using namespace testutil;

namespace {

constexpr long kLo = -4;
constexpr long kHi = 7;

// One-point simplices, reused across properties.
const std::vector<IntegralSimplex>& samples(unsigned d) {
    static std::map<unsigned, std::vector<IntegralSimplex>> cache;
    auto& v = cache[d];
    if (v.empty()) {
        std::mt19937_64 rng(1000 + d);
        for (int k = 0; k < (d == 4 ? 25 : 50); ++k) v.push_back(random_one_point_simplex(d, rng, kLo, kHi));
    }
    return v;
}

IntVec neg(IntVec v) {
    for (auto& x : v) x = -x;
    return v;
}

IntegralSimplex centered(const IntegralSimplex& S) {
    auto in = interior_lattice_points(S.polytope());
    REQUIRE(in.size() == 1);
    return S.translated(neg(in[0]));
}

std::vector<Rational> sorted_face_volumes(const IntegralSimplex& S) {
    std::vector<Rational> out;
    for (std::size_t l = 1; l <= S.dim(); ++l)
        for (const auto& F : faces(S, l)) out.push_back(normalized_volume(S, F));
    std::sort(out.begin(), out.end());
    return out;
}

Rational rpow(const Rational& q, unsigned e) {
    Rational r = 1;
    for (unsigned i = 0; i < e; ++i) r *= q;
    return r;
}

Rational prod(const RatVec& x, std::size_t from, std::size_t to) {
    Rational p = 1;
    for (std::size_t i = from; i < to; ++i) p *= x[i];
    return p;
}

}  // namespace

TEST_CASE("solve_linear inverts matrix-vector products") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> c(-6, 6), den(1, 5);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + trial % 5;
        RatMatrix A(n, n);
        RatVec x(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = Rational(c(rng), den(rng));
            for (std::size_t j = 0; j < n; ++j) A(i, j) = Rational(c(rng), den(rng));
        }
        if (determinant(A) == 0) continue;
        RatVec b(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) b[i] += A(i, j) * x[j];
        CHECK(solve_linear(A, b) == x);
    }
}

TEST_CASE("primitive_vector is idempotent and scale invariant") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> c(-30, 30), scale(1, 20);
    for (int trial = 0; trial < 200; ++trial) {
        IntVec v(1 + trial % 4);
        for (auto& x : v) x = c(rng);
        if (gcd_of(v) == 0) continue;
        IntVec p = primitive_vector(v);
        CHECK(primitive_vector(p) == p);
        CHECK(gcd_of(p) == 1);
        IntVec w = v;
        const int c0 = scale(rng);
        for (auto& x : w) x *= c0;
        CHECK(primitive_vector(w) == p);
    }
}

TEST_CASE("barycentric coordinates of the interior point") {
    for (unsigned d = 2; d <= 4; ++d)
        for (const auto& S : samples(d)) {
            auto in = interior_lattice_points(S.polytope());
            REQUIRE(in.size() == 1);
            if (d <= 3) CHECK(oracle::simplex_interior(S.vertices()) == in);
            auto bv = barycentric_coordinates(S, RatVec(in[0].begin(), in[0].end()));
            CHECK(bv.beta == oracle::barycentric(S.vertices(), RatVec(in[0].begin(), in[0].end())));
            const auto& b = bv.sorted;
            // lower bounds on each sorted coordinate
            for (unsigned i = 1; i <= d + 1; ++i) CHECK(b[i - 1] >= barycentric_lower_bound(d, i));
            // product-sum inequalities
            for (std::size_t j = 1; j <= d; ++j) {
                Rational tail = 0;
                for (std::size_t i = j; i <= d; ++i) tail += b[i];
                CHECK(prod(b, 0, j) <= tail);
            }
            // Mahler volume between the two bounds, and equal to its geometric definition
            Rational m = 1 / prod(b, 0, d + 1);
            Rational s = Rational(sylvester(d + 1) - 1);
            CHECK(Rational(pow(BigInt(d + 1), d + 1)) <= m);
            CHECK(m <= s * s);
            auto C = centered(S);
            CHECK(mahler_product(C) == m);
            CHECK(mahler_product_geometric(C) == m);
            // asymmetry identity against the facet/vertex oracle
            auto V = as_rational(S.vertices());
            Rational ca = oracle::asymmetry(oracle::facets(d, V), V, RatVec(in[0].begin(), in[0].end()));
            CHECK(ca == (1 - b[d]) / b[d]);
            CHECK(coefficient_of_asymmetry(S.polytope(), in[0]) == ca);
        }
}

TEST_CASE("face volumes against barycentric coordinates") {
    for (unsigned d = 2; d <= 4; ++d)
        for (const auto& S : samples(d)) {
            auto in = interior_lattice_points(S.polytope());
            auto bv = barycentric_coordinates(S, RatVec(in[0].begin(), in[0].end()));
            for (std::size_t l = 1; l <= d; ++l)
                for (const auto& F : faces(S, l)) {
                    RatVec fb;
                    for (auto i : F) fb.push_back(bv.beta[i]);
                    std::sort(fb.begin(), fb.end(), std::greater<Rational>());
                    Rational bound = 1 / (Rational(factorial(static_cast<unsigned>(l))) * prod(fb, 0, l));
                    Rational v = normalized_volume(S, F);
                    CHECK(v <= bound);
                    CHECK(normalized_volume_snf(S, F) == v);
                    if (d >= 3) CHECK(v <= face_bound(d, static_cast<unsigned>(l)));
                }
        }
}

TEST_CASE("duality for one-point simplices") {
    for (unsigned d = 2; d <= 4; ++d)
        for (const auto& S : samples(d)) {
            auto C = centered(S);
            auto D = polar_dual(C.polytope());
            auto ref = oracle::dual_simplex(C.vertices());
            std::sort(ref.begin(), ref.end());
            CHECK(D.vertices() == ref);
            CHECK(interior_lattice_points(D) == std::vector<IntVec>{IntVec(d, 0)});
            CHECK(polar_dual(D) == C.polytope().as_rational());
            // o has the same barycentric coordinates in S and S*, as multisets
            auto bs = barycentric_coordinates(C, RatVec(d, 0)).sorted;
            std::vector<IntVec> scaled;
            BigInt L = 1;
            for (const auto& v : D.vertices()) L = boost::multiprecision::lcm(L, lcm_of_denominators(v));
            for (const auto& v : D.vertices()) {
                IntVec w(d);
                for (std::size_t k = 0; k < d; ++k) w[k] = numerator(v[k] * Rational(L));
                scaled.push_back(w);
            }
            auto bd = oracle::barycentric(scaled, RatVec(d, 0));
            std::sort(bd.begin(), bd.end(), std::greater<Rational>());
            CHECK(bd == bs);
        }
}

TEST_CASE("Blichfeldt and Mahler bounds on random polytopes") {
    std::mt19937_64 rng(77);
    for (unsigned d = 2; d <= 3; ++d)
        for (int k = 0; k < 30; ++k) {
            auto pts = random_points(rng, d, d + 1 + k % 4, -3, 4);
            IntegralPolytope P;
            try {
                P = from_vertices(d, pts);
            } catch (const Error&) {
                continue;
            }
            auto all = oracle::box_points(d, as_rational(P.vertices()), false);
            Rational f = Rational(factorial(d));
            CHECK(Rational(static_cast<long>(all.size())) <= Rational(d) + f * volume(P));
        }
    for (unsigned d = 2; d <= 3; ++d)
        for (int k = 0; k < 20; ++k) {
            auto P = random_one_point_polytope(d, rng, kLo, kHi);
            auto p = interior_lattice_points(P)[0];
            auto Q = P.translated(neg(p));
            Rational ca = coefficient_of_asymmetry(Q, IntVec(d, 0));
            Rational s = Rational(sylvester(d + 1) - 1);
            CHECK(volume(Q) <= rpow(1 + ca, d));
            CHECK(ca <= s - 1);
            CHECK(volume(Q) <= rpow(s, d));
        }
}

TEST_CASE("invariants under unimodular witnesses") {
    std::mt19937_64 rng(88);
    for (unsigned d = 2; d <= 3; ++d)
        for (const auto& S : samples(d)) {
            auto img = apply(random_unimodular(d, rng, 3), S);
            auto w = unimodular_equivalent(S, img);
            REQUIRE(w.has_value());
            auto mapped = affine_image(S.polytope(), w->A, w->t);
            CHECK(mapped == img.polytope());
            CHECK(lattice_diameter(mapped) == lattice_diameter(S.polytope()));
            CHECK(lattice_points(mapped).size() == lattice_points(S.polytope()).size());
            CHECK(interior_lattice_points(mapped).size() == 1);
            CHECK(sorted_face_volumes(img) == sorted_face_volumes(S));
            CHECK(edge_length_profile(img) == edge_length_profile(S));
        }
}

TEST_CASE("lattice diameter chain") {
    std::mt19937_64 rng(99);
    for (unsigned d = 2; d <= 3; ++d) {
        BigInt s = sylvester(d) - 1;
        for (int k = 0; k < 25; ++k) {
            auto P = random_polytope_with_interior(d, rng, kLo, kHi, 4);
            auto in = interior_lattice_points(P);
            long long ld = lattice_diameter(P);
            long long ldi = oracle::collinear_max(in);
            auto G = lattice_points(P).size();
            CHECK(ld == oracle::collinear_max(lattice_points(P)));
            CHECK(BigInt(ld) <= BigInt(ldi + 2) * s);
            CHECK(BigInt(ldi + 2) <= BigInt(in.size() + 1));
            CHECK(BigInt(G) <= pow(BigInt(ld + 1), d));
        }
    }
}

TEST_CASE("covering-minimal simplices and translation") {
    std::vector<std::vector<long>> shapes{{2, 2}, {2, 3, 6}, {2, 4, 4}, {3, 3, 3}};
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> den(2, 6), num(-12, 12);
    for (const auto& a : shapes) {
        std::size_t d = a.size();
        std::vector<RatVec> V{RatVec(d, 0)};
        for (std::size_t i = 0; i < d; ++i) {
            RatVec e(d, 0);
            e[i] = a[i];
            V.push_back(e);
        }
        for (int trial = 0; trial < 40; ++trial) {
            RatVec v(d);
            for (auto& x : v) x = Rational(num(rng), den(rng));
            std::vector<RatVec> W = V;
            for (auto& w : W)
                for (std::size_t k = 0; k < d; ++k) w[k] += v[k];
            auto Q = RationalPolytope::from_points(d, W);
            bool free = interior_lattice_points(Q).empty();
            CHECK_MESSAGE(free == is_integral(v), "shape " << a.size() << " trial " << trial);
        }
    }
}

TEST_CASE("feasible points are strictly inside the simplex") {
    std::mt19937_64 rng(11);
    for (unsigned n = 2; n <= 9; ++n)
        for (int k = 0; k < 30; ++k) {
            auto x = random_chi_point(n, rng);
            REQUIRE(chi_membership(x).member);
            CHECK(x[n - 1] > 0);
            CHECK(x[0] < 1);
        }
    oracle::grid_chi(4, 24, [](const RatVec& x) {
        CHECK(x[3] > 0);
        CHECK(x[0] < 1);
    });
}

TEST_CASE("tight product-sum constraints force the Sylvester prefix") {
    for (auto [n, N] : std::vector<std::pair<unsigned, unsigned>>{{3, 84}, {4, 84}, {5, 42}}) {
        std::size_t tight_seen = 0;
        oracle::grid_chi(n, N, [&](const RatVec& x) {
            for (unsigned l = 1; l < n; ++l) {
                bool tight = true;
                for (unsigned j = 1; j <= l && tight; ++j) {
                    Rational tail = 0;
                    for (unsigned i = j; i < n; ++i) tail += x[i];
                    tight = prod(x, 0, j) == tail;
                }
                if (!tight) break;
                ++tight_seen;
                for (unsigned i = 1; i <= l; ++i) CHECK(x[i - 1] == Rational(1) / Rational(sylvester(i)));
            }
        });
        CHECK(tight_seen > 0);
    }
}

TEST_CASE("unit-partition dominance") {
    std::mt19937_64 rng(12);
    auto check = [](const RatVec& x) {
        Rational sx = 0, ss = 0;
        for (unsigned k = 1; k < x.size(); ++k) {
            sx += x[k - 1];
            ss += Rational(1) / Rational(sylvester(k));
            CHECK(sx <= ss);
            if (sx == ss)
                for (unsigned i = 1; i <= k; ++i) CHECK(x[i - 1] == Rational(1) / Rational(sylvester(i)));
        }
    };
    for (unsigned n = 3; n <= 9; ++n)
        for (int k = 0; k < 40; ++k) check(random_chi_point(n, rng));
    oracle::grid_chi(4, 84, check);
    for (unsigned n = 3; n <= 8; ++n) check(xbar(n, n));
}

TEST_CASE("squared last coordinate dominates the full-product optimum") {
    std::mt19937_64 rng(13);
    for (unsigned n = 2; n <= 9; ++n) {
        Rational opt = solve_over_candidates({n, 1, n}).value;
        for (int k = 0; k < 40; ++k) {
            auto x = random_chi_point(n, rng);
            CHECK(x[n - 1] * x[n - 1] >= opt);
        }
    }
}

TEST_CASE("candidate optimum against random feasible points") {
    std::mt19937_64 rng(14);
    for (unsigned n = 2; n <= 8; ++n) {
        std::vector<RatVec> xs;
        for (int k = 0; k < 60; ++k) xs.push_back(random_chi_point(n, rng));
        for (unsigned b = 1; b <= n; ++b)
            for (unsigned a = 1; a <= b; ++a) {
                IKInstance inst{n, a, b};
                Rational best = solve_over_candidates(inst).value;
                if (b + 1 >= n || a == b) {
                    for (const auto& x : xs) CHECK(best <= objective(inst, x));
                } else {
                    double num = numeric_refine(inst, 1e-9, 4, 3).value;
                    CHECK(best.convert_to<double>() >= num - 1e-9);
                }
            }
    }
}
