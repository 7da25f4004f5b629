// Acceptance run: one PASS/FAIL line per criterion AC1..AC11.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <tuple>

#include "latpol/equivalence.hpp"
#include "latpol/families.hpp"
#include "latpol/ik.hpp"
#include "latpol/lattice_points.hpp"
#include "latpol/simplex.hpp"
#include "latpol/sylvester.hpp"
#include "latpol/verifier.hpp"

using namespace latpol;

namespace {

// Pinned tolerances. Everything else is compared exactly.
constexpr double kNumericTol = 1e-6;
constexpr unsigned kSamples = 200;
constexpr long kLo = -4, kHi = 7;

Rational sm1(unsigned i) { return Rational(sylvester(i) - 1); }

Rational rpow(Rational b, unsigned e) {
    Rational r = 1;
    while (e--) r *= b;
    return r;
}

IntVec neg(IntVec v) {
    for (auto& x : v) x = -x;
    return v;
}

IntVec ones(unsigned d, long c) { return IntVec(d, BigInt(c)); }

struct Sample {
    IntegralSimplex S;  // translated so that o is the interior point
    BarycentricVector bc;
};

// Random one-point simplices, centred at their interior point, shared by several criteria.
const std::vector<Sample>& samples(unsigned d) {
    static std::map<unsigned, std::vector<Sample>> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    std::mt19937_64 rng(1000 + d);
    std::vector<Sample> out;
    for (unsigned k = 0; k < kSamples; ++k) {
        auto S = random_one_point_simplex(d, rng, kLo, kHi);
        auto in = interior_lattice_points(S.polytope());
        auto C = S.translated(neg(in.at(0)));
        auto bc = barycentric_coordinates(C, RatVec(d, 0));
        out.push_back({C, bc});
    }
    return cache.emplace(d, std::move(out)).first->second;
}

struct Outcome {
    bool pass = true;
    std::ostringstream info;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) info << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

using Criterion = std::function<void(Outcome&)>;

void ac1(Outcome& o) {
    const char* expect[] = {"2", "3", "7", "43", "1807", "3263443", "10650056950807", "113423713055421844361000443"};
    for (unsigned i = 1; i <= 8; ++i) o.require(sylvester(i) == BigInt(expect[i - 1]), "s_" + std::to_string(i));
    for (unsigned i = 1; i < 8; ++i) {
        BigInt s = sylvester(i);
        o.require(sylvester(i + 1) == s * s - s + 1, "recurrence at " + std::to_string(i));
        Rational sum = 0;
        for (unsigned j = 1; j <= i; ++j) sum += Rational(1) / Rational(sylvester(j));
        o.require(sum + Rational(1) / Rational(sylvester(i + 1) - 1) == 1, "unit sum at " + std::to_string(i));
    }
    for (unsigned i = 1; i <= 8; ++i)
        for (unsigned j = i + 1; j <= 8; ++j) o.require(gcd(sylvester(i), sylvester(j)) == 1, "coprime");
    o.info << "s_1..s_8 exact";
}

void ac2(Outcome& o) {
    for (unsigned d = 2; d <= 5; ++d)
        for (unsigned i = 1; i <= d + 1; ++i) {
            auto T = simplex_T(d, i);
            auto bc = barycentric_coordinates(T, RatVec(d, 1));
            std::string tag = "T(" + std::to_string(d) + "," + std::to_string(i) + ")";
            o.require(bc.sorted == xbar(d + 1, i), tag + " sorted beta");
            o.require(bc.sorted[i - 1] == 1 / (Rational(d - i + 2) * sm1(i)), tag + " beta_i");
        }
    std::size_t n = 0;
    for (unsigned d = 2; d <= 4; ++d)
        for (const auto& s : samples(d)) {
            for (unsigned i = 1; i <= d + 1; ++i)
                o.require(s.bc.sorted[i - 1] >= 1 / (Rational(d - i + 2) * sm1(i)), "sample beta bound");
            ++n;
        }
    o.info << n << " samples, d=2..5 families exact";
}

void ac3(Outcome& o) {
    const Rational expect[] = {Rational(12), Rational(147), Rational(271803, 5)};
    for (unsigned d = 3; d <= 5; ++d) {
        Rational v = volume(simplex_S(d, 1).polytope());
        o.require(v == 2 * sm1(d) * sm1(d) / Rational(factorial(d)), "vol S(d,1) formula");
        o.require(v == expect[d - 3], "vol S(d,1) value");
    }
    for (unsigned d = 3; d <= 4; ++d)
        for (unsigned l = 1; l <= d; ++l)
            o.require(max_face_volume(simplex_S(d, 1), l) == face_bound(d, l), "max face of S(d,1)");
    std::size_t n = 0;
    for (unsigned d = 3; d <= 4; ++d)
        for (const auto& s : samples(d)) {
            for (unsigned l = 1; l <= d; ++l) o.require(max_face_volume(s.S, l) <= face_bound(d, l), "sample face");
            o.require(volume(s.S.polytope()) <= 2 * sm1(d) * sm1(d) / Rational(factorial(d)), "sample volume");
            ++n;
        }
    o.info << "vol 12, 147, 271803/5; " << n << " samples within bounds";
}

void ac4(Outcome& o) {
    std::vector<IntVec> grid;
    for (long x = 0; x <= 6; ++x)
        for (long y = 0; y <= 6; ++y) grid.push_back({BigInt(x), BigInt(y)});
    Rational best = 0;
    std::size_t count = 0;
    for (std::size_t a = 0; a < grid.size(); ++a)
        for (std::size_t b = a + 1; b < grid.size(); ++b)
            for (std::size_t c = b + 1; c < grid.size(); ++c) {
                const auto &p = grid[a], &q = grid[b], &r = grid[c];
                if ((q[0] - p[0]) * (r[1] - p[1]) == (q[1] - p[1]) * (r[0] - p[0])) continue;
                auto P = from_vertices(2, {p, q, r});
                if (count_lattice_points(P, true, 2) != 1) continue;
                ++count;
                best = std::max(best, volume(P));
            }
    o.require(best == Rational(9, 2), "max area");
    o.info << count << " one-point triangles, max area " << to_string(best);
}

void ac5(Outcome& o) {
    auto s = solve_over_candidates({10, 1, 3});
    o.require(s.value == Rational(1, 1000), "IK10 value");
    o.require(s.minimizers == std::vector<unsigned>{1}, "IK10 minimizer");
    o.require(s.candidate_values.at(1) == Rational(1, 648), "l=2 value");
    o.require(s.candidate_values.at(2) == Rational(1, 288), "l=3 value");
    for (unsigned a = 1; a <= 2; ++a)
        o.require(solve_over_candidates({4, a, 3}).minimizers == std::vector<unsigned>{2, 3}, "n=4 tie");
    std::size_t n_inst = 0;
    double worst = 0;
    for (unsigned n = 2; n <= 10; ++n)
        for (unsigned b = 1; b <= n; ++b)
            for (unsigned a = 1; a <= b; ++a) {
                if (!(b + 1 >= n || a == b)) continue;
                IKInstance inst{n, a, b};
                double exact = solve_over_candidates(inst).value.convert_to<double>();
                double got = numeric_refine(inst, 1e-9, 8, 1).value;
                double err = std::abs(got - exact);
                worst = std::max(worst, err);
                std::ostringstream tag;
                tag << "numeric n=" << n << " a=" << a << " b=" << b << " err=" << err;
                o.require(err <= kNumericTol, tag.str());
                ++n_inst;
            }
    o.info << n_inst << " numeric instances, max |err| " << worst << " (tol " << kNumericTol << ")";
}

void ac6(Outcome& o) {
    const Rational expect[] = {Rational(36), Rational(1764), Rational(3261636)};
    for (unsigned d = 2; d <= 4; ++d) {
        auto T = simplex_T(d, d + 1).translated(ones(d, -1));
        Rational M = mahler_product(T);
        o.require(M == rpow(sm1(d + 1), 2), "T mahler formula");
        o.require(M == expect[d - 2], "T mahler value");
        o.require(mahler_product_geometric(T) == M, "T mahler geometric");
    }
    for (unsigned d = 2; d <= 5; ++d) {
        std::vector<IntVec> V;
        IntVec last(d, BigInt(-1));
        for (unsigned i = 0; i < d; ++i) {
            IntVec e(d, BigInt(0));
            e[i] = 1;
            V.push_back(e);
        }
        V.push_back(last);
        o.require(mahler_product(IntegralSimplex(V)) == rpow(Rational(d + 1), d + 1), "centroid");
    }
    std::size_t n = 0;
    for (unsigned d = 2; d <= 4; ++d)
        for (const auto& s : samples(d)) {
            Rational M = mahler_product(s.S);
            o.require(M >= rpow(Rational(d + 1), d + 1) && M <= rpow(sm1(d + 1), 2), "sample mahler");
            ++n;
        }
    o.info << "36, 1764, 3261636; centroid (d+1)^(d+1); " << n << " samples between bounds";
}

void ac7(Outcome& o) {
    const Rational expect[] = {Rational(5), Rational(41), Rational(1805)};
    for (unsigned d = 2; d <= 4; ++d) {
        Rational ca = coefficient_of_asymmetry(simplex_T(d, d + 1).polytope(), ones(d, 1));
        o.require(ca == Rational(sylvester(d + 1) - 2), "ca formula");
        o.require(ca == expect[d - 2], "ca value");
    }
    std::size_t n = 0;
    for (unsigned d = 2; d <= 4; ++d)
        for (const auto& s : samples(d)) {
            Rational b = s.bc.sorted[d];
            o.require(coefficient_of_asymmetry(s.S.polytope(), IntVec(d, BigInt(0))) == (1 - b) / b, "ca identity");
            ++n;
        }
    o.info << "5, 41, 1805; identity on " << n << " samples";
}

void ac8(Outcome& o) {
    for (unsigned d = 2; d <= 5; ++d)
        for (unsigned i = 1; i <= d + 1; ++i) {
            auto D = polar_dual(simplex_T(d, i).translated(ones(d, -1)).polytope());
            o.require(D.is_integral(), "dual integral");
            o.require(volume(D) == sm1(i) * Rational(d - i + 2) / Rational(factorial(d)), "dual volume");
        }
    for (unsigned d = 3; d <= 4; ++d) {
        auto D = polar_dual(dual_seed(d));
        o.require(D.is_integral(), "seed dual integral");
        if (!D.is_integral()) continue;
        std::vector<IntVec> V;
        for (const auto& v : D.vertices()) V.push_back(to_integer(v));
        auto w = unimodular_equivalent(IntegralSimplex(V), simplex_S(d, 1));
        o.require(w.has_value(), "seed dual equivalent to S(d,1)");
    }
    o.info << "d=2..5 duals integral with exact volume; seed duals equivalent for d=3,4";
}

void ac9(Outcome& o) {
    for (unsigned d = 2; d <= 4; ++d) {
        for (unsigned k = 0; k <= 2; ++k)
            o.require(BigInt(lattice_diameter(simplex_S(d, k).polytope())) == BigInt(k + 1) * (sylvester(d) - 1),
                      "ld S(d,k)");
        o.require(is_inclusion_maximal_lattice_free(simplex_S(d, 0).polytope()), "Pim S(d,0)");
    }
    std::mt19937_64 rng(7);
    std::size_t n = 0;
    for (unsigned d = 2; d <= 3; ++d) {
        BigInt s = sylvester(d) - 1;
        for (int k = 0; k < 50; ++k) {
            auto P = random_polytope_with_interior(d, rng, kLo, kHi, 4);
            auto in = interior_lattice_points(P);
            BigInt ld = lattice_diameter(P);
            BigInt ldi = collinear_diameter(in);
            BigInt G = lattice_points(P).size();
            o.require(G <= pow(ld + 1, d), "G^(1/d) - 1 <= ld");
            o.require(ld <= (ldi + 2) * s, "ld <= (ld(P') + 2)(s_d - 1)");
            o.require(ldi + 2 <= BigInt(in.size() + 1), "ld(P') + 2 <= G(P') + 1");
            ++n;
        }
    }
    o.info << "S(d,k) diameters exact for d<=4, k<=2; chain on " << n << " samples";
}

void ac10(Outcome& o) {
    IntegralSimplex P2({{BigInt(1), BigInt(0)}, {BigInt(0), BigInt(1)}, {BigInt(-1), BigInt(-1)}});
    o.require(anticanonical_degree(P2) == 9, "P2 degree");

    std::vector<IntegralSimplex> pool;
    for (unsigned j = 1; j <= 4; ++j) pool.push_back(simplex_T(3, j).translated(ones(3, -1)));
    {
        auto S = simplex_S(3, 1);
        pool.push_back(S.translated(neg(interior_lattice_points(S.polytope()).at(0))));
    }
    pool.push_back(IntegralSimplex::from_polytope(dual_seed(3)));
    pool.push_back(IntegralSimplex({{BigInt(1), BigInt(0), BigInt(0)},
                                    {BigInt(0), BigInt(1), BigInt(0)},
                                    {BigInt(0), BigInt(0), BigInt(1)},
                                    {BigInt(-3), BigInt(-1), BigInt(-1)}}));
    for (const auto& s : samples(3)) pool.push_back(s.S);
    Rational best = 0;
    for (const auto& S : pool) {
        Rational t = anticanonical_degree(S);
        o.require(t <= 72, "d=3 pool degree");
        best = std::max(best, t);
    }
    o.require(best == 72, "72 attained");
    auto seed3 = IntegralSimplex::from_polytope(dual_seed(3));
    o.require(anticanonical_degree(seed3) == 72, "seed degree d=3");
    for (unsigned d = 3; d <= 4; ++d) {
        auto seed = IntegralSimplex::from_polytope(dual_seed(d));
        if (d == 4) o.require(anticanonical_degree(seed) == 2 * rpow(sm1(4), 2), "seed degree d=4");
        o.require(max_invariant_curve_degree(seed) == 2 * sm1(d), "curve degree");
    }
    o.info << "9; max " << to_string(best) << " over " << pool.size() << " d=3 simplices; 3528; curves 12, 84";
}

void ac11(Outcome& o) {
    std::size_t runs = 0;
    for (const auto& id : check_ids())
        for (int delta : {-1, 1}) {
            SuiteConfig cfg;
            cfg.samples = 3;
            cfg.mutations[id] = delta;
            auto rep = run_suite(cfg);
            std::size_t own = 0;
            for (const auto& r : rep.records)
                if (r.verdict == Verdict::Violated && r.id == id) ++own;
            o.require(own >= 1, id + " " + std::to_string(delta) + " not caught");
            ++runs;
        }
    o.info << runs << " mutated suite runs";
}

}  // namespace

int main() {
    set_sylvester_max_index(20);
    // Runtime limits in seconds; 0 means none.
    const std::vector<std::tuple<std::string, Criterion, double>> all{
        {"AC1", ac1, 0.001}, {"AC2", ac2, 60},  {"AC3", ac3, 120},  {"AC4", ac4, 10},
        {"AC5", ac5, 120},   {"AC6", ac6, 60},  {"AC7", ac7, 0},    {"AC8", ac8, 120},
        {"AC9", ac9, 120},   {"AC10", ac10, 0}, {"AC11", ac11, 0},
    };
    int failed = 0;
    for (const auto& [name, fn, limit] : all) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            fn(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.info << "exception: " << e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (limit > 0 && secs > limit) {
            o.pass = false;
            o.info << "; over the " << limit << " s limit";
        }
        if (!o.pass) ++failed;
        std::cout << name << ' ' << (o.pass ? "PASS" : "FAIL") << "  " << o.info.str() << "  [" << secs << " s]"
                  << std::endl;
    }
    std::cout << (failed ? "acceptance: " + std::to_string(failed) + " failed" : std::string("acceptance: all passed"))
              << std::endl;
    return failed ? 1 : 0;
}
