#include "latpol/verifier.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <numeric>
#include <set>

#include "latpol/equivalence.hpp"
#include "latpol/families.hpp"
#include "latpol/ik.hpp"
#include "latpol/io.hpp"
#include "latpol/lattice_points.hpp"
#include "latpol/sylvester.hpp"

namespace latpol {

using nlohmann::json;

namespace {

const std::vector<std::string> kCheckIds = {
    "asymmetry_bound",       "asymmetry_identity",    "barycentric_lower_bound", "blichfeldt",
    "dual_face_volume",      "duality",               "face_point_count",        "face_volume_bound",
    "face_vs_barycentric",   "lattice_diameter",      "lattice_free_diameter",   "mahler_product",
    "min_face_volume_gamma", "min_face_volume_nu",    "minkowski",               "polygon_max_area",
    "product_sum",           "sylvester_identities",  "toric_degree",            "volume_via_asymmetry",
};

std::string str(const Rational& q) { return to_string(q); }

Rational s(unsigned i) { return Rational(sylvester(i)); }

Rational rpow(const Rational& q, unsigned e) {
    Rational r = 1;
    for (unsigned i = 0; i < e; ++i) r *= q;
    return r;
}

Rational fact(std::size_t n) { return Rational(factorial(static_cast<unsigned>(n))); }

CheckRecord make_record(const std::string& id, const std::string& inst, const std::string& rel,
                        const std::string& lhs, const std::string& rhs, Verdict v) {
    CheckRecord r;
    r.id = id;
    r.instance = inst;
    r.relation = rel;
    r.lhs = lhs;
    r.rhs = rhs;
    r.verdict = v;
    return r;
}

IntVec negated(const IntVec& v) {
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

// Collects results. Passing instances are folded into one record per (id, group);
// violations are kept individually with their witness.
class Ctx {
public:
    explicit Ctx(const SuiteConfig& cfg) : cfg_(cfg) {}

    Rational bound(const std::string& id, const Rational& v) const {
        auto it = cfg_.mutations.find(id);
        return it == cfg_.mutations.end() ? v : v + it->second;
    }

    void le(const std::string& id, const std::string& group, const std::string& inst, const Rational& lhs,
            const Rational& rhs, const json& witness) {
        if (lhs > rhs) {
            violation(id, inst, "<=", str(lhs), str(rhs), witness);
            return;
        }
        auto& g = groups_[{id, group}];
        g.relation = "<=";
        ++g.count;
        if (lhs == rhs) ++g.equal;
        Rational gap = lhs - rhs;
        if (!g.has || gap > g.gap) {
            g.has = true;
            g.gap = gap;
            g.lhs = str(lhs);
            g.rhs = str(rhs);
            g.tightest = inst;
            g.witness = witness;
        }
    }

    void eq(const std::string& id, const std::string& group, const std::string& inst, const Rational& lhs,
            const Rational& rhs, const json& witness) {
        if (lhs != rhs) {
            violation(id, inst, "==", str(lhs), str(rhs), witness);
            return;
        }
        auto& g = groups_[{id, group}];
        g.relation = "==";
        ++g.count;
        ++g.equal;
        if (!g.has) {
            g.has = true;
            g.lhs = str(lhs);
            g.rhs = str(rhs);
            g.tightest = inst;
            g.witness = witness;
        }
    }

    void holds(const std::string& id, const std::string& group, const std::string& inst, bool ok,
               const std::string& what, const json& witness) {
        if (!ok) {
            violation(id, inst, "holds", what, "true", witness);
            return;
        }
        auto& g = groups_[{id, group}];
        g.relation = "holds";
        ++g.count;
        if (!g.has) {
            g.has = true;
            g.lhs = what;
            g.rhs = "true";
            g.tightest = inst;
        }
    }

    void observe(const std::string& id, const std::string& inst, const std::string& lhs, const std::string& rhs,
                 const std::string& note, const json& witness = nullptr) {
        CheckRecord r = make_record(id, inst, "observation", lhs, rhs, Verdict::Observation);
        r.note = note;
        r.witness = witness;
        records_.push_back(std::move(r));
    }

    void skip(const std::string& id, const std::string& inst, const std::string& why) {
        CheckRecord r = make_record(id, inst, "", "", "", Verdict::Skipped);
        r.note = why;
        records_.push_back(std::move(r));
    }

    std::vector<CheckRecord> finish() {
        for (auto& [key, g] : groups_) {
            CheckRecord r = make_record(key.first, key.second, g.relation, g.lhs, g.rhs, g.equal ? Verdict::Equality : Verdict::Holds);
            r.count = g.count;
            r.equal = g.equal;
            r.witness = g.witness;
            r.note = (g.relation == "<=" ? "tightest: " : "first: ") + g.tightest;
            records_.push_back(std::move(r));
        }
        groups_.clear();
        return std::move(records_);
    }

private:
    struct Group {
        std::string relation;
        std::size_t count = 0, equal = 0;
        bool has = false;
        Rational gap;
        std::string lhs, rhs, tightest;
        json witness;
    };

    void violation(const std::string& id, const std::string& inst, const char* rel, const std::string& lhs,
                   const std::string& rhs, const json& witness) {
        CheckRecord r = make_record(id, inst, rel, lhs, rhs, Verdict::Violated);
        r.witness = witness.is_null() ? json{{"instance", inst}} : witness;
        records_.push_back(std::move(r));
    }

    const SuiteConfig& cfg_;
    std::map<std::pair<std::string, std::string>, Group> groups_;
    std::vector<CheckRecord> records_;
};

// Runs fn, turning budget exhaustion into a skipped record.
template <class F>
void guarded(Ctx& ctx, const std::string& id, const std::string& inst, F&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded && e.kind() != ErrorKind::HullBudgetExceeded) throw;
        ctx.skip(id, inst, e.what());
    }
}

IntVec unique_interior_point(const IntegralPolytope& P) {
    auto in = interior_lattice_points(P);
    if (in.size() != 1) throw Error(ErrorKind::MultipleInteriorPoints, "expected exactly one interior lattice point");
    return in[0];
}

IntegralSimplex centered(const IntegralSimplex& S) { return S.translated(negated(unique_interior_point(S.polytope()))); }
IntegralPolytope centered(const IntegralPolytope& P) { return P.translated(negated(unique_interior_point(P))); }

struct SimplexItem {
    std::string name;
    IntegralSimplex S;  // interior lattice point at o
    bool pool = false;  // constructed or scrambled member of the finite witness pool
};

struct PolytopeItem {
    std::string name;
    IntegralPolytope P;
    bool pool = false;
};

// Volumes of all faces, indexed by vertex bitmask.
std::vector<Rational> face_volumes(const IntegralSimplex& S) {
    const std::size_t n = S.dim() + 1;
    std::vector<Rational> vol(std::size_t(1) << n);
    for (std::size_t mask = 1; mask < vol.size(); ++mask) {
        FaceRef F;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) F.push_back(i);
        vol[mask] = normalized_volume(S, F);
    }
    return vol;
}

std::vector<std::size_t> masks_of_size(std::size_t n, std::size_t k, std::size_t within) {
    std::vector<std::size_t> out;
    for (std::size_t m = 1; m < (std::size_t(1) << n); ++m)
        if ((m & ~within) == 0 && static_cast<std::size_t>(__builtin_popcountll(m)) == k) out.push_back(m);
    return out;
}

Rational gamma_value(const std::vector<Rational>& vol, std::size_t n, unsigned h, unsigned g) {
    std::size_t all = (std::size_t(1) << n) - 1;
    bool first = true;
    Rational best;
    for (auto H : masks_of_size(n, h + 1, all)) {
        Rational mx = 0;
        for (auto G : masks_of_size(n, g + 1, H)) mx = std::max(mx, vol[G]);
        if (first || mx < best) best = mx;
        first = false;
    }
    return best;
}

Rational nu_value(const std::vector<Rational>& vol, std::size_t n, unsigned h) {
    bool first = true;
    Rational best;
    for (auto H : masks_of_size(n, h + 1, (std::size_t(1) << n) - 1)) {
        if (first || vol[H] < best) best = vol[H];
        first = false;
    }
    return best;
}

// Barycentric coordinates of o in a simplex with rational vertices.
RatVec barycentric_of_origin(const std::vector<RatVec>& V) {
    const std::size_t d = V[0].size();
    RatMatrix A(d + 1, d + 1);
    RatVec b(d + 1, Rational(0));
    for (std::size_t j = 0; j <= d; ++j) {
        for (std::size_t i = 0; i < d; ++i) A(i, j) = V[j][i];
        A(d, j) = 1;
    }
    b[d] = 1;
    RatVec beta = solve_linear(A, b);
    std::sort(beta.begin(), beta.end(), std::greater<>());
    return beta;
}

// conv{e_1, ..., e_d, -(1, ..., 1)}: every barycentric coordinate of o is 1/(d+1).
IntegralSimplex centroid_simplex(unsigned d) {
    std::vector<IntVec> V;
    for (unsigned i = 0; i < d; ++i) {
        IntVec e(d, BigInt(0));
        e[i] = 1;
        V.push_back(e);
    }
    V.push_back(IntVec(d, BigInt(-1)));
    return IntegralSimplex(V);
}

// Ray generators of P(3,1,1,1): 3 v_0 + v_1 + v_2 + v_3 = 0.
IntegralSimplex weighted_311() {
    return IntegralSimplex({{BigInt(1), BigInt(0), BigInt(0)},
                            {BigInt(0), BigInt(1), BigInt(0)},
                            {BigInt(0), BigInt(0), BigInt(1)},
                            {BigInt(-3), BigInt(-1), BigInt(-1)}});
}

struct DimensionContext {
    const SuiteConfig& cfg;
    unsigned d;
    Ctx& ctx;
    IntegralSimplex T_top;        // T^d_{1,d+1}, centered
    IntegralSimplex S1;           // S^d_1, centered
    std::optional<IntegralSimplex> seed;  // dual_seed(d) as a simplex, centered
    std::vector<IntegralSimplex> S_k;     // S^d_k for k = 0, 1, 2, uncentered
    std::vector<IntegralSimplex> degree_attainers;  // all simplices of maximal anticanonical degree
    std::map<unsigned, std::pair<std::size_t, std::size_t>> face_attainers;  // l -> (attainers, of which S(d,1))
};

std::string dim_tag(unsigned d) { return "d=" + std::to_string(d); }

void check_sylvester(Ctx& ctx) {
    const std::string id = "sylvester_identities";
    std::vector<BigInt> seq;
    for (unsigned i = 1; i < kSylvesterMaxIndex; ++i) {
        std::string inst = "i=" + std::to_string(i);
        Rational si = s(i);
        ctx.eq(id, "recurrence", inst, s(i + 1), ctx.bound(id, si * si - si + 1), nullptr);
        Rational prod = 1, sum = 0;
        for (unsigned j = 1; j <= i; ++j) {
            sum += 1 / s(j);
            if (j < i) prod *= s(j);
        }
        ctx.eq(id, "product form", inst, si, ctx.bound(id, prod + 1), nullptr);
        ctx.eq(id, "unit sum", inst, sum + 1 / (s(i + 1) - 1), ctx.bound(id, Rational(1)), nullptr);
        bool coprime = true;
        for (const auto& x : seq) coprime = coprime && gcd(x, sylvester(i)) == 1;
        seq.push_back(sylvester(i));
        ctx.holds(id, "pairwise coprime", inst, coprime, "gcd(s_i, s_j) = 1 for j < i", nullptr);
    }
}

// Whether the candidate minimizers of x_a...x_b always lie in {a, b} when b < n - 1.
void observe_minimizer_location(Ctx& ctx) {
    for (unsigned n = 4; n <= 10; ++n) {
        std::size_t total = 0, outside = 0;
        std::string first;
        for (unsigned b = 1; b + 1 < n; ++b)
            for (unsigned a = 1; a <= b; ++a) {
                IKSolution sol = solve_over_candidates({n, a, b});
                ++total;
                bool in = std::all_of(sol.minimizers.begin(), sol.minimizers.end(),
                                      [&](unsigned l) { return l == a || l == b; });
                if (!in) {
                    ++outside;
                    if (first.empty()) first = "a=" + std::to_string(a) + " b=" + std::to_string(b);
                }
            }
        ctx.observe("open_minimizer_location", "n=" + std::to_string(n), std::to_string(outside),
                    std::to_string(total),
                    "instances with b < n-1 whose minimizers leave {a, b}" + (first.empty() ? "" : ", first " + first));
    }
}

// Checks that only need a simplex with o as its unique interior lattice point.
void check_simplex(DimensionContext& dc, const SimplexItem& item, const std::string& group) {
    Ctx& ctx = dc.ctx;
    const unsigned d = dc.d;
    const IntegralSimplex& S = item.S;
    const std::size_t n = d + 1;
    const json W = to_json(S.polytope());
    const std::string& inst = item.name;
    const std::string tag = dim_tag(d) + " " + group;

    BarycentricVector bv = barycentric_coordinates(S, RatVec(d, Rational(0)));
    const RatVec& beta = bv.sorted;

    {
        const std::string id = "barycentric_lower_bound";
        for (unsigned i = 1; i <= n; ++i)
            ctx.le(id, tag, inst + " i=" + std::to_string(i), ctx.bound(id, barycentric_lower_bound(d, i)),
                   beta[i - 1], W);
        if (beta[d] == ctx.bound(id, barycentric_lower_bound(d, d + 1)))
            ctx.holds(id, dim_tag(d) + " smallest coordinate attained only by T(d,d+1)", inst,
                      unimodular_equivalent(S, dc.T_top).has_value(), "equivalent to T(d,d+1)", W);
    }
    {
        const std::string id = "product_sum";
        Rational prod = 1;
        for (std::size_t j = 1; j <= d; ++j) {
            prod *= beta[j - 1];
            Rational tail = 0;
            for (std::size_t i = j; i <= d; ++i) tail += beta[i];
            ctx.le(id, tag, inst + " j=" + std::to_string(j), prod, ctx.bound(id, tail), W);
        }
    }
    auto vol = face_volumes(S);
    std::vector<std::size_t> pos(n);
    for (std::size_t k = 0; k < n; ++k) pos[bv.order[k]] = k;
    {
        const std::string id = "face_vs_barycentric";
        for (std::size_t mask = 1; mask < vol.size(); ++mask) {
            std::size_t l = __builtin_popcountll(mask) - 1;
            if (l == 0) continue;
            std::vector<std::size_t> p;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) p.push_back(pos[i]);
            std::sort(p.begin(), p.end());
            Rational den = fact(l);
            for (std::size_t k = 0; k < l; ++k) den *= beta[p[k]];
            ctx.le(id, tag, inst + " face " + std::to_string(mask), vol[mask], ctx.bound(id, 1 / den), W);
        }
    }
    if (d >= 3) {
        const std::string id = "face_volume_bound";
        for (unsigned l = 1; l <= d; ++l) {
            Rational mx = 0;
            for (std::size_t mask : masks_of_size(n, l + 1, vol.size() - 1)) mx = std::max(mx, vol[mask]);
            Rational b = ctx.bound(id, face_bound(d, l));
            ctx.le(id, tag, inst + " l=" + std::to_string(l), mx, b, W);
            if (mx == face_bound(d, l) && d >= 4) {
                bool eqv = unimodular_equivalent(S, dc.S1).has_value();
                if (l == 1 || l == d)
                    ctx.holds(id, dim_tag(d) + " attainers are S(d,1)", inst + " l=" + std::to_string(l), eqv,
                              "equivalent to S(d,1)", W);
                else {
                    auto& [total, same] = dc.face_attainers[l];
                    ++total;
                    if (eqv) ++same;
                }
            }
        }
    }
    if (d >= 4) {
        const std::string nid = "min_face_volume_nu", gid = "min_face_volume_gamma";
        for (unsigned h = 1; h < d; ++h) {
            Rational nu = nu_value(vol, n, h);
            Rational den = fact(h);
            for (unsigned i = 0; i < h; ++i) den *= beta[i];
            ctx.le(nid, tag + " vs coordinates", inst + " h=" + std::to_string(h), nu, ctx.bound(nid, 1 / den), W);
            IKSolution ik = solve_over_candidates({static_cast<unsigned>(n), 1, h});
            ctx.le(nid, tag + " vs optimum", inst + " h=" + std::to_string(h), nu,
                   ctx.bound(nid, 1 / (fact(h) * ik.value)), W);
            for (unsigned g = 1; g < h; ++g) {
                Rational best = 0;
                for (unsigned l = 1; l <= h; ++l) best = std::max(best, gamma_closed_form(d, h, g, l));
                ctx.le(gid, tag, inst + " h=" + std::to_string(h) + " g=" + std::to_string(g),
                       gamma_value(vol, n, h, g), ctx.bound(gid, best), W);
            }
        }
    }
    {
        const std::string id = "mahler_product";
        Rational M = mahler_product(S);
        ctx.le(id, tag + " lower", inst, ctx.bound(id, rpow(Rational(d + 1), d + 1)), M, W);
        ctx.le(id, tag + " upper", inst, M, ctx.bound(id, rpow(s(d + 1) - 1, 2)), W);
        ctx.eq(id, tag + " geometric", inst, mahler_product_geometric(S), M, W);
        if (M == rpow(s(d + 1) - 1, 2))
            ctx.holds(id, dim_tag(d) + " upper attained only by T(d,d+1)", inst,
                      unimodular_equivalent(S, dc.T_top).has_value(), "equivalent to T(d,d+1)", W);
    }
    RationalPolytope D = polar_dual(S.polytope());
    if (d >= 4) {
        const std::string id = "dual_face_volume";
        const auto& V = D.vertices();
        for (unsigned l = 1; l <= d; ++l) {
            Rational mx = 0;
            for (std::size_t mask : masks_of_size(n, l + 1, (std::size_t(1) << n) - 1)) {
                std::vector<RatVec> F;
                for (std::size_t i = 0; i < n; ++i)
                    if (mask >> i & 1) F.push_back(V[i]);
                mx = std::max(mx, normalized_volume(F));
            }
            ctx.le(id, tag, inst + " l=" + std::to_string(l), mx, ctx.bound(id, face_bound(d, l)), W);
        }
    }
    {
        const std::string id = "asymmetry_identity";
        Rational ca = coefficient_of_asymmetry(S.polytope(), IntVec(d, BigInt(0)));
        ctx.eq(id, tag, inst, ca, ctx.bound(id, (1 - beta[d]) / beta[d]), W);
    }
    {
        const std::string id = "duality";
        auto in = interior_lattice_points(D);
        bool only_o = in.size() == 1 && std::all_of(in[0].begin(), in[0].end(), [](const BigInt& x) { return x == 0; });
        ctx.holds(id, tag + " dual interior is {o}", inst, only_o, "interior lattice points of the dual = {o}", W);
        ctx.holds(id, tag + " barycentric coordinates of o agree", inst, barycentric_of_origin(D.vertices()) == beta,
                  "sorted coordinates in S and S* agree", W);
        RationalPolytope DD = polar_dual(D);
        ctx.holds(id, tag + " involution", inst, DD.vertices() == S.polytope().rational_vertices(), "S** = S", W);
    }
    {
        const std::string id = "toric_degree";
        Rational deg = anticanonical_degree(S);
        Rational cap = d == 2 ? Rational(9) : 2 * rpow(s(d) - 1, 2);
        ctx.le(id, tag + " anticanonical", inst, deg, ctx.bound(id, cap), W);
        auto equivalent_to_any = [&](const std::vector<IntegralSimplex>& list) {
            return std::any_of(list.begin(), list.end(),
                               [&](const IntegralSimplex& E) { return unimodular_equivalent(S, E).has_value(); });
        };
        if (deg == cap)
            ctx.holds(id, dim_tag(d) + " anticanonical attained only by the listed simplices", inst,
                      equivalent_to_any(dc.degree_attainers), "equivalent to a listed extremal simplex", W);
        if (d >= 3) {
            Rational curve = max_invariant_curve_degree(S);
            ctx.le(id, tag + " curve", inst, curve, ctx.bound(id, 2 * (s(d) - 1)), W);
            if (curve == 2 * (s(d) - 1) && dc.seed)
                ctx.holds(id, dim_tag(d) + " curve degree attained only by the dual seed", inst,
                          unimodular_equivalent(S, *dc.seed).has_value(), "equivalent to the dual seed", W);
        }
    }
}

// Lattice point counts of faces against volumes.
void check_face_points(DimensionContext& dc, const SimplexItem& item, const std::string& group) {
    Ctx& ctx = dc.ctx;
    const unsigned d = dc.d;
    const IntegralSimplex& S = item.S;
    const std::size_t n = d + 1;
    const std::string id = "face_point_count";
    const json W = to_json(S.polytope());
    const std::string tag = dim_tag(d) + " " + group;
    auto pts = lattice_points(S.polytope());
    std::vector<std::size_t> support;
    for (const auto& p : pts) {
        RatVec x = to_rational(p);
        std::size_t m = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (facet_value(S.opposite_facet(i), x) != 0) m |= std::size_t(1) << i;
        support.push_back(m);
    }
    auto vol = face_volumes(S);
    for (std::size_t mask = 1; mask < vol.size(); ++mask) {
        std::size_t l = __builtin_popcountll(mask) - 1;
        if (l == 0) continue;
        std::size_t cnt = 0;
        for (auto m : support)
            if ((m & ~mask) == 0) ++cnt;
        Rational mid = Rational(l) + fact(l) * vol[mask];
        std::string fi = item.name + " face " + std::to_string(mask);
        ctx.le(id, tag + " points", fi, Rational(cnt), ctx.bound(id, mid), W);
        if (d >= 3)
            ctx.le(id, tag + " volume", fi, mid, ctx.bound(id, Rational(l) + fact(l) * face_bound(d, l)), W);
    }
}

// Checks on polytopes with o as the unique interior lattice point.
void check_one_point_polytope(DimensionContext& dc, const PolytopeItem& item, const std::string& group) {
    Ctx& ctx = dc.ctx;
    const unsigned d = dc.d;
    const IntegralPolytope& P = item.P;
    const json W = to_json(P);
    const std::string tag = dim_tag(d) + " " + group;
    Rational ca = coefficient_of_asymmetry(P, IntVec(d, BigInt(0)));
    {
        const std::string id = "asymmetry_bound";
        Rational b = ctx.bound(id, s(d + 1) - 2);
        ctx.le(id, tag, item.name, ca, b, W);
        if (ca == s(d + 1) - 2)
            ctx.holds(id, dim_tag(d) + " attained only by T(d,d+1)", item.name, equivalent_to(P, dc.T_top),
                      "equivalent to T(d,d+1)", W);
    }
    {
        const std::string id = "volume_via_asymmetry";
        Rational v = volume(P);
        ctx.le(id, tag + " Mahler", item.name, v, rpow(ctx.bound(id, 1 + ca), d), W);
        ctx.le(id, tag + " Sylvester", item.name, v, rpow(ctx.bound(id, s(d + 1) - 1), d), W);
    }
}

// Lattice polytope checks valid for any full-dimensional lattice polytope.
void check_lattice_polytope(DimensionContext& dc, const PolytopeItem& item, const std::string& group) {
    Ctx& ctx = dc.ctx;
    const unsigned d = dc.d;
    const IntegralPolytope& P = item.P;
    const json W = to_json(P);
    const std::string tag = dim_tag(d) + " " + group;
    auto pts = lattice_points(P);
    auto in = interior_lattice_points(P);
    Rational v = volume(P);
    {
        const std::string id = "blichfeldt";
        ctx.le(id, tag, item.name, Rational(pts.size()), ctx.bound(id, Rational(d) + fact(d) * v), W);
    }
    long long ld = lattice_diameter(P.facets(), pts);
    if (!in.empty()) {
        const std::string id = "lattice_diameter";
        long long ldp = collinear_diameter(in);
        Rational b = Rational(ldp + 2) * ctx.bound(id, s(d) - 1);
        ctx.le(id, tag, item.name, Rational(ld), b, W);
        Rational G = Rational(pts.size());
        ctx.le(id, tag + " count vs diameter", item.name, G, rpow(Rational(ld + 1), d), W);
        ctx.le(id, tag + " interior diameter vs count", item.name, Rational(ldp + 1), Rational(in.size()), W);
        if (Rational(ld) == Rational(ldp + 2) * (s(d) - 1)) {
            std::size_t k = in.size();
            bool eqv = equivalent_to(P, k < dc.S_k.size() ? dc.S_k[k] : simplex_S(d, static_cast<unsigned>(k)));
            ctx.holds(id, dim_tag(d) + " attained only by S(d,k)", item.name, eqv, "equivalent to S(d,k)", W);
        }
    }
}

void check_lattice_free(DimensionContext& dc, const PolytopeItem& item, const std::string& group) {
    Ctx& ctx = dc.ctx;
    const unsigned d = dc.d;
    const std::string id = "lattice_free_diameter";
    const json W = to_json(item.P);
    long long ld = lattice_diameter(item.P);
    ctx.le(id, dim_tag(d) + " " + group, item.name, Rational(ld), ctx.bound(id, s(d) - 1), W);
    if (Rational(ld) == s(d) - 1)
        ctx.holds(id, dim_tag(d) + " attained only by S(d,0)", item.name, equivalent_to(item.P, dc.S_k[0]),
                  "equivalent to S(d,0)", W);
}

void check_symmetric(DimensionContext& dc, const PolytopeItem& item, const std::string& group) {
    const std::string id = "minkowski";
    dc.ctx.le(id, dim_tag(dc.d) + " " + group, item.name, volume(item.P),
              dc.ctx.bound(id, rpow(Rational(2), dc.d)), to_json(item.P));
}

// Equalities that make every bound sharp; these are what a perturbed constant breaks.
void check_witnesses(DimensionContext& dc) {
    Ctx& ctx = dc.ctx;
    const unsigned d = dc.d;
    const std::string tag = dim_tag(d) + " witnesses";
    for (unsigned i = 1; i <= d + 1; ++i) {
        const std::string id = "barycentric_lower_bound";
        IntegralSimplex T = centered(simplex_T(d, i));
        BarycentricVector bv = barycentric_coordinates(T, RatVec(d, Rational(0)));
        std::string inst = "T(" + std::to_string(d) + "," + std::to_string(i) + ")";
        json W = to_json(T.polytope());
        ctx.eq(id, tag, inst, bv.sorted[i - 1], ctx.bound(id, barycentric_lower_bound(d, i)), W);
        RatVec xb = xbar(d + 1, i);
        for (std::size_t k = 0; k <= d; ++k)
            ctx.eq(id, tag + " coordinate pattern", inst + " k=" + std::to_string(k + 1), bv.sorted[k], xb[k], W);

        Rational dv = volume(polar_dual(T.polytope()));
        RationalPolytope D = polar_dual(T.polytope());
        ctx.holds("duality", tag + " dual of T(d,i) - e integral", inst, D.is_integral(), "dual is integral", W);
        ctx.eq("duality", tag + " dual of T(d,i) - e volume", inst, dv, ctx.bound("duality", dual_T_volume(d, i)), W);
    }
    {
        json W = to_json(dc.T_top.polytope());
        BarycentricVector bv = barycentric_coordinates(dc.T_top, RatVec(d, Rational(0)));
        Rational prod = 1;
        for (std::size_t j = 1; j <= d; ++j) {
            prod *= bv.sorted[j - 1];
            Rational tail = 0;
            for (std::size_t i = j; i <= d; ++i) tail += bv.sorted[i];
            ctx.eq("product_sum", tag, "T(d,d+1) j=" + std::to_string(j), prod, ctx.bound("product_sum", tail), W);
        }
        Rational M = mahler_product(dc.T_top);
        ctx.eq("mahler_product", tag + " upper", "T(d,d+1)", M, ctx.bound("mahler_product", rpow(s(d + 1) - 1, 2)), W);
        Rational ca = coefficient_of_asymmetry(dc.T_top.polytope(), IntVec(d, BigInt(0)));
        ctx.eq("asymmetry_bound", tag, "T(d,d+1)", ca, ctx.bound("asymmetry_bound", s(d + 1) - 2), W);
        ctx.eq("asymmetry_identity", tag, "T(d,d+1)", ca,
               ctx.bound("asymmetry_identity", (1 - bv.sorted[d]) / bv.sorted[d]), W);
        ctx.eq("volume_via_asymmetry", tag + " Sylvester base is 1 + ca(T(d,d+1))", "T(d,d+1)", 1 + ca,
               ctx.bound("volume_via_asymmetry", s(d + 1) - 1), W);
    }
    {
        IntegralSimplex C = centroid_simplex(d);
        json W = to_json(C.polytope());
        ctx.eq("mahler_product", tag + " lower", "centroid simplex", mahler_product(C),
               ctx.bound("mahler_product", rpow(Rational(d + 1), d + 1)), W);
        if (d == 2)
            ctx.eq("toric_degree", tag + " anticanonical", "centroid simplex", anticanonical_degree(C),
                   ctx.bound("toric_degree", Rational(9)), W);
    }
    {
        json W = to_json(dc.S1.polytope());
        BarycentricVector bv = barycentric_coordinates(dc.S1, RatVec(d, Rational(0)));
        std::size_t full = (std::size_t(1) << (d + 1)) - 1;
        Rational den = fact(d);
        for (std::size_t k = 0; k < d; ++k) den *= bv.sorted[k];
        auto vol = face_volumes(dc.S1);
        ctx.eq("face_vs_barycentric", tag, "S(d,1) full face", vol[full], ctx.bound("face_vs_barycentric", 1 / den), W);
        if (d >= 3)
            for (unsigned l = 1; l <= d; ++l) {
                Rational mx = 0;
                for (auto m : masks_of_size(d + 1, l + 1, full)) mx = std::max(mx, vol[m]);
                std::string inst = "S(d,1) l=" + std::to_string(l);
                ctx.eq("face_volume_bound", tag, inst, mx, ctx.bound("face_volume_bound", face_bound(d, l)), W);
                ctx.eq("face_point_count", tag + " volume", inst, Rational(l) + fact(l) * mx,
                       ctx.bound("face_point_count", Rational(l) + fact(l) * face_bound(d, l)), W);
            }
        // The longest edge: its points number one more than its lattice length.
        std::size_t best = 0;
        for (auto m : masks_of_size(d + 1, 2, full))
            if (!best || vol[m] > vol[best]) best = m;
        std::vector<IntVec> ends;
        for (std::size_t i = 0; i <= d; ++i)
            if (best >> i & 1) ends.push_back(dc.S1.vertices()[i]);
        Rational cnt = Rational(segment_lattice_length(to_rational(ends[0]), to_rational(ends[1])) + 1);
        ctx.eq("face_point_count", tag + " points", "S(d,1) longest edge", cnt,
               ctx.bound("face_point_count", 1 + vol[best]), W);
    }
    if (d >= 4) {
        for (unsigned h = 1; h < d; ++h) {
            IKSolution ik = solve_over_candidates({d + 1, 1, h});
            Rational opt = 1 / (fact(h) * ik.value);
            bool attained = false;
            for (unsigned l = 1; l <= h; ++l) {
                IntegralSimplex T = simplex_T(d, l);
                auto vol = face_volumes(T);
                std::string inst = "T(d," + std::to_string(l) + ") h=" + std::to_string(h);
                json W = to_json(T.polytope());
                Rational nu = nu_value(vol, d + 1, h);
                ctx.eq("min_face_volume_nu", tag + " closed form", inst, nu,
                       ctx.bound("min_face_volume_nu", nu_closed_form(d, h, l)), W);
                attained = attained || nu == opt;
                for (unsigned g = 1; g < h; ++g)
                    ctx.eq("min_face_volume_gamma", tag + " closed form", inst + " g=" + std::to_string(g),
                           gamma_value(vol, d + 1, h, g),
                           ctx.bound("min_face_volume_gamma", gamma_closed_form(d, h, g, l)), W);
            }
            ctx.holds("min_face_volume_nu", tag + " optimum attained by some T(d,l), l <= h", "h=" + std::to_string(h),
                      attained, "max_l nu_h(T(d,l)) = 1/(h! min x_1...x_h)", nullptr);
            for (unsigned g = 1; g < h; ++g) {
                Rational best = 0;
                std::vector<unsigned> arg;
                for (unsigned l = 1; l <= h; ++l) {
                    Rational v = gamma_value(face_volumes(simplex_T(d, l)), d + 1, h, g);
                    if (v > best) {
                        best = v;
                        arg = {l};
                    } else if (v == best) {
                        arg.push_back(l);
                    }
                }
                unsigned lim = localization_limit(d + 1);
                bool ok = std::any_of(arg.begin(), arg.end(), [&](unsigned l) { return l <= lim || l == h; });
                std::string args;
                for (auto l : arg) args += (args.empty() ? "" : ",") + std::to_string(l);
                ctx.holds("min_face_volume_gamma", tag + " maximizer location",
                          "h=" + std::to_string(h) + " g=" + std::to_string(g), ok,
                          "argmax l in {" + args + "}, limit " + std::to_string(lim), nullptr);
            }
        }
    }
    if (d >= 4 && dc.seed) {
        RationalPolytope D = polar_dual(dc.seed->polytope());
        const auto& V = D.vertices();
        json W = to_json(dc.seed->polytope());
        for (unsigned l = 1; l <= d; ++l) {
            Rational mx = 0;
            for (auto m : masks_of_size(d + 1, l + 1, (std::size_t(1) << (d + 1)) - 1)) {
                std::vector<RatVec> F;
                for (std::size_t i = 0; i <= d; ++i)
                    if (m >> i & 1) F.push_back(V[i]);
                mx = std::max(mx, normalized_volume(F));
            }
            ctx.eq("dual_face_volume", tag, "dual seed l=" + std::to_string(l), mx,
                   ctx.bound("dual_face_volume", face_bound(d, l)), W);
        }
    }
    if (d == 3) {
        IntegralSimplex Q = weighted_311();
        ctx.eq("toric_degree", tag + " anticanonical", "P(3,1,1,1) simplex", anticanonical_degree(Q),
               ctx.bound("toric_degree", Rational(72)), to_json(Q.polytope()));
    }
    if (d >= 3 && dc.seed) {
        json W = to_json(dc.seed->polytope());
        ctx.eq("toric_degree", tag + " anticanonical", "dual seed", anticanonical_degree(*dc.seed),
               ctx.bound("toric_degree", 2 * rpow(s(d) - 1, 2)), W);
        ctx.eq("toric_degree", tag + " curve", "dual seed", max_invariant_curve_degree(*dc.seed),
               ctx.bound("toric_degree", 2 * (s(d) - 1)), W);
    }
    {
        IntegralPolytope Q = cube(d, -1, 1);
        json W = to_json(Q);
        Rational v = volume(Q);
        Rational ca = coefficient_of_asymmetry(Q, IntVec(d, BigInt(0)));
        ctx.eq("volume_via_asymmetry", tag + " Mahler", "cube [-1,1]^d", v,
               rpow(ctx.bound("volume_via_asymmetry", 1 + ca), d), W);
        ctx.eq("minkowski", tag, "cube [-1,1]^d", v, ctx.bound("minkowski", rpow(Rational(2), d)), W);
        IntegralPolytope U = cube(d, 0, 2);
        ctx.eq("lattice_diameter", tag + " count vs diameter", "cube [0,2]^d", Rational(lattice_points(U).size()),
               rpow(Rational(lattice_diameter(U) + 1), d), to_json(U));
    }
    {
        std::vector<IntVec> V{IntVec(d, BigInt(0))};
        for (unsigned i = 0; i < d; ++i) {
            IntVec e(d, BigInt(0));
            e[i] = 1;
            V.push_back(e);
        }
        IntegralPolytope U = from_vertices(d, V);
        ctx.eq("blichfeldt", tag, "unimodular simplex", Rational(lattice_points(U).size()),
               ctx.bound("blichfeldt", Rational(d) + fact(d) * volume(U)), to_json(U));
    }
    for (unsigned k = 0; k <= 2; ++k) {
        const IntegralSimplex& Sk = dc.S_k[k];
        std::string inst = "S(d," + std::to_string(k) + ")";
        json W = to_json(Sk.polytope());
        auto in = interior_lattice_points(Sk.polytope());
        Rational ld = Rational(lattice_diameter(Sk.polytope()));
        if (k == 0) {
            ctx.holds("lattice_free_diameter", tag + " S(d,0) is inclusion-maximal lattice-free", inst,
                      is_inclusion_maximal_lattice_free(Sk.polytope()), "Pim criterion", W);
            ctx.eq("lattice_free_diameter", tag, inst, ld, ctx.bound("lattice_free_diameter", s(d) - 1), W);
        } else {
            ctx.eq("lattice_diameter", tag, inst, ld,
                   Rational(collinear_diameter(in) + 2) * ctx.bound("lattice_diameter", s(d) - 1), W);
        }
    }
}

std::vector<std::array<long, 2>> triangle_grid() {
    std::vector<std::array<long, 2>> g;
    for (long x = 0; x <= 6; ++x)
        for (long y = 0; y <= 6; ++y) g.push_back({x, y});
    return g;
}

// All triangles with vertices in [0,6]^2 and one interior point, counted with Pick's formula.
void check_triangle_sweep(DimensionContext& dc) {
    Ctx& ctx = dc.ctx;
    auto g = triangle_grid();
    const std::string tag = "d=2 exhaustive triangles in [0,6]^2";
    Rational best = 0;
    std::vector<IntVec> best_tri;
    std::size_t count = 0;
    IntegralSimplex T = centered(simplex_T(2, 3));
    std::set<std::vector<BigInt>> seen_profiles;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            for (std::size_t k = j + 1; k < g.size(); ++k) {
                long ax = g[j][0] - g[i][0], ay = g[j][1] - g[i][1];
                long bx = g[k][0] - g[i][0], by = g[k][1] - g[i][1];
                long twice = std::labs(ax * by - ay * bx);
                if (twice == 0) continue;
                long b = std::gcd(ax, ay) + std::gcd(bx, by) + std::gcd(bx - ax, by - ay);
                if (twice - b + 2 != 2) continue;  // exactly one interior point
                ++count;
                std::vector<IntVec> V;
                for (auto p : {i, j, k}) V.push_back({BigInt(g[p][0]), BigInt(g[p][1])});
                Rational area(twice, 2);
                IntegralSimplex S = centered(IntegralSimplex(V));
                json W = to_json(S.polytope());
                std::string inst = "triangle " + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
                ctx.le("polygon_max_area", tag, inst, area, ctx.bound("polygon_max_area", Rational(9, 2)), W);
                if (area > best) {
                    best = area;
                    best_tri = V;
                }
                BarycentricVector bv = barycentric_coordinates(S, RatVec(2, Rational(0)));
                for (unsigned r = 1; r <= 3; ++r)
                    ctx.le("barycentric_lower_bound", tag, inst,
                           ctx.bound("barycentric_lower_bound", barycentric_lower_bound(2, r)), bv.sorted[r - 1], W);
                bool smallest = bv.sorted[2] == barycentric_lower_bound(2, 3);
                bool eqv = unimodular_equivalent(S, T).has_value();
                ctx.holds("barycentric_lower_bound", tag + " smallest coordinate 1/6 iff T(2,3)", inst, smallest == eqv,
                          smallest ? "attains 1/6" : "above 1/6", W);
                Rational M = mahler_product(S);
                ctx.holds("mahler_product", tag + " product 36 iff T(2,3)", inst, (M == 36) == eqv,
                          M == 36 ? "attains 36" : "below 36", W);
                ctx.le("mahler_product", tag + " upper", inst, M, ctx.bound("mahler_product", Rational(36)), W);
                ctx.le("mahler_product", tag + " lower", inst, ctx.bound("mahler_product", Rational(27)), M, W);
            }
    IntegralPolytope B = from_vertices(2, best_tri);
    ctx.eq("polygon_max_area", tag + " maximum", std::to_string(count) + " triangles", best,
           ctx.bound("polygon_max_area", Rational(9, 2)), to_json(B));
}

struct Pools {
    std::vector<SimplexItem> simplices;
    std::vector<PolytopeItem> one_point;    // includes the simplices
    std::vector<PolytopeItem> with_interior;
    std::vector<PolytopeItem> lattice_free;
    std::vector<PolytopeItem> symmetric;
};

std::uint64_t stream_seed(std::uint64_t seed, unsigned d, unsigned stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), d, stream};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

unsigned scramble_ops(unsigned d) { return d <= 3 ? 3 : 1; }

Pools build_pools(const SuiteConfig& cfg, unsigned d, const DimensionContext& dc) {
    Pools p;
    for (unsigned i = 1; i <= d + 1; ++i)
        p.simplices.push_back({"T(d," + std::to_string(i) + ")", centered(simplex_T(d, i)), true});
    p.simplices.push_back({"S(d,1)", dc.S1, true});
    if (dc.seed) p.simplices.push_back({"dual seed", *dc.seed, true});
    p.simplices.push_back({"centroid simplex", centroid_simplex(d), true});
    if (d == 3) p.simplices.push_back({"P(3,1,1,1) simplex", centered(weighted_311()), true});
    std::mt19937_64 scr(stream_seed(cfg.seed, d, 1));
    for (unsigned r = 0; r < 2; ++r) {
        p.simplices.push_back({"scrambled T(d,d+1) #" + std::to_string(r),
                               centered(apply(random_unimodular(d, scr, scramble_ops(d)), dc.T_top)), true});
        p.simplices.push_back({"scrambled S(d,1) #" + std::to_string(r),
                               centered(apply(random_unimodular(d, scr, scramble_ops(d)), dc.S1)), true});
    }
    std::mt19937_64 rs(stream_seed(cfg.seed, d, 2));
    for (unsigned k = 0; k < cfg.samples; ++k)
        p.simplices.push_back({"random simplex #" + std::to_string(k),
                               centered(random_one_point_simplex(d, rs, cfg.box_lo, cfg.box_hi)), false});

    for (const auto& it : p.simplices) p.one_point.push_back({it.name, it.S.polytope(), it.pool});
    p.one_point.push_back({"cube [-1,1]^d", cube(d, -1, 1), true});
    std::mt19937_64 rp(stream_seed(cfg.seed, d, 3));
    for (unsigned k = 0; k < std::max(1u, cfg.samples / 2); ++k)
        p.one_point.push_back({"random polytope #" + std::to_string(k),
                               centered(random_one_point_polytope(d, rp, cfg.box_lo, cfg.box_hi)), false});

    p.with_interior = p.one_point;
    for (unsigned k = 1; k <= 2; ++k) {
        p.with_interior.push_back({"S(d," + std::to_string(k) + ")", dc.S_k[k].polytope(), true});
        p.with_interior.push_back({"scrambled S(d," + std::to_string(k) + ")",
                                   apply(random_unimodular(d, scr, scramble_ops(d)), dc.S_k[k].polytope()), true});
    }
    std::mt19937_64 rm(stream_seed(cfg.seed, d, 4));
    for (unsigned k = 0; k < std::max(1u, cfg.samples / 2); ++k)
        p.with_interior.push_back({"random multi-point polytope #" + std::to_string(k),
                                   random_polytope_with_interior(d, rm, cfg.box_lo, cfg.box_hi, 12), false});

    p.lattice_free.push_back({"S(d,0)", dc.S_k[0].polytope(), true});
    p.lattice_free.push_back(
        {"scrambled S(d,0)", apply(random_unimodular(d, scr, scramble_ops(d)), dc.S_k[0].polytope()), true});
    std::mt19937_64 rf(stream_seed(cfg.seed, d, 5));
    std::uniform_int_distribution<long> coord(0, 2);
    std::uniform_int_distribution<unsigned> extra(1, 3);
    unsigned found = 0;
    for (unsigned attempt = 0; attempt < 50 * cfg.samples && found < std::max(1u, cfg.samples / 4); ++attempt) {
        std::vector<IntVec> pts(d + extra(rf), IntVec(d));
        for (auto& q : pts)
            for (auto& x : q) x = coord(rf);
        try {
            IntegralPolytope P = from_vertices(d, pts);
            if (!is_inclusion_maximal_lattice_free(P)) continue;
            p.lattice_free.push_back({"random lattice-free #" + std::to_string(found++), P, false});
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotFullDimensional) throw;
        }
    }

    p.symmetric.push_back({"cube [-1,1]^d", cube(d, -1, 1), true});
    {
        std::vector<IntVec> V;
        for (unsigned i = 0; i < d; ++i)
            for (int sgn : {-1, 1}) {
                IntVec e(d, BigInt(0));
                e[i] = sgn;
                V.push_back(e);
            }
        p.symmetric.push_back({"cross-polytope", from_vertices(d, V), true});
    }
    std::mt19937_64 ry(stream_seed(cfg.seed, d, 6));
    for (unsigned k = 0; k < std::max(1u, cfg.samples / 4); ++k)
        p.symmetric.push_back({"random symmetric #" + std::to_string(k), random_symmetric_polytope(d, ry), false});
    return p;
}

std::vector<CheckRecord> run_dimension(const SuiteConfig& cfg, unsigned d) {
    Ctx ctx(cfg);
    DimensionContext dc{cfg, d, ctx, centered(simplex_T(d, d + 1)), centered(simplex_S(d, 1)), std::nullopt, {}, {}, {}};
    IntegralPolytope seed = dual_seed(d);
    if (seed.vertices().size() == d + 1) dc.seed = centered(IntegralSimplex::from_polytope(seed));
    for (unsigned k = 0; k <= 2; ++k) dc.S_k.push_back(simplex_S(d, k));
    if (d == 2) dc.degree_attainers.push_back(centroid_simplex(2));
    if (d == 3) dc.degree_attainers.push_back(weighted_311());
    if (d >= 3 && dc.seed) dc.degree_attainers.push_back(*dc.seed);

    check_witnesses(dc);
    if (d == 2) check_triangle_sweep(dc);

    Pools pools = build_pools(cfg, d, dc);
    for (const auto& it : pools.simplices) {
        std::string group = it.pool ? "witness pool" : "random simplices";
        check_simplex(dc, it, group);
        guarded(ctx, "face_point_count", dim_tag(d) + " " + it.name, [&] { check_face_points(dc, it, group); });
    }
    for (const auto& it : pools.one_point)
        check_one_point_polytope(dc, it, it.pool ? "witness pool" : "random one-point polytopes");
    for (const auto& it : pools.with_interior)
        guarded(ctx, "lattice_diameter", dim_tag(d) + " " + it.name,
                [&] { check_lattice_polytope(dc, it, it.pool ? "witness pool" : "random polytopes"); });
    for (const auto& it : pools.lattice_free)
        guarded(ctx, "lattice_free_diameter", dim_tag(d) + " " + it.name,
                [&] { check_lattice_free(dc, it, it.pool ? "witness pool" : "random lattice-free"); });
    for (const auto& it : pools.symmetric)
        check_symmetric(dc, it, it.pool ? "witness pool" : "random symmetric");

    // Open problems: reported, never asserted.
    Rational best = 0;
    std::string who;
    json W;
    for (const auto& it : pools.with_interior) {
        if (it.pool || count_lattice_points(it.P, true, 3) != 2) continue;
        Rational v = volume(it.P);
        if (v > best) {
            best = v;
            who = it.name;
            W = to_json(it.P);
        }
    }
    ctx.observe("open_maximal_volume", dim_tag(d) + " two interior points", who.empty() ? "none sampled" : str(best),
                str(volume(dc.S_k[2].polytope())),
                "largest random sample with two interior points" + (who.empty() ? "" : " (" + who + ")") +
                    " vs vol S(d,2)",
                W);
    if (d >= 4)
        for (unsigned l = 2; l < d; ++l) {
            auto [total, same] = dc.face_attainers[l];
            ctx.observe("open_face_volume_uniqueness", dim_tag(d) + " l=" + std::to_string(l), std::to_string(total),
                        std::to_string(same),
                        "samples attaining the l-face bound vs those equivalent to S(d,1)");
        }
    return ctx.finish();
}

}  // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Equality: return "equality";
        case Verdict::Violated: return "violated";
        case Verdict::Skipped: return "skipped";
        case Verdict::Observation: return "observation";
    }
    return "?";
}

void validate(const SuiteConfig& cfg) {
    if (cfg.dims.empty()) throw Error(ErrorKind::ParameterOutOfRange, "no dimensions selected");
    for (auto d : cfg.dims)
        if (d < 2 || d > 5) throw Error(ErrorKind::ParameterOutOfRange, "suite dimensions must lie in 2..5");
    if (cfg.samples < 1) throw Error(ErrorKind::ParameterOutOfRange, "samples must be at least 1");
    if (cfg.box_hi - cfg.box_lo < 2) throw Error(ErrorKind::ParameterOutOfRange, "sampling box is too small");
    for (const auto& [id, delta] : cfg.mutations)
        if (!std::binary_search(kCheckIds.begin(), kCheckIds.end(), id))
            throw Error(ErrorKind::ParameterOutOfRange, "unknown check id '" + id + "'");
}

std::vector<std::string> check_ids() { return kCheckIds; }

std::size_t VerificationReport::count(Verdict v) const {
    return std::count_if(records.begin(), records.end(), [&](const CheckRecord& r) { return r.verdict == v; });
}

json VerificationReport::to_json() const {
    json dims = json::array();
    for (auto d : config.dims) dims.push_back(d);
    json muts = json::object();
    for (const auto& [id, delta] : config.mutations) muts[id] = latpol::to_string(delta);
    json cfg{{"dims", dims},         {"samples", config.samples}, {"seed", config.seed},
             {"budget", config.budget}, {"box", {config.box_lo, config.box_hi}}, {"mutations", muts}};
    json checks = json::array();
    for (const auto& r : records) {
        json c{{"id", r.id},           {"instance", r.instance}, {"relation", r.relation}, {"lhs", r.lhs},
               {"rhs", r.rhs},         {"verdict", verdict_name(r.verdict)}, {"count", r.count}, {"equal", r.equal}};
        if (!r.witness.is_null()) c["witness"] = r.witness;
        if (!r.note.empty()) c["note"] = r.note;
        checks.push_back(std::move(c));
    }
    json summary{{"records", records.size()},
                 {"holds", count(Verdict::Holds)},
                 {"equality", count(Verdict::Equality)},
                 {"violated", count(Verdict::Violated)},
                 {"skipped", count(Verdict::Skipped)},
                 {"observation", count(Verdict::Observation)}};
    return json{{"schema", kSchema}, {"config", cfg}, {"summary", summary}, {"checks", checks}};
}

VerificationReport run_suite(const SuiteConfig& cfg) {
    validate(cfg);
    double saved = point_budget();
    set_point_budget(cfg.budget);
    VerificationReport rep;
    rep.config = cfg;
    try {
        Ctx ctx(cfg);
        check_sylvester(ctx);
        observe_minimizer_location(ctx);
        rep.records = ctx.finish();
        std::vector<std::future<std::vector<CheckRecord>>> jobs;
        for (auto d : cfg.dims) jobs.push_back(std::async(std::launch::async, run_dimension, std::cref(cfg), d));
        for (auto& j : jobs) {
            auto part = j.get();
            rep.records.insert(rep.records.end(), std::make_move_iterator(part.begin()),
                               std::make_move_iterator(part.end()));
        }
    } catch (...) {
        set_point_budget(saved);
        throw;
    }
    set_point_budget(saved);
    std::stable_sort(rep.records.begin(), rep.records.end(), [](const CheckRecord& a, const CheckRecord& b) {
        return std::tie(a.id, a.instance) < std::tie(b.id, b.instance);
    });
    return rep;
}

AffineMap random_unimodular(unsigned d, std::mt19937_64& rng, unsigned ops) {
    if (d < 1) throw Error(ErrorKind::ParameterOutOfRange, "dimension must be positive");
    AffineMap m{IntMatrix::identity(d), IntVec(d, BigInt(0))};
    if (ops == 0) return m;
    const BigInt cap = 1000000;
    std::uniform_int_distribution<unsigned> row(0, d - 1), kind(0, 3);
    std::uniform_int_distribution<int> mult(1, 2), shift(-3, 3);
    for (unsigned done = 0, tries = 0; done < ops && tries < 100 * ops; ++tries) {
        unsigned k = kind(rng);
        unsigned i = row(rng), j = row(rng);
        IntMatrix B = m.A;
        if (k <= 1 && d > 1) {
            if (i == j) continue;
            int c = mult(rng) * (k == 0 ? 1 : -1);
            for (unsigned col = 0; col < d; ++col) B(i, col) += c * m.A(j, col);
        } else if (k == 2 && d > 1) {
            if (i == j) continue;
            for (unsigned col = 0; col < d; ++col) std::swap(B(i, col), B(j, col));
        } else {
            for (unsigned col = 0; col < d; ++col) B(i, col) = -B(i, col);
        }
        bool ok = true;
        for (unsigned r = 0; r < d && ok; ++r)
            for (unsigned col = 0; col < d && ok; ++col) ok = abs(B(r, col)) <= cap;
        if (!ok) continue;
        m.A = std::move(B);
        ++done;
    }
    for (auto& x : m.t) x = shift(rng);
    return m;
}

AffineMap random_unimodular(unsigned d, std::uint64_t seed, unsigned ops) {
    std::mt19937_64 rng(seed);
    return random_unimodular(d, rng, ops);
}

IntegralSimplex apply(const AffineMap& m, const IntegralSimplex& S) {
    std::vector<IntVec> V;
    for (const auto& v : S.vertices()) V.push_back(apply_affine(m.A, m.t, v));
    return IntegralSimplex(std::move(V));
}

IntegralPolytope apply(const AffineMap& m, const IntegralPolytope& P) { return affine_image(P, m.A, m.t); }

namespace {

std::vector<IntVec> sample_in_subbox(unsigned d, std::size_t count, std::mt19937_64& rng, long lo, long hi) {
    std::vector<long> a(d), b(d);
    for (unsigned k = 0; k < d; ++k) {
        long w = std::uniform_int_distribution<long>(2, hi - lo)(rng);
        a[k] = std::uniform_int_distribution<long>(lo, hi - w)(rng);
        b[k] = a[k] + w;
    }
    std::vector<IntVec> pts(count, IntVec(d));
    for (auto& p : pts)
        for (unsigned k = 0; k < d; ++k) p[k] = std::uniform_int_distribution<long>(a[k], b[k])(rng);
    return pts;
}

template <class Accept>
IntegralPolytope sample_polytope(unsigned d, std::mt19937_64& rng, long lo, long hi, unsigned min_pts, unsigned max_pts,
                                 unsigned max_attempts, Accept accept) {
    std::uniform_int_distribution<unsigned> cnt(min_pts, max_pts);
    for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
        auto pts = sample_in_subbox(d, cnt(rng), rng, lo, hi);
        try {
            IntegralPolytope P = from_vertices(d, pts);
            if (accept(P)) return P;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotFullDimensional) throw;
        }
    }
    throw Error(ErrorKind::SamplingExhausted, "no acceptable sample after " + std::to_string(max_attempts) + " attempts");
}

}  // namespace

IntegralSimplex random_one_point_simplex(unsigned d, std::mt19937_64& rng, long lo, long hi, unsigned max_attempts) {
    if (d < 1 || hi - lo < 2) throw Error(ErrorKind::ParameterOutOfRange, "invalid sampling parameters");
    for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
        auto pts = sample_in_subbox(d, d + 1, rng, lo, hi);
        IntMatrix E(d, d);
        for (unsigned j = 1; j <= d; ++j)
            for (unsigned i = 0; i < d; ++i) E(i, j - 1) = pts[j][i] - pts[0][i];
        if (determinant(E) == 0) continue;
        IntegralSimplex S(pts);
        if (count_lattice_points(S.polytope(), true, 2) == 1) return S;
    }
    throw Error(ErrorKind::SamplingExhausted, "no one-point simplex after " + std::to_string(max_attempts) + " attempts");
}

IntegralSimplex random_one_point_simplex(unsigned d, std::uint64_t seed, long lo, long hi) {
    std::mt19937_64 rng(seed);
    return random_one_point_simplex(d, rng, lo, hi);
}

IntegralPolytope random_one_point_polytope(unsigned d, std::mt19937_64& rng, long lo, long hi, unsigned max_attempts) {
    return sample_polytope(d, rng, lo, hi, d + 2, d + 5, max_attempts,
                           [](const IntegralPolytope& P) { return count_lattice_points(P, true, 2) == 1; });
}

IntegralPolytope random_polytope_with_interior(unsigned d, std::mt19937_64& rng, long lo, long hi,
                                               std::size_t max_interior, unsigned max_attempts) {
    return sample_polytope(d, rng, lo, hi, d + 1, d + 4, max_attempts, [&](const IntegralPolytope& P) {
        std::size_t k = count_lattice_points(P, true, max_interior + 1);
        return k >= 1 && k <= max_interior;
    });
}

IntegralPolytope random_symmetric_polytope(unsigned d, std::mt19937_64& rng, unsigned max_attempts) {
    std::uniform_int_distribution<unsigned> cnt(d, d + 2);
    std::uniform_int_distribution<long> coord(-2, 2);
    for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<IntVec> pts;
        unsigned m = cnt(rng);
        for (unsigned i = 0; i < m; ++i) {
            IntVec p(d);
            for (auto& x : p) x = coord(rng);
            pts.push_back(p);
            pts.push_back(negated(p));
        }
        try {
            IntegralPolytope P = from_vertices(d, pts);
            if (count_lattice_points(P, true, 2) == 1) return P;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotFullDimensional) throw;
        }
    }
    throw Error(ErrorKind::SamplingExhausted, "no symmetric sample after " + std::to_string(max_attempts) + " attempts");
}

long long collinear_diameter(const std::vector<IntVec>& input) {
    if (input.empty()) return -1;
    std::vector<IntVec> points = input;
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    long long best = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::map<IntVec, long long> lines;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            IntVec u(points[i].size());
            for (std::size_t k = 0; k < u.size(); ++k) u[k] = points[j][k] - points[i][k];
            best = std::max(best, ++lines[primitive_vector(u)]);
        }
    }
    return best;
}

bool equivalent_to(const IntegralPolytope& P, const IntegralSimplex& S) {
    if (P.dim() != S.dim() || P.vertices().size() != P.dim() + 1) return false;
    return unimodular_equivalent(IntegralSimplex::from_polytope(P), S).has_value();
}

}  // namespace latpol
