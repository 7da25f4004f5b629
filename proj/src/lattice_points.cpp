#include "latpol/lattice_points.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>

namespace latpol {

namespace {

std::atomic<double> g_budget{kDefaultPointBudget};

using i64 = std::int64_t;
using i128 = __int128;

i64 to_i64(const BigInt& z) {
    if (z > BigInt(std::numeric_limits<i64>::max() / 4) || z < BigInt(std::numeric_limits<i64>::min() / 4))
        throw Error(ErrorKind::BudgetExceeded, "coordinate too large for enumeration");
    return z.convert_to<i64>();
}

i128 floor_div128(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

i128 ceil_div128(i128 a, i128 b) { return -floor_div128(-a, b); }

struct IntFacets {
    std::size_t d = 0;
    std::vector<i64> a;  // facet-major
    std::vector<i64> b;  // effective integer bound
};

IntFacets convert(const HalfspaceRep& H, std::size_t d, bool strict) {
    IntFacets F;
    F.d = d;
    for (const auto& f : H) {
        for (std::size_t k = 0; k < d; ++k) F.a.push_back(to_i64(f.normal[k]));
        BigInt bound = strict ? ceil_div(f.offset) - 1 : floor_div(f.offset);
        F.b.push_back(to_i64(bound));
    }
    return F;
}

// Only the first d-1 coordinates are scanned; the last one is solved as an interval.
void check_budget(const IntVec& lo, const IntVec& hi) {
    double vol = 1;
    for (std::size_t k = 0; k + 1 < lo.size(); ++k) {
        if (hi[k] < lo[k]) return;
        vol *= (hi[k] - lo[k] + 1).convert_to<double>();
    }
    if (vol > g_budget.load())
        throw Error(ErrorKind::BudgetExceeded,
                    "enumeration box holds " + std::to_string(vol) + " prefixes, budget " + std::to_string(g_budget.load()));
}

template <class Box>
void bounding_box(const Box& vertices, std::size_t d, IntVec& lo, IntVec& hi) {
    lo.assign(d, 0);
    hi.assign(d, 0);
    bool first = true;
    for (const auto& v : vertices) {
        for (std::size_t k = 0; k < d; ++k) {
            BigInt l = floor_div(Rational(v[k])), h = ceil_div(Rational(v[k]));
            if (first || l < lo[k]) lo[k] = l;
            if (first || h > hi[k]) hi[k] = h;
        }
        first = false;
    }
}

}  // namespace

void set_point_budget(double budget) {
    if (!(budget > 0)) throw Error(ErrorKind::InvalidArgument, "budget must be positive");
    g_budget.store(budget);
}

double point_budget() { return g_budget.load(); }

void for_each_lattice_point(const HalfspaceRep& H, const IntVec& box_lo, const IntVec& box_hi, bool strict,
                            const std::function<bool(const std::vector<i64>&)>& visit) {
    const std::size_t d = box_lo.size();
    if (d == 0 || box_hi.size() != d) throw Error(ErrorKind::DimensionMismatch, "box dimension");
    for (std::size_t k = 0; k < d; ++k)
        if (box_hi[k] < box_lo[k]) return;
    // Scan the widest coordinate last.
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return box_hi[a] - box_lo[a] < box_hi[b] - box_lo[b];
    });
    IntVec lo(d), hi(d);
    for (std::size_t k = 0; k < d; ++k) {
        lo[k] = box_lo[perm[k]];
        hi[k] = box_hi[perm[k]];
    }
    check_budget(lo, hi);
    HalfspaceRep PH = H;
    for (auto& f : PH) {
        IntVec a(d);
        for (std::size_t k = 0; k < d; ++k) a[k] = f.normal[perm[k]];
        f.normal = std::move(a);
    }
    std::vector<i64> y(d);
    auto fn = [&](const std::vector<i64>& x) {
        for (std::size_t k = 0; k < d; ++k) y[perm[k]] = x[k];
        return visit(y);
    };
    IntFacets F = convert(PH, d, strict);
    const std::size_t nf = F.b.size();
    std::vector<i64> L(d), U(d), x(d);
    for (std::size_t k = 0; k < d; ++k) {
        L[k] = to_i64(lo[k]);
        U[k] = to_i64(hi[k]);
    }
    // partial[k * nf + f] = sum_{i<k} a_fi x_i
    std::vector<i128> partial((d + 1) * nf, 0);
    bool stop = false;

    auto last = [&]() {
        const std::size_t k = d - 1;
        i128 l = L[k], u = U[k];
        for (std::size_t f = 0; f < nf && l <= u; ++f) {
            i128 rem = i128(F.b[f]) - partial[k * nf + f];
            i64 c = F.a[f * d + k];
            if (c > 0) u = std::min(u, floor_div128(rem, c));
            else if (c < 0) l = std::max(l, ceil_div128(rem, c));
            else if (rem < 0) return;
        }
        for (i128 t = l; t <= u; ++t) {
            x[k] = static_cast<i64>(t);
            if (!fn(x)) {
                stop = true;
                return;
            }
        }
    };

    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == d - 1) {
            last();
            return;
        }
        for (i64 t = L[k]; t <= U[k] && !stop; ++t) {
            x[k] = t;
            for (std::size_t f = 0; f < nf; ++f)
                partial[(k + 1) * nf + f] = partial[k * nf + f] + i128(F.a[f * d + k]) * t;
            rec(k + 1);
        }
    };
    rec(0);
}

std::vector<IntVec> enumerate_lattice_points(const HalfspaceRep& H, const IntVec& lo, const IntVec& hi, bool strict) {
    std::vector<IntVec> out;
    for_each_lattice_point(H, lo, hi, strict, [&](const std::vector<i64>& x) {
        IntVec p(x.size());
        for (std::size_t k = 0; k < x.size(); ++k) p[k] = x[k];
        out.push_back(std::move(p));
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntVec> lattice_points(const IntegralPolytope& P) {
    IntVec lo, hi;
    bounding_box(P.vertices(), P.dim(), lo, hi);
    return enumerate_lattice_points(P.facets(), lo, hi, false);
}

std::vector<IntVec> interior_lattice_points(const IntegralPolytope& P) {
    IntVec lo, hi;
    bounding_box(P.vertices(), P.dim(), lo, hi);
    return enumerate_lattice_points(P.facets(), lo, hi, true);
}

std::vector<IntVec> lattice_points(const RationalPolytope& P) {
    IntVec lo, hi;
    bounding_box(P.vertices(), P.dim(), lo, hi);
    return enumerate_lattice_points(P.facets(), lo, hi, false);
}

std::vector<IntVec> interior_lattice_points(const RationalPolytope& P) {
    IntVec lo, hi;
    bounding_box(P.vertices(), P.dim(), lo, hi);
    return enumerate_lattice_points(P.facets(), lo, hi, true);
}

std::size_t count_lattice_points(const IntegralPolytope& P, bool strict, std::size_t limit) {
    IntVec lo, hi;
    bounding_box(P.vertices(), P.dim(), lo, hi);
    std::size_t n = 0;
    if (limit == 0) return 0;
    for_each_lattice_point(P.facets(), lo, hi, strict, [&](const std::vector<i64>&) { return ++n < limit; });
    return n;
}

long long lattice_diameter(const HalfspaceRep& H, const std::vector<IntVec>& points) {
    if (points.empty()) return -1;
    if (points.size() == 1) return 0;
    const std::size_t d = points[0].size();
    const std::size_t n = points.size();
    IntFacets F = convert(H, d, false);
    const std::size_t nf = F.b.size();
    std::vector<i64> pts(n * d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < d; ++k) pts[i * d + k] = to_i64(points[i][k]);
    // slack[i * nf + f] = b_f - <a_f, p_i> >= 0
    std::vector<i128> slack(n * nf);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t f = 0; f < nf; ++f) {
            i128 s = F.b[f];
            for (std::size_t k = 0; k < d; ++k) s -= i128(F.a[f * d + k]) * pts[i * d + k];
            slack[i * nf + f] = s;
        }
    long long best = 0;
    std::vector<i64> u(d);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            i64 g = 0;
            for (std::size_t k = 0; k < d; ++k) {
                u[k] = pts[j * d + k] - pts[i * d + k];
                g = std::gcd(g, u[k] < 0 ? -u[k] : u[k]);
            }
            if (g != 1) continue;
            // Points p_i + t u in P for t in [-back, fwd].
            i128 fwd = std::numeric_limits<i64>::max(), back = std::numeric_limits<i64>::max();
            for (std::size_t f = 0; f < nf; ++f) {
                i128 au = 0;
                for (std::size_t k = 0; k < d; ++k) au += i128(F.a[f * d + k]) * u[k];
                if (au > 0) fwd = std::min(fwd, slack[i * nf + f] / au);
                else if (au < 0) back = std::min(back, slack[i * nf + f] / -au);
            }
            long long len = static_cast<long long>(fwd + back);
            if (len > best) best = len;
        }
    }
    return best;
}

long long lattice_diameter(const IntegralPolytope& P) { return lattice_diameter(P.facets(), lattice_points(P)); }
long long lattice_diameter(const RationalPolytope& P) { return lattice_diameter(P.facets(), lattice_points(P)); }

bool is_inclusion_maximal_lattice_free(const IntegralPolytope& P) {
    if (count_lattice_points(P, true, 1) > 0) return false;
    const auto& H = P.facets();
    std::vector<char> covered(H.size(), 0);
    std::size_t remaining = H.size();
    for (const auto& p : lattice_points(P)) {
        RatVec x = to_rational(p);
        std::size_t tight = H.size(), count = 0;
        for (std::size_t f = 0; f < H.size() && count < 2; ++f)
            if (facet_value(H[f], x) == 0) {
                tight = f;
                ++count;
            }
        if (count == 1 && !covered[tight]) {
            covered[tight] = 1;
            if (--remaining == 0) return true;
        }
    }
    return remaining == 0;
}

}  // namespace latpol
