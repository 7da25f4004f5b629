#include "latpol/hull.hpp"

#include <algorithm>

#include <boost/dynamic_bitset.hpp>

namespace latpol {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ray {
    IntVec y;
    Bits zero;
};

void make_primitive(IntVec& y) {
    BigInt g = gcd_of(y);
    if (g > 1)
        for (auto& v : y) v /= g;
}

BigInt eval(const IntVec& row, const IntVec& y) { return dot(row, y); }

}  // namespace

Rational facet_value(const Facet& f, const RatVec& x) {
    Rational s = f.offset;
    for (std::size_t i = 0; i < x.size(); ++i) s -= Rational(f.normal[i]) * x[i];
    return s;
}

std::vector<Facet> compute_facets(std::size_t d, const std::vector<RatVec>& input) {
    std::vector<RatVec> points = input;
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.empty()) throw Error(ErrorKind::EmptyInput, "no points");
    if (d == 0) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
    if (d > kHullMaxDim || points.size() > kHullMaxPoints)
        throw Error(ErrorKind::HullBudgetExceeded, "hull limited to d <= 8 and <= 200 points");
    for (const auto& p : points)
        if (p.size() != d) throw Error(ErrorKind::DimensionMismatch, "point of wrong dimension");

    // Scale to integers: rows (-D p_i, 1) acting on y = (a, beta), beta = D * offset.
    BigInt D = 1;
    for (const auto& p : points) D = boost::multiprecision::lcm(D, lcm_of_denominators(p));
    const std::size_t n = points.size(), m = d + 1;
    std::vector<IntVec> rows(n, IntVec(m));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < d; ++k) rows[i][k] = -numerator(points[i][k] * D);
        rows[i][d] = 1;
    }

    // Pick m independent rows greedily.
    std::vector<std::size_t> basis;
    {
        std::vector<RatVec> chosen;
        for (std::size_t i = 0; i < n && basis.size() < m; ++i) {
            chosen.push_back(to_rational(rows[i]));
            if (rank(RatMatrix::from_rows(chosen)) == chosen.size()) basis.push_back(i);
            else chosen.pop_back();
        }
    }
    if (basis.size() < m) throw Error(ErrorKind::NotFullDimensional, "points do not span R^" + std::to_string(d));

    std::vector<Ray> rays;
    {
        std::vector<RatVec> brow;
        for (auto i : basis) brow.push_back(to_rational(rows[i]));
        RatMatrix Binv = inverse(RatMatrix::from_rows(brow));
        for (std::size_t j = 0; j < m; ++j) {
            RatVec col = Binv.column(j);
            BigInt L = lcm_of_denominators(col);
            IntVec y(m);
            for (std::size_t k = 0; k < m; ++k) y[k] = numerator(col[k] * L);
            make_primitive(y);
            rays.push_back({std::move(y), Bits(n)});
        }
    }
    std::vector<char> processed(n, 0);
    for (auto i : basis) processed[i] = 1;
    for (auto& r : rays)
        for (auto i : basis)
            if (eval(rows[i], r.y) == 0) r.zero.set(i);

    for (std::size_t i = 0; i < n; ++i) {
        if (processed[i]) continue;
        processed[i] = 1;
        std::vector<BigInt> val(rays.size());
        std::vector<std::size_t> pos, neg;
        std::vector<Ray> next;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            val[r] = eval(rows[i], rays[r].y);
            if (val[r] > 0) pos.push_back(r);
            else if (val[r] < 0) neg.push_back(r);
        }
        if (neg.empty()) {
            for (std::size_t r = 0; r < rays.size(); ++r)
                if (val[r] == 0) rays[r].zero.set(i);
            continue;
        }
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (val[r] >= 0) {
                Ray keep = rays[r];
                if (val[r] == 0) keep.zero.set(i);
                next.push_back(std::move(keep));
            }
        }
        for (auto p : pos) {
            for (auto q : neg) {
                Bits common = rays[p].zero & rays[q].zero;
                if (common.count() + 2 < m) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == q) continue;
                    if (common.is_subset_of(rays[r].zero)) adjacent = false;
                }
                if (!adjacent) continue;
                IntVec y(m);
                for (std::size_t k = 0; k < m; ++k) y[k] = val[p] * rays[q].y[k] - val[q] * rays[p].y[k];
                make_primitive(y);
                Ray nr{std::move(y), common};
                nr.zero.set(i);
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
    }

    std::vector<Facet> facets;
    for (auto& r : rays) {
        IntVec a(r.y.begin(), r.y.begin() + d);
        BigInt g = gcd_of(a);
        if (g == 0) throw Error(ErrorKind::NotFullDimensional, "unbounded hull");
        for (auto& v : a) v /= g;
        facets.push_back({std::move(a), Rational(r.y[d], D * g)});
    }
    std::sort(facets.begin(), facets.end(), [](const Facet& x, const Facet& y) {
        if (x.normal != y.normal) return x.normal < y.normal;
        return x.offset < y.offset;
    });
    return facets;
}

std::vector<std::size_t> vertex_indices(const std::vector<RatVec>& points, const std::vector<Facet>& facets) {
    std::vector<std::size_t> out;
    if (points.empty()) return out;
    const std::size_t d = points[0].size();
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<RatVec> tight;
        for (const auto& f : facets)
            if (facet_value(f, points[i]) == 0) tight.push_back(to_rational(f.normal));
        if (tight.size() >= d && rank(RatMatrix::from_rows(tight)) == d) out.push_back(i);
    }
    return out;
}

}  // namespace latpol
