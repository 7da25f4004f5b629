#include "latpol/polytope.hpp"

#include <algorithm>
#include <set>

#include <boost/dynamic_bitset.hpp>

namespace latpol {

namespace {

std::vector<RatVec> hull_vertices(std::size_t d, std::vector<RatVec>& points, HalfspaceRep& facets) {
    if (points.empty()) throw Error(ErrorKind::EmptyInput, "no points");
    for (const auto& p : points)
        if (p.size() != d) throw Error(ErrorKind::DimensionMismatch, "point of wrong dimension");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < d + 1) throw Error(ErrorKind::NotFullDimensional, "fewer than d+1 distinct points");
    facets = compute_facets(d, points);
    std::vector<RatVec> out;
    for (auto i : vertex_indices(points, facets)) out.push_back(points[i]);
    return out;
}

using Bits = boost::dynamic_bitset<>;

std::size_t affine_dim(const std::vector<RatVec>& V, const Bits& face) {
    std::size_t first = face.find_first();
    std::vector<RatVec> diffs;
    for (std::size_t i = face.find_next(first); i != Bits::npos; i = face.find_next(i)) {
        RatVec e(V[i].size());
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = V[i][k] - V[first][k];
        diffs.push_back(std::move(e));
    }
    if (diffs.empty()) return 0;
    return rank(RatMatrix::from_rows(diffs));
}

// Pulling triangulation of the k-face `face`: cone from its lowest vertex over the
// (k-1)-faces that miss it.
void triangulate(const std::vector<RatVec>& V, const std::vector<Bits>& tight, const Bits& face, std::size_t k,
                 std::vector<std::vector<std::size_t>>& out) {
    std::size_t apex = face.find_first();
    if (k == 0) {
        out.push_back({apex});
        return;
    }
    std::set<Bits> seen;
    for (const auto& t : tight) {
        Bits g = face & t;
        if (g.none() || g.test(apex) || g == face) continue;
        if (!seen.insert(g).second) continue;
        if (affine_dim(V, g) != k - 1) continue;
        std::vector<std::vector<std::size_t>> sub;
        triangulate(V, tight, g, k - 1, sub);
        for (auto& s : sub) {
            s.push_back(apex);
            out.push_back(std::move(s));
        }
    }
}

Rational simplex_volume(const std::vector<RatVec>& V, const std::vector<std::size_t>& idx) {
    const std::size_t d = V[0].size();
    RatMatrix M(d, d);
    for (std::size_t j = 1; j <= d; ++j)
        for (std::size_t i = 0; i < d; ++i) M(i, j - 1) = V[idx[j]][i] - V[idx[0]][i];
    Rational det = determinant(M);
    return abs(det) / Rational(factorial(static_cast<unsigned>(d)));
}

Rational volume_of(const std::vector<RatVec>& V, const HalfspaceRep& H) {
    const std::size_t d = V[0].size();
    std::vector<Bits> tight;
    for (const auto& f : H) {
        Bits b(V.size());
        for (std::size_t i = 0; i < V.size(); ++i)
            if (facet_value(f, V[i]) == 0) b.set(i);
        tight.push_back(std::move(b));
    }
    Bits all(V.size());
    all.set();
    std::vector<std::vector<std::size_t>> simplices;
    triangulate(V, tight, all, d, simplices);
    Rational vol = 0;
    for (const auto& s : simplices) vol += simplex_volume(V, s);
    return vol;
}

void require_origin_interior(const HalfspaceRep& H) {
    for (const auto& f : H)
        if (f.offset <= 0) throw Error(ErrorKind::OriginNotInterior, "origin is not an interior point");
}

}  // namespace

RationalPolytope RationalPolytope::from_points(std::size_t d, std::vector<RatVec> points) {
    RationalPolytope P;
    P.d_ = d;
    P.vertices_ = hull_vertices(d, points, P.facets_);
    return P;
}

bool RationalPolytope::is_integral() const {
    return std::all_of(vertices_.begin(), vertices_.end(), [](const RatVec& v) { return latpol::is_integral(v); });
}

RationalPolytope RationalPolytope::translated(const RatVec& t) const {
    RationalPolytope P = *this;
    for (auto& v : P.vertices_)
        for (std::size_t k = 0; k < d_; ++k) v[k] += t[k];
    for (auto& f : P.facets_) f.offset += dot(to_rational(f.normal), t);
    return P;
}

IntegralPolytope IntegralPolytope::from_vertices(std::size_t d, std::vector<IntVec> points) {
    std::vector<RatVec> rp;
    rp.reserve(points.size());
    for (const auto& p : points) rp.push_back(to_rational(p));
    IntegralPolytope P;
    P.d_ = d;
    for (const auto& v : hull_vertices(d, rp, P.facets_)) P.vertices_.push_back(to_integer(v));
    return P;
}

std::vector<RatVec> IntegralPolytope::rational_vertices() const {
    std::vector<RatVec> r;
    r.reserve(vertices_.size());
    for (const auto& v : vertices_) r.push_back(to_rational(v));
    return r;
}

RationalPolytope IntegralPolytope::as_rational() const {
    RationalPolytope R;
    R.d_ = d_;
    R.vertices_ = rational_vertices();
    R.facets_ = facets_;
    return R;
}

IntegralPolytope IntegralPolytope::translated(const IntVec& t) const {
    IntegralPolytope P = *this;
    for (auto& v : P.vertices_)
        for (std::size_t k = 0; k < d_; ++k) v[k] += t[k];
    for (auto& f : P.facets_) f.offset += Rational(dot(f.normal, t));
    return P;
}

IntegralPolytope from_vertices(std::size_t d, const std::vector<IntVec>& points) {
    return IntegralPolytope::from_vertices(d, points);
}

IntegralPolytope cube(std::size_t d, long lo, long hi) {
    std::vector<IntVec> pts;
    for (std::size_t mask = 0; mask < (std::size_t(1) << d); ++mask) {
        IntVec p(d);
        for (std::size_t k = 0; k < d; ++k) p[k] = (mask >> k & 1) ? hi : lo;
        pts.push_back(std::move(p));
    }
    return from_vertices(d, pts);
}

const HalfspaceRep& facet_representation(const IntegralPolytope& P) { return P.facets(); }
const HalfspaceRep& facet_representation(const RationalPolytope& P) { return P.facets(); }

bool contains(const HalfspaceRep& H, const RatVec& x) {
    return std::all_of(H.begin(), H.end(), [&](const Facet& f) { return facet_value(f, x) >= 0; });
}

bool contains_in_interior(const HalfspaceRep& H, const RatVec& x) {
    return std::all_of(H.begin(), H.end(), [&](const Facet& f) { return facet_value(f, x) > 0; });
}

bool contains_in_interior(const IntegralPolytope& P, const RatVec& x) { return contains_in_interior(P.facets(), x); }

Rational volume(const RationalPolytope& P) { return volume_of(P.vertices(), P.facets()); }
Rational volume(const IntegralPolytope& P) { return volume_of(P.rational_vertices(), P.facets()); }

Rational radius_function(const RationalPolytope& P, const RatVec& u) {
    require_origin_interior(P.facets());
    bool nonzero = std::any_of(u.begin(), u.end(), [](const Rational& q) { return q != 0; });
    if (!nonzero) throw Error(ErrorKind::ZeroVector, "direction must be nonzero");
    bool found = false;
    Rational best;
    for (const auto& f : P.facets()) {
        Rational au = dot(to_rational(f.normal), u);
        if (au <= 0) continue;
        Rational r = f.offset / au;
        if (!found || r < best) best = r;
        found = true;
    }
    if (!found) throw Error(ErrorKind::Internal, "unbounded direction in a bounded polytope");
    return best;
}

Rational radius_function(const IntegralPolytope& P, const RatVec& u) {
    return radius_function(P.as_rational(), u);
}

Rational coefficient_of_asymmetry(const RationalPolytope& P, const RatVec& x) {
    if (!contains_in_interior(P.facets(), x)) throw Error(ErrorKind::PointNotInterior, "point is not interior");
    RatVec neg(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) neg[k] = -x[k];
    RationalPolytope Q = P.translated(neg);
    Rational best = 0;
    for (const auto& v : Q.vertices()) {
        RatVec u(v.size());
        for (std::size_t k = 0; k < v.size(); ++k) u[k] = -v[k];
        Rational c = 1 / radius_function(Q, u);
        if (c > best) best = c;
    }
    return best;
}

Rational coefficient_of_asymmetry(const IntegralPolytope& P, const IntVec& x) {
    return coefficient_of_asymmetry(P.as_rational(), to_rational(x));
}

RationalPolytope polar_dual(const RationalPolytope& P) {
    require_origin_interior(P.facets());
    std::vector<RatVec> pts;
    for (const auto& f : P.facets()) {
        RatVec y(P.dim());
        for (std::size_t k = 0; k < P.dim(); ++k) y[k] = Rational(f.normal[k]) / f.offset;
        pts.push_back(std::move(y));
    }
    return RationalPolytope::from_points(P.dim(), std::move(pts));
}

RationalPolytope polar_dual(const IntegralPolytope& P) {
    return polar_dual(P.as_rational());
}

IntVec apply_affine(const IntMatrix& A, const IntVec& t, const IntVec& x) {
    IntVec y(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        BigInt s = t[i];
        for (std::size_t j = 0; j < A.cols(); ++j) s += A(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

IntegralPolytope affine_image(const IntegralPolytope& P, const IntMatrix& A, const IntVec& t) {
    std::vector<IntVec> pts;
    for (const auto& v : P.vertices()) pts.push_back(apply_affine(A, t, v));
    return from_vertices(P.dim(), pts);
}

}  // namespace latpol
