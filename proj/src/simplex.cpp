#include "latpol/simplex.hpp"

#include <algorithm>
#include <numeric>

#include "latpol/lattice_points.hpp"

namespace latpol {

IntegralSimplex::IntegralSimplex(std::vector<IntVec> ordered_vertices) : vertices_(std::move(ordered_vertices)) {
    if (vertices_.empty()) throw Error(ErrorKind::EmptyInput, "simplex without vertices");
    d_ = vertices_[0].size();
    if (vertices_.size() != d_ + 1) throw Error(ErrorKind::DimensionMismatch, "a d-simplex needs d+1 vertices");
    for (const auto& v : vertices_)
        if (v.size() != d_) throw Error(ErrorKind::DimensionMismatch, "vertex of wrong dimension");
    IntMatrix E(d_, d_);
    for (std::size_t j = 1; j <= d_; ++j)
        for (std::size_t i = 0; i < d_; ++i) E(i, j - 1) = vertices_[j][i] - vertices_[0][i];
    if (determinant(E) == 0) throw Error(ErrorKind::NotFullDimensional, "simplex vertices are affinely dependent");
    polytope_ = from_vertices(d_, vertices_);
    opposite_.resize(d_ + 1);
    for (std::size_t i = 0; i <= d_; ++i) {
        RatVec v = to_rational(vertices_[i]);
        for (const auto& f : polytope_.facets())
            if (facet_value(f, v) != 0) opposite_[i] = f;
    }
}

IntegralSimplex IntegralSimplex::from_polytope(const IntegralPolytope& P) {
    if (P.vertices().size() != P.dim() + 1)
        throw Error(ErrorKind::InvalidArgument, "polytope has " + std::to_string(P.vertices().size()) +
                                                    " vertices, not a simplex");
    return IntegralSimplex(P.vertices());
}

IntegralSimplex IntegralSimplex::translated(const IntVec& t) const {
    IntegralSimplex S = *this;
    for (auto& v : S.vertices_)
        for (std::size_t k = 0; k < d_; ++k) v[k] += t[k];
    S.polytope_ = polytope_.translated(t);
    for (auto& f : S.opposite_) f.offset += Rational(dot(f.normal, t));
    return S;
}

bool BarycentricVector::interior() const {
    return std::all_of(beta.begin(), beta.end(), [](const Rational& b) { return b > 0; });
}

BarycentricVector barycentric_coordinates(const IntegralSimplex& S, const RatVec& x) {
    const std::size_t d = S.dim();
    if (x.size() != d) throw Error(ErrorKind::DimensionMismatch, "point of wrong dimension");
    RatMatrix A(d + 1, d + 1);
    RatVec b(d + 1);
    for (std::size_t j = 0; j <= d; ++j) {
        for (std::size_t i = 0; i < d; ++i) A(i, j) = Rational(S.vertices()[j][i]);
        A(d, j) = 1;
    }
    for (std::size_t i = 0; i < d; ++i) b[i] = x[i];
    b[d] = 1;
    BarycentricVector bv;
    bv.beta = solve_linear(A, b);
    bv.order.resize(d + 1);
    std::iota(bv.order.begin(), bv.order.end(), 0);
    std::stable_sort(bv.order.begin(), bv.order.end(),
                     [&](std::size_t p, std::size_t q) { return bv.beta[p] > bv.beta[q]; });
    for (auto i : bv.order) bv.sorted.push_back(bv.beta[i]);
    return bv;
}

std::vector<FaceRef> faces(const IntegralSimplex& S, std::size_t l) {
    const std::size_t n = S.dim() + 1;
    if (l < 1 || l > S.dim()) throw Error(ErrorKind::ParameterOutOfRange, "face dimension out of range");
    std::vector<FaceRef> out;
    FaceRef c(l + 1);
    std::iota(c.begin(), c.end(), 0);
    for (;;) {
        out.push_back(c);
        std::size_t i = l + 1;
        while (i-- > 0) {
            if (c[i] < n - (l + 1) + i) break;
            if (i == 0) return out;
        }
        ++c[i];
        for (std::size_t j = i + 1; j <= l; ++j) c[j] = c[j - 1] + 1;
    }
}

namespace {

IntMatrix edge_matrix(const IntegralSimplex& S, const FaceRef& F) {
    if (F.empty()) throw Error(ErrorKind::DegenerateFace, "empty face");
    IntMatrix E(S.dim(), F.size() - 1);
    for (std::size_t j = 1; j < F.size(); ++j)
        for (std::size_t i = 0; i < S.dim(); ++i) E(i, j - 1) = S.vertices()[F[j]][i] - S.vertices()[F[0]][i];
    return E;
}

}  // namespace

Rational normalized_volume(const IntegralSimplex& S, const FaceRef& F) {
    if (F.size() == 1) return 1;
    BigInt g = gcd_of_maximal_minors(edge_matrix(S, F));
    if (g == 0) throw Error(ErrorKind::DegenerateFace, "face vertices are affinely dependent");
    return Rational(g, factorial(static_cast<unsigned>(F.size() - 1)));
}

Rational normalized_volume_snf(const IntegralSimplex& S, const FaceRef& F) {
    if (F.size() == 1) return 1;
    auto inv = smith_invariant_factors(edge_matrix(S, F));
    if (inv.size() != F.size() - 1) throw Error(ErrorKind::DegenerateFace, "face vertices are affinely dependent");
    BigInt p = 1;
    for (const auto& x : inv) p *= x;
    return Rational(p, factorial(static_cast<unsigned>(F.size() - 1)));
}

Rational max_face_volume(const IntegralSimplex& S, std::size_t l) {
    Rational best = 0;
    for (const auto& F : faces(S, l)) best = std::max(best, normalized_volume(S, F));
    return best;
}

Rational normalized_volume(const std::vector<RatVec>& face) {
    if (face.empty()) throw Error(ErrorKind::DegenerateFace, "empty face");
    const std::size_t l = face.size() - 1, d = face[0].size();
    if (l == 0) return 1;
    BigInt D = 1;
    for (const auto& v : face) D = lcm(D, lcm_of_denominators(v));
    IntMatrix E(d, l);
    for (std::size_t j = 1; j <= l; ++j)
        for (std::size_t i = 0; i < d; ++i) {
            Rational e = (face[j][i] - face[0][i]) * Rational(D);
            E(i, j - 1) = numerator(e);
        }
    BigInt g = gcd_of_maximal_minors(E);
    if (g == 0) throw Error(ErrorKind::DegenerateFace, "face vertices are affinely dependent");
    BigInt Dl = pow(D, static_cast<unsigned>(l));
    return Rational(g) / (Rational(Dl) * Rational(factorial(static_cast<unsigned>(l))));
}

std::size_t face_point_count(const IntegralSimplex& S, const FaceRef& F, const std::vector<IntVec>& points) {
    std::vector<char> in(S.dim() + 1, 0);
    for (auto i : F) in[i] = 1;
    std::size_t n = 0;
    for (const auto& p : points) {
        RatVec x = to_rational(p);
        bool on = true;
        for (std::size_t i = 0; i <= S.dim() && on; ++i)
            if (!in[i] && facet_value(S.opposite_facet(i), x) != 0) on = false;
        if (on) ++n;
    }
    return n;
}

Rational mahler_product(const IntegralSimplex& S) {
    BarycentricVector b = barycentric_coordinates(S, RatVec(S.dim(), Rational(0)));
    if (!b.interior()) throw Error(ErrorKind::OriginNotInterior, "origin is not an interior point");
    Rational p = 1;
    for (const auto& x : b.beta) p *= x;
    return 1 / p;
}

Rational mahler_product_geometric(const IntegralSimplex& S) {
    RationalPolytope D = polar_dual(S.polytope());
    Rational f = Rational(factorial(static_cast<unsigned>(S.dim())));
    return f * f * volume(S.polytope()) * volume(D);
}

namespace {

void require_unique_origin(const IntegralSimplex& S) {
    if (!contains_in_interior(S.polytope(), RatVec(S.dim(), Rational(0))))
        throw Error(ErrorKind::OriginNotInterior, "origin is not an interior point");
    if (count_lattice_points(S.polytope(), true, 2) > 1)
        throw Error(ErrorKind::MultipleInteriorPoints, "more than one interior lattice point");
}

}  // namespace

Rational anticanonical_degree(const IntegralSimplex& S) {
    require_unique_origin(S);
    Rational f = Rational(factorial(static_cast<unsigned>(S.dim())));
    return mahler_product(S) / (f * volume(S.polytope()));
}

Rational max_invariant_curve_degree(const IntegralSimplex& S) {
    require_unique_origin(S);
    RationalPolytope D = polar_dual(S.polytope());
    const auto& V = D.vertices();
    long long best = 0;
    for (std::size_t i = 0; i < V.size(); ++i)
        for (std::size_t j = i + 1; j < V.size(); ++j) best = std::max(best, segment_lattice_length(V[i], V[j]));
    return Rational(best);
}

long long segment_lattice_length(const RatVec& a, const RatVec& b) {
    const std::size_t d = a.size();
    RatVec w(d);
    std::size_t k = d;
    for (std::size_t i = 0; i < d; ++i) {
        w[i] = b[i] - a[i];
        if (w[i] != 0 && (k == d || abs(w[i]) > abs(w[k]))) k = i;
    }
    if (k == d) return is_integral(a) ? 0 : -1;
    BigInt lo = ceil_div(std::min(a[k], b[k])), hi = floor_div(std::max(a[k], b[k]));
    long long count = 0;
    for (BigInt xk = lo; xk <= hi; ++xk) {
        Rational t = (Rational(xk) - a[k]) / w[k];
        bool ok = true;
        for (std::size_t i = 0; i < d && ok; ++i)
            if (!is_integral(a[i] + t * w[i])) ok = false;
        if (ok) ++count;
    }
    return count - 1;
}

}  // namespace latpol
