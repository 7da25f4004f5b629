#pragma once

#include <vector>

#include "latpol/polytope.hpp"

namespace latpol {

// d-simplex with an ordered vertex list; barycentric coordinates follow that order.
class IntegralSimplex {
public:
    IntegralSimplex() = default;
    // Throws DimensionMismatch (not d+1 points of length d), NotFullDimensional.
    explicit IntegralSimplex(std::vector<IntVec> ordered_vertices);
    // Vertices of P in its canonical order. Throws InvalidArgument unless P has d+1 vertices.
    static IntegralSimplex from_polytope(const IntegralPolytope& P);

    std::size_t dim() const { return d_; }
    const std::vector<IntVec>& vertices() const { return vertices_; }
    const IntegralPolytope& polytope() const { return polytope_; }
    // Facet opposite vertex i.
    const Facet& opposite_facet(std::size_t i) const { return opposite_[i]; }

    IntegralSimplex translated(const IntVec& t) const;

private:
    std::size_t d_ = 0;
    std::vector<IntVec> vertices_;
    IntegralPolytope polytope_;
    std::vector<Facet> opposite_;
};

struct BarycentricVector {
    RatVec beta;                // in vertex order, sums to 1
    RatVec sorted;              // beta_1 >= ... >= beta_{d+1}
    std::vector<std::size_t> order;  // sorted[k] = beta[order[k]]
    bool interior() const;
};

// Vertex indices of a face; l + 1 entries for an l-face.
using FaceRef = std::vector<std::size_t>;

BarycentricVector barycentric_coordinates(const IntegralSimplex& S, const RatVec& x);

// All (l+1)-subsets of vertex indices, 1 <= l <= d.
std::vector<FaceRef> faces(const IntegralSimplex& S, std::size_t l);

// gcd of maximal minors of the edge matrix over l!. Throws DegenerateFace.
Rational normalized_volume(const IntegralSimplex& S, const FaceRef& F);
// Same quantity through the Smith normal form of the edge matrix.
Rational normalized_volume_snf(const IntegralSimplex& S, const FaceRef& F);
Rational max_face_volume(const IntegralSimplex& S, std::size_t l);
// vol_Z of the simplex conv(face) with rational vertices: scale by the common
// denominator D, then gcd of maximal minors / (D^l l!). Throws DegenerateFace.
Rational normalized_volume(const std::vector<RatVec>& face);

// Number of the given lattice points (of S) lying on face F.
std::size_t face_point_count(const IntegralSimplex& S, const FaceRef& F, const std::vector<IntVec>& points);

// 1 / prod beta_i(o). Throws OriginNotInterior.
Rational mahler_product(const IntegralSimplex& S);
// (d!)^2 vol(S) vol(S*), computed from the dual.
Rational mahler_product_geometric(const IntegralSimplex& S);

// d! vol(S*). Requires o to be the unique interior lattice point.
Rational anticanonical_degree(const IntegralSimplex& S);
// Max over edges of S* of (lattice points on the edge - 1).
Rational max_invariant_curve_degree(const IntegralSimplex& S);

// Lattice points on the closed segment [a, b], minus one.
long long segment_lattice_length(const RatVec& a, const RatVec& b);

}  // namespace latpol
