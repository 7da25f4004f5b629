#pragma once

#include <vector>

#include "latpol/exact_linalg.hpp"
#include "latpol/hull.hpp"

namespace latpol {

using HalfspaceRep = std::vector<Facet>;

class IntegralPolytope;

// Full-dimensional polytope with rational vertices, lexicographically sorted.
class RationalPolytope {
public:
    RationalPolytope() = default;
    // Deduplicates, drops non-vertices. Throws EmptyInput, NotFullDimensional.
    static RationalPolytope from_points(std::size_t d, std::vector<RatVec> points);

    std::size_t dim() const { return d_; }
    const std::vector<RatVec>& vertices() const { return vertices_; }
    const HalfspaceRep& facets() const { return facets_; }
    bool is_integral() const;

    RationalPolytope translated(const RatVec& t) const;
    bool operator==(const RationalPolytope& o) const { return d_ == o.d_ && vertices_ == o.vertices_; }

private:
    friend class IntegralPolytope;
    std::size_t d_ = 0;
    std::vector<RatVec> vertices_;
    HalfspaceRep facets_;
};

// Full-dimensional polytope with integer vertices, lexicographically sorted.
class IntegralPolytope {
public:
    IntegralPolytope() = default;
    static IntegralPolytope from_vertices(std::size_t d, std::vector<IntVec> points);

    std::size_t dim() const { return d_; }
    const std::vector<IntVec>& vertices() const { return vertices_; }
    const HalfspaceRep& facets() const { return facets_; }
    std::vector<RatVec> rational_vertices() const;
    RationalPolytope as_rational() const;

    IntegralPolytope translated(const IntVec& t) const;
    bool operator==(const IntegralPolytope& o) const { return d_ == o.d_ && vertices_ == o.vertices_; }

private:
    std::size_t d_ = 0;
    std::vector<IntVec> vertices_;
    HalfspaceRep facets_;
};

IntegralPolytope from_vertices(std::size_t d, const std::vector<IntVec>& points);
IntegralPolytope cube(std::size_t d, long lo, long hi);

const HalfspaceRep& facet_representation(const IntegralPolytope& P);
const HalfspaceRep& facet_representation(const RationalPolytope& P);

bool contains(const HalfspaceRep& H, const RatVec& x);
bool contains_in_interior(const HalfspaceRep& H, const RatVec& x);
bool contains_in_interior(const IntegralPolytope& P, const RatVec& x);

// Euclidean volume, exact, via a pulling triangulation.
Rational volume(const RationalPolytope& P);
Rational volume(const IntegralPolytope& P);

// max{r >= 0 : r u in P}; requires o in int P.
Rational radius_function(const RationalPolytope& P, const RatVec& u);
Rational radius_function(const IntegralPolytope& P, const RatVec& u);

// ca(P, x) = max over vertices v of P - x of 1 / rho(P - x, -v).
Rational coefficient_of_asymmetry(const RationalPolytope& P, const RatVec& x);
Rational coefficient_of_asymmetry(const IntegralPolytope& P, const IntVec& x);

// Vertices are a / b for each facet <a, x> <= b. Requires o in int P.
RationalPolytope polar_dual(const RationalPolytope& P);
RationalPolytope polar_dual(const IntegralPolytope& P);

// x -> A x + t.
IntegralPolytope affine_image(const IntegralPolytope& P, const IntMatrix& A, const IntVec& t);
IntVec apply_affine(const IntMatrix& A, const IntVec& t, const IntVec& x);

}  // namespace latpol
