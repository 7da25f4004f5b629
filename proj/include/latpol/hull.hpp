#pragma once

#include <vector>

#include "latpol/exact_linalg.hpp"

namespace latpol {

constexpr std::size_t kHullMaxDim = 8;
constexpr std::size_t kHullMaxPoints = 200;

// <normal, x> <= offset, normal a primitive integer vector.
struct Facet {
    IntVec normal;
    Rational offset;
    bool operator==(const Facet&) const = default;
};

// Facets of conv(points) for a full-dimensional point set, sorted by normal.
// Throws HullBudgetExceeded, NotFullDimensional, EmptyInput.
std::vector<Facet> compute_facets(std::size_t d, const std::vector<RatVec>& points);

// Indices of points that are vertices of conv(points) given its facets.
std::vector<std::size_t> vertex_indices(const std::vector<RatVec>& points, const std::vector<Facet>& facets);

Rational facet_value(const Facet& f, const RatVec& x);  // offset - <normal, x>

}  // namespace latpol
