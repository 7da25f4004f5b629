#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "latpol/polytope.hpp"

namespace latpol {

constexpr double kDefaultPointBudget = 1e8;

// Cap on the bounding-box volume scanned by lattice point enumeration.
void set_point_budget(double budget);
double point_budget();

// Points of {x : <a, x> <= b for all facets} (strict: <) in the box [lo, hi], lex order.
// Throws BudgetExceeded.
std::vector<IntVec> enumerate_lattice_points(const HalfspaceRep& H, const IntVec& lo, const IntVec& hi, bool strict);

// Visits each point once (widest box coordinate innermost) until fn returns false.
// Throws BudgetExceeded when the scanned prefix box is larger than the budget.
void for_each_lattice_point(const HalfspaceRep& H, const IntVec& lo, const IntVec& hi, bool strict,
                            const std::function<bool(const std::vector<std::int64_t>&)>& fn);

std::vector<IntVec> lattice_points(const IntegralPolytope& P);
std::vector<IntVec> interior_lattice_points(const IntegralPolytope& P);
std::vector<IntVec> lattice_points(const RationalPolytope& P);
std::vector<IntVec> interior_lattice_points(const RationalPolytope& P);

// Counts up to `limit` points, stopping early.
std::size_t count_lattice_points(const IntegralPolytope& P, bool strict, std::size_t limit = SIZE_MAX);

// Max number of points on a line, minus one, over the given points of the polytope H.
// -1 for no points.
long long lattice_diameter(const HalfspaceRep& H, const std::vector<IntVec>& points);
long long lattice_diameter(const IntegralPolytope& P);
long long lattice_diameter(const RationalPolytope& P);

// No interior lattice points and a lattice point in the relative interior of every facet.
bool is_inclusion_maximal_lattice_free(const IntegralPolytope& P);

}  // namespace latpol
