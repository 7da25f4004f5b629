#pragma once

#include <optional>
#include <vector>

#include "latpol/simplex.hpp"

namespace latpol {

// x -> A x + t mapping S1 onto S2, with vertex i of S1 sent to vertex perm[i] of S2.
struct UnimodularWitness {
    IntMatrix A;
    IntVec t;
    std::vector<std::size_t> perm;
};

// Searches all vertex bijections. Throws DimensionMismatch.
std::optional<UnimodularWitness> unimodular_equivalent(const IntegralSimplex& S1, const IntegralSimplex& S2);

// Sorted lattice lengths of all edges; a unimodular invariant.
std::vector<BigInt> edge_length_profile(const IntegralSimplex& S);

}  // namespace latpol
