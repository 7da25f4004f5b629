#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "latpol/lattice_points.hpp"
#include "latpol/simplex.hpp"

namespace latpol {

struct SuiteConfig {
    std::vector<unsigned> dims{2, 3, 4};  // each in 2..5
    unsigned samples = 200;               // random simplices per dimension
    std::uint64_t seed = 1;
    double budget = kDefaultPointBudget;
    long box_lo = -4;
    long box_hi = 7;
    // Fault injection: check id -> amount added to every bound constant of that check.
    std::map<std::string, Rational> mutations;
};

void validate(const SuiteConfig& cfg);  // throws ParameterOutOfRange

enum class Verdict { Holds, Equality, Violated, Skipped, Observation };
const char* verdict_name(Verdict v);

struct CheckRecord {
    std::string id;
    std::string instance;
    std::string relation;  // "<=", "==", "holds"
    std::string lhs;
    std::string rhs;
    Verdict verdict = Verdict::Holds;
    std::size_t count = 1;    // instances aggregated into this record
    std::size_t equal = 0;    // of which attained equality
    nlohmann::json witness;   // polytope document, null if none
    std::string note;
};

struct VerificationReport {
    SuiteConfig config;
    std::vector<CheckRecord> records;  // sorted by (id, instance)

    std::size_t count(Verdict v) const;
    std::size_t violations() const { return count(Verdict::Violated); }
    bool ok() const { return violations() == 0; }
    nlohmann::json to_json() const;
};

// Ids of all suite checks, sorted.
std::vector<std::string> check_ids();

VerificationReport run_suite(const SuiteConfig& cfg);

struct AffineMap {
    IntMatrix A;
    IntVec t;
};

// Product of `ops` random elementary row operations (|det| = 1, |entry| <= 10^6) and an
// integral shift. ops = 0 gives the identity with zero shift.
AffineMap random_unimodular(unsigned d, std::mt19937_64& rng, unsigned ops);
AffineMap random_unimodular(unsigned d, std::uint64_t seed, unsigned ops);

IntegralSimplex apply(const AffineMap& m, const IntegralSimplex& S);
IntegralPolytope apply(const AffineMap& m, const IntegralPolytope& P);

// Rejection sampling of d+1 points from a random sub-box of [lo, hi]^d until the simplex is
// full-dimensional with exactly one interior lattice point. Throws SamplingExhausted.
IntegralSimplex random_one_point_simplex(unsigned d, std::mt19937_64& rng, long lo, long hi,
                                         unsigned max_attempts = 200000);
IntegralSimplex random_one_point_simplex(unsigned d, std::uint64_t seed, long lo, long hi);

// Same with d+2 to d+5 sampled points, so the result is usually not a simplex.
IntegralPolytope random_one_point_polytope(unsigned d, std::mt19937_64& rng, long lo, long hi,
                                           unsigned max_attempts = 200000);

// Random integral polytope with between 1 and max_interior interior lattice points.
IntegralPolytope random_polytope_with_interior(unsigned d, std::mt19937_64& rng, long lo, long hi,
                                               std::size_t max_interior, unsigned max_attempts = 200000);

// conv(+-p_i) with o as its only interior lattice point.
IntegralPolytope random_symmetric_polytope(unsigned d, std::mt19937_64& rng, unsigned max_attempts = 200000);

// Max number of the given points on a line, minus one (-1 for none).
long long collinear_diameter(const std::vector<IntVec>& points);

// Witness search against a simplex; false for non-simplices.
bool equivalent_to(const IntegralPolytope& P, const IntegralSimplex& S);

}  // namespace latpol
