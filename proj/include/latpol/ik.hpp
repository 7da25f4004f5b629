#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "latpol/exact_linalg.hpp"

namespace latpol {

struct ChiCheck {
    bool member = true;
    // "SUM", "ORD(j)" for x_j >= x_{j+1} (ORD(0): x_1 <= 1, ORD(n): x_n >= 0), "PS(j)".
    std::vector<std::string> violations;
};

// Sum to one, ordered, and x_1...x_j <= x_{j+1} + ... + x_n for all j < n.
ChiCheck chi_membership(const RatVec& x);

// [xbar(n,1), ..., xbar(n,n)].
std::vector<RatVec> candidate_set(unsigned n);

// Minimize x_a * ... * x_b over the feasible set.
struct IKInstance {
    unsigned n = 0;
    unsigned a = 1;
    unsigned b = 1;
};

void validate(const IKInstance& inst);  // throws ParameterOutOfRange
Rational objective(const IKInstance& inst, const RatVec& x);

struct IKSolution {
    Rational value;
    std::vector<unsigned> minimizers;   // candidate indices l attaining the minimum
    std::vector<Rational> candidate_values;  // objective at xbar(n, l), l = 1..n
    bool unique = false;
};

IKSolution solve_over_candidates(const IKInstance& inst);

// 1 / ((n-i+1)(s_i-1)).
Rational coordinate_lower_bound(unsigned n, unsigned i);

struct NumericResult {
    double value = 0;
    double log10_value = 0;
    std::vector<double> point;
    unsigned best_start = 0;
};

// Multi-start log-barrier Newton method in stick-breaking coordinates.
// Throws NoFeasibleStart if no start could be placed in the interior.
NumericResult numeric_refine(const IKInstance& inst, double tolerance, unsigned starts, std::uint64_t seed);

struct Localization {
    bool applicable = false;  // localization needs n >= 4
    bool pass = true;
    char label = '-';
    std::string detail;
};

// Checks the exact minimizers against the predicted case (a)-(e).
Localization locate_optimum(const IKInstance& inst);
Localization locate_optimum(const IKInstance& inst, const IKSolution& sol);

// Random exact point of the feasible set: sorted random weights, repaired by repeated
// halving toward the uniform point. Throws SamplingExhausted after max_repair halvings.
RatVec random_chi_point(unsigned n, std::mt19937_64& rng, unsigned max_repair = 1000);

}  // namespace latpol
