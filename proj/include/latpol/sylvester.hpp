#pragma once

#include <vector>

#include "latpol/exact_linalg.hpp"

namespace latpol {

constexpr unsigned kSylvesterMaxIndex = 12;

// s_1 = 2, s_{i+1} = s_i^2 - s_i + 1. Cached lazily, thread-safe.
// Throws ParameterOutOfRange for i == 0 or i > max_index.
BigInt sylvester(unsigned i);
void set_sylvester_max_index(unsigned max_index);
unsigned sylvester_max_index();

// 1 - sum_{j<=i} 1/s_j, which equals 1/(s_{i+1} - 1).
Rational unit_sum_defect(unsigned i);

// Returns m_i / a_i for pairwise coprime a with integral sum of m_i / a_i.
std::vector<BigInt> coprime_divisibility_split(const std::vector<BigInt>& a, const std::vector<BigInt>& m);

}  // namespace latpol
