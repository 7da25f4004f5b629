#pragma once

#include "latpol/simplex.hpp"
#include "latpol/sylvester.hpp"

namespace latpol {

// conv{o, s_1 e_1, ..., s_{j-1} e_{j-1}, (d-j+2)(s_j-1) e_j, ..., (d-j+2)(s_j-1) e_d}, 1 <= j <= d+1.
IntegralSimplex simplex_T(unsigned d, unsigned j);

// conv{o, s_1 e_1, ..., s_{d-1} e_{d-1}, (k+1)(s_d-1) e_d}, d >= 2.
IntegralSimplex simplex_S(unsigned d, unsigned k);

// conv((T^{d-1}_{1,d} x {0}) u {+-e_d}) - (1, ..., 1, 0), d >= 2.
IntegralPolytope dual_seed(unsigned d);

// (1/s_1, ..., 1/s_{l-1}, c, ..., c) with c = 1/((n-l+1)(s_l-1)).
RatVec xbar(unsigned n, unsigned l);

// Minimal h-face volume of T^d_{1,l}, 1 <= l <= h <= d-1.
Rational nu_closed_form(unsigned d, unsigned h, unsigned l);

// gamma_{h,g}(T^d_{1,l}) = (1/g!) prod_{i=h-g+1..h} 1/xbar(d+1,l)_i, 1 <= g < h <= d-1, 1 <= l <= h.
Rational gamma_closed_form(unsigned d, unsigned h, unsigned g, unsigned l);

// 2 (s_d-1)^2 / (l! (s_{d-l+1}-1)), 1 <= l <= d, d >= 3.
Rational face_bound(unsigned d, unsigned l);

// 1 / ((d-i+2)(s_i-1)), 1 <= i <= d+1.
Rational barycentric_lower_bound(unsigned d, unsigned i);

// (s_i-1)(d-i+2) / d!, the volume of (T^d_{1,i} - e)*.
Rational dual_T_volume(unsigned d, unsigned i);

// Largest index l allowed by the localization bound l <= 2 + log2(log2 n + log2 e).
unsigned localization_limit(unsigned n);

}  // namespace latpol
