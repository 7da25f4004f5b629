#include "latpol/families.hpp"

#include <cmath>

namespace latpol {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::ParameterOutOfRange, what);
}

IntVec axis(unsigned d, unsigned i, const BigInt& len) {
    IntVec v(d, BigInt(0));
    v[i] = len;
    return v;
}

}  // namespace

IntegralSimplex simplex_T(unsigned d, unsigned j) {
    require(d >= 1 && j >= 1 && j <= d + 1, "simplex_T needs 1 <= j <= d+1");
    std::vector<IntVec> V{IntVec(d, BigInt(0))};
    for (unsigned i = 1; i < j; ++i) V.push_back(axis(d, i - 1, sylvester(i)));
    if (j <= d) {
        BigInt len = BigInt(d - j + 2) * (sylvester(j) - 1);
        for (unsigned i = j; i <= d; ++i) V.push_back(axis(d, i - 1, len));
    }
    return IntegralSimplex(std::move(V));
}

IntegralSimplex simplex_S(unsigned d, unsigned k) {
    require(d >= 2, "simplex_S needs d >= 2");
    std::vector<IntVec> V{IntVec(d, BigInt(0))};
    for (unsigned i = 1; i < d; ++i) V.push_back(axis(d, i - 1, sylvester(i)));
    V.push_back(axis(d, d - 1, BigInt(k + 1) * (sylvester(d) - 1)));
    return IntegralSimplex(std::move(V));
}

IntegralPolytope dual_seed(unsigned d) {
    require(d >= 2, "dual_seed needs d >= 2");
    IntVec shift(d, BigInt(-1));
    shift[d - 1] = 0;
    std::vector<IntVec> pts{IntVec(d, BigInt(0))};
    for (unsigned i = 1; i < d; ++i) pts.push_back(axis(d, i - 1, sylvester(i)));
    pts.push_back(axis(d, d - 1, 1));
    pts.push_back(axis(d, d - 1, -1));
    for (auto& p : pts)
        for (unsigned k = 0; k < d; ++k) p[k] += shift[k];
    return from_vertices(d, pts);
}

RatVec xbar(unsigned n, unsigned l) {
    require(n >= 2 && l >= 1 && l <= n, "xbar needs n >= 2 and 1 <= l <= n");
    RatVec x;
    for (unsigned i = 1; i < l; ++i) x.emplace_back(1, sylvester(i));
    Rational c(1, BigInt(n - l + 1) * (sylvester(l) - 1));
    for (unsigned i = l; i <= n; ++i) x.push_back(c);
    return x;
}

Rational nu_closed_form(unsigned d, unsigned h, unsigned l) {
    require(l >= 1 && l <= h && h + 1 <= d, "nu_closed_form needs 1 <= l <= h <= d-1");
    BigInt sl = sylvester(l) - 1;
    BigInt num = pow(BigInt(d - l + 2), h - l + 1) * pow(sl, h - l + 2);
    return Rational(num, factorial(h));
}

Rational gamma_closed_form(unsigned d, unsigned h, unsigned g, unsigned l) {
    require(g >= 1 && g < h && h + 1 <= d && l >= 1 && l <= h,
            "gamma_closed_form needs 1 <= g < h <= d-1 and 1 <= l <= h");
    RatVec x = xbar(d + 1, l);
    Rational p = 1;
    for (unsigned i = h - g + 1; i <= h; ++i) p /= x[i - 1];
    return p / Rational(factorial(g));
}

Rational face_bound(unsigned d, unsigned l) {
    require(d >= 3 && l >= 1 && l <= d, "face_bound needs d >= 3 and 1 <= l <= d");
    BigInt sd = sylvester(d) - 1;
    return Rational(2 * sd * sd, factorial(l) * (sylvester(d - l + 1) - 1));
}

Rational barycentric_lower_bound(unsigned d, unsigned i) {
    require(i >= 1 && i <= d + 1, "barycentric_lower_bound needs 1 <= i <= d+1");
    return Rational(1, BigInt(d - i + 2) * (sylvester(i) - 1));
}

Rational dual_T_volume(unsigned d, unsigned i) {
    require(i >= 1 && i <= d + 1, "dual_T_volume needs 1 <= i <= d+1");
    return Rational((sylvester(i) - 1) * (d - i + 2), factorial(d));
}

unsigned localization_limit(unsigned n) {
    double b = 2.0 + std::log2(std::log2(static_cast<double>(n)) + std::log2(std::exp(1.0)));
    return static_cast<unsigned>(std::floor(b + 1e-12));
}

}  // namespace latpol
