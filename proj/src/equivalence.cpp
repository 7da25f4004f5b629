#include "latpol/equivalence.hpp"

#include <algorithm>
#include <numeric>

namespace latpol {

namespace {

BigInt edge_length(const IntVec& a, const IntVec& b) {
    IntVec e(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) e[k] = b[k] - a[k];
    return gcd_of(e);
}

}  // namespace

std::vector<BigInt> edge_length_profile(const IntegralSimplex& S) {
    std::vector<BigInt> out;
    const auto& V = S.vertices();
    for (std::size_t i = 0; i < V.size(); ++i)
        for (std::size_t j = i + 1; j < V.size(); ++j) out.push_back(edge_length(V[i], V[j]));
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<UnimodularWitness> unimodular_equivalent(const IntegralSimplex& S1, const IntegralSimplex& S2) {
    const std::size_t d = S1.dim();
    if (S2.dim() != d) throw Error(ErrorKind::DimensionMismatch, "simplices of different dimension");
    if (edge_length_profile(S1) != edge_length_profile(S2)) return std::nullopt;
    const auto& V = S1.vertices();
    const auto& W = S2.vertices();
    IntMatrix E1(d, d);
    for (std::size_t j = 1; j <= d; ++j)
        for (std::size_t i = 0; i < d; ++i) E1(i, j - 1) = V[j][i] - V[0][i];
    IntMatrix E2(d, d);
    for (std::size_t j = 1; j <= d; ++j)
        for (std::size_t i = 0; i < d; ++i) E2(i, j - 1) = W[j][i] - W[0][i];
    if (abs(determinant(E1)) != abs(determinant(E2))) return std::nullopt;
    RatMatrix Vinv = inverse(to_rational(E1));

    std::vector<std::vector<BigInt>> len1(d + 1, std::vector<BigInt>(d + 1)), len2 = len1;
    for (std::size_t i = 0; i <= d; ++i)
        for (std::size_t j = 0; j <= d; ++j) {
            len1[i][j] = edge_length(V[i], V[j]);
            len2[i][j] = edge_length(W[i], W[j]);
        }

    std::vector<std::size_t> perm(d + 1);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i <= d && ok; ++i)
            for (std::size_t j = i + 1; j <= d && ok; ++j)
                if (len1[i][j] != len2[perm[i]][perm[j]]) ok = false;
        if (!ok) continue;
        IntMatrix A(d, d);
        for (std::size_t r = 0; r < d && ok; ++r) {
            for (std::size_t c = 0; c < d && ok; ++c) {
                Rational s = 0;
                for (std::size_t k = 0; k < d; ++k)
                    s += Rational(W[perm[k + 1]][r] - W[perm[0]][r]) * Vinv(k, c);
                if (!is_integral(s)) ok = false;
                else A(r, c) = numerator(s);
            }
        }
        if (!ok) continue;
        BigInt det = determinant(A);
        if (det != 1 && det != -1) continue;
        IntVec t(d);
        for (std::size_t r = 0; r < d; ++r) {
            BigInt s = W[perm[0]][r];
            for (std::size_t c = 0; c < d; ++c) s -= A(r, c) * V[0][c];
            t[r] = s;
        }
        return UnimodularWitness{std::move(A), std::move(t), perm};
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace latpol
