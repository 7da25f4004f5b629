#include "latpol/exact_linalg.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>

namespace latpol {

const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::SingularMatrix: return "SingularMatrix";
        case ErrorKind::ZeroVector: return "ZeroVector";
        case ErrorKind::NotIntegralSum: return "NotIntegralSum";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::NotFullDimensional: return "NotFullDimensional";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::HullBudgetExceeded: return "HullBudgetExceeded";
        case ErrorKind::DegenerateFace: return "DegenerateFace";
        case ErrorKind::OriginNotInterior: return "OriginNotInterior";
        case ErrorKind::PointNotInterior: return "PointNotInterior";
        case ErrorKind::MultipleInteriorPoints: return "MultipleInteriorPoints";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorKind::SamplingExhausted: return "SamplingExhausted";
        case ErrorKind::NoFeasibleStart: return "NoFeasibleStart";
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

RatVec to_rational(const IntVec& v) {
    RatVec r;
    r.reserve(v.size());
    for (const auto& x : v) r.emplace_back(x);
    return r;
}

RatVec solve_linear(const RatMatrix& A, const RatVec& b) {
    const std::size_t n = A.rows();
    if (A.cols() != n || b.size() != n) throw Error(ErrorKind::DimensionMismatch, "solve_linear shape");
    RatMatrix M(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) M(i, j) = A(i, j);
        M(i, n) = b[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && M(p, c) == 0) ++p;
        if (p == n) throw Error(ErrorKind::SingularMatrix, "matrix is singular");
        if (p != c)
            for (std::size_t j = c; j <= n; ++j) std::swap(M(p, j), M(c, j));
        Rational inv = 1 / M(c, c);
        for (std::size_t j = c; j <= n; ++j) M(c, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || M(i, c) == 0) continue;
            Rational f = M(i, c);
            for (std::size_t j = c; j <= n; ++j) M(i, j) -= f * M(c, j);
        }
    }
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = M(i, n);
    return x;
}

RatMatrix inverse(const RatMatrix& A) {
    const std::size_t n = A.rows();
    if (A.cols() != n) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
    RatMatrix M(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) M(i, j) = A(i, j);
        M(i, n + i) = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && M(p, c) == 0) ++p;
        if (p == n) throw Error(ErrorKind::SingularMatrix, "matrix is singular");
        if (p != c)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(M(p, j), M(c, j));
        Rational inv = 1 / M(c, c);
        for (std::size_t j = 0; j < 2 * n; ++j) M(c, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || M(i, c) == 0) continue;
            Rational f = M(i, c);
            for (std::size_t j = 0; j < 2 * n; ++j) M(i, j) -= f * M(c, j);
        }
    }
    RatMatrix R(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) R(i, j) = M(i, n + j);
    return R;
}

BigInt determinant(const IntMatrix& A) {
    const std::size_t n = A.rows();
    if (A.cols() != n) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
    if (n == 0) return 1;
    IntMatrix M = A;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && M(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(M(p, j), M(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
            }
        }
        prev = M(k, k);
    }
    return sign * M(n - 1, n - 1);
}

Rational determinant(const RatMatrix& A) {
    const std::size_t n = A.rows();
    if (A.cols() != n) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
    RatMatrix M = A;
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && M(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(M(p, j), M(c, j));
            det = -det;
        }
        det *= M(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (M(i, c) == 0) continue;
            Rational f = M(i, c) / M(c, c);
            for (std::size_t j = c; j < n; ++j) M(i, j) -= f * M(c, j);
        }
    }
    return det;
}

std::size_t rank(const RatMatrix& A) {
    RatMatrix M = A;
    std::size_t r = 0;
    for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
        std::size_t p = r;
        while (p < M.rows() && M(p, c) == 0) ++p;
        if (p == M.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M(p, j), M(r, j));
        for (std::size_t i = r + 1; i < M.rows(); ++i) {
            if (M(i, c) == 0) continue;
            Rational f = M(i, c) / M(r, c);
            for (std::size_t j = c; j < M.cols(); ++j) M(i, j) -= f * M(r, j);
        }
        ++r;
    }
    return r;
}

std::size_t rank(const IntMatrix& A) { return rank(to_rational(A)); }

namespace {

// dp[mask] = det of rows `mask` against the first popcount(mask) entries of `cols`.
// Laplace expansion along the last column of each prefix.
std::vector<BigInt> prefix_minor_table(const IntMatrix& M, const std::vector<std::size_t>& cols) {
    const std::size_t n = M.rows();
    if (n > 24) throw Error(ErrorKind::InvalidArgument, "too many rows for minor enumeration");
    const std::uint32_t full = std::uint32_t(1) << n;
    std::vector<BigInt> dp(full);
    dp[0] = 1;
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 1; m < full; ++m)
        if (static_cast<std::size_t>(std::popcount(m)) <= cols.size()) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
    for (std::uint32_t mask : masks) {
        const int j = std::popcount(mask) - 1;
        const std::size_t col = cols[j];
        BigInt acc = 0;
        int pos = 0;
        for (std::size_t r = 0; r < n; ++r) {
            if (!(mask >> r & 1u)) continue;
            const BigInt& e = M(r, col);
            if (e != 0) {
                const BigInt& sub = dp[mask & ~(std::uint32_t(1) << r)];
                if (sub != 0) {
                    if ((pos + j) % 2 == 0) acc += e * sub;
                    else acc -= e * sub;
                }
            }
            ++pos;
        }
        dp[mask] = acc;
    }
    return dp;
}

BigInt gcd_over_row_subsets(const std::vector<BigInt>& dp, std::size_t rows, std::size_t k) {
    BigInt g = 0;
    const std::uint32_t full = std::uint32_t(1) << rows;
    for (std::uint32_t m = 0; m < full; ++m) {
        if (static_cast<std::size_t>(std::popcount(m)) != k) continue;
        if (dp[m] != 0) g = boost::multiprecision::gcd(g, dp[m]);
        if (g == 1) break;
    }
    return abs(g);
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

BigInt gcd_of_maximal_minors(const IntMatrix& E) {
    const std::size_t l = E.cols();
    if (l == 0 || l > E.rows()) return 0;
    std::vector<std::size_t> cols(l);
    for (std::size_t j = 0; j < l; ++j) cols[j] = j;
    return gcd_over_row_subsets(prefix_minor_table(E, cols), E.rows(), l);
}

BigInt gcd_of_minors(const IntMatrix& M, std::size_t k) {
    if (k == 0) return 1;
    if (k > M.rows() || k > M.cols()) return 0;
    std::vector<std::size_t> cols(k);
    for (std::size_t j = 0; j < k; ++j) cols[j] = j;
    BigInt g = 0;
    do {
        BigInt h = gcd_over_row_subsets(prefix_minor_table(M, cols), M.rows(), k);
        g = boost::multiprecision::gcd(g, h);
        if (g == 1) break;
    } while (next_combination(cols, M.cols()));
    return g;
}

std::vector<BigInt> smith_invariant_factors(const IntMatrix& input) {
    IntMatrix M = input;
    const std::size_t R = M.rows(), C = M.cols();
    std::vector<BigInt> diag;
    for (std::size_t t = 0; t < std::min(R, C); ++t) {
        // Pivot: smallest nonzero absolute value in the trailing block.
        for (;;) {
            std::size_t pi = R, pj = C;
            for (std::size_t i = t; i < R; ++i)
                for (std::size_t j = t; j < C; ++j)
                    if (M(i, j) != 0 && (pi == R || abs(M(i, j)) < abs(M(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == R) {
                std::sort(diag.begin(), diag.end());
                return diag;
            }
            for (std::size_t j = 0; j < C; ++j) std::swap(M(t, j), M(pi, j));
            for (std::size_t i = 0; i < R; ++i) std::swap(M(i, t), M(i, pj));

            bool clean = true;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (M(i, t) == 0) continue;
                BigInt q = M(i, t) / M(t, t);
                for (std::size_t j = t; j < C; ++j) M(i, j) -= q * M(t, j);
                if (M(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (M(t, j) == 0) continue;
                BigInt q = M(t, j) / M(t, t);
                for (std::size_t i = t; i < R; ++i) M(i, j) -= q * M(i, t);
                if (M(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // Enforce divisibility into the rest of the block.
            std::size_t bad_i = R;
            for (std::size_t i = t + 1; i < R && bad_i == R; ++i)
                for (std::size_t j = t + 1; j < C; ++j)
                    if (M(i, j) % M(t, t) != 0) {
                        bad_i = i;
                        break;
                    }
            if (bad_i == R) break;
            for (std::size_t j = t; j < C; ++j) M(t, j) += M(bad_i, j);
        }
        diag.push_back(abs(M(t, t)));
    }
    std::sort(diag.begin(), diag.end());
    return diag;
}

BigInt gcd_of(const IntVec& v) {
    BigInt g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    return abs(g);
}

IntVec primitive_vector(const IntVec& v) {
    BigInt g = gcd_of(v);
    if (g == 0) throw Error(ErrorKind::ZeroVector, "primitive_vector of zero vector");
    IntVec r(v.size());
    int sign = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        r[i] = v[i] / g;
        if (sign == 0 && r[i] != 0) sign = r[i] > 0 ? 1 : -1;
    }
    if (sign < 0)
        for (auto& x : r) x = -x;
    return r;
}

BigInt lcm_of_denominators(const RatVec& v) {
    BigInt l = 1;
    for (const auto& q : v) l = boost::multiprecision::lcm(l, BigInt(denominator(q)));
    return l;
}

bool is_integral(const Rational& q) { return denominator(q) == 1; }

bool is_integral(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return is_integral(q); });
}

IntVec to_integer(const RatVec& v) {
    IntVec r;
    r.reserve(v.size());
    for (const auto& q : v) {
        if (!is_integral(q)) throw Error(ErrorKind::InvalidArgument, "non-integral entry " + to_string(q));
        r.push_back(numerator(q));
    }
    return r;
}

BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BigInt floor_div(const Rational& q) {
    BigInt n = numerator(q), d = denominator(q);
    BigInt f = n / d;
    if (n < 0 && f * d != n) f -= 1;
    return f;
}

BigInt ceil_div(const Rational& q) {
    BigInt n = numerator(q), d = denominator(q);
    BigInt f = n / d;
    if (n > 0 && f * d != n) f += 1;
    return f;
}

std::string to_string(const BigInt& z) { return z.str(); }

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace {
BigInt parse_int(const std::string& s, const std::string& whole) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) throw Error(ErrorKind::Parse, "bad number '" + whole + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw Error(ErrorKind::Parse, "bad number '" + whole + "'");
    return BigInt(s[0] == '+' ? s.substr(1) : s);
}
}  // namespace

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s, s));
    BigInt n = parse_int(s.substr(0, slash), s);
    std::string ds = s.substr(slash + 1);
    if (!ds.empty() && (ds[0] == '-' || ds[0] == '+')) throw Error(ErrorKind::Parse, "bad denominator '" + s + "'");
    BigInt d = parse_int(ds, s);
    if (d == 0) throw Error(ErrorKind::Parse, "zero denominator '" + s + "'");
    return Rational(n, d);
}

Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot length");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

BigInt dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot length");
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace latpol
