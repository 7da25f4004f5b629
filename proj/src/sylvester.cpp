#include "latpol/sylvester.hpp"

#include <mutex>

namespace latpol {

namespace {
std::mutex g_mutex;
std::vector<BigInt> g_terms{BigInt(2)};
unsigned g_max = kSylvesterMaxIndex;
}  // namespace

void set_sylvester_max_index(unsigned max_index) {
    std::lock_guard lock(g_mutex);
    g_max = max_index;
}

unsigned sylvester_max_index() {
    std::lock_guard lock(g_mutex);
    return g_max;
}

BigInt sylvester(unsigned i) {
    std::lock_guard lock(g_mutex);
    if (i == 0 || i > g_max)
        throw Error(ErrorKind::ParameterOutOfRange, "sylvester index " + std::to_string(i) + " outside [1, " +
                                                        std::to_string(g_max) + "]");
    while (g_terms.size() < i) {
        const BigInt& s = g_terms.back();
        g_terms.push_back(s * s - s + 1);
    }
    return g_terms[i - 1];
}

Rational unit_sum_defect(unsigned i) {
    Rational r = 1;
    for (unsigned j = 1; j <= i; ++j) r -= Rational(1, sylvester(j));
    return r;
}

std::vector<BigInt> coprime_divisibility_split(const std::vector<BigInt>& a, const std::vector<BigInt>& m) {
    if (a.size() != m.size()) throw Error(ErrorKind::DimensionMismatch, "a and m differ in length");
    if (a.empty()) throw Error(ErrorKind::EmptyInput, "empty input");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] <= 0) throw Error(ErrorKind::InvalidArgument, "a must be positive");
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (boost::multiprecision::gcd(a[i], a[j]) != 1)
                throw Error(ErrorKind::NotCoprime, to_string(a[i]) + " and " + to_string(a[j]) + " share a factor");
    }
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += Rational(m[i], a[i]);
    if (!is_integral(sum)) throw Error(ErrorKind::NotIntegralSum, "sum is " + to_string(sum));
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (m[i] % a[i] != 0) throw Error(ErrorKind::Internal, "coprime split produced a fraction");
        out.push_back(m[i] / a[i]);
    }
    return out;
}

}  // namespace latpol
