#pragma once

#include <functional>
#include <initializer_list>
#include <random>
#include <vector>

#include "latpol/error.hpp"
#include "latpol/exact_linalg.hpp"

namespace testutil {

inline latpol::IntVec iv(std::initializer_list<long> xs) {
    latpol::IntVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline std::vector<latpol::BigInt> ints(std::initializer_list<long> xs) { return iv(xs); }

inline std::vector<latpol::IntVec> pts(std::initializer_list<std::initializer_list<long>> xs) {
    std::vector<latpol::IntVec> out;
    for (const auto& x : xs) out.push_back(iv(x));
    return out;
}

inline latpol::RatVec rv(std::initializer_list<latpol::Rational> xs) { return latpol::RatVec(xs); }

// Kind of the latpol::Error thrown by fn, Internal if none.
inline latpol::ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const latpol::Error& e) {
        return e.kind();
    }
    return latpol::ErrorKind::Internal;
}

// Random integer points in [lo, hi]^d.
inline std::vector<latpol::IntVec> random_points(std::mt19937_64& rng, std::size_t d, std::size_t n, long lo, long hi) {
    std::uniform_int_distribution<long> c(lo, hi);
    std::vector<latpol::IntVec> out(n, latpol::IntVec(d));
    for (auto& p : out)
        for (auto& x : p) x = c(rng);
    return out;
}

inline std::vector<latpol::RatVec> as_rational(const std::vector<latpol::IntVec>& v) {
    std::vector<latpol::RatVec> out;
    for (const auto& p : v) out.emplace_back(p.begin(), p.end());
    return out;
}

}  // namespace testutil
