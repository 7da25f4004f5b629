#include "latpol/ik.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "latpol/families.hpp"
#include "latpol/sylvester.hpp"

namespace latpol {

ChiCheck chi_membership(const RatVec& x) {
    ChiCheck r;
    auto fail = [&](std::string s) {
        r.member = false;
        r.violations.push_back(std::move(s));
    };
    const std::size_t n = x.size();
    if (n == 0) {
        fail("SUM");
        return r;
    }
    Rational sum = 0;
    for (const auto& v : x) sum += v;
    if (sum != 1) fail("SUM");
    if (x[0] > 1) fail("ORD(0)");
    for (std::size_t j = 0; j + 1 < n; ++j)
        if (x[j] < x[j + 1]) fail("ORD(" + std::to_string(j + 1) + ")");
    if (x[n - 1] < 0) fail("ORD(" + std::to_string(n) + ")");
    Rational prod = 1, rest = sum;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        prod *= x[j];
        rest -= x[j];
        if (prod > rest) fail("PS(" + std::to_string(j + 1) + ")");
    }
    return r;
}

std::vector<RatVec> candidate_set(unsigned n) {
    if (n < 2) throw Error(ErrorKind::ParameterOutOfRange, "candidate_set needs n >= 2");
    std::vector<RatVec> out;
    for (unsigned l = 1; l <= n; ++l) {
        RatVec x = xbar(n, l);
        if (!chi_membership(x).member) throw Error(ErrorKind::Internal, "candidate point is infeasible");
        out.push_back(std::move(x));
    }
    return out;
}

void validate(const IKInstance& inst) {
    if (inst.n < 2 || inst.a < 1 || inst.a > inst.b || inst.b > inst.n)
        throw Error(ErrorKind::ParameterOutOfRange, "instance needs n >= 2 and 1 <= a <= b <= n");
}

Rational objective(const IKInstance& inst, const RatVec& x) {
    Rational p = 1;
    for (unsigned i = inst.a; i <= inst.b; ++i) p *= x[i - 1];
    return p;
}

IKSolution solve_over_candidates(const IKInstance& inst) {
    validate(inst);
    IKSolution s;
    const auto Y = candidate_set(inst.n);
    for (const auto& y : Y) s.candidate_values.push_back(objective(inst, y));
    s.value = *std::min_element(s.candidate_values.begin(), s.candidate_values.end());
    for (unsigned l = 1; l <= inst.n; ++l)
        if (s.candidate_values[l - 1] == s.value) s.minimizers.push_back(l);
    // x̄(1) and x̄(2) coincide at n = 2, so uniqueness is about points, not indices.
    s.unique = true;
    for (auto l : s.minimizers)
        if (Y[l - 1] != Y[s.minimizers.front() - 1]) s.unique = false;
    return s;
}

Rational coordinate_lower_bound(unsigned n, unsigned i) {
    if (i < 1 || i > n) throw Error(ErrorKind::ParameterOutOfRange, "coordinate_lower_bound needs 1 <= i <= n");
    return Rational(1, BigInt(n - i + 1) * (sylvester(i) - 1));
}

namespace {

using real = long double;

// g(u) = <w, u> + sum_i alpha_i log(1 - e^{u_i})
struct LinPhi {
    std::vector<real> w, alpha;
};

real phi(real u) { return std::log(-std::expm1(u)); }
real dphi(real u) { return -1 / std::expm1(-u); }
real ddphi(real u) {
    real e = std::expm1(-u);
    return -std::exp(-u) / (e * e);
}

real eval(const LinPhi& g, const std::vector<real>& u) {
    real s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        s += g.w[i] * u[i];
        if (g.alpha[i] != 0) s += g.alpha[i] * phi(u[i]);
    }
    return s;
}

void grad(const LinPhi& g, const std::vector<real>& u, std::vector<real>& out) {
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = g.w[i] + (g.alpha[i] != 0 ? g.alpha[i] * dphi(u[i]) : 0);
}

struct Problem {
    std::size_t m = 0;
    LinPhi f;
    std::vector<LinPhi> cons;
};

LinPhi zero(std::size_t m) { return {std::vector<real>(m, 0), std::vector<real>(m, 0)}; }

void add(LinPhi& a, const LinPhi& b, real c) {
    for (std::size_t i = 0; i < a.w.size(); ++i) {
        a.w[i] += c * b.w[i];
        a.alpha[i] += c * b.alpha[i];
    }
}

Problem build(const IKInstance& inst) {
    const unsigned n = inst.n;
    const std::size_t m = n - 1;
    std::vector<LinPhi> logx(n + 1, zero(m));  // 1-indexed
    for (unsigned k = 1; k < n; ++k) {
        for (unsigned i = 0; i + 1 < k; ++i) logx[k].w[i] = 1;
        logx[k].alpha[k - 1] = 1;
    }
    for (unsigned i = 0; i < m; ++i) logx[n].w[i] = 1;
    Problem P;
    P.m = m;
    P.f = zero(m);
    for (unsigned k = inst.a; k <= inst.b; ++k) add(P.f, logx[k], 1);
    for (unsigned k = 1; k < n; ++k) {
        LinPhi c = zero(m);
        add(c, logx[k], 1);
        add(c, logx[k + 1], -1);
        P.cons.push_back(c);
    }
    for (unsigned j = 1; j < n; ++j) {
        LinPhi c = zero(m);
        for (unsigned i = 0; i < j; ++i) c.w[i] += 1;
        for (unsigned k = 1; k <= j; ++k) add(c, logx[k], -1);
        P.cons.push_back(c);
    }
    return P;
}

bool feasible(const Problem& P, const std::vector<real>& u) {
    for (auto v : u)
        if (!(v < 0) || !std::isfinite(v)) return false;
    for (const auto& c : P.cons)
        if (!(eval(c, u) > 0)) return false;
    return true;
}

// Barrier on the bounded slack 1 - e^{-c}; a plain -log c is unbounded below because
// log-domain slacks can grow without limit.
real psi(real c) { return -std::log(-std::expm1(-c)); }
real dpsi(real c) { return c > 40 ? -std::exp(-c) : -1 / std::expm1(c); }
real ddpsi(real c) {
    if (c > 40) return std::exp(-c);
    real e = std::expm1(c);
    return std::exp(c) / (e * e);
}

// Also -mu log x_n for the constraint x_n >= 0; log x_n is the sum of all u_i.
real barrier(const Problem& P, const std::vector<real>& u, real mu) {
    real b = eval(P.f, u);
    for (auto v : u) b -= mu * v;
    for (const auto& c : P.cons) b += mu * psi(eval(c, u));
    return b;
}

bool cholesky_solve(std::vector<real> A, std::vector<real> b, std::size_t m, std::vector<real>& x) {
    for (std::size_t j = 0; j < m; ++j) {
        real s = A[j * m + j];
        for (std::size_t k = 0; k < j; ++k) s -= A[j * m + k] * A[j * m + k];
        if (!(s > 0)) return false;
        A[j * m + j] = std::sqrt(s);
        for (std::size_t i = j + 1; i < m; ++i) {
            real t = A[i * m + j];
            for (std::size_t k = 0; k < j; ++k) t -= A[i * m + k] * A[j * m + k];
            A[i * m + j] = t / A[j * m + j];
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        real t = b[i];
        for (std::size_t k = 0; k < i; ++k) t -= A[i * m + k] * b[k];
        b[i] = t / A[i * m + i];
    }
    for (std::size_t i = m; i-- > 0;) {
        real t = b[i];
        for (std::size_t k = i + 1; k < m; ++k) t -= A[k * m + i] * b[k];
        b[i] = t / A[i * m + i];
    }
    x = b;
    return true;
}

void newton_stage(const Problem& P, std::vector<real>& u, real mu) {
    const std::size_t m = P.m;
    std::vector<real> g(m), H(m * m), gc(m), p(m), trial(m);
    for (int iter = 0; iter < 200; ++iter) {
        std::fill(H.begin(), H.end(), 0);
        grad(P.f, u, g);
        for (std::size_t i = 0; i < m; ++i) g[i] -= mu;
        for (std::size_t i = 0; i < m; ++i)
            if (P.f.alpha[i] != 0) H[i * m + i] += P.f.alpha[i] * ddphi(u[i]);
        for (const auto& c : P.cons) {
            real cv = eval(c, u), p1 = dpsi(cv), p2 = ddpsi(cv);
            grad(c, u, gc);
            for (std::size_t i = 0; i < m; ++i) {
                g[i] += mu * p1 * gc[i];
                for (std::size_t j = 0; j < m; ++j) H[i * m + j] += mu * p2 * gc[i] * gc[j];
                if (c.alpha[i] != 0) H[i * m + i] += mu * p1 * c.alpha[i] * ddphi(u[i]);
            }
        }
        std::vector<real> rhs(m);
        for (std::size_t i = 0; i < m; ++i) rhs[i] = -g[i];
        real scale = 0;
        for (std::size_t i = 0; i < m; ++i) scale = std::max(scale, std::fabs(H[i * m + i]));
        real lambda = 0;
        bool ok = false;
        for (int k = 0; k < 80 && !ok; ++k) {
            std::vector<real> Hl = H;
            for (std::size_t i = 0; i < m; ++i) Hl[i * m + i] += lambda;
            ok = cholesky_solve(Hl, rhs, m, p);
            if (!ok) lambda = lambda == 0 ? std::max<real>(scale, 1) * 1e-10L : lambda * 4;
        }
        if (!ok) return;
        real slope = 0;
        for (std::size_t i = 0; i < m; ++i) slope += g[i] * p[i];
        if (!(slope < 0) || -slope < 1e-18L) return;
        real b0 = barrier(P, u, mu), t = 1;
        bool moved = false;
        for (int k = 0; k < 80; ++k, t /= 2) {
            for (std::size_t i = 0; i < m; ++i) trial[i] = u[i] + t * p[i];
            if (!feasible(P, trial)) continue;
            if (barrier(P, trial, mu) <= b0 + 1e-4L * t * slope) {
                moved = true;
                break;
            }
        }
        if (!moved) return;
        u = trial;
    }
}

std::vector<real> logx_of(const std::vector<real>& u) {
    const std::size_t n = u.size() + 1;
    std::vector<real> lx(n);
    real L = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        lx[k] = L + phi(u[k]);
        L += u[k];
    }
    lx[n - 1] = L;
    return lx;
}

// Random strictly feasible start in stick-breaking coordinates.
bool interior_start(const Problem& P, unsigned n, std::vector<real> x, std::vector<real>& u);

bool random_start(const Problem& P, unsigned n, std::mt19937_64& rng, std::vector<real>& u) {
    std::normal_distribution<double> N(0, 1);
    std::uniform_real_distribution<double> U(0, 1);
    std::vector<real> x(n);
    real s = 0;
    // Three shapes of random weights: log-normal, geometric decay, doubly exponential decay.
    const int mode = static_cast<int>(rng() % 3);
    const double sigma = 0.3 + 3.7 * U(rng), r = 0.05 + 0.95 * U(rng), c = 0.05 + 2 * U(rng);
    for (unsigned k = 0; k < n; ++k) {
        real noise = std::exp(static_cast<real>(0.3 * N(rng)));
        if (mode == 0) x[k] = std::exp(static_cast<real>(sigma * N(rng)));
        else if (mode == 1) x[k] = std::pow(static_cast<real>(r), static_cast<real>(k)) * noise;
        else x[k] = std::exp(-static_cast<real>(c) * std::pow(2.0L, static_cast<real>(k) * 0.5L * (1 + U(rng)))) * noise;
        x[k] = std::max<real>(x[k], 1e-300L);
        s += x[k];
    }
    for (auto& v : x) v /= s;
    std::sort(x.begin(), x.end(), std::greater<real>());
    return interior_start(P, n, x, u);
}

// Candidate xbar(n, l) moved slightly toward the uniform point.
bool candidate_start(const Problem& P, unsigned n, unsigned l, std::vector<real>& u) {
    std::vector<real> x(n);
    const real eps = 1e-6L;
    for (unsigned k = 0; k < n; ++k) {
        Rational q = xbar(n, l)[k];
        x[k] = (1 - eps) * static_cast<real>(q.convert_to<long double>()) + eps / n;
    }
    return interior_start(P, n, x, u);
}

bool interior_start(const Problem& P, unsigned n, std::vector<real> x, std::vector<real>& u) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<real> rem(n + 1, 0);
        for (std::size_t k = n; k-- > 0;) rem[k] = rem[k + 1] + x[k];
        u.assign(n - 1, 0);
        bool ok = true;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            u[k] = std::log(rem[k + 1] / rem[k]);
            if (!(u[k] < 0)) ok = false;
        }
        if (ok && feasible(P, u)) {
            bool margin = true;
            for (const auto& c : P.cons)
                if (eval(c, u) < 1e-9L) margin = false;
            if (margin) return true;
        }
        for (auto& v : x) v = (v + 1.0L / n) / 2;
    }
    return false;
}

}  // namespace

NumericResult numeric_refine(const IKInstance& inst, double tolerance, unsigned starts, std::uint64_t seed) {
    validate(inst);
    if (!(tolerance > 0) || starts < 1) throw Error(ErrorKind::ParameterOutOfRange, "tolerance > 0 and starts >= 1");
    const unsigned n = inst.n;
    NumericResult best;
    if (n == 2) {
        // The feasible set is the single point (1/2, 1/2).
        best.point = {0.5, 0.5};
        best.value = std::pow(0.5, inst.b - inst.a + 1);
        best.log10_value = std::log10(best.value);
        return best;
    }
    const Problem P = build(inst);
    const real mu_final = std::max<real>(static_cast<real>(tolerance) * 1e-3L, 1e-14L);
    bool have = false;
    real best_f = 0;
    std::vector<real> best_u;
    auto run = [&](unsigned index, std::vector<real>& u, real mu_start) {
        for (real mu = mu_start; mu >= mu_final; mu /= 10) newton_stage(P, u, mu);
        newton_stage(P, u, mu_final);
        real f = eval(P.f, u);
        if (!have || f < best_f) {
            have = true;
            best_f = f;
            best_u = u;
            best.best_start = index;
        }
    };
    for (unsigned s = 0; s < starts; ++s) {
        std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (s + 1)));
        std::vector<real> u;
        if (!random_start(P, n, rng, u)) continue;
        run(s, u, 1);
    }
    // Candidate starts begin with a weak barrier so they stay near their candidate.
    for (unsigned l = 1; l <= n; ++l) {
        std::vector<real> u;
        if (candidate_start(P, n, l, u)) run(starts + l - 1, u, 1e-6L);
    }
    if (!have) {
        // Fall back to the candidate x̄(1), nudged into the interior.
        std::vector<real> x(n);
        for (unsigned i = 0; i < n; ++i) x[i] = 1.0L / n * (1 + 1e-3L * (static_cast<real>(n) / 2 - i) / n);
        std::vector<real> rem(n + 1, 0);
        for (std::size_t k = n; k-- > 0;) rem[k] = rem[k + 1] + x[k];
        best_u.assign(n - 1, 0);
        for (std::size_t k = 0; k + 1 < n; ++k) best_u[k] = std::log(rem[k + 1] / rem[k]);
        if (!feasible(P, best_u)) throw Error(ErrorKind::NoFeasibleStart, "no strictly feasible start");
        for (real mu = 1; mu >= mu_final; mu /= 10) newton_stage(P, best_u, mu);
        best_f = eval(P.f, best_u);
    }
    auto lx = logx_of(best_u);
    best.point.resize(n);
    for (unsigned i = 0; i < n; ++i) best.point[i] = static_cast<double>(std::exp(lx[i]));
    best.value = static_cast<double>(std::exp(best_f));
    best.log10_value = static_cast<double>(best_f / std::log(10.0L));
    return best;
}

Localization locate_optimum(const IKInstance& inst) { return locate_optimum(inst, solve_over_candidates(inst)); }

Localization locate_optimum(const IKInstance& inst, const IKSolution& sol) {
    Localization r;
    const unsigned n = inst.n, a = inst.a, b = inst.b;
    const auto& M = sol.minimizers;
    if (n < 4) {
        r.detail = "localization needs n >= 4";
        return r;
    }
    r.applicable = true;
    auto has = [&](unsigned l) { return std::find(M.begin(), M.end(), l) != M.end(); };
    auto only = [&](std::vector<unsigned> want) { return M == want; };
    std::vector<std::string> fails;
    // Every statement whose hypothesis holds is checked; the label names the first.
    if (a == b) {
        if (r.label == '-') r.label = 'a';
        if (!has(b)) fails.push_back("(a) xbar(b) is not optimal");
    }
    if (a == 1 && b == n) {
        if (r.label == '-') r.label = 'c';
        if (!only({n})) fails.push_back("(c) xbar(n) is not the unique minimizer");
    }
    if (b == n) {
        if (r.label == '-') r.label = 'd';
        if (!only({n})) fails.push_back("(d) minimizers differ from {n}");
    }
    if (b + 1 == n) {
        if (r.label == '-') r.label = 'e';
        std::vector<unsigned> want = (n == 4 && a <= 2) ? std::vector<unsigned>{2, 3} : std::vector<unsigned>{n - 1};
        if (!only(want)) fails.push_back("(e) minimizers differ from the predicted set");
    }
    if (b + 1 < n) {
        if (r.label == '-') r.label = 'b';
        const unsigned lim = localization_limit(n);
        for (auto l : M)
            if (!((a <= l && l <= lim) || l == b))
                fails.push_back("(b) minimizer " + std::to_string(l) + " outside [a, " + std::to_string(lim) + "] u {b}");
    }
    r.pass = fails.empty();
    for (const auto& f : fails) r.detail += (r.detail.empty() ? "" : "; ") + f;
    return r;
}

RatVec random_chi_point(unsigned n, std::mt19937_64& rng, unsigned max_repair) {
    if (n < 2) throw Error(ErrorKind::ParameterOutOfRange, "random_chi_point needs n >= 2");
    // x_1 <= x_2 and x_1 >= x_2 leave only the uniform point.
    if (n == 2) return {Rational(1, 2), Rational(1, 2)};
    std::uniform_int_distribution<long long> W(1, 1000000);
    std::uniform_int_distribution<int> Pw(1, 3);
    const int p = Pw(rng);
    std::vector<BigInt> w(n);
    BigInt total = 0;
    for (auto& v : w) {
        v = pow(BigInt(W(rng)), p);
        total += v;
    }
    RatVec x;
    for (const auto& v : w) x.emplace_back(v, total);
    std::sort(x.begin(), x.end(), std::greater<Rational>());
    const Rational uni(1, n);
    for (unsigned k = 0; k <= max_repair; ++k) {
        if (chi_membership(x).member) return x;
        for (auto& v : x) v = (v + uni) / 2;
    }
    throw Error(ErrorKind::SamplingExhausted, "repair did not reach a feasible point");
}

}  // namespace latpol
