#ifndef ZLAB_STATMECH_HPP
#define ZLAB_STATMECH_HPP

#include <algorithm>
#include <vector>

#include "greens.hpp"
#include "lerch.hpp"

namespace zlab {

// One-particle partition function z(beta) = (R/a)^{beta/a} zetaH(beta/a, R/a),
// analytically continued below beta = a; simple pole at beta = a.
inline double one_particle_z(double beta, const Geometry& geom, const EvalPolicy& policy = {}) {
    const double s = beta / geom.a;
    if (std::abs(s - 1.0) < 1e-13) throw pole_error("one_particle_z: pole at beta = a");
    const double alpha = geom.R / geom.a;
    return std::pow(alpha, s) * hurwitz_zeta(cplx(s, 0.0), alpha, policy).real();
}

enum class statistics_kind { fermi, bose };
enum class grand_method { direct_product, series };

// log of the grand partition function over the modes n >= 1 (one-particle
// energies E_n = log(a n/R + 1)/a). The n = 0 mode carries E = 0: it
// contributes a constant factor 2 for Fermi statistics and diverges for Bose,
// so it is left out of both; this matches the factor-counting semantics where
// factors are >= 2 at R = a.
inline double grand_log_z(statistics_kind stat, double beta, double mu, const Geometry& geom,
                          grand_method method, int terms, const EvalPolicy& policy = {}) {
    const double a = geom.a;
    if (beta <= a) throw divergence_error("grand_log_z: diverges for beta <= a");
    if (terms < 1) throw domain_error("grand_log_z: terms must be >= 1");
    const double alpha = geom.R / a;
    if (method == grand_method::series) {
        double sum = 0.0;
        for (int m = 1; m <= terms; ++m) {
            const double sm = beta * m / a;
            // zero-mode-stripped one-particle sum at inverse temperature m beta;
            // summed directly once the exponent makes the powers overflow-prone
            double zH;
            if (sm > 60.0) {
                zH = 0.0;
                for (int n = 1; n < 200; ++n) {
                    const double w = std::pow(a * n / geom.R + 1.0, -sm);
                    zH += w;
                    if (w < 1e-18 * std::max(zH, 1e-300)) break;
                }
            } else {
                zH = std::pow(alpha, sm) * hurwitz_zeta(cplx(sm, 0.0), alpha, policy).real() - 1.0;
            }
            const double fug = std::exp(beta * mu * m);
            double term = fug * zH / m;
            if (stat == statistics_kind::fermi && (m % 2 == 0)) term = -term;
            sum += term;
            if (std::abs(term) < 1e-16 * std::max(1.0, std::abs(sum))) break;
        }
        return sum;
    }
    // direct product over n <= N, with the remainder attached by the
    // Euler-Maclaurin integral correction: sum_{k>N} g(k) = int_N^inf g
    //   - g(N)/2 - g'(N)/12 + ..., g(k) = log(1 -/+ (a k/R + 1)^{-beta/a} e^{beta mu}).
    const double fug = std::exp(beta * mu);
    const double c = beta / a;
    const int sgn = (stat == statistics_kind::fermi) ? +1 : -1;
    auto g = [&](double k) {
        const double w = std::pow(a * k / geom.R + 1.0, -c) * fug;
        return sgn > 0 ? std::log1p(w) : -std::log1p(-w);
    };
    double sum = 0.0;
    const int N = std::min(terms, 100000);
    for (int n = 1; n <= N; ++n) {
        const double term = g(n);
        sum += term;
        if (term < 1e-17 * std::max(1.0, sum) && n > 32) return sum;
    }
    QuadratureSpec qs;
    qs.abs_tol = 1e-13;
    qs.rel_tol = 1e-12;
    qs.transform = quad_transform::exp_substitution;
    auto integ = adaptive_integrate([&](double k) { return cplx(g(k), 0.0); }, static_cast<double>(N),
                                    std::numeric_limits<double>::infinity(), qs);
    sum += integ.value.real() - 0.5 * g(N);
    // g'(N)/12 with g' = -/+ (c a / R) u^{-c-1} fug / (1 -/+ u^{-c} fug), u = aN/R + 1
    const double u = a * N / geom.R + 1.0;
    const double w = std::pow(u, -c) * fug;
    const double gp = -sgn * (c * a / geom.R) * std::pow(u, -c - 1.0) * fug / (1.0 + sgn * w);
    sum -= gp / 12.0;
    return sum;
}

struct ThermoState {
    double f = 0.0;  // (1/beta) log Z
    double U = 0.0;  // -d(log Z)/d(beta)
    double P = 0.0;  // (1/2pi) dU/dR, V = 2 pi R
    double N = 0.0;  // mean occupation at fugacity exponent alpha_fug
};

// The four mode sums for the Fermi gas; alpha_fug is the e^{alpha} fugacity
// exponent in the occupation sum (0 unless stated otherwise). Truncated sums
// carry Euler-Maclaurin integral tails.
inline ThermoState thermodynamics(double beta, const Geometry& geom, int terms, double alpha_fug = 0.0,
                                  const EvalPolicy& policy = {}) {
    const double a = geom.a;
    const double R = geom.R;
    if (beta <= a) throw divergence_error("thermodynamics: diverges for beta <= a");
    ThermoState st;
    st.f = grand_log_z(statistics_kind::fermi, beta, 0.0, geom, grand_method::direct_product, terms, policy) / beta;
    const double ea = std::exp(alpha_fug);
    const double c = beta / a;
    auto gU = [&](double k) {
        const double u = a * k / R + 1.0;
        return std::log(u) / (1.0 + std::pow(u, c)) / a;
    };
    auto gP = [&](double k) {
        const double u = a * k / R + 1.0;
        const double up = std::pow(u, c);
        return (k / u) / (1.0 + up) * ((std::log(u) / (1.0 + 1.0 / up)) * c - 1.0);
    };
    auto gN = [&](double k) { return 1.0 / (ea + std::pow(a * k / R + 1.0, c)); };
    const int N = std::min(terms, 100000);
    bool truncated = true;
    for (int n = 1; n <= N; ++n) {
        st.U += gU(n);
        st.P += gP(n);
        st.N += gN(n);
        if (gU(n) + std::abs(gP(n)) + gN(n) < 1e-18 && n > 32) {
            truncated = false;
            break;
        }
    }
    if (truncated) {
        QuadratureSpec qs;
        qs.abs_tol = 1e-13;
        qs.rel_tol = 1e-11;
        qs.transform = quad_transform::exp_substitution;
        const double inf = std::numeric_limits<double>::infinity();
        st.U += adaptive_integrate([&](double k) { return cplx(gU(k), 0); }, N, inf, qs).value.real() - 0.5 * gU(N);
        st.P += adaptive_integrate([&](double k) { return cplx(gP(k), 0); }, N, inf, qs).value.real() - 0.5 * gP(N);
        st.N += adaptive_integrate([&](double k) { return cplx(gN(k), 0); }, N, inf, qs).value.real() - 0.5 * gN(N);
    }
    st.P *= 1.0 / (two_pi * R * R);
    return st;
}

// Thermal Green's function: antiperiodic image sum of the case-4 Green's
// function at complex times t - i(sigma + m beta), |m| <= m_max. Each term has
// a pole where (sigma + m beta)/a = 1; the offending m is named.
inline cplx thermal_green(double x, double t, double sigma, double beta, const Geometry& geom, int m_max,
                          const EvalPolicy& policy = {}) {
    if (m_max < 0) throw domain_error("thermal_green: m_max must be >= 0");
    const double a = geom.a;
    const double alpha = geom.R / a;
    cplx sum(0.0, 0.0);
    for (int m = -m_max; m <= m_max; ++m) {
        const cplx sm((sigma + m * beta) / a, t / a);
        if (std::abs(sm - cplx(1.0, 0.0)) < 1e-13)
            throw pole_error("thermal_green: term pole at m = " + std::to_string(m) +
                             " (beta = (a - sigma)/m)");
        cplx term = cpow(alpha, sm) * lerch_phi(LerchArgs(x / (two_pi * geom.R), sm, alpha), policy) / geom.R;
        if (m % 2) term = -term;
        sum += term;
    }
    return sum;
}

enum class factorization_mode { distinct, with_repeats };

// Unordered factorizations of n into parts >= 2 (the single-part {n} included);
// multisets listed in canonical descending order.
struct FactorizationReport {
    long long n = 0;
    factorization_mode mode = factorization_mode::distinct;
    long long count = 0;
    std::vector<std::vector<long long>> listing;
};

namespace detail {

inline void enumerate_factorizations(long long n, long long min_factor, bool distinct,
                                     std::vector<long long>& stack,
                                     std::vector<std::vector<long long>>& out) {
    for (long long f = min_factor; f * f <= n; ++f) {
        if (n % f == 0) {
            stack.push_back(f);
            enumerate_factorizations(n / f, distinct ? f + 1 : f, distinct, stack, out);
            stack.pop_back();
        }
    }
    if (n >= min_factor) {
        std::vector<long long> m = stack;
        m.push_back(n);
        std::sort(m.begin(), m.end(), std::greater<>());
        out.push_back(std::move(m));
    }
}

} // namespace detail

inline FactorizationReport count_factorizations(long long n, factorization_mode mode,
                                                long long ceiling = 1000000) {
    if (n < 2) throw domain_error("count_factorizations: n must be >= 2");
    if (n > ceiling) throw error("resource", "count_factorizations: n exceeds the configured ceiling");
    FactorizationReport rep;
    rep.n = n;
    rep.mode = mode;
    std::vector<long long> stack;
    detail::enumerate_factorizations(n, 2, mode == factorization_mode::distinct, stack, rep.listing);
    std::sort(rep.listing.begin(), rep.listing.end());
    rep.count = static_cast<long long>(rep.listing.size());
    return rep;
}

// Partition function of the logarithmic oscillator,
//   z = (a w)^{-beta/a} sum_n (n + 1/(a w) + 1/2)^{-beta/a} e^{-mu n},
// a Lerch sum with twist e^{2 pi i x} = e^{-mu}. Purely oscillatory fugacities
// (Re mu = 0) map onto a real twist; |e^{-mu}| < 1 is summed directly.
inline cplx log_oscillator_z(cplx beta, cplx mu, double a_omega, double a, const EvalPolicy& policy = {}) {
    if (a_omega <= 0.0 || a <= 0.0) throw domain_error("log_oscillator_z: scales must be positive");
    const double alpha = 1.0 / a_omega + 0.5;
    const cplx s = beta / a;
    const cplx pref = cpow(a_omega, -s);
    const double r = std::exp(-mu.real());
    if (std::abs(r - 1.0) < 1e-14) {
        const double x = frac_mod1(-mu.imag() / two_pi);  // e^{-mu} = e^{2 pi i x}
        if (x == 0.0 && std::abs(s - cplx(1.0, 0.0)) < 1e-13)
            throw pole_error("log_oscillator_z: pole at beta = a with mu = 0");
        return pref * lerch_phi(LerchArgs(x, s, alpha), policy);
    }
    if (r > 1.0) throw divergence_error("log_oscillator_z: |e^{-mu}| > 1 diverges");
    cplx sum(0.0, 0.0);
    const cplx z = std::exp(-mu);
    cplx zn(1.0, 0.0);
    for (int n = 0; n < 100000; ++n) {
        const cplx term = cpow(cplx(n + alpha, 0.0), -s) * zn;
        sum += term;
        zn *= z;
        if (std::abs(term) < 1e-17 * std::abs(sum) && n > 8) break;
    }
    return pref * sum;
}

// Classical period of the logarithmic oscillator: T = (2 pi / omega) e^{aE},
// e^{aE} = a (p0^2/2m + m omega^2 q0^2 / 2) + 1.
inline double oscillator_period(double q0, double p0, double m, double omega, double a) {
    if (m <= 0.0 || omega <= 0.0 || a <= 0.0) throw domain_error("oscillator_period: m, omega, a must be positive");
    const double eaE = a * (p0 * p0 / (2.0 * m) + 0.5 * m * omega * omega * q0 * q0) + 1.0;
    return two_pi / omega * eaE;
}

} // namespace zlab

#endif
