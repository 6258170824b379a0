#ifndef ZLAB_GREENS_HPP
#define ZLAB_GREENS_HPP

#include "core.hpp"
#include "incomplete_gamma.hpp"
#include "lerch.hpp"
#include "log_gamma.hpp"

namespace zlab {

// Circle geometry: radius R, short-distance scale a, optional constant gauge
// shift A = R q A_1 (dimensionless). L = 2 pi R, alpha = R/a + A.
struct Geometry {
    Geometry(double R_, double a_, double gauge_shift_ = 0.0) : R(R_), a(a_), gauge_shift(gauge_shift_) {
        if (R <= 0.0 || a <= 0.0) throw domain_error("Geometry: R and a must be positive");
    }
    double R;
    double a;
    double gauge_shift;
    double L() const { return two_pi * R; }
    double alpha() const { return R / a + gauge_shift; }
};

// Physical time/mixing point; s = (sigma + i t)/a.
struct SPoint {
    SPoint(double t_, double sigma_, double a_) : t(t_), sigma(sigma_), a(a_) {
        if (a <= 0.0) throw domain_error("SPoint: a must be positive");
        if (sigma < 0.0) throw domain_error("SPoint: sigma must be nonnegative");
    }
    double t;
    double sigma;
    double a;
    cplx s() const { return cplx(sigma / a, t / a); }
};

// g1 = i/(x - t + i sigma): line Green's function for linear dispersion.
inline cplx green_case1(double x, const SPoint& pt) {
    const cplx den(x - pt.t, pt.sigma);
    if (std::abs(den) < 1e-300) throw pole_error("green_case1: lightcone pole x = t, sigma = 0");
    return cplx(0.0, 1.0) / den;
}

// g2 = (1/R) / (1 - e^{i(x - t + i sigma)/R}): circle Green's function, linear dispersion.
inline cplx green_case2(double x, const SPoint& pt, const Geometry& geom) {
    const cplx w = std::exp(cplx(0.0, 1.0) * cplx(x - pt.t, pt.sigma) / geom.R);
    const cplx den = 1.0 - w;
    if (std::abs(den) < 1e-14) throw pole_error("green_case2: pole at x - t = 0 mod 2 pi R, sigma = 0");
    return 1.0 / (geom.R * den);
}

// g3 = (1/a) e^{-ix/a} (-ix/a)^{s-1} Gamma(1-s, -ix/a): logarithmic dispersion on the line.
inline cplx green_case3(double x, const SPoint& pt) {
    if (x == 0.0) throw domain_error("green_case3: x = 0 not in the domain");
    const double a = pt.a;
    const cplx s = pt.s();
    const cplx z = cplx(0.0, -x / a);
    return (1.0 / a) * std::exp(cplx(0.0, -x / a)) * cpow(z, s - 1.0) * incomplete_gamma_upper(1.0 - s, z);
}

// g3' = (1/a) (-ix/a)^{s-1} e^{-ix/a} Gamma(1-s): the (E,p)-representation variant.
inline cplx green_case3p(double x, const SPoint& pt) {
    if (x == 0.0) throw domain_error("green_case3p: x = 0 not in the domain");
    const double a = pt.a;
    const cplx s = pt.s();
    return (1.0 / a) * cpow(cplx(0.0, -x / a), s - 1.0) * std::exp(cplx(0.0, -x / a)) * gamma(1.0 - s);
}

// g4 = (1/R) (R/a)^s phi(x/2piR, s, R/a): circle Green's function, logarithmic dispersion.
inline cplx green_case4(double x, const SPoint& pt, const Geometry& geom, const EvalPolicy& policy = {}) {
    const cplx s = pt.s();
    const double alpha = geom.R / geom.a;
    return (1.0 / geom.R) * cpow(alpha, s) * lerch_phi(LerchArgs(x / (two_pi * geom.R), s, alpha), policy);
}

// Constant-gauge-potential variant: alpha shifted by A = R q A_1, phase e^{i x A / R}.
inline cplx green_gauge(double x, const SPoint& pt, const Geometry& geom, const EvalPolicy& policy = {}) {
    const cplx s = pt.s();
    const double alpha = geom.alpha();
    if (alpha <= 0.0) throw domain_error("green_gauge: shifted alpha must be positive");
    const double base = geom.R / geom.a;
    return (1.0 / geom.R) * cpow(base, s) * std::polar(1.0, x * geom.gauge_shift / geom.R) *
           lerch_phi(LerchArgs(x / (two_pi * geom.R), s, alpha), policy);
}

enum class periodize_base { case1, case3p };

struct PeriodizeResult {
    cplx value{0.0, 0.0};
    double tail_estimate = 0.0;  // magnitude of the last included ring of terms
    bool converged = true;
};

// Sum of base-Green's-function translates g(x - 2 pi R n) over |n| <= cutoff,
// with the two one-sided remainders appended in closed form: rational pair
// tails for case 1, continued twisted power sums (exponent 1-s) for case 3'.
inline PeriodizeResult periodize(periodize_base base, double x, const SPoint& pt, const Geometry& geom,
                                 int cutoff, const EvalPolicy& policy = {}) {
    if (cutoff < 0) throw domain_error("periodize: cutoff must be >= 0");
    const double P = two_pi * geom.R;
    PeriodizeResult res;
    cplx sum(0.0, 0.0);
    for (int n = -cutoff; n <= cutoff; ++n) {
        const double xn = x - P * n;
        sum += (base == periodize_base::case1) ? green_case1(xn, pt) : green_case3p(xn, pt);
    }
    if (cutoff >= 1) {
        const double tp = std::abs((base == periodize_base::case1) ? green_case1(x - P * cutoff, pt)
                                                                   : green_case3p(x - P * cutoff, pt));
        const double tm = std::abs((base == periodize_base::case1) ? green_case1(x + P * cutoff, pt)
                                                                   : green_case3p(x + P * cutoff, pt));
        res.tail_estimate = tp + tm;
    } else {
        res.value = sum;
        res.tail_estimate = 0.0;
        return res;
    }

    const int N = cutoff;
    if (base == periodize_base::case1) {
        // sum_{|n|>N} i/(xt - P n) = -(i/P)[psi(N+1+w) - psi(N+1-w)], w = xt/P,
        // plus the half-weight boundary mode 1/(2R) that distinguishes the
        // one-sided mode sum from the symmetric principal value
        // (sum_n 1/(u-n) = pi e^{-i pi u}/sin(pi u) = pi cot(pi u) - i pi).
        const cplx xt(x - pt.t, pt.sigma);
        const cplx w = xt / P;
        sum += -(cplx(0.0, 1.0) / P) * (digamma(cplx(N + 1.0, 0.0) + w) - digamma(cplx(N + 1.0, 0.0) - w));
        sum += 1.0 / (2.0 * geom.R);
    } else {
        if (!(x > 0.0 && x < P)) throw domain_error("periodize: case3p tails require 0 < x < 2 pi R");
        const double a = pt.a;
        const cplx s = pt.s();
        const double b = P / a;            // phase advance per winding
        const double c = x / P;            // fractional position
        const cplx pref = gamma(1.0 - s) / a * cpow(b, s - 1.0);
        const double tw = frac_mod1(geom.R / geom.a);
        const cplx tail_pos = pref * std::exp(cplx(0.0, pi / 2.0) * (s - 1.0)) *
                              std::polar(1.0, b * (N + 1 - c)) *
                              lerch_phi(LerchArgs(tw, 1.0 - s, N + 1 - c), policy);
        const cplx tail_neg = pref * std::exp(cplx(0.0, -pi / 2.0) * (s - 1.0)) *
                              std::polar(1.0, -b * (N + 1 + c)) *
                              lerch_phi(LerchArgs(-geom.R / geom.a, 1.0 - s, N + 1 + c), policy);
        sum += tail_pos + tail_neg;
    }
    res.value = sum;
    res.converged = res.tail_estimate <= 1e-6;
    return res;
}

enum class case4p_point { zero, pi_a };

// Closed forms of the time-shifted (E,p) representation on the circle at R = a:
//   x = 0:    (1/a) zeta(s) / sin(pi s / 2)
//   x = pi a: (1/a) (2^{1-s} - 1) zeta(s) / (1 - e^{-i pi s})
inline cplx closed_form_case4p(case4p_point where, cplx s, double a, const EvalPolicy& policy = {}) {
    const cplx zeta = riemann_zeta(s, policy);
    if (where == case4p_point::zero) {
        const cplx den = std::sin(pi * s / 2.0);
        if (std::abs(den) < 1e-14) throw pole_error("closed_form_case4p: sin(pi s/2) = 0");
        return zeta / (a * den);
    }
    const cplx den = 1.0 - std::exp(cplx(0.0, -pi) * s);
    if (std::abs(den) < 1e-14) throw pole_error("closed_form_case4p: 1 - e^{-i pi s} = 0");
    return (cpow(2.0, 1.0 - s) - 1.0) * zeta / (a * den);
}

enum class scalar_variant { field, dt_field };

// Scalar two-point functions for the logarithmic dispersion. The field variant
// keeps the 1/(2 E_n) weights (n = 0 has E = 0 and is excluded as divergent);
// the dt variant is (1/2)(R/a)^s phi and is evaluated through the Lerch engine.
inline cplx scalar_two_point(double x, const SPoint& pt, const Geometry& geom, scalar_variant variant,
                             int n_max, const EvalPolicy& policy = {}) {
    if (n_max < 1) throw domain_error("scalar_two_point: n_max must be >= 1");
    const cplx s = pt.s();
    if (variant == scalar_variant::dt_field) {
        const double alpha = geom.R / geom.a;
        return 0.5 * cpow(alpha, s) * lerch_phi(LerchArgs(x / (two_pi * geom.R), s, alpha), policy);
    }
    cplx sum(0.0, 0.0);
    for (int n = 1; n <= n_max; ++n) {
        const double u = geom.a * n / geom.R + 1.0;
        const double E = std::log(u) / geom.a;
        sum += real_base_pow(u, -s) * std::polar(1.0, n * x / geom.R) / (2.0 * E);
    }
    return sum;
}

// Periodized inverted-oscillator wavefunction: the Hurwitz pair
//   (2piR/a)^{s-1} [zetaH(1-s, c) + (-1)^{s-1} zetaH(1-s, 1-c)] i^{1-s} Gamma(1-s)
// with c = x/2piR; at c = 1/2 the Gamma pole against the vanishing bracket is
// removed analytically.
inline cplx periodized_wavefunction(const SPoint& pt, double x, const Geometry& geom,
                                    const EvalPolicy& policy = {}) {
    const cplx s = pt.s();
    if (std::abs(s - cplx(1.0, 0.0)) < 1e-13) throw pole_error("periodized_wavefunction: s = 1");
    const double c = x / (two_pi * geom.R);
    if (!(c > 0.0 && c < 1.0)) throw domain_error("periodized_wavefunction: x/(2 pi R) must lie in (0,1)");
    const cplx pref = cpow(two_pi * geom.R / geom.a, s - 1.0) * cpow(cplx(0.0, 1.0), 1.0 - s);
    if (std::abs(c - 0.5) < 1e-12) {
        // Gamma(1-s)(1 + e^{i pi (s-1)}) = -2 pi i e^{i pi s} / ((1 + e^{i pi s}) Gamma(s))
        const cplx eips = std::exp(cplx(0.0, pi) * s);
        if (std::abs(1.0 + eips) < 1e-14) throw pole_error("periodized_wavefunction: pole at odd integer s");
        const cplx comb = cplx(0.0, -two_pi) * eips / ((1.0 + eips) * gamma(s));
        return pref * comb * hurwitz_zeta(1.0 - s, 0.5, policy);
    }
    const cplx bracket = hurwitz_zeta(1.0 - s, c, policy) +
                         std::exp(cplx(0.0, pi) * (s - 1.0)) * hurwitz_zeta(1.0 - s, 1.0 - c, policy);
    return pref * bracket * gamma(1.0 - s);
}

} // namespace zlab

#endif
