#ifndef ZLAB_LERCH_HPP
#define ZLAB_LERCH_HPP

#include <algorithm>

#include "core.hpp"
#include "log_gamma.hpp"
#include "quadrature.hpp"

namespace zlab {

// phi(x, s, alpha) = sum_{n>=0} (n+alpha)^{-s} e^{2 pi i n x}; x reduced mod 1.
struct LerchArgs {
    LerchArgs(double x_, cplx s_, double alpha_) : x(frac_mod1(x_)), s(s_), alpha(alpha_) {
        if (alpha <= 0.0) throw domain_error("LerchArgs: alpha must be positive");
    }
    double x;
    cplx s;
    double alpha;
};

enum class lerch_method { series, euler_maclaurin, functional_equation, integral, theta_integral, auto_select };

struct EvalPolicy {
    lerch_method method = lerch_method::auto_select;
    int max_terms = 200000;
    int em_order = 8;  // number of B_{2j} correction terms, even, 2..20
    double tail_tol = 1e-12;

    void validate() const {
        if (max_terms < 1) throw domain_error("EvalPolicy: max_terms must be >= 1");
        if (em_order < 2 || em_order > 20 || em_order % 2 != 0)
            throw domain_error("EvalPolicy: em_order must be even and in 2..20");
        if (tail_tol <= 0) throw domain_error("EvalPolicy: tail_tol must be positive");
    }
};

namespace detail {

// B_{2j}/(2j)!, j = 1..25
inline constexpr double b2j_over_fact[25] = {
    0.0833333333333333333,
    -0.00138888888888888889,
    0.0000330687830687830688,
    -8.26719576719576720e-7,
    2.08767569878680990e-8,
    -5.28419013868749318e-10,
    1.33825365306846788e-11,
    -3.38968029632258287e-13,
    8.58606205627784456e-15,
    -2.17486869855806187e-16,
    5.50900282836022952e-18,
    -1.39544646858125233e-19,
    3.53470703962946747e-21,
    -8.95351742703754685e-23,
    2.26795245233768306e-24,
    -5.74479066887220245e-26,
    1.45517247561486490e-27,
    -3.68599494066531018e-29,
    9.33673425709504467e-31,
    -2.36502241570062993e-32,
    5.99067176248213430e-34,
    -1.51745488446829026e-35,
    3.84375812545418823e-37,
    -9.73635307264669104e-39,
    2.46624704420068096e-40,
};

inline long double binom_ld(int n, int k) {
    long double r = 1.0L;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Hurwitz zeta by Euler-Maclaurin; analytic continuation for all s != 1.
inline cplx hurwitz_em(cplx s, double alpha, int em_order, bool adaptive_order) {
    if (std::abs(s - cplx(1.0, 0.0)) < 1e-13) throw pole_error("hurwitz_zeta: pole at s = 1");
    const int M = std::max({15, static_cast<int>(std::ceil(std::abs(s.imag()))),
                            static_cast<int>(std::ceil(1.2 * std::abs(s))) - static_cast<int>(alpha)});
    cplx sum(0.0, 0.0);
    for (int n = 0; n < M; ++n) sum += real_base_pow(n + alpha, -s);
    const double base = M + alpha;
    const cplx fM = real_base_pow(base, -s);
    if (std::abs(fM) < 1e-18 * (std::abs(sum) + 1e-300)) return sum;  // tail already negligible
    sum += real_base_pow(base, 1.0 - s) / (s - 1.0);
    sum += 0.5 * fM;
    // corrections: B_{2j}/(2j)! (s)_{2j-1} (M+alpha)^{-s-2j+1}
    cplx poch = s;            // (s)_1
    double bp = 1.0 / base;   // base^{-(2j-1)} accumulator
    const int jmax = adaptive_order ? 25 : em_order;
    double prev = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= jmax; ++j) {
        const cplx term = b2j_over_fact[j - 1] * poch * fM * bp;
        const double mag = std::abs(term);
        if (adaptive_order && mag > prev && j > 3) break;  // asymptotic regime: stop at smallest term
        sum += term;
        if (mag < 1e-18 * std::abs(sum)) break;
        prev = mag;
        poch *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
        bp /= base * base;
    }
    return sum;
}

// Twisted Euler-Maclaurin for 0 < x <= 1/2, any s, alpha > 0.
// Tail integral along the rotated contour u = M + iv is damped by e^{-2 pi x v};
// M is raised until 2 pi x (M+alpha) clears |Im s| so the integrand stays monotone.
inline cplx lerch_em_twisted(double x, cplx s, double alpha, int em_order, bool adaptive_order,
                             double tail_tol) {
    const double c = two_pi * x;
    int M = std::max({15, static_cast<int>(std::ceil(1.2 * std::abs(s))),
                      static_cast<int>(std::ceil((std::abs(s.imag()) + 6.0) / c - alpha))});
    if (M > 2000000) throw tolerance_error("lerch_phi: twist too small for the requested accuracy", {0, 0}, 1.0);

    cplx sum(0.0, 0.0);
    for (int n = 0; n < M; ++n)
        sum += real_base_pow(n + alpha, -s) * std::polar(1.0, c * n);
    const double base = M + alpha;
    const cplx eM = std::polar(1.0, c * M);
    const cplx fM = real_base_pow(base, -s) * eM;
    if (std::abs(fM) < 1e-18 * (std::abs(sum) + 1e-300)) return sum;

    QuadratureSpec qs;
    qs.abs_tol = std::max(1e-15, 0.01 * tail_tol);
    qs.rel_tol = 1e-13;
    qs.transform = quad_transform::exp_substitution;
    auto integ = adaptive_integrate(
        [&](double w) { return cpow(cplx(base, w / c), -s) * std::exp(-w); },
        0.0, std::numeric_limits<double>::infinity(), qs);
    sum += cplx(0.0, 1.0) * eM / c * integ.value;
    sum += 0.5 * fM;

    // - sum_j B_{2j}/(2j)! f^{(2j-1)}(M),
    // f^{(k)}(u) = e^{i c u} sum_m C(k,m) (ic)^{k-m} (-1)^m (s)_m (u+alpha)^{-s-m}
    const int jmax = adaptive_order ? 25 : em_order;
    double prev = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= jmax; ++j) {
        const int k = 2 * j - 1;
        cplx deriv(0.0, 0.0);
        cplx poch(1.0, 0.0);
        cplx bpow = real_base_pow(base, -s);
        for (int m = 0; m <= k; ++m) {
            deriv += static_cast<double>(binom_ld(k, m)) * cpow(cplx(0.0, c), cplx(k - m, 0.0)) * (m % 2 ? -poch : poch) * bpow;
            poch *= (s + static_cast<double>(m));
            bpow /= base;
        }
        const cplx term = b2j_over_fact[j - 1] * deriv * eM;
        const double mag = std::abs(term);
        if (mag > prev && j > 3) break;
        sum -= term;
        if (mag < 1e-18 * std::abs(sum)) break;
        prev = mag;
    }
    return sum;
}

// Direct series with iterated Abel tail transformation (Euler-type acceleration
// of the conditionally convergent twisted series).
inline cplx lerch_series(double x, cplx s, double alpha, int max_terms, double tail_tol) {
    const cplx z = std::polar(1.0, two_pi * x);
    if (x == 0.0 || s.real() > 1.0) {
        // plain summation with integral tail bound
        cplx sum(0.0, 0.0);
        const double sigma = s.real();
        for (int n = 0; n < max_terms; ++n) {
            sum += real_base_pow(n + alpha, -s) * (x == 0.0 ? cplx(1.0, 0.0) : cpow(z, cplx(n, 0.0)));
            if (sigma > 1.0) {
                const double tail = std::pow(n + alpha, 1.0 - sigma) / (sigma - 1.0);
                if (tail < tail_tol) return sum;
            }
        }
        if (sigma <= 1.0) throw tolerance_error("lerch_phi: series does not converge for Re s <= 1 at x = 0", sum, 1.0);
        return sum;
    }
    if (s.real() <= 0.0) throw domain_error("lerch_phi: series method requires Re s > 0 for x != 0");
    const int N = std::min(max_terms, std::max(200, 4 * static_cast<int>(std::abs(s)) + 100));
    cplx sum(0.0, 0.0);
    cplx zn(1.0, 0.0);
    for (int n = 0; n < N; ++n) {
        sum += real_base_pow(n + alpha, -s) * zn;
        zn *= z;
    }
    // iterated summation by parts on the tail
    constexpr int K = 10;
    cplx table[K + 1];
    for (int k = 0; k <= K; ++k) table[k] = real_base_pow(N + k + alpha, -s);
    const cplx r = z / (1.0 - z);
    cplx tail(0.0, 0.0);
    cplx w = zn / (1.0 - z);  // z^N / (1-z)
    for (int k = 0; k < K; ++k) {
        tail += w * table[0];
        for (int i = 0; i < K - k; ++i) table[i] = table[i + 1] - table[i];
        w *= r;
    }
    return sum + tail;
}

// Integral representation: phi = (1/Gamma(s)) int_0^inf w^{s-1} e^{-alpha w} / (1 - e^{-w + 2 pi i x}) dw.
inline cplx lerch_integral(double x, cplx s, double alpha, double tol) {
    if (s.real() <= 0.0) throw domain_error("lerch_phi: integral representation requires Re s > 0");
    if (x == 0.0 && s.real() <= 1.0)
        throw domain_error("lerch_phi: integral representation requires Re s > 1 at x = 0");
    const cplx phase = std::polar(1.0, two_pi * x);
    QuadratureSpec qs;
    qs.abs_tol = std::max(1e-15, 0.05 * tol);
    qs.rel_tol = 1e-12;
    qs.transform = quad_transform::exp_substitution;
    auto r = adaptive_integrate(
        [&](double w) {
            return cpow(cplx(w, 0.0), s - 1.0) * std::exp(-alpha * w) / (1.0 - std::exp(-w) * phase);
        },
        0.0, std::numeric_limits<double>::infinity(), qs);
    return r.value * std::exp(-log_gamma(s));
}

inline cplx lerch_theta_sum(double tau, double alpha, double x) {
    // sum_{n in Z} e^{-pi (n+alpha)^2 tau} e^{2 pi i n x}; Poisson-summed for
    // small tau so the series stays short on both ends.
    cplx sum(0.0, 0.0);
    if (tau >= 1.0) {
        const int nmax = static_cast<int>(std::ceil(std::sqrt(45.0 / (pi * tau)) + std::abs(alpha))) + 2;
        for (int n = -nmax; n <= nmax; ++n) {
            const double e = std::exp(-pi * (n + alpha) * (n + alpha) * tau);
            if (e == 0.0) continue;
            sum += e * std::polar(1.0, two_pi * n * x);
        }
        return sum;
    }
    const int kmax = static_cast<int>(std::ceil(std::sqrt(45.0 * tau / pi))) + 2;
    for (int k = -kmax; k <= kmax; ++k) {
        const double d = x - k;
        const double e = std::exp(-pi * d * d / tau);
        if (e == 0.0) continue;
        sum += e * std::polar(1.0, -two_pi * alpha * d);
    }
    return sum / std::sqrt(tau);
}

} // namespace detail

inline cplx lerch_phi(const LerchArgs& args, const EvalPolicy& policy = {});

namespace detail {

// Hurwitz formula: zetaH(1-s, alpha) = (Gamma(s)/(2pi)^s)
//     [e^{-i pi s/2} F(alpha, s) + e^{i pi s/2} F(-alpha, s)],
// F(x, s) = sum_{n>=1} e^{2 pi i n x} n^{-s}; used for deeply negative Re,
// where direct Euler-Maclaurin loses all digits to cancellation. The phases
// are built from exactly reduced sin/cos so the trivial zeros come out exact.
inline cplx hurwitz_reflect(cplx S, double alpha, const EvalPolicy& policy) {
    const cplx s = 1.0 - S;
    EvalPolicy pol = policy;
    pol.method = lerch_method::auto_select;
    const cplx ph_alpha(cos_pi(2.0 * alpha), sin_pi(2.0 * alpha));  // e^{2 pi i alpha}, exact at (half-)integers
    const cplx F = ph_alpha * lerch_phi(LerchArgs(alpha, s, 1.0), pol);
    cplx bracket;
    if (S.imag() == 0.0) {
        const double c = cos_pi(0.5 * s.real());
        const double d = sin_pi(0.5 * s.real());
        bracket = 2.0 * (c * F.real() + d * F.imag());
    } else {
        const cplx Fm = std::conj(ph_alpha) * lerch_phi(LerchArgs(-alpha, s, 1.0), pol);
        const double ey = std::exp(0.5 * pi * s.imag());
        const cplx ph_minus = ey * cplx(cos_pi(0.5 * s.real()), -sin_pi(0.5 * s.real()));
        const cplx ph_plus = (1.0 / ey) * cplx(cos_pi(0.5 * s.real()), sin_pi(0.5 * s.real()));
        bracket = ph_minus * F + ph_plus * Fm;
    }
    if (bracket == cplx(0.0, 0.0)) return {0.0, 0.0};  // exact trivial zero
    return std::exp(log_gamma(s) - s * std::log(two_pi)) * bracket;
}

} // namespace detail

inline cplx hurwitz_zeta(cplx s, double alpha, const EvalPolicy& policy = {}) {
    policy.validate();
    if (alpha <= 0.0) throw domain_error("hurwitz_zeta: alpha must be positive");
    if (s.real() < -0.5) {
        // peel alpha into (0,1], then reflect
        const int m = (alpha > 1.0) ? static_cast<int>(std::ceil(alpha)) - 1 : 0;
        const double a0 = alpha - m;
        cplx prefix(0.0, 0.0);
        for (int k = 0; k < m; ++k) prefix += real_base_pow(k + a0, -s);
        return detail::hurwitz_reflect(s, a0, policy) - prefix;
    }
    return detail::hurwitz_em(s, alpha, policy.em_order, policy.method == lerch_method::auto_select);
}

namespace detail {

// Apostol's transformation: expresses phi(x, 1-s, alpha) through two series at
// exponent s. Valid for 0 < x < 1; alpha > 1 handled by index-shift corrections.
inline cplx lerch_reflected(double x, cplx one_minus_s, double alpha, const EvalPolicy& policy) {
    const cplx s = 1.0 - one_minus_s;
    const int m = (alpha > 1.0) ? static_cast<int>(std::ceil(alpha)) - 1 : 0;
    const double a0 = alpha - m;
    const cplx pref = cpow(two_pi, -s) * std::exp(log_gamma(s));
    const cplx t1 = std::exp(cplx(0.0, pi / 2.0) * s) * std::polar(1.0, -two_pi * alpha * x) *
                    lerch_phi(LerchArgs(-alpha, s, x), policy);
    const cplx t2 = std::exp(cplx(0.0, -pi / 2.0) * s) * std::polar(1.0, two_pi * alpha * (1.0 - x)) *
                    lerch_phi(LerchArgs(alpha, s, 1.0 - x), policy);
    cplx rhs = pref * (t1 + t2);
    // index-shift correction for alpha > 1:
    // phi(x,1-s,a0+m) = e^{-2 pi i m x} [ phi(x,1-s,a0) - sum_{k<m} (k+a0)^{s-1} e^{2 pi i k x} ]
    if (m > 0) {
        cplx corr(0.0, 0.0);
        for (int k = 0; k < m; ++k)
            corr += real_base_pow(k + a0, s - 1.0) * std::polar(1.0, two_pi * k * x);
        rhs -= std::polar(1.0, -two_pi * m * x) * corr;
    }
    return rhs;
}

} // namespace detail

inline cplx lerch_phi(const LerchArgs& args, const EvalPolicy& policy) {
    policy.validate();
    double x = args.x;
    cplx s = args.s;
    const double alpha = args.alpha;
    if (x == 0.0 && std::abs(s - cplx(1.0, 0.0)) < 1e-13)
        throw pole_error("lerch_phi: pole at s = 1 for x = 0");

    switch (policy.method) {
        case lerch_method::series:
            return detail::lerch_series(x, s, alpha, policy.max_terms, policy.tail_tol);
        case lerch_method::integral:
            return detail::lerch_integral(x, s, alpha, policy.tail_tol);
        case lerch_method::functional_equation: {
            if (x == 0.0) throw domain_error("lerch_phi: functional-equation route requires x != 0");
            return detail::lerch_reflected(x, s, alpha, EvalPolicy{});
        }
        case lerch_method::theta_integral: {
            // phi(x,s,alpha) + e^{-2 pi i x} phi(-x,s,1-alpha) as a theta-kernel Mellin
            // integral, minus the partner term evaluated by Euler-Maclaurin.
            if (s.real() <= 1.0) throw domain_error("lerch_phi: theta-integral route requires Re s > 1");
            if (alpha <= 0.0 || alpha >= 1.0) throw domain_error("lerch_phi: theta-integral route requires 0 < alpha < 1");
            QuadratureSpec qs;
            qs.abs_tol = std::max(1e-14, 0.05 * policy.tail_tol);
            qs.rel_tol = 1e-11;
            qs.transform = quad_transform::exp_substitution;
            auto r = adaptive_integrate(
                [&](double tau) {
                    return cpow(cplx(tau, 0.0), 0.5 * s - 1.0) * detail::lerch_theta_sum(tau, alpha, x);
                },
                0.0, std::numeric_limits<double>::infinity(), qs);
            const cplx comb = cpow(pi, s / 2.0) * std::exp(-log_gamma(s / 2.0)) * r.value;
            EvalPolicy em = policy;
            em.method = lerch_method::auto_select;
            return comb - std::polar(1.0, -two_pi * x) * lerch_phi(LerchArgs(-x, s, 1.0 - alpha), em);
        }
        case lerch_method::euler_maclaurin:
        case lerch_method::auto_select:
            break;
    }

    const bool adaptive = policy.method == lerch_method::auto_select;
    if (x == 0.0) return hurwitz_zeta(s, alpha, policy);
    if (s.real() < -2.0) {
        // deep left half-plane: map through the transformation formula onto
        // exponent 1 - s, where the series machinery has full precision
        EvalPolicy pol = policy;
        pol.method = lerch_method::auto_select;
        return detail::lerch_reflected(x, s, alpha, pol);
    }

    bool conj = false;
    if (x > 0.5) {  // phi(1-x, conj s, alpha) = conj phi(x, s, alpha)
        x = 1.0 - x;
        s = std::conj(s);
        conj = true;
    }
    // exact small-denominator rational twists split into q Hurwitz zetas
    if (adaptive && std::abs(s - cplx(1.0, 0.0)) > 0.05) {
        for (int q = 2; q <= 64; ++q) {
            const double pq = x * q;
            if (near_integer(pq, 1e-12)) {
                const int p = static_cast<int>(std::llround(pq));
                cplx sum(0.0, 0.0);
                for (int r = 0; r < q; ++r)
                    sum += std::polar(1.0, two_pi * r * static_cast<double>(p) / q) *
                           detail::hurwitz_em(s, (r + alpha) / q, policy.em_order, true);
                const cplx v = real_base_pow(q, -s) * sum;
                return conj ? std::conj(v) : v;
            }
        }
    }
    if (x < 1e-5) {
        const cplx v = detail::lerch_integral(x, s, alpha, policy.tail_tol);
        return conj ? std::conj(v) : v;
    }
    const cplx v = detail::lerch_em_twisted(x, s, alpha, policy.em_order, adaptive, policy.tail_tol);
    return conj ? std::conj(v) : v;
}

enum class dirichlet_kind { zeta, eta, lambda, beta };

inline cplx dirichlet_function(dirichlet_kind kind, cplx s, const EvalPolicy& policy = {}) {
    switch (kind) {
        case dirichlet_kind::zeta:
            return hurwitz_zeta(s, 1.0, policy);
        case dirichlet_kind::eta: {
            const cplx d = s - cplx(1.0, 0.0);
            if (std::abs(d) < 1e-6) {
                // removable singularity of (1 - 2^{1-s}) zeta(s)
                constexpr double eta1 = 0.693147180559945309;   // log 2
                constexpr double etap1 = 0.159868903742430971;  // gamma log2 - (log^2 2)/2
                return eta1 + etap1 * d;
            }
            return (1.0 - cpow(2.0, 1.0 - s)) * hurwitz_zeta(s, 1.0, policy);
        }
        case dirichlet_kind::lambda:
            return (1.0 - cpow(2.0, -s)) * hurwitz_zeta(s, 1.0, policy);
        case dirichlet_kind::beta:
            return cpow(2.0, -s) * lerch_phi(LerchArgs(0.5, s, 0.5), policy);
    }
    throw domain_error("dirichlet_function: unknown kind");
}

inline cplx riemann_zeta(cplx s, const EvalPolicy& policy = {}) {
    return dirichlet_function(dirichlet_kind::zeta, s, policy);
}

// |LHS - RHS| of the Lerch transformation formula at (x, s, alpha): the left
// side is phi(x, 1-s, alpha), the right side the Gamma-weighted pair at
// exponent s. The degenerate x = 0, alpha = 1 case reduces to the symmetric
// completed-zeta relation.
inline double lerch_functional_residual(const LerchArgs& args, const EvalPolicy& policy = {}) {
    const double x = args.x;
    const cplx s = args.s;
    const double alpha = args.alpha;
    if (x == 0.0) {
        if (std::abs(alpha - 1.0) > 1e-12)
            throw domain_error("lerch_functional_residual: x = 0 supported only for alpha = 1");
        const cplx lhs = cpow(pi, -s / 2.0) * std::exp(log_gamma(s / 2.0)) * riemann_zeta(s, policy);
        const cplx one_minus = 1.0 - s;
        const cplx rhs = cpow(pi, -one_minus / 2.0) * std::exp(log_gamma(one_minus / 2.0)) *
                         riemann_zeta(one_minus, policy);
        return std::abs(lhs - rhs);
    }
    const cplx lhs = lerch_phi(LerchArgs(x, 1.0 - s, alpha), policy);
    const cplx rhs = detail::lerch_reflected(x, 1.0 - s, alpha, policy);
    return std::abs(lhs - rhs);
}

} // namespace zlab

#endif
