#ifndef ZLAB_ZEROS_HPP
#define ZLAB_ZEROS_HPP

#include <vector>

#include "greens.hpp"
#include "lerch.hpp"
#include "quadrature.hpp"
#include "theta.hpp"

namespace zlab {

// Riemann-Siegel theta: Im log Gamma(1/4 + it/2) - (t/2) log pi.
inline double riemann_siegel_theta(double t) {
    if (t == 0.0) return 0.0;
    return log_gamma(cplx(0.25, 0.5 * t)).imag() - 0.5 * t * log_pi;
}

// Hardy function Z(t) = Re[e^{i theta(t)} zeta(1/2 + it)]; real up to roundoff.
inline double hardy_function(double t, const EvalPolicy& policy = {}) {
    const cplx z = riemann_zeta(cplx(0.5, t), policy);
    const cplx v = std::polar(1.0, riemann_siegel_theta(t)) * z;
    return v.real();
}

struct ZeroRecord {
    int index = 0;
    double t = 0.0;
    double refinement_error = 0.0;
};

// Sign changes of the Hardy function on the step grid, refined by bisection.
inline std::vector<ZeroRecord> find_zeros(double t_lo, double t_hi, double step = 0.05,
                                          const EvalPolicy& policy = {}) {
    if (!(t_lo >= 0.0 && t_lo < t_hi)) throw domain_error("find_zeros: need 0 <= t_lo < t_hi");
    if (step <= 0.0 || step > 0.5) throw domain_error("find_zeros: step must lie in (0, 0.5]");
    std::vector<ZeroRecord> zeros;
    double a = t_lo;
    double fa = hardy_function(a, policy);
    const int nsteps = static_cast<int>(std::ceil((t_hi - t_lo) / step));
    for (int k = 1; k <= nsteps; ++k) {
        const double b = std::min(t_lo + k * step, t_hi);
        const double fb = hardy_function(b, policy);
        if (fa == 0.0) {
            zeros.push_back({0, a, 0.0});
        } else if (fa * fb < 0.0) {
            double lo = a, hi = b, flo = fa;
            while (hi - lo > 1e-12) {
                const double mid = 0.5 * (lo + hi);
                const double fm = hardy_function(mid, policy);
                if (fm == 0.0) { lo = hi = mid; break; }
                if (flo * fm < 0.0) hi = mid; else { lo = mid; flo = fm; }
            }
            zeros.push_back({0, 0.5 * (lo + hi), 0.5 * (hi - lo)});
        }
        a = b;
        fa = fb;
    }
    for (size_t i = 0; i < zeros.size(); ++i) zeros[i].index = static_cast<int>(i) + 1;
    return zeros;
}

// N(T) = theta(T)/pi + 1 + (1/pi) Im log zeta(1/2 + iT), the argument tracked
// continuously along the critical line from t = 0 (arg zeta(1/2) = -pi) with
// adaptive phase unwrapping.
inline int zero_count(double T, const EvalPolicy& policy = {}) {
    if (T <= 0.0) throw domain_error("zero_count: T must be positive");
    const cplx zT = riemann_zeta(cplx(0.5, T), policy);
    if (std::abs(zT) < 1e-9) throw error("on-a-zero", "zero_count: T is (numerically) a zero ordinate");
    double arg_acc = -pi;  // zeta(1/2) < 0 entered from below the real axis
    double last = std::arg(riemann_zeta(cplx(0.5, 0.0), policy));
    double t = 0.0;
    double h = 0.05;
    while (t < T) {
        const double tn = std::min(t + h, T);
        const double an = std::arg(riemann_zeta(cplx(0.5, tn), policy));
        double d = an - last;
        while (d > pi) d -= two_pi;
        while (d < -pi) d += two_pi;
        if (std::abs(d) > 0.5 * pi && tn - t > 1e-6) {  // refine: phase moved too fast
            h = 0.5 * (tn - t);
            continue;
        }
        arg_acc += d;
        last = an;
        t = tn;
        h = 0.05;
    }
    const double N = riemann_siegel_theta(T) / pi + 1.0 + arg_acc / pi;
    return static_cast<int>(std::llround(N));
}

struct ThetaIntegralResult {
    cplx quadrature{0.0, 0.0};
    cplx closed_form{0.0, 0.0};
};

// Mellin transform of (theta3 - theta2 - theta4)/2 against C^{s/2 - 1},
// evaluated in the Liouville variable C = e^phi, against the closed form
// (2^s - 1)(2^{1-s} - 1) pi^{-s/2} Gamma(s/2) zeta(s). The theta combination
// counts every half-integer-square mass level twice, hence the 1/2.
inline ThetaIntegralResult theta_integral_zeta(cplx s, const QuadratureSpec& spec = {},
                                               const EvalPolicy& policy = {}) {
    if (s.real() <= 0.0) throw domain_error("theta_integral_zeta: requires Re s > 0");
    ThetaIntegralResult out;
    QuadratureSpec qs = spec;
    qs.transform = quad_transform::none;
    auto f = [&](double phi_) { return 0.5 * std::exp(0.5 * s * phi_) * theta_combination(std::exp(phi_)); };
    // integrand decays double-exponentially on both ends of the phi axis
    auto r = adaptive_integrate(f, -5.0, 5.0, qs);
    out.quadrature = r.value;
    // (2^{1-s} - 1) zeta(s) = -eta(s): finite across the pole at s = 1
    const cplx eta_val = dirichlet_function(dirichlet_kind::eta, s, policy);
    out.closed_form = -(cpow(2.0, s) - 1.0) * eta_val * cpow(pi, -s / 2.0) * std::exp(log_gamma(s / 2.0));
    return out;
}

struct DualityMap {
    double R_prime = 0.0;
    double x_prime = 0.0;
    double R_dprime = 0.0;
    double x_dprime = 0.0;
    std::string sigma_rule = "sigma' = sigma'' = a - sigma, t' = -t";
};

// Radius/position transformation induced by the Lerch functional equation:
// R' = (a x / 2 pi) / R, x' = x, R'' = a - R', x'' = 2 pi R - x.
inline DualityMap duality_map(double x, const Geometry& geom) {
    if (!(x > 0.0 && x < two_pi * geom.R)) throw domain_error("duality_map: x must lie in (0, 2 pi R)");
    DualityMap m;
    m.R_prime = geom.a * x / (two_pi * geom.R);
    m.x_prime = x;
    m.R_dprime = geom.a - m.R_prime;
    m.x_dprime = two_pi * geom.R - x;
    return m;
}

// Residual of the duality relation: the circle amplitude at exponent 1-s versus
// the Gamma-weighted pair at the mapped radii. Same identity as the Lerch
// functional equation with twist x/2piR and shift R/a.
inline double duality_residual(double x, const SPoint& pt, const Geometry& geom,
                               const EvalPolicy& policy = {}) {
    const double xt = x / (two_pi * geom.R);
    if (!(xt > 0.0 && xt < 1.0)) throw domain_error("duality_residual: x must lie in (0, 2 pi R)");
    return lerch_functional_residual(LerchArgs(xt, pt.s(), geom.R / geom.a), policy);
}

} // namespace zlab

#endif
