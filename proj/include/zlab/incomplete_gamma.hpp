#ifndef ZLAB_INCOMPLETE_GAMMA_HPP
#define ZLAB_INCOMPLETE_GAMMA_HPP

#include "core.hpp"
#include "log_gamma.hpp"
#include "quadrature.hpp"

namespace zlab {
namespace detail {

// Lower series gamma(b,z) = z^b e^{-z} sum_n z^n / (b (b+1) ... (b+n)).
// Requires b away from nonpositive integers.
inline cplx lower_gamma_series(cplx b, cplx z, bool& ok) {
    cplx term = 1.0 / b;
    cplx sum = term;
    cplx bk = b;
    for (int n = 1; n < 600; ++n) {
        bk += 1.0;
        term *= z / bk;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) {
            ok = true;
            return cpow(z, b) * std::exp(-z) * sum;
        }
    }
    ok = false;
    return {0.0, 0.0};
}

// Continued fraction for Gamma(b,z) (modified Lentz).
inline cplx upper_gamma_cf(cplx b, cplx z, bool& ok) {
    const double tiny = 1e-300;
    cplx f = z + 1.0 - b;
    if (f == cplx(0.0)) f = tiny;
    cplx C = f, D = 0.0;
    for (int i = 1; i < 20000; ++i) {
        const cplx an = -static_cast<double>(i) * (static_cast<double>(i) - b);
        const cplx bn = z + 2.0 * i + 1.0 - b;
        D = bn + an * D;
        if (D == cplx(0.0)) D = tiny;
        C = bn + an / C;
        if (C == cplx(0.0)) C = tiny;
        D = 1.0 / D;
        const cplx delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) {
            ok = true;
            return std::exp(-z) * cpow(z, b) / f;
        }
    }
    ok = false;
    return {0.0, 0.0};
}

// Absolutely convergent fallback: Gamma(b,z) = e^{-z} int_0^inf (z+u)^{b-1} e^{-u} du
// along the horizontal ray, valid off the negative real axis.
inline cplx upper_gamma_ray(cplx b, cplx z) {
    QuadratureSpec spec;
    spec.abs_tol = 1e-14;
    spec.rel_tol = 1e-13;
    spec.transform = quad_transform::exp_substitution;
    auto r = adaptive_integrate([&](double u) { return cpow(z + u, b - 1.0) * std::exp(-u); },
                                0.0, std::numeric_limits<double>::infinity(), spec);
    return std::exp(-z) * r.value;
}

} // namespace detail

// Upper incomplete gamma Gamma(b, x) on the principal branch.
// Gamma(b, 0) = Gamma(b) for Re b > 0.
inline cplx incomplete_gamma_upper(cplx b, cplx x) {
    if (x == cplx(0.0)) {
        if (b.real() <= 0.0) throw domain_error("incomplete_gamma_upper: x = 0 requires Re(b) > 0");
        return gamma(b);
    }
    const double ax = std::abs(x);
    const bool b_near_nonpos_int =
        std::abs(b.imag()) < 1e-8 && b.real() < 0.5 && near_integer(b.real(), 1e-8);

    if (std::abs(std::arg(x)) < 0.9 * pi &&
        (b_near_nonpos_int || ax > std::max(2.0, 1.2 * std::abs(b)))) {
        // the continued fraction has no order poles, so it also covers b at
        // the nonpositive integers where the series route degenerates
        bool ok = false;
        const cplx v = detail::upper_gamma_cf(b, x, ok);
        if (ok) return v;
    }
    if (!b_near_nonpos_int && ax <= std::max(2.0, 1.2 * std::abs(b)) + 8.0) {
        bool ok = false;
        const cplx low = detail::lower_gamma_series(b, x, ok);
        if (ok) {
            const cplx total = gamma(b);
            const cplx v = total - low;
            // guard against cancellation; fall through to the ray integral if severe
            if (std::abs(v) > 1e-10 * std::abs(total)) return v;
        }
    }
    if (std::abs(std::arg(x)) > 0.999 * pi && b.real() <= 0.0)
        throw domain_error("incomplete_gamma_upper: argument on the negative real axis");
    return detail::upper_gamma_ray(b, x);
}

} // namespace zlab

#endif
