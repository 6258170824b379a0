#ifndef ZLAB_QUADRATURE_HPP
#define ZLAB_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "core.hpp"

namespace zlab {

enum class quad_transform { none, exp_substitution };

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_refinements = 12;
    quad_transform transform = quad_transform::none;
};

struct IntegralResult {
    cplx value{0.0, 0.0};
    double error = 0.0;
};

namespace detail {

// Non-adaptive tanh-sinh on [a,b], refining the step until two consecutive
// levels agree. Returns the estimate and the last inter-level difference.
template <typename F>
IntegralResult tanh_sinh_panel(F&& f, double a, double b, double tol, int max_level) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    const double tmax = 3.8;  // weights below ~1e-17 past this point

    cplx prev(0.0, 0.0);
    double err = std::numeric_limits<double>::infinity();
    cplx value(0.0, 0.0);
    for (int level = 0; level <= max_level; ++level) {
        const double h = 1.0 / static_cast<double>(1 << level);
        cplx sum(0.0, 0.0);
        const int jmax = static_cast<int>(tmax / h);
        for (int j = -jmax; j <= jmax; ++j) {
            const double t = j * h;
            const double cs = std::cosh(0.5 * pi * std::sinh(t));
            const double x = std::tanh(0.5 * pi * std::sinh(t));
            const double w = 0.5 * pi * std::cosh(t) / (cs * cs);
            const double xm = mid + half * x;
            if (xm <= a || xm >= b) continue;
            const cplx fx = f(xm);
            if (!is_finite(fx)) continue;  // integrable endpoint singularities
            sum += w * fx;
        }
        value = sum * h * half;
        if (level > 1) {
            err = std::abs(value - prev);
            if (err <= tol * 0.1 || err <= 1e-16 * std::abs(value)) return {value, err};
        }
        prev = value;
    }
    return {value, err};
}

} // namespace detail

// Adaptive quadrature of a complex-valued f over [lo, hi] (hi may be +inf,
// which requires transform = exp_substitution). The estimate's reported error
// satisfies err <= max(abs_tol, rel_tol*|value|) or a tolerance_error is thrown
// carrying the best estimate.
template <typename F>
IntegralResult adaptive_integrate(F&& f, double lo, double hi, const QuadratureSpec& spec = {}) {
    if (spec.abs_tol <= 0 || spec.rel_tol <= 0) throw domain_error("adaptive_integrate: tolerances must be positive");
    if (spec.max_refinements < 1) throw domain_error("adaptive_integrate: max_refinements must be >= 1");

    const bool infinite = std::isinf(hi);
    if (infinite || spec.transform == quad_transform::exp_substitution) {
        // w = lo + e^u maps (-inf, inf) onto (lo, hi); panels are accumulated
        // outward until they stop contributing.
        const double u_hi = infinite ? 200.0 : std::log(hi - lo);
        auto g = [&](double u) -> cplx {
            const double eu = std::exp(u);
            return f(lo + eu) * eu;
        };
        cplx total(0.0, 0.0);
        double err = 0.0;
        const double panel = 4.0;
        // forward panels from u=0
        int quiet = 0;
        for (double a = 0.0; a < u_hi && quiet < 2; a += panel) {
            const double b = std::min(a + panel, u_hi);
            auto r = detail::tanh_sinh_panel(g, a, b, spec.abs_tol, spec.max_refinements);
            total += r.value;
            err += r.error;
            if (std::abs(r.value) < 0.25 * spec.abs_tol) ++quiet; else quiet = 0;
        }
        // backward panels
        quiet = 0;
        for (double b = 0.0; b > -200.0 && quiet < 2; b -= panel) {
            const double a = b - panel;
            auto r = detail::tanh_sinh_panel(g, a, b, spec.abs_tol, spec.max_refinements);
            total += r.value;
            err += r.error;
            if (std::abs(r.value) < 0.25 * spec.abs_tol) ++quiet; else quiet = 0;
        }
        if (err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total)))
            throw tolerance_error("adaptive_integrate: tolerance not met", total, err);
        return {total, err};
    }

    // finite interval: recursive bisection of tanh-sinh panels
    struct Seg { double a, b; int depth; };
    std::vector<Seg> work{{lo, hi, 0}};
    cplx total(0.0, 0.0);
    double err = 0.0;
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        auto r = detail::tanh_sinh_panel(f, s.a, s.b, spec.abs_tol, 9);
        const double local_tol = spec.abs_tol * (s.b - s.a) / (hi - lo);
        if (r.error > local_tol && s.depth < spec.max_refinements) {
            const double m = 0.5 * (s.a + s.b);
            work.push_back({s.a, m, s.depth + 1});
            work.push_back({m, s.b, s.depth + 1});
        } else {
            total += r.value;
            err += r.error;
        }
    }
    if (err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total)))
        throw tolerance_error("adaptive_integrate: tolerance not met", total, err);
    return {total, err};
}

} // namespace zlab

#endif
