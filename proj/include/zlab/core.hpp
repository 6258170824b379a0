#ifndef ZLAB_CORE_HPP
#define ZLAB_CORE_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace zlab {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338328;
inline constexpr double two_pi = 2.0 * pi;
inline constexpr double log_2 = 0.693147180559945309417232121458;
inline constexpr double log_pi = 1.14472988584940017414342735135;
inline constexpr double half_log_two_pi = 0.918938533204672741780329736406;

// Error taxonomy. Evaluation failures are reported by throwing; the CLI maps
// every zlab::error to exit code 3 with a machine-readable payload.
struct error : std::runtime_error {
    error(std::string k, const std::string& msg) : std::runtime_error(msg), kind(std::move(k)) {}
    std::string kind;
};
struct pole_error : error {
    explicit pole_error(const std::string& msg) : error("pole", msg) {}
};
struct domain_error : error {
    explicit domain_error(const std::string& msg) : error("domain", msg) {}
};
struct tolerance_error : error {
    tolerance_error(const std::string& msg, cplx best, double achieved)
        : error("tolerance", msg), best_estimate(best), achieved_error(achieved) {}
    cplx best_estimate;
    double achieved_error;
};
struct divergence_error : error {
    explicit divergence_error(const std::string& msg) : error("divergence", msg) {}
};
struct overflow_error : error {
    explicit overflow_error(const std::string& msg) : error("overflow", msg) {}
};

inline bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Principal-branch power z^w = exp(w log z), log the principal logarithm.
inline cplx cpow(cplx z, cplx w) {
    if (z == cplx(0.0)) {
        if (w.real() > 0.0) return {0.0, 0.0};
        throw domain_error("cpow: zero base with nonpositive real part of exponent");
    }
    return std::exp(w * std::log(z));
}
inline cplx cpow(double x, cplx w) { return cpow(cplx(x, 0.0), w); }

// (n + a)^{-s} for real n+a > 0; avoids the complex log when the base is real.
inline cplx real_base_pow(double base, cplx minus_s) {
    const double lb = std::log(base);
    return std::polar(std::exp(minus_s.real() * lb), minus_s.imag() * lb);
}

inline bool near_integer(double x, double tol = 1e-12) {
    return std::abs(x - std::round(x)) < tol;
}

// reduce x into [0,1)
inline double frac_mod1(double x) {
    double f = x - std::floor(x);
    if (f >= 1.0) f -= 1.0;
    return f;
}

// sin(pi x), cos(pi x) with exact values at integer and half-integer x
inline double sin_pi(double x) {
    const double r = std::remainder(x, 2.0);
    if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
    if (r == 0.5) return 1.0;
    if (r == -0.5) return -1.0;
    return std::sin(pi * r);
}
inline double cos_pi(double x) {
    const double r = std::remainder(x, 2.0);
    if (r == 0.5 || r == -0.5) return 0.0;
    if (r == 0.0) return 1.0;
    if (r == 1.0 || r == -1.0) return -1.0;
    return std::cos(pi * r);
}

} // namespace zlab

#endif
