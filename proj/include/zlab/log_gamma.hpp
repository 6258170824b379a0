#ifndef ZLAB_LOG_GAMMA_HPP
#define ZLAB_LOG_GAMMA_HPP

#include "core.hpp"

namespace zlab {
namespace detail {

// B_{2j}/(2j(2j-1)), j = 1..12 (Stirling series for log Gamma)
inline constexpr double stirling_c[12] = {
    0.0833333333333333333,
    -0.00277777777777777778,
    0.000793650793650793651,
    -0.000595238095238095238,
    0.000841750841750841751,
    -0.00191752691752691753,
    0.00641025641025641026,
    -0.0295506535947712418,
    0.179644372368830573,
    -1.39243221690590112,
    13.4028640441683920,
    -156.848284626002017,
};

// B_{2j}/(2j), j = 1..10 (Stirling series for digamma)
inline constexpr double digamma_c[10] = {
    0.0833333333333333333,
    -0.00833333333333333333,
    0.00396825396825396825,
    -0.00416666666666666667,
    0.00757575757575757576,
    -0.0210927960927960928,
    0.0833333333333333333,
    -0.443259803921568627,
    3.05395433027011974,
    -26.4562121212121212,
};

// Stirling expansion, valid Re z > 0 with |z| large enough.
inline cplx log_gamma_stirling(cplx z) {
    const cplx lz = std::log(z);
    cplx s = (z - 0.5) * lz - z + half_log_two_pi;
    const cplx z2 = z * z;
    cplx zp = z;
    for (double c : stirling_c) {
        s += c / zp;
        zp *= z2;
    }
    return s;
}

// log(sin(pi z)) on the branch that keeps log Gamma(z) continuous off the
// negative real axis; assumes Im z >= 0.
inline cplx log_sin_pi_upper(cplx z) {
    // sin(pi z) = e^{-i pi z} (e^{2 i pi z} - 1) / (2i); |e^{2 i pi z}| < 1 for Im z > 0
    const cplx w = std::exp(cplx(0.0, two_pi) * z);
    return cplx(0.0, -pi) * z + std::log((w - 1.0) / cplx(0.0, 2.0));
}

} // namespace detail

// Principal branch of log Gamma(z); imaginary part continuous along paths
// avoiding the negative real axis. Poles at z = 0, -1, -2, ...
inline cplx log_gamma(cplx z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && near_integer(z.real()))
        throw pole_error("log_gamma: pole at nonpositive integer");
    if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));

    if (z.real() < 0.5) {
        // reflection; Im z >= 0 here
        return log_pi - detail::log_sin_pi_upper(z) - log_gamma(1.0 - z);
    }
    // shift until Stirling is accurate
    cplx shift(0.0, 0.0);
    while (std::abs(z) < 12.0) {
        shift += std::log(z);
        z += 1.0;
    }
    return detail::log_gamma_stirling(z) - shift;
}

inline cplx gamma(cplx z) {
    if (z.imag() == 0.0 && z.real() > 0.0 && near_integer(z.real()) && z.real() < 171.0) {
        double g = 1.0;
        for (int k = 2; k < static_cast<int>(std::llround(z.real())); ++k) g *= k;
        return {g, 0.0};
    }
    return std::exp(log_gamma(z));
}

inline cplx digamma(cplx z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && near_integer(z.real()))
        throw pole_error("digamma: pole at nonpositive integer");
    if (z.imag() < 0.0) return std::conj(digamma(std::conj(z)));
    if (z.real() < 0.5) {
        // psi(1-z) - psi(z) = pi cot(pi z)
        const cplx w = std::exp(cplx(0.0, two_pi) * z);
        const cplx cot = cplx(0.0, 1.0) * (w + 1.0) / (w - 1.0);
        return digamma(1.0 - z) - pi * cot;
    }
    cplx acc(0.0, 0.0);
    while (std::abs(z) < 12.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    cplx s = std::log(z) - 0.5 / z;
    const cplx z2 = z * z;
    cplx zp = z2;
    for (double c : detail::digamma_c) {
        s -= c / zp;
        zp *= z2;
    }
    return s + acc;
}

} // namespace zlab

#endif
