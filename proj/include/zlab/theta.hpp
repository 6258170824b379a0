#ifndef ZLAB_THETA_HPP
#define ZLAB_THETA_HPP

#include "core.hpp"

namespace zlab {

enum class theta_kind { theta1prime, theta2, theta3, theta4 };

// Nome-series value at argument 0 with nome e^{-pi tau}, tau > 0:
//   theta3 = sum_{n in Z} e^{-pi n^2 tau}          theta4 = alternating
//   theta2 = sum over half-integer offsets          theta1prime = d/dz theta1 at 0
// Series truncated when terms drop below 1e-16.
inline double theta_function(theta_kind kind, double tau, int order = 64) {
    if (tau <= 0.0) throw domain_error("theta_function: tau must be positive");
    if (order < 1) throw domain_error("theta_function: order must be >= 1");
    double sum = 0.0;
    switch (kind) {
        case theta_kind::theta3:
        case theta_kind::theta4: {
            sum = 1.0;
            for (int n = 1; n <= order; ++n) {
                double t = 2.0 * std::exp(-pi * n * static_cast<double>(n) * tau);
                if (kind == theta_kind::theta4 && (n % 2)) t = -t;
                sum += t;
                if (std::abs(t) < 1e-16) break;
            }
            return sum;
        }
        case theta_kind::theta2: {
            for (int n = 0; n <= order; ++n) {
                const double h = n + 0.5;
                const double t = 2.0 * std::exp(-pi * h * h * tau);
                sum += t;
                if (t < 1e-16) break;
            }
            return sum;
        }
        case theta_kind::theta1prime: {
            for (int n = 0; n <= order; ++n) {
                const double h = n + 0.5;
                double t = 2.0 * (2.0 * n + 1.0) * std::exp(-pi * h * h * tau);
                if (n % 2) t = -t;
                sum += t;
                if (std::abs(t) < 1e-16) break;
            }
            return sum;
        }
    }
    throw domain_error("theta_function: unknown kind");
}

// theta3 - theta2 - theta4 at nome e^{-pi C}; for C < 1 evaluated through the
// modular transformation (theta3 <-> theta3, theta2 <-> theta4 with weight C^{-1/2})
// to keep the series short on both ends.
inline double theta_combination(double C) {
    if (C >= 1.0) {
        return theta_function(theta_kind::theta3, C) - theta_function(theta_kind::theta2, C) -
               theta_function(theta_kind::theta4, C);
    }
    const double inv = 1.0 / C;
    const double w = 1.0 / std::sqrt(C);
    return w * (theta_function(theta_kind::theta3, inv) - theta_function(theta_kind::theta4, inv) -
                theta_function(theta_kind::theta2, inv));
}

} // namespace zlab

#endif
