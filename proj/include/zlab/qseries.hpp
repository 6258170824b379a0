#ifndef ZLAB_QSERIES_HPP
#define ZLAB_QSERIES_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "core.hpp"

namespace zlab {

using bigint = boost::multiprecision::cpp_int;

// Truncated power series in q^step with exact integer coefficients.
// coeffs[k] multiplies q^{k*step}; step is 1 or 1/2.
struct QSeries {
    std::vector<bigint> coeffs;
    int step_den = 1;  // 1 -> integer powers, 2 -> half-integer grid
    int truncation_order() const { return static_cast<int>(coeffs.size()) - 1; }

    static QSeries one(int order, int step_den = 1) {
        QSeries r;
        r.step_den = step_den;
        r.coeffs.assign(order + 1, 0);
        r.coeffs[0] = 1;
        return r;
    }

    QSeries mul(const QSeries& other) const {
        if (step_den != other.step_den)
            throw domain_error("QSeries: mixed exponent steps");
        const int order = truncation_order();
        QSeries r;
        r.step_den = step_den;
        r.coeffs.assign(order + 1, 0);
        for (int i = 0; i <= order; ++i) {
            if (coeffs[i] == 0) continue;
            for (int j = 0; i + j <= order && j <= other.truncation_order(); ++j) {
                if (other.coeffs[j] == 0) continue;
                r.coeffs[i + j] += coeffs[i] * other.coeffs[j];
            }
        }
        return r;
    }

    // series division, coefficient-recursive; divisor must have unit leading term
    QSeries div(const QSeries& den) const {
        if (step_den != den.step_den) throw domain_error("QSeries: mixed exponent steps");
        if (den.coeffs.empty() || den.coeffs[0] == 0)
            throw domain_error("QSeries: division by series with vanishing constant term");
        const int order = truncation_order();
        QSeries r;
        r.step_den = step_den;
        r.coeffs.assign(order + 1, 0);
        for (int k = 0; k <= order; ++k) {
            bigint acc = coeffs[k];
            for (int j = 1; j <= k && j <= den.truncation_order(); ++j)
                acc -= den.coeffs[j] * r.coeffs[k - j];
            if (acc % den.coeffs[0] != 0 && den.coeffs[0] != 1)
                throw domain_error("QSeries: non-integral quotient");
            r.coeffs[k] = acc / den.coeffs[0];
        }
        return r;
    }

    QSeries shift_up(int k) const {  // multiply by q^{k*step}
        QSeries r;
        r.step_den = step_den;
        r.coeffs.assign(coeffs.size(), 0);
        for (int i = 0; i + k <= truncation_order(); ++i) r.coeffs[i + k] = coeffs[i];
        return r;
    }

    // embed an integer-power series into the half-integer grid
    QSeries to_half_grid() const {
        if (step_den == 2) return *this;
        QSeries r;
        r.step_den = 2;
        r.coeffs.assign(2 * coeffs.size() - 1, 0);
        for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[2 * i] = coeffs[i];
        return r;
    }
};

enum class eta_sign { plus, minus };

// Exact coefficients of [q] * prod_{n>=1} (1 +/- q^{n*step})^{exponent},
// step = 1 or 1/2 (half_powers), truncated at q^{order}. The optional leading
// q factor shifts every exponent up by one.
inline QSeries eta_product_expand(eta_sign sign, int exponent, bool half_powers, int order,
                                  bool leading_q = true) {
    if (order < 0) throw domain_error("eta_product_expand: order must be >= 0");
    const int den = half_powers ? 2 : 1;
    const int slots = order * den;  // index k holds q^{k/den}
    QSeries prod = QSeries::one(slots, den);
    if (exponent != 0) {
        const int neg = exponent < 0 ? 1 : 0;
        const int e = std::abs(exponent);
        // binomial factors (1 +/- x)^e with x = q^{n*step}
        std::vector<bigint> binom(static_cast<size_t>(e) + 1);
        binom[0] = 1;
        for (int k = 1; k <= e; ++k) binom[k] = binom[k - 1] * (e - k + 1) / k;
        for (int n = 1; n <= slots; ++n) {
            QSeries factor = QSeries::one(slots, den);
            for (int k = 1; k <= e && k * n <= slots; ++k) {
                bigint c = binom[k];
                if (sign == eta_sign::minus && (k % 2)) c = -c;
                factor.coeffs[k * n] = c;
            }
            prod = neg ? prod.div(factor) : prod.mul(factor);
        }
    }
    if (leading_q) prod = prod.shift_up(den);
    return prod;
}

} // namespace zlab

#endif
