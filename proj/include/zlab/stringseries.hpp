#ifndef ZLAB_STRINGSERIES_HPP
#define ZLAB_STRINGSERIES_HPP

#include "greens.hpp"
#include "qseries.hpp"

namespace zlab {

enum class string_model { heterotic12, ramanujan_tau, open_fermionic };

struct DegeneracySpec {
    string_model model = string_model::ramanujan_tau;
    int order = 1;
};

// Mass-level degeneracies as exact q-series:
//   heterotic12:    q prod (1 + q^n)^24
//   ramanujan_tau:  q prod (1 - q^n)^24
//   open_fermionic: prod (1 + q^{n/2})^8 / prod (1 - q^n)^8   (half-integer grid)
inline QSeries degeneracies(const DegeneracySpec& spec) {
    if (spec.order < 0) throw domain_error("degeneracies: order must be >= 0");
    switch (spec.model) {
        case string_model::heterotic12:
            return eta_product_expand(eta_sign::plus, 24, false, spec.order, true);
        case string_model::ramanujan_tau:
            return eta_product_expand(eta_sign::minus, 24, false, spec.order, true);
        case string_model::open_fermionic: {
            const QSeries num = eta_product_expand(eta_sign::plus, 8, true, spec.order, false);
            const QSeries den = eta_product_expand(eta_sign::minus, 8, false, spec.order, false).to_half_grid();
            QSeries d = den;
            d.coeffs.resize(num.coeffs.size(), 0);
            return num.div(d);
        }
    }
    throw domain_error("degeneracies: unknown model");
}

// Exact tau(n) table, n = 1..order.
inline std::vector<bigint> ramanujan_tau_table(int order) {
    const QSeries q = degeneracies({string_model::ramanujan_tau, order});
    std::vector<bigint> tau(static_cast<size_t>(order) + 1, 0);
    for (int n = 1; n <= order; ++n) tau[n] = q.coeffs[n];
    return tau;
}

struct DirichletSeriesResult {
    cplx value{0.0, 0.0};
    double tail_bound = 0.0;
};

// F(s) = sum tau(n) n^{-s}, truncated at n_max with the Deligne-bound tail
// |tau(n)| <= d(n) n^{11/2} <= 2 n^6 estimate. Convergent for Re s > 13/2.
inline DirichletSeriesResult ramanujan_F(cplx s, int n_max) {
    if (n_max < 10) throw domain_error("ramanujan_F: n_max must be >= 10");
    if (s.real() <= 7.0)
        throw domain_error("ramanujan_F: truncated series needs Re s > 7 for a finite tail bound");
    const auto tau = ramanujan_tau_table(n_max);
    DirichletSeriesResult out;
    for (int n = 1; n <= n_max; ++n)
        out.value += static_cast<double>(tau[n]) * real_base_pow(static_cast<double>(n), -s);
    const double sigma = s.real();
    out.tail_bound = 2.0 * std::pow(static_cast<double>(n_max), 7.0 - sigma) / (sigma - 7.0);
    if (out.tail_bound > 0.1)
        throw tolerance_error("ramanujan_F: tail too large at this truncation", out.value, out.tail_bound);
    return out;
}

// String-modified circle Green's function:
//   sum_{n>=0, N>=0} rho(N) ((a(n+A)/R)^2 + a^2 N / alpha')^{-s/2},  s = (sigma + i t)/a,
// truncated at (n_max, N_max) with a crude tail report. The (n,N) = (0,0) term
// is skipped when its base vanishes (A = 0).
inline DirichletSeriesResult string_green_series(const SPoint& pt, const Geometry& geom,
                                                 const DegeneracySpec& spec, double alpha_prime, double A,
                                                 int n_max, int N_max) {
    if (n_max < 1 || N_max < 0) throw domain_error("string_green_series: truncations must be >= 1");
    if (pt.sigma <= 0.0) throw domain_error("string_green_series: needs sigma > 0 damping");
    const double a = geom.a;
    const double R = geom.R;
    const cplx s = pt.s();
    DegeneracySpec ds = spec;
    ds.order = std::max(ds.order, N_max);
    const QSeries rho = degeneracies(ds);  // half-integer grid for the open string
    DirichletSeriesResult out;
    double last_shell = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        const double kin = a * (n + A) / R;
        double shell = 0.0;
        for (int k = 0; k < static_cast<int>(rho.coeffs.size()); ++k) {
            const double N_level = static_cast<double>(k) / rho.step_den;
            if (N_level > N_max) break;
            if (rho.coeffs[k] == 0) continue;
            const double base = kin * kin + a * a * N_level / alpha_prime;
            if (base == 0.0) continue;  // massless (0,0) mode
            const cplx term = static_cast<double>(rho.coeffs[k]) * real_base_pow(base, -s / 2.0);
            out.value += term;
            shell += std::abs(term);
        }
        last_shell = shell;
        if (shell < 1e-16 * std::abs(out.value) && n > 4) break;
    }
    // integral-comparison remainder for the momentum direction: shells decay
    // like n^{-Re s}, so the tail is of order shell * n / (Re s - 1)
    out.tail_bound = last_shell * static_cast<double>(n_max) / std::max(0.1, s.real() - 1.0);
    return out;
}

} // namespace zlab

#endif
