#ifndef ZLAB_TRANSITIONS_HPP
#define ZLAB_TRANSITIONS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "greens.hpp"
#include "lerch.hpp"

namespace zlab {

enum class mixing_case { c1, c2, c3, c3p, c4 };

// Boltzmann-prepared initial state: dispersion case, mixing length sigma,
// circle geometry. sigma = 0 is the trivial unmixed edge (accepted, flagged).
struct MixingSpec {
    MixingSpec(mixing_case case_id_, double sigma_, Geometry geom_)
        : case_id(case_id_), sigma(sigma_), geom(geom_) {
        if (sigma < 0.0) throw domain_error("MixingSpec: sigma must be nonnegative");
    }
    mixing_case case_id;
    double sigma;
    Geometry geom;
    bool unmixed() const { return sigma == 0.0; }
};

struct ProbabilityRow {
    double t = 0.0;
    double p = 0.0;
    std::string error;  // nonempty if the row failed to evaluate
};

// One-particle normalization z(sigma) for each dispersion case. Case 4 uses the
// analytic continuation of the Hurwitz zeta below sigma = a, matching the way
// the probability formulas are used throughout the mixing analysis.
inline double mixing_norm(const MixingSpec& spec) {
    const double a = spec.geom.a;
    const double R = spec.geom.R;
    const double sigma = spec.sigma;
    switch (spec.case_id) {
        case mixing_case::c1:
            if (sigma == 0.0) throw pole_error("mixing_norm: c1 norm diverges at sigma = 0");
            return 1.0 / sigma;
        case mixing_case::c2:
            if (sigma == 0.0) throw pole_error("mixing_norm: c2 norm diverges at sigma = 0");
            return 1.0 / (1.0 - std::exp(-sigma / R));
        case mixing_case::c3:
        case mixing_case::c3p:
            if (std::abs(sigma - a) < 1e-13) throw pole_error("mixing_norm: c3 norm pole at sigma = a");
            return 1.0 / (sigma - a);
        case mixing_case::c4: {
            if (std::abs(sigma - a) < 1e-13) throw pole_error("mixing_norm: c4 norm pole at sigma = a");
            const double alpha = R / a;
            const cplx z = std::pow(alpha, sigma / a) * hurwitz_zeta(cplx(sigma / a, 0.0), alpha);
            return z.real();
        }
    }
    throw domain_error("mixing_norm: unknown case");
}

// Transition probability P(nu -> nu') at time t with the detector half way
// around the circle (x = pi a for the line cases, x = L/2 on the circle).
inline double transition_prob(const MixingSpec& spec, double t, const EvalPolicy& policy = {}) {
    const double a = spec.geom.a;
    const double R = spec.geom.R;
    const double sigma = spec.sigma;
    const SPoint pt(t, sigma, a);
    switch (spec.case_id) {
        case mixing_case::c1: {
            const double x = pi * a;
            const double d = (x - t) * (x - t) + sigma * sigma;
            if (d == 0.0) throw pole_error("transition_prob: c1 pole");
            return sigma * sigma / d;
        }
        case mixing_case::c2: {
            const double x = 0.5 * spec.geom.L();
            const cplx amp = 1.0 - std::exp(cplx(0.0, 1.0) * cplx(x - t, sigma) / R);
            const double num = 1.0 - std::exp(-sigma / R);
            return num * num / std::norm(amp);
        }
        case mixing_case::c3: {
            const double x = pi * a;
            const cplx g = green_case3(x, pt);
            const double inv_norm = sigma - a;  // norm is 1/(sigma - a)
            return std::norm(g) * inv_norm * inv_norm;
        }
        case mixing_case::c3p: {
            const double x = pi * a;
            const cplx g = green_case3p(x, pt);
            const double inv_norm = sigma - a;
            return std::norm(g) * inv_norm * inv_norm;
        }
        case mixing_case::c4: {
            const double x = 0.5 * spec.geom.L();
            const cplx amp = R * green_case4(x, pt, spec.geom, policy);  // (R/a)^s phi(...)
            const double z = mixing_norm(spec);
            return std::norm(amp) / (z * z);
        }
    }
    throw domain_error("transition_prob: unknown case");
}

// Partial-sum (N-state) transition probability at R = a:
//   P_N = |sum_{n=1}^N (-1)^n n^{-(sigma + i t)/a}|^2 / (sum_{n=1}^N n^{-sigma/a})^2.
inline double transition_prob_partial(int N, double sigma_over_a, double t_over_a) {
    if (N < 2) throw domain_error("transition_prob_partial: N must be >= 2");
    const cplx s(sigma_over_a, t_over_a);
    cplx amp(0.0, 0.0);
    double z = 0.0;
    for (int n = 1; n <= N; ++n) {
        const cplx term = real_base_pow(static_cast<double>(n), -s);
        amp += (n % 2) ? -term : term;
        z += std::pow(static_cast<double>(n), -sigma_over_a);
    }
    return std::norm(amp) / (z * z);
}

// Mean of the case-4 transition probability over t in [a, T], composite
// Simpson on a uniform grid.
inline double time_averaged_prob(double T, double sigma, double x, const Geometry& geom, int steps,
                                 const EvalPolicy& policy = {}) {
    const double a = geom.a;
    if (T <= a) throw domain_error("time_averaged_prob: T must exceed a");
    if (steps < 100) throw domain_error("time_averaged_prob: steps must be >= 100");
    if (steps % 2) ++steps;
    const MixingSpec spec(mixing_case::c4, sigma, geom);
    const double z = mixing_norm(spec);
    const double alpha = geom.R / a;
    auto f = [&](double t) {
        const cplx amp = cpow(alpha, cplx(sigma / a, t / a)) *
                         lerch_phi(LerchArgs(x / (two_pi * geom.R), cplx(sigma / a, t / a), alpha), policy);
        return std::norm(amp);
    };
    const double h = (T - a) / steps;
    double acc = f(a) + f(T);
    for (int k = 1; k < steps; ++k) acc += f(a + k * h) * ((k % 2) ? 4.0 : 2.0);
    const double integral = acc * h / 3.0;
    return integral / (T - a) / (z * z);
}

// Two leading terms of the large-T mean square of the Lerch amplitude,
// normalized by the sigma-state overlap z(2 sigma):
//   1 + (1/(2-2s)) zetaH(2-2s, x) / zetaH(2s, alpha) (T/2pi)^{1-2s},  s = sigma/a.
// T and sigma are in units of a; x is the Lerch twist in (0,1).
inline double lerch_mean_square_asymptotic(double T_over_a, double sigma_over_a, double x, double alpha,
                                           const EvalPolicy& policy = {}) {
    const double s = sigma_over_a;
    if (!(s > 0.5 && s < 1.0))
        throw domain_error("lerch_mean_square_asymptotic: requires 1/2 < sigma/a < 1");
    const double num = hurwitz_zeta(cplx(2.0 - 2.0 * s, 0.0), frac_mod1(x) == 0.0 ? 1.0 : frac_mod1(x), policy).real();
    const double den = hurwitz_zeta(cplx(2.0 * s, 0.0), alpha, policy).real();
    const double corr = (1.0 / (2.0 - 2.0 * s)) * (num / den) * std::pow(T_over_a / two_pi, 1.0 - 2.0 * s);
    return 1.0 + corr;
}

// |zeta(sigma + i y)|^2, the SUSY-breaking potential on a vertical line.
inline double susy_potential(double sigma_over_a, double y, const EvalPolicy& policy = {}) {
    const cplx s(sigma_over_a, y);
    if (std::abs(s - cplx(1.0, 0.0)) < 1e-13) throw pole_error("susy_potential: zeta pole at s = 1");
    return std::norm(riemann_zeta(s, policy));
}

struct RhScanResult {
    std::vector<double> sigma_over_a;
    std::vector<ProbabilityRow> rows;  // grid order: sigma-major, t-minor
    double min_p = std::numeric_limits<double>::infinity();
    double argmin_sigma = 0.0;
    double argmin_t = 0.0;
};

// Case-4 transition probability on the product grid; pole rows are recorded
// per-row instead of aborting the scan.
inline RhScanResult rh_scan(const std::vector<double>& sigma_grid, const std::vector<double>& t_grid,
                            double a = 1.0, const EvalPolicy& policy = {}) {
    if (sigma_grid.empty() || t_grid.empty()) throw domain_error("rh_scan: grids must be nonempty");
    RhScanResult out;
    out.sigma_over_a = sigma_grid;
    out.rows.reserve(sigma_grid.size() * t_grid.size());
    for (double soa : sigma_grid) {
        MixingSpec spec(mixing_case::c4, soa * a, Geometry(a, a));
        for (double toa : t_grid) {
            ProbabilityRow row;
            row.t = toa;
            try {
                row.p = transition_prob(spec, toa * a, policy);
                if (row.p < out.min_p) {
                    out.min_p = row.p;
                    out.argmin_sigma = soa;
                    out.argmin_t = toa;
                }
            } catch (const error& e) {
                row.error = e.kind + ": " + e.what();
            }
            out.rows.push_back(row);
        }
    }
    return out;
}

} // namespace zlab

#endif
