// Acceptance suite: one criterion per function, each printing PASS/FAIL lines
// with the measured quantity and its pinned tolerance. Run with no arguments
// for the full gate or with a single criterion index (1..8).

#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "zlab/zlab.hpp"

using namespace zlab;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion, what.c_str(), detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// 1. Functional-equation suite: Lerch residual < 1e-7 on 200 random points
//    (x in (0,1), alpha in (0,2), 0.2 < Re s < 0.9, |Im s| < 30); completed
//    zeta symmetry residual < 1e-9 on 50 points. Runtime < 30 s.
void criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> ux(0.0, 1.0), ua(0.0, 2.0), ure(0.2, 0.9), uim(-30.0, 30.0);
    double worst = 0.0;
    int evaluated = 0;
    while (evaluated < 200) {
        const double x = ux(rng), alpha = ua(rng);
        const cplx s(ure(rng), uim(rng));
        if (x < 1e-4 || x > 1.0 - 1e-4 || alpha < 1e-4) continue;  // open-interval draws
        worst = std::max(worst, lerch_functional_residual(LerchArgs(x, s, alpha)));
        ++evaluated;
    }
    report(1, "Lerch transformation residual on 200 strip points", worst < 1e-7,
           "max residual " + format_double(worst) + ", tolerance 1e-7");

    double worst_zeta = 0.0;
    for (int k = 0; k < 50; ++k) {
        const cplx s(ure(rng), uim(rng));
        worst_zeta = std::max(worst_zeta, lerch_functional_residual(LerchArgs(0.0, s, 1.0)));
    }
    report(1, "completed-zeta symmetry residual on 50 points", worst_zeta < 1e-9,
           "max residual " + format_double(worst_zeta) + ", tolerance 1e-9");
    const double dt = seconds_since(t0);
    report(1, "runtime", dt < 30.0, format_double(dt) + " s < 30 s");
}

// ---------------------------------------------------------------------------
// 2. Exact combinatorics for n = 120: distinct = 15 and with_repeats = 20 as
//    stated; listings match the quoted enumerations as multisets; primes -> 1.
//    NOTE: exhaustive enumeration yields 16 and 21 (the quoted 15/20 both omit
//    the multiset {10,6,2}); the count equalities are asserted as stated and
//    fail honestly, the inclusion and prime checks pass.
void criterion2() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto d = count_factorizations(120, factorization_mode::distinct);
    const auto w = count_factorizations(120, factorization_mode::with_repeats);

    report(2, "distinct factorizations of 120 equal 15", d.count == 15,
           "enumerated " + std::to_string(d.count) + " (complete search; the 15-line listing omits {10,6,2})");
    report(2, "with-repeat factorizations of 120 equal 20", w.count == 20,
           "enumerated " + std::to_string(w.count) + " (the 20-line listing omits {10,6,2})");

    const std::vector<std::vector<long long>> quoted_distinct = {
        {5, 4, 3, 2}, {20, 3, 2}, {15, 4, 2}, {12, 5, 2}, {10, 4, 3}, {8, 5, 3}, {6, 5, 4},
        {60, 2}, {40, 3}, {30, 4}, {24, 5}, {20, 6}, {15, 8}, {12, 10}, {120}};
    const std::vector<std::vector<long long>> quoted_repeats = {
        {5, 3, 2, 2, 2}, {15, 2, 2, 2}, {10, 3, 2, 2}, {6, 5, 2, 2}, {5, 4, 3, 2},
        {30, 2, 2}, {20, 3, 2}, {15, 4, 2}, {12, 5, 2}, {10, 4, 3}, {8, 5, 3}, {6, 5, 4},
        {60, 2}, {40, 3}, {30, 4}, {24, 5}, {20, 6}, {15, 8}, {12, 10}, {120}};
    auto contains_all = [](const std::vector<std::vector<long long>>& listing,
                           const std::vector<std::vector<long long>>& quoted) {
        const std::set<std::vector<long long>> have(listing.begin(), listing.end());
        for (auto m : quoted) {
            std::sort(m.begin(), m.end(), std::greater<>());
            if (!have.count(m)) return false;
        }
        return true;
    };
    report(2, "every quoted distinct multiset appears in the listing", contains_all(d.listing, quoted_distinct),
           "15/15 found");
    report(2, "every quoted with-repeat multiset appears in the listing", contains_all(w.listing, quoted_repeats),
           "20/20 found");

    bool primes_ok = true;
    for (long long p : {2, 3, 5, 7, 97, 101, 9973}) {
        primes_ok = primes_ok && count_factorizations(p, factorization_mode::distinct).count == 1 &&
                    count_factorizations(p, factorization_mode::with_repeats).count == 1;
    }
    report(2, "primes have exactly one factorization", primes_ok, "checked 2,3,5,7,97,101,9973");
    const double dt = seconds_since(t0);
    report(2, "runtime", dt < 1.0, format_double(dt) + " s < 1 s");
}

// ---------------------------------------------------------------------------
// 3. Zeros: first three ordinates within 1e-6; zero_count(30) = 3 and equals
//    the scan count. Runtime < 60 s.
void criterion3() {
    const auto t0 = std::chrono::steady_clock::now();
    const double expected[3] = {14.134725141734694, 21.022039638771555, 25.010857580145689};
    const auto zs = find_zeros(0.0, 30.0, 0.05);
    bool ok = zs.size() == 3;
    double worst = 0.0;
    for (size_t i = 0; i < zs.size() && i < 3; ++i) worst = std::max(worst, std::abs(zs[i].t - expected[i]));
    ok = ok && worst < 1e-6;
    report(3, "first three critical-line ordinates", ok,
           "count " + std::to_string(zs.size()) + ", max deviation " + format_double(worst) + " < 1e-6");
    const int n30 = zero_count(30.0);
    report(3, "zero_count(30) equals 3 and the scan count", n30 == 3 && n30 == static_cast<int>(zs.size()),
           "zero_count = " + std::to_string(n30));
    const double dt = seconds_since(t0);
    report(3, "runtime", dt < 60.0, format_double(dt) + " s < 60 s");
}

// ---------------------------------------------------------------------------
// 4. Representation cross-checks: periodizations within 1e-6; theta-kernel
//    Mellin quadrature vs closed form within 1e-5 on 20 strip points;
//    periodized wavefunction = -eta within 1e-8. Runtime < 2 min.
void criterion4() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> ux(-2.0, 8.0), ut(-3.0, 3.0), usg(0.2, 2.5), uR(0.5, 1.8);

    double worst1 = 0.0;
    for (int k = 0; k < 20; ++k) {
        const Geometry g(uR(rng), 1.0);
        const SPoint pt(ut(rng), usg(rng), 1.0);
        const double x = ux(rng);
        worst1 = std::max(worst1,
                          std::abs(periodize(periodize_base::case1, x, pt, g, 24).value - green_case2(x, pt, g)));
    }
    report(4, "periodized line kernel reproduces the circle kernel", worst1 < 1e-6,
           "max |diff| " + format_double(worst1) + " < 1e-6");

    double worst3 = 0.0;
    std::uniform_real_distribution<double> uR3(0.4, 1.0);
    for (int k = 0; k < 20; ++k) {
        const Geometry g(uR3(rng), 1.0);
        const SPoint pt(0.5 + 0.2 * k, (k % 2) ? 0.75 : 2.0, 1.0);
        const double x = 0.3 + 0.05 * k;  // inside (0, 2 pi R)
        worst3 = std::max(worst3, std::abs(periodize(periodize_base::case3p, x, pt, g, 10).value -
                                           green_case4(x, pt, g)));
    }
    {
        const Geometry g(1.0, 1.0);
        const SPoint pt(1.3, 2.0, 1.0);
        worst3 = std::max(worst3, std::abs(periodize(periodize_base::case3p, pi, pt, g, 10).value -
                                           green_case4(pi, pt, g)));
    }
    report(4, "periodized log-dispersion kernel reproduces the Lerch kernel", worst3 < 1e-6,
           "max |diff| " + format_double(worst3) + " < 1e-6");

    std::uniform_real_distribution<double> ure(0.2, 2.0), uim(-20.0, 20.0);
    double worst_theta = 0.0;
    for (int k = 0; k < 20; ++k) {
        const cplx s(ure(rng), uim(rng));
        const auto r = theta_integral_zeta(s);
        worst_theta = std::max(worst_theta,
                               std::abs(r.quadrature - r.closed_form) / std::max(1.0, std::abs(r.closed_form)));
    }
    report(4, "theta-kernel Mellin transform matches the closed form", worst_theta < 1e-5,
           "max rel diff " + format_double(worst_theta) + " < 1e-5");

    double worst_psi = 0.0;
    const Geometry g_aa(1.0, 1.0);
    for (double sg : {0.25, 0.5, 0.75, 0.9})
        for (double t : {1.0, 7.3, 14.1, 25.0}) {
            const SPoint pt(t, sg, 1.0);
            const cplx psi = periodized_wavefunction(pt, pi, g_aa);
            const cplx eta = dirichlet_function(dirichlet_kind::eta, pt.s());
            worst_psi = std::max(worst_psi, std::abs(psi + eta));
        }
    report(4, "periodized wavefunction equals -eta at the half-way point", worst_psi < 1e-8,
           "max residual " + format_double(worst_psi) + " < 1e-8");
    const double dt = seconds_since(t0);
    report(4, "runtime", dt < 120.0, format_double(dt) + " s < 120 s");
}

// ---------------------------------------------------------------------------
// 5. Figure-level structure at sigma = 0.75 a: two-state periodicity at
//    machine precision, N in {4,16} and full-amplitude scans strictly positive
//    on t in [0,50], and the exact ballistic peak.
void criterion5() {
    const auto t0 = std::chrono::steady_clock::now();
    const double period = two_pi / log_2;
    double worst = 0.0;
    for (int k = 0; k <= 200; ++k) {
        const double t = 0.11 * k;
        worst = std::max(worst, std::abs(transition_prob_partial(2, 0.75, t) -
                                         transition_prob_partial(2, 0.75, t + period)));
    }
    report(5, "two-state probability has period 2 pi / log 2", worst < 1e-12,
           "max |P(t) - P(t+T)| = " + format_double(worst) + " < 1e-12");

    for (int N : {4, 16}) {
        double mn = 1.0;
        for (int k = 0; k <= 1000; ++k) mn = std::min(mn, transition_prob_partial(N, 0.75, 0.05 * k));
        report(5, "N = " + std::to_string(N) + " partial-sum minimum strictly positive on [0,50]", mn > 1e-7,
               "min P = " + format_double(mn));
    }
    {
        const MixingSpec spec(mixing_case::c4, 0.75, Geometry(1.0, 1.0));
        double mn = 1.0;
        for (int k = 0; k <= 1000; ++k) mn = std::min(mn, transition_prob(spec, 0.05 * k));
        report(5, "full amplitude minimum strictly positive on [0,50]", mn > 1e-7,
               "min P = " + format_double(mn));
    }
    {
        const MixingSpec spec(mixing_case::c1, 0.75, Geometry(1.0, 1.0));
        const double peak = transition_prob(spec, pi);
        report(5, "ballistic peak P(pi a) equals 1 exactly", peak == 1.0, "P = " + format_double(peak));
    }
    const double dt = seconds_since(t0);
    report(5, "runtime", dt < 60.0, format_double(dt) + " s");
}

// ---------------------------------------------------------------------------
// 6. Statistical mechanics: series vs product to 1e-8 at beta/a in {1.5,2,3};
//    pole residue of the one-particle sum within 1e-4; the Bose telescoping
//    value log 2 within 1e-8; U against a central difference within 1e-5.
void criterion6() {
    const auto t0 = std::chrono::steady_clock::now();
    const Geometry g(1.0, 1.0);
    double worst = 0.0;
    for (double b : {1.5, 2.0, 3.0}) {
        const double s = grand_log_z(statistics_kind::fermi, b, 0.0, g, grand_method::series, 400);
        const double p = grand_log_z(statistics_kind::fermi, b, 0.0, g, grand_method::direct_product, 100000);
        worst = std::max(worst, std::abs(s - p));
    }
    report(6, "grand log Z: series vs direct product", worst < 1e-8,
           "max |diff| " + format_double(worst) + " < 1e-8");

    const double r1 = 1e-3 * one_particle_z(1.0 + 1e-3, g);
    const double r2 = 1e-4 * one_particle_z(1.0 + 1e-4, g);
    const double residue = (10.0 * r2 - r1) / 9.0;
    report(6, "one-particle pole residue extrapolates to 1", std::abs(residue - 1.0) < 1e-4,
           "residue " + format_double(residue) + ", tolerance 1e-4");

    // sum_m (zeta(2m) - 1)/m telescopes to log 2 (the zero mode is excluded,
    // the literal zeta(2m)/m series diverges by exactly that harmonic piece)
    const double bose = grand_log_z(statistics_kind::bose, 2.0, 0.0, g, grand_method::series, 400);
    report(6, "Bose telescoping sum equals log 2", std::abs(bose - log_2) < 1e-8,
           format_double(bose) + " vs " + format_double(log_2));

    const auto st = thermodynamics(2.0, g, 100000);
    const double h = 1e-4;
    const double dU =
        -(grand_log_z(statistics_kind::fermi, 2.0 + h, 0.0, g, grand_method::direct_product, 100000) -
          grand_log_z(statistics_kind::fermi, 2.0 - h, 0.0, g, grand_method::direct_product, 100000)) /
        (2.0 * h);
    report(6, "U equals -d(log Z)/d(beta) by central difference", std::abs(st.U - dU) < 1e-5 * std::abs(dU),
           "rel diff " + format_double(std::abs(st.U - dU) / std::abs(dU)) + " < 1e-5");
    const double dt = seconds_since(t0);
    report(6, "runtime", dt < 60.0, format_double(dt) + " s");
}

// ---------------------------------------------------------------------------
// 7. Asymptotics: the time-averaged probability at T = 500 a, sigma = 0.75 a
//    matches the two-term large-T mean-square prediction within 10% (the
//    unspecified subleading B-terms are the reason for the wide tolerance).
//    The quadrature mean uses the z(sigma)^2 normalization and is rescaled by
//    zeta(sigma)^2 / zeta(2 sigma) onto the prediction's z(2 sigma) convention.
void criterion7() {
    const auto t0 = std::chrono::steady_clock::now();
    const Geometry g(1.0, 1.0);
    const double sigma = 0.75, T = 500.0;
    const double mean_p = time_averaged_prob(T, sigma, pi, g, 10000);
    const double zs = riemann_zeta(cplx(sigma, 0.0)).real();
    const double z2s = riemann_zeta(cplx(2.0 * sigma, 0.0)).real();
    const double mean_rescaled = mean_p * zs * zs / z2s;
    const double predicted = lerch_mean_square_asymptotic(T, sigma, 0.5, 1.0);
    const double rel = std::abs(mean_rescaled - predicted) / predicted;
    report(7, "time-averaged probability matches the two-term prediction", rel < 0.10,
           "mean " + format_double(mean_rescaled) + " vs predicted " + format_double(predicted) +
               ", rel diff " + format_double(rel) + " < 0.1");
    const double dt = seconds_since(t0);
    report(7, "runtime", dt < 120.0, format_double(dt) + " s");
}

// ---------------------------------------------------------------------------
// 8. Q-series: tau(1..10) against an independent pentagonal-number oracle;
//    multiplicativity on coprime pairs <= 30; the weight-12 functional
//    relation at s = 8 within the truncation tolerance.
void criterion8() {
    const auto t0 = std::chrono::steady_clock::now();
    // pentagonal-number oracle for prod (1 - q^n), then the 24th power
    const int order = 10;
    std::vector<long long> e(order + 1, 0);
    e[0] = 1;
    for (int k = 1;; ++k) {
        const long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
        const long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
        if (g1 > order && g2 > order) break;
        const long long s = (k % 2) ? -1 : 1;
        if (g1 <= order) e[g1] += s;
        if (g2 <= order) e[g2] += s;
    }
    auto conv = [order](const std::vector<long long>& a, const std::vector<long long>& b) {
        std::vector<long long> r(order + 1, 0);
        for (int i = 0; i <= order; ++i)
            for (int j = 0; i + j <= order; ++j) r[i + j] += a[i] * b[j];
        return r;
    };
    auto e2 = conv(e, e), e4 = conv(e2, e2), e8 = conv(e4, e4), e16 = conv(e8, e8);
    const auto e24 = conv(e16, e8);
    const auto tau = ramanujan_tau_table(900);
    bool tau_ok = true;
    for (int n = 1; n <= 10; ++n) tau_ok = tau_ok && tau[n] == e24[n - 1];
    report(8, "tau(1..10) matches the polynomial-multiplication oracle", tau_ok, "exact integer equality");

    bool mult_ok = true;
    for (int m = 2; m <= 30; ++m)
        for (int n = m + 1; n <= 30; ++n)
            if (std::gcd(m, n) == 1 && bigint(tau[m] * tau[n]) != tau[m * n]) mult_ok = false;
    report(8, "tau multiplicativity on coprime pairs <= 30", mult_ok, "exact integer equality");

    // functional relation at s = 8: the left side carries the truncation tail,
    // the right side is the Mellin transform of the exact cusp-form series
    const cplx s(8.0, 0.0);
    const auto F8 = ramanujan_F(s, 3000);
    auto delta_series = [&](double C) {
        double acc = 0.0;
        const double Cm = C < 1.0 ? 1.0 / C : C;
        for (int n = 1; n <= 60; ++n) {
            const double term = tau[n].convert_to<double>() * std::exp(-two_pi * n * Cm);
            acc += term;
            if (std::abs(term) < 1e-300) break;
        }
        return C < 1.0 ? std::pow(C, -12.0) * acc : acc;
    };
    const int ns = 4000;
    const double lo = -4.0, hi = 4.0, h = (hi - lo) / ns;
    cplx mellin(0.0, 0.0);
    for (int k = 0; k <= ns; ++k) {
        const double u = lo + k * h;
        const double C = std::exp(u);
        mellin += cpow(cplx(C, 0.0), 12.0 - s) * delta_series(C) *
                  ((k == 0 || k == ns) ? 1.0 : (k % 2 ? 4.0 : 2.0));
    }
    mellin *= h / 3.0;
    const cplx F4 = mellin * cpow(two_pi, 12.0 - s) * std::exp(-log_gamma(12.0 - s));
    const cplx lhs = cpow(two_pi, -s) * gamma(s) * F8.value;
    const cplx rhs = cpow(two_pi, -(12.0 - s)) * gamma(12.0 - s) * F4;
    const double tol = std::abs(cpow(two_pi, -s) * gamma(s)) * F8.tail_bound + 1e-9;
    report(8, "weight-12 functional relation at s = 8", std::abs(lhs - rhs) < tol,
           "residual " + format_double(std::abs(lhs - rhs)) + " within truncation tolerance " + format_double(tol));
    const double dt = seconds_since(t0);
    report(8, "runtime", dt < 60.0, format_double(dt) + " s");
}

} // namespace

int main(int argc, char** argv) {
    const int which = argc > 1 ? std::atoi(argv[1]) : 0;
    using fn = void (*)();
    const fn criteria[] = {criterion1, criterion2, criterion3, criterion4,
                           criterion5, criterion6, criterion7, criterion8};
    if (which >= 1 && which <= 8) {
        criteria[which - 1]();
    } else {
        for (fn f : criteria) f();
    }
    if (failures) std::printf("%d check(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
