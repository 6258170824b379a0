// zlab: command-line front end for the Lerch/zeta Green's-function library.
// Every subcommand emits a ScanTable as CSV (default) or JSON; evaluation
// failures exit with code 3 and a machine-readable JSON payload on stderr.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "zlab/zlab.hpp"

using namespace zlab;

namespace {

struct GlobalOpts {
    std::string format = "csv";
    std::string out;
    double tol = 1e-10;
    int threads = 1;
    unsigned long seed = 12345;
};

cplx parse_complex(const std::string& text) {
    // forms: "1.5", "1.5+2i", "1.5-2i", "2i", "-i", "1.5+i"
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return std::isspace(c); }), s.end());
    if (s.empty()) throw CLI::ValidationError("empty complex literal");
    if (s.back() != 'i') return {std::stod(s), 0.0};
    s.pop_back();
    // split at the last +/- that is not an exponent sign and not leading
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        if (s.empty() || s == "+") return {0.0, 1.0};
        if (s == "-") return {0.0, -1.0};
        return {0.0, std::stod(s)};
    }
    const std::string re = s.substr(0, split);
    std::string im = s.substr(split);
    if (im == "+") im = "1";
    if (im == "-") im = "-1";
    return {std::stod(re), std::stod(im)};
}

std::vector<double> parse_range(const std::string& text) {
    // "lo:hi:step" or a single value
    std::vector<double> grid;
    const auto c1 = text.find(':');
    if (c1 == std::string::npos) {
        grid.push_back(std::stod(text));
        return grid;
    }
    const auto c2 = text.find(':', c1 + 1);
    const double lo = std::stod(text.substr(0, c1));
    const double hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    const double step = (c2 == std::string::npos) ? 1.0 : std::stod(text.substr(c2 + 1));
    if (step <= 0.0) throw CLI::ValidationError("range step must be positive");
    const long long n = static_cast<long long>(std::floor((hi - lo) / step + 1e-9));
    for (long long k = 0; k <= n; ++k) grid.push_back(lo + k * step);
    return grid;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

std::string json_escape(const std::string& s) {
    std::string r;
    for (char c : s) {
        if (c == '"' || c == '\\') r += '\\';
        r += c;
    }
    return r;
}

// JSON table writer sharing the CSV float formatter, so both formats carry
// byte-identical value strings.
void write_table_json(const ScanTable& t, std::ostream& os) {
    os << "{\n  \"columns\": [";
    for (size_t i = 0; i < t.columns.size(); ++i)
        os << '"' << json_escape(t.columns[i]) << '"' << (i + 1 < t.columns.size() ? "," : "");
    os << "],\n  \"meta\": {";
    size_t k = 0;
    for (const auto& [key, val] : t.meta) {
        os << '"' << json_escape(key) << "\": \"" << json_escape(val) << '"';
        if (++k < t.meta.size()) os << ", ";
    }
    os << "},\n  \"rows\": [\n";
    for (size_t r = 0; r < t.rows.size(); ++r) {
        os << "    [";
        for (size_t i = 0; i < t.rows[r].size(); ++i) {
            const auto& cell = t.rows[r][i];
            if (std::holds_alternative<std::string>(cell))
                os << '"' << json_escape(std::get<std::string>(cell)) << '"';
            else
                os << format_cell(cell);
            if (i + 1 < t.rows[r].size()) os << ",";
        }
        os << "]" << (r + 1 < t.rows.size() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
}

void emit(const ScanTable& t, const GlobalOpts& g) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!g.out.empty()) {
        file.open(g.out);
        if (!file) throw error("io", "cannot open output file " + g.out);
        os = &file;
    }
    if (g.format == "json")
        write_table_json(t, *os);
    else
        t.write_csv(*os);
}

EvalPolicy policy_from(const GlobalOpts& g, const std::string& method) {
    EvalPolicy p;
    p.tail_tol = g.tol;
    if (method == "series") p.method = lerch_method::series;
    else if (method == "euler_maclaurin") p.method = lerch_method::euler_maclaurin;
    else if (method == "integral") p.method = lerch_method::integral;
    else if (method == "theta_integral") p.method = lerch_method::theta_integral;
    else if (method == "functional_equation") p.method = lerch_method::functional_equation;
    return p;
}

int resolve_threads(int cli_threads) {
    if (cli_threads > 0) return cli_threads;
    if (const char* env = std::getenv("ZLAB_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lerch zeta / fermionic Green's function laboratory"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", g.out, "write output to FILE instead of stdout");
    app.add_option("--tol", g.tol, "evaluation tolerance");
    app.add_option("--threads", g.threads, "worker threads for scans (ZLAB_THREADS fallback)");
    app.add_option("--seed", g.seed, "seed for randomized harnesses");

    // ---- eval ----
    auto* eval = app.add_subcommand("eval", "evaluate a zeta-family function");
    std::string ev_kind = "zeta", ev_s = "2", ev_method = "auto";
    double ev_x = 0.0, ev_alpha = 1.0;
    eval->add_option("--kind", ev_kind)->check(CLI::IsMember({"zeta", "eta", "lambda", "beta", "lerch", "hurwitz"}));
    eval->add_option("--s", ev_s, "complex argument, re+imi");
    eval->add_option("--x", ev_x, "Lerch twist");
    eval->add_option("--alpha", ev_alpha, "Lerch/Hurwitz shift");
    eval->add_option("--method", ev_method);

    // ---- green ----
    auto* green = app.add_subcommand("green", "two-point functions");
    std::string gr_case = "4";
    double gr_x = pi, gr_t = 0.0, gr_sigma = 0.75, gr_R = 1.0, gr_a = 1.0, gr_shift = 0.0;
    bool gr_over2pi = false;
    int gr_cutoff = 16;
    green->add_option("--case", gr_case)->check(CLI::IsMember({"1", "2", "3", "3p", "4", "gauge", "p1", "p3p", "4p-zero", "4p-pi", "scalar", "scalar-dt", "psi"}));
    green->add_option("--x", gr_x);
    green->add_option("--t", gr_t);
    green->add_option("--sigma", gr_sigma);
    green->add_option("--R", gr_R);
    green->add_option("--a", gr_a);
    green->add_option("--gauge-shift", gr_shift);
    green->add_option("--cutoff", gr_cutoff, "winding cutoff for periodized cases");
    green->add_flag("--over-2pi", gr_over2pi, "divide by 2 pi (capital-G normalization)");

    // ---- transition ----
    auto* tr = app.add_subcommand("transition", "transition probability scans");
    std::string tr_case = "4", tr_trange = "0:50:0.05";
    int tr_partial = 0;
    double tr_sigma = 0.75, tr_R = 1.0, tr_a = 1.0;
    tr->add_option("--case", tr_case)->check(CLI::IsMember({"1", "2", "3", "3p", "4"}));
    tr->add_option("--partial", tr_partial, "partial-sum state count N (overrides --case)");
    tr->add_option("--sigma", tr_sigma);
    tr->add_option("--t", tr_trange, "time grid lo:hi:step");
    tr->add_option("--R", tr_R);
    tr->add_option("--a", tr_a);

    // ---- partition ----
    auto* part = app.add_subcommand("partition", "grand partition function");
    std::string pa_stat = "fermi", pa_brange = "1.5:5:0.1", pa_method = "series";
    double pa_mu = 0.0, pa_R = 1.0, pa_a = 1.0;
    int pa_terms = 400;
    part->add_option("--stat", pa_stat)->check(CLI::IsMember({"fermi", "bose"}));
    part->add_option("--beta", pa_brange);
    part->add_option("--mu", pa_mu);
    part->add_option("--method", pa_method)->check(CLI::IsMember({"series", "direct_product"}));
    part->add_option("--terms", pa_terms);
    part->add_option("--R", pa_R);
    part->add_option("--a", pa_a);

    // ---- thermo ----
    auto* th = app.add_subcommand("thermo", "thermodynamic observables");
    std::string th_brange = "1.5:5:0.1";
    double th_R = 1.0, th_a = 1.0;
    int th_terms = 100000;
    th->add_option("--beta", th_brange);
    th->add_option("--terms", th_terms);
    th->add_option("--R", th_R);
    th->add_option("--a", th_a);

    // ---- thermal-green ----
    auto* tg = app.add_subcommand("thermal-green", "antiperiodic thermal image sum");
    std::string tg_brange = "2";
    double tg_x = 0.0, tg_t = 0.0, tg_sigma = 0.0, tg_R = 1.0, tg_a = 1.0;
    int tg_mmax = 3;
    tg->add_option("--x", tg_x);
    tg->add_option("--t", tg_t);
    tg->add_option("--sigma", tg_sigma);
    tg->add_option("--beta", tg_brange);
    tg->add_option("--mmax", tg_mmax);
    tg->add_option("--R", tg_R);
    tg->add_option("--a", tg_a);

    // ---- factorize ----
    auto* fac = app.add_subcommand("factorize", "multiplicative partitions");
    long long fac_n = 120;
    std::string fac_mode = "distinct";
    fac->add_option("n", fac_n)->required();
    fac->add_option("--mode", fac_mode)->check(CLI::IsMember({"distinct", "with_repeats"}));

    // ---- zeros ----
    auto* zr = app.add_subcommand("zeros", "critical-line zero scan");
    std::string zr_range = "0:30";
    double zr_step = 0.05;
    zr->add_option("--range", zr_range, "lo:hi");
    zr->add_option("--step", zr_step);

    // ---- rh-scan ----
    auto* rh = app.add_subcommand("rh-scan", "transition-probability zero scan");
    std::string rh_sigmas = "0.6,0.75,0.9", rh_trange = "0:60:0.05";
    rh->add_option("--sigma", rh_sigmas, "comma list of sigma/a");
    rh->add_option("--t", rh_trange);

    // ---- susy ----
    auto* su = app.add_subcommand("susy", "|zeta(sigma+iy)|^2 potential scan");
    double su_sigma = 0.5;
    std::string su_yrange = "0:60:0.05";
    su->add_option("--sigma", su_sigma);
    su->add_option("--y", su_yrange);

    // ---- duality-check ----
    auto* du = app.add_subcommand("duality-check", "functional-equation duality residuals");
    double du_x = pi, du_R = 1.0, du_a = 1.0, du_t = 2.0, du_sigma = 0.3;
    int du_draws = 0;
    du->add_option("--x", du_x);
    du->add_option("--R", du_R);
    du->add_option("--a", du_a);
    du->add_option("--t", du_t);
    du->add_option("--sigma", du_sigma);
    du->add_option("--draws", du_draws, "random draws in the strip (0 = single point)");

    // ---- theta-zeta ----
    auto* tz = app.add_subcommand("theta-zeta", "theta-kernel Mellin transform vs closed form");
    std::string tz_s = "2";
    tz->add_option("--s", tz_s);

    // ---- qseries ----
    auto* qs = app.add_subcommand("qseries", "exact q-expansion coefficients");
    std::string qs_model = "ramanujan_tau";
    int qs_order = 10;
    qs->add_option("--model", qs_model)->check(CLI::IsMember({"heterotic12", "ramanujan_tau", "open_fermionic"}));
    qs->add_option("--order", qs_order);

    // ---- ramanujan ----
    auto* ra = app.add_subcommand("ramanujan", "tau Dirichlet series");
    std::string ra_s = "8";
    int ra_nmax = 2000;
    ra->add_option("--s", ra_s);
    ra->add_option("--nmax", ra_nmax);

    // ---- string-green ----
    auto* sg = app.add_subcommand("string-green", "string-modified Green's function");
    std::string sg_model = "ramanujan_tau";
    double sg_t = 1.0, sg_sigma = 1.6, sg_R = 1.0, sg_a = 1.0, sg_ap = 1.0, sg_A = 1.0;
    int sg_nmax = 200, sg_Nmax = 24;
    sg->add_option("--model", sg_model)->check(CLI::IsMember({"heterotic12", "ramanujan_tau", "open_fermionic"}));
    sg->add_option("--t", sg_t);
    sg->add_option("--sigma", sg_sigma);
    sg->add_option("--R", sg_R);
    sg->add_option("--a", sg_a);
    sg->add_option("--alpha-prime", sg_ap);
    sg->add_option("--A", sg_A);
    sg->add_option("--nmax", sg_nmax);
    sg->add_option("--Nmax", sg_Nmax);

    // ---- osc-z ----
    auto* oz = app.add_subcommand("osc-z", "logarithmic-oscillator partition function");
    std::string oz_beta = "2", oz_mu = "0";
    double oz_aw = 2.0, oz_a = 1.0;
    oz->add_option("--beta", oz_beta);
    oz->add_option("--mu", oz_mu);
    oz->add_option("--aomega", oz_aw);
    oz->add_option("--a", oz_a);

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const int threads = resolve_threads(g.threads);

    try {
        ScanTable table;
        table.meta["tool"] = "zlab 1.0";

        if (*eval) {
            const cplx s = parse_complex(ev_s);
            const EvalPolicy pol = policy_from(g, ev_method);
            cplx v;
            if (ev_kind == "zeta") v = dirichlet_function(dirichlet_kind::zeta, s, pol);
            else if (ev_kind == "eta") v = dirichlet_function(dirichlet_kind::eta, s, pol);
            else if (ev_kind == "lambda") v = dirichlet_function(dirichlet_kind::lambda, s, pol);
            else if (ev_kind == "beta") v = dirichlet_function(dirichlet_kind::beta, s, pol);
            else if (ev_kind == "hurwitz") v = hurwitz_zeta(s, ev_alpha, pol);
            else v = lerch_phi(LerchArgs(ev_x, s, ev_alpha), pol);
            table.columns = {"re", "im"};
            table.meta["kind"] = ev_kind;
            table.meta["s"] = ev_s;
            table.meta["x"] = format_double(ev_x);
            table.meta["alpha"] = format_double(ev_alpha);
            table.meta["method"] = ev_method;
            table.add_row({v.real(), v.imag()});
            emit(table, g);
            return 0;
        }

        if (*green) {
            const Geometry geom(gr_R, gr_a, gr_shift);
            const SPoint pt(gr_t, gr_sigma, gr_a);
            cplx v;
            if (gr_case == "1") v = green_case1(gr_x, pt);
            else if (gr_case == "2") v = green_case2(gr_x, pt, geom);
            else if (gr_case == "3") v = green_case3(gr_x, pt);
            else if (gr_case == "3p") v = green_case3p(gr_x, pt);
            else if (gr_case == "4") v = green_case4(gr_x, pt, geom);
            else if (gr_case == "gauge") v = green_gauge(gr_x, pt, geom);
            else if (gr_case == "p1") v = periodize(periodize_base::case1, gr_x, pt, geom, gr_cutoff).value;
            else if (gr_case == "p3p") v = periodize(periodize_base::case3p, gr_x, pt, geom, gr_cutoff).value;
            else if (gr_case == "4p-zero") v = closed_form_case4p(case4p_point::zero, pt.s(), gr_a);
            else if (gr_case == "4p-pi") v = closed_form_case4p(case4p_point::pi_a, pt.s(), gr_a);
            else if (gr_case == "scalar") v = scalar_two_point(gr_x, pt, geom, scalar_variant::field, 100000);
            else if (gr_case == "scalar-dt") v = scalar_two_point(gr_x, pt, geom, scalar_variant::dt_field, 100000);
            else v = periodized_wavefunction(pt, gr_x, geom);
            if (gr_over2pi) v /= two_pi;
            table.columns = {"re", "im"};
            table.meta["case"] = gr_case;
            table.meta["x"] = format_double(gr_x);
            table.meta["t"] = format_double(gr_t);
            table.meta["sigma"] = format_double(gr_sigma);
            table.meta["R"] = format_double(gr_R);
            table.meta["a"] = format_double(gr_a);
            table.meta["gauge_shift"] = format_double(gr_shift);
            table.add_row({v.real(), v.imag()});
            emit(table, g);
            return 0;
        }

        if (*tr) {
            const auto ts = parse_range(tr_trange);
            table.columns = {"t", "p"};
            table.meta["sigma"] = format_double(tr_sigma);
            table.meta["R"] = format_double(tr_R);
            table.meta["a"] = format_double(tr_a);
            std::vector<double> ps(ts.size());
            if (tr_partial >= 2) {
                table.meta["case"] = "partial N=" + std::to_string(tr_partial);
                parallel_for(ts.size(), threads, [&](std::size_t i) {
                    ps[i] = transition_prob_partial(tr_partial, tr_sigma / tr_a, ts[i] / tr_a);
                });
            } else {
                table.meta["case"] = tr_case;
                const mixing_case mc = tr_case == "1"   ? mixing_case::c1
                                       : tr_case == "2" ? mixing_case::c2
                                       : tr_case == "3" ? mixing_case::c3
                                       : tr_case == "3p" ? mixing_case::c3p
                                                         : mixing_case::c4;
                const MixingSpec spec(mc, tr_sigma, Geometry(tr_R, tr_a));
                parallel_for(ts.size(), threads, [&](std::size_t i) { ps[i] = transition_prob(spec, ts[i]); });
            }
            double mn = std::numeric_limits<double>::infinity();
            for (size_t i = 0; i < ts.size(); ++i) {
                table.add_row({ts[i], ps[i]});
                mn = std::min(mn, ps[i]);
            }
            table.meta["min_p"] = format_double(mn);
            emit(table, g);
            return 0;
        }

        if (*part) {
            const auto bs = parse_range(pa_brange);
            const Geometry geom(pa_R, pa_a);
            const statistics_kind stat = pa_stat == "fermi" ? statistics_kind::fermi : statistics_kind::bose;
            const grand_method method = pa_method == "series" ? grand_method::series : grand_method::direct_product;
            table.columns = {"beta", "log_z"};
            table.meta["stat"] = pa_stat;
            table.meta["method"] = pa_method;
            table.meta["mu"] = format_double(pa_mu);
            std::vector<std::string> errs(bs.size());
            std::vector<double> vals(bs.size());
            parallel_for(bs.size(), threads, [&](std::size_t i) {
                try {
                    vals[i] = grand_log_z(stat, bs[i], pa_mu, geom, method, pa_terms);
                } catch (const error& e) {
                    errs[i] = e.kind;
                    vals[i] = std::numeric_limits<double>::quiet_NaN();
                }
            });
            for (size_t i = 0; i < bs.size(); ++i) table.add_row({bs[i], vals[i]});
            emit(table, g);
            return 0;
        }

        if (*th) {
            const auto bs = parse_range(th_brange);
            const Geometry geom(th_R, th_a);
            table.columns = {"beta", "f", "U", "P", "N"};
            std::vector<ThermoState> sts(bs.size());
            parallel_for(bs.size(), threads, [&](std::size_t i) { sts[i] = thermodynamics(bs[i], geom, th_terms); });
            for (size_t i = 0; i < bs.size(); ++i)
                table.add_row({bs[i], sts[i].f, sts[i].U, sts[i].P, sts[i].N});
            emit(table, g);
            return 0;
        }

        if (*tg) {
            const auto bs = parse_range(tg_brange);
            const Geometry geom(tg_R, tg_a);
            table.columns = {"beta", "re", "im"};
            table.meta["x"] = format_double(tg_x);
            table.meta["t"] = format_double(tg_t);
            table.meta["sigma"] = format_double(tg_sigma);
            table.meta["mmax"] = std::to_string(tg_mmax);
            for (double b : bs) {
                const cplx v = thermal_green(tg_x, tg_t, tg_sigma, b, geom, tg_mmax);
                table.add_row({b, v.real(), v.imag()});
            }
            emit(table, g);
            return 0;
        }

        if (*fac) {
            const auto rep = count_factorizations(
                fac_n, fac_mode == "distinct" ? factorization_mode::distinct : factorization_mode::with_repeats);
            if (g.format == "json") {
                nlohmann::json j;
                j["n"] = rep.n;
                j["mode"] = fac_mode;
                j["count"] = rep.count;
                auto arr = nlohmann::json::array();
                for (const auto& m : rep.listing) arr.push_back(m);
                j["listing"] = arr;
                std::ostream* os = &std::cout;
                std::ofstream file;
                if (!g.out.empty()) {
                    file.open(g.out);
                    os = &file;
                }
                (*os) << j.dump(2) << "\n";
            } else {
                table.columns = {"factors"};
                table.meta["n"] = std::to_string(rep.n);
                table.meta["mode"] = fac_mode;
                table.meta["count"] = std::to_string(rep.count);
                for (const auto& m : rep.listing) {
                    std::string line;
                    for (size_t i = 0; i < m.size(); ++i)
                        line += std::to_string(m[i]) + (i + 1 < m.size() ? "*" : "");
                    table.add_row({line});
                }
                emit(table, g);
            }
            return 0;
        }

        if (*zr) {
            const auto c1 = zr_range.find(':');
            if (c1 == std::string::npos) throw domain_error("zeros: --range must be lo:hi");
            const double lo = std::stod(zr_range.substr(0, c1));
            const double hi = std::stod(zr_range.substr(c1 + 1));
            const auto zs = find_zeros(lo, hi, zr_step);
            table.columns = {"index", "t", "err"};
            table.meta["range"] = zr_range;
            table.meta["step"] = format_double(zr_step);
            table.meta["count"] = std::to_string(zs.size());
            for (const auto& z : zs)
                table.add_row({static_cast<long long>(z.index), z.t, z.refinement_error});
            emit(table, g);
            return 0;
        }

        if (*rh) {
            const auto sgs = parse_list(rh_sigmas);
            const auto ts = parse_range(rh_trange);
            const auto res = rh_scan(sgs, ts);
            table.columns = {"sigma_over_a", "t_over_a", "p", "error"};
            table.meta["min_p"] = format_double(res.min_p);
            table.meta["argmin_sigma"] = format_double(res.argmin_sigma);
            table.meta["argmin_t"] = format_double(res.argmin_t);
            size_t idx = 0;
            for (double s : sgs)
                for (double t : ts) {
                    const auto& row = res.rows[idx++];
                    table.add_row({s, t, row.p, row.error});
                }
            emit(table, g);
            return 0;
        }

        if (*su) {
            const auto ys = parse_range(su_yrange);
            table.columns = {"y", "V"};
            table.meta["sigma"] = format_double(su_sigma);
            std::vector<double> vs(ys.size());
            std::vector<std::string> errs(ys.size());
            parallel_for(ys.size(), threads, [&](std::size_t i) {
                try {
                    vs[i] = susy_potential(su_sigma, ys[i]);
                } catch (const error&) {
                    vs[i] = std::numeric_limits<double>::quiet_NaN();
                }
            });
            for (size_t i = 0; i < ys.size(); ++i) table.add_row({ys[i], vs[i]});
            emit(table, g);
            return 0;
        }

        if (*du) {
            table.columns = {"x", "R", "sigma", "t", "residual"};
            if (du_draws > 0) {
                std::mt19937 rng(g.seed);
                std::uniform_real_distribution<double> ux(0.1, 0.9), usg(0.1, 0.9), ut(-10.0, 10.0), uR(0.3, 1.0);
                for (int k = 0; k < du_draws; ++k) {
                    const Geometry geom(uR(rng) * du_a, du_a);
                    const double x = ux(rng) * two_pi * geom.R;
                    const double sgm = usg(rng) * du_a, t = ut(rng);
                    const double r = duality_residual(x, SPoint(t, sgm, du_a), geom);
                    table.add_row({x, geom.R, sgm, t, r});
                }
            } else {
                const Geometry geom(du_R, du_a);
                const double r = duality_residual(du_x, SPoint(du_t, du_sigma, du_a), geom);
                table.add_row({du_x, du_R, du_sigma, du_t, r});
            }
            emit(table, g);
            return 0;
        }

        if (*tz) {
            const cplx s = parse_complex(tz_s);
            const auto r = theta_integral_zeta(s);
            table.columns = {"quad_re", "quad_im", "closed_re", "closed_im", "abs_diff"};
            table.meta["s"] = tz_s;
            table.add_row({r.quadrature.real(), r.quadrature.imag(), r.closed_form.real(), r.closed_form.imag(),
                           std::abs(r.quadrature - r.closed_form)});
            emit(table, g);
            return 0;
        }

        if (*qs) {
            const string_model model = qs_model == "heterotic12"     ? string_model::heterotic12
                                       : qs_model == "ramanujan_tau" ? string_model::ramanujan_tau
                                                                     : string_model::open_fermionic;
            const QSeries series = degeneracies({model, qs_order});
            table.columns = {"power", "coefficient"};
            table.meta["model"] = qs_model;
            table.meta["step"] = series.step_den == 1 ? "1" : "1/2";
            for (int k = 0; k < static_cast<int>(series.coeffs.size()); ++k) {
                std::string p = series.step_den == 1 ? std::to_string(k)
                                                     : (k % 2 ? std::to_string(k) + "/2" : std::to_string(k / 2));
                table.add_row({p, series.coeffs[k].str()});
            }
            emit(table, g);
            return 0;
        }

        if (*ra) {
            const cplx s = parse_complex(ra_s);
            const auto r = ramanujan_F(s, ra_nmax);
            table.columns = {"re", "im", "tail_bound"};
            table.meta["s"] = ra_s;
            table.meta["nmax"] = std::to_string(ra_nmax);
            table.add_row({r.value.real(), r.value.imag(), r.tail_bound});
            emit(table, g);
            return 0;
        }

        if (*sg) {
            const string_model model = sg_model == "heterotic12"     ? string_model::heterotic12
                                       : sg_model == "ramanujan_tau" ? string_model::ramanujan_tau
                                                                     : string_model::open_fermionic;
            const auto r = string_green_series(SPoint(sg_t, sg_sigma, sg_a), Geometry(sg_R, sg_a),
                                               {model, sg_Nmax}, sg_ap, sg_A, sg_nmax, sg_Nmax);
            table.columns = {"re", "im", "tail"};
            table.meta["model"] = sg_model;
            table.add_row({r.value.real(), r.value.imag(), r.tail_bound});
            emit(table, g);
            return 0;
        }

        if (*oz) {
            const cplx beta = parse_complex(oz_beta);
            const cplx mu = parse_complex(oz_mu);
            const cplx v = log_oscillator_z(beta, mu, oz_aw, oz_a);
            table.columns = {"re", "im"};
            table.meta["beta"] = oz_beta;
            table.meta["mu"] = oz_mu;
            table.meta["aomega"] = format_double(oz_aw);
            table.add_row({v.real(), v.imag()});
            emit(table, g);
            return 0;
        }

        std::cerr << "no subcommand\n";
        return 2;
    } catch (const error& e) {
        nlohmann::json j;
        j["error"]["kind"] = e.kind;
        j["error"]["message"] = e.what();
        std::cerr << j.dump() << "\n";
        return 3;
    } catch (const std::exception& e) {
        nlohmann::json j;
        j["error"]["kind"] = "internal";
        j["error"]["message"] = e.what();
        std::cerr << j.dump() << "\n";
        return 3;
    }
}
