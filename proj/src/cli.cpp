// SPDX-License-Identifier: Apache-2.0
#include "lagdisp/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "lagdisp/dispersion.hpp"
#include "lagdisp/errors.hpp"
#include "lagdisp/evolution.hpp"
#include "lagdisp/inequalities.hpp"
#include "lagdisp/polynomials.hpp"
#include "lagdisp/record.hpp"
#include "lagdisp/scan.hpp"
#include "lagdisp/wigner.hpp"

namespace lagdisp {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

double to_real(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + s + "'");
    }
    if (used != s.size()) throw UsageError("not a number: '" + s + "'");
    return v;
}

int to_int(const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
    return v;
}

}  // namespace

std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> out;
    for (const auto& item : split(text, ',')) {
        const auto parts = split(item, ':');
        if (parts.size() == 1) {
            out.push_back(to_real(parts[0]));
        } else if (parts.size() == 3) {
            const double lo = to_real(parts[0]), hi = to_real(parts[1]);
            const int count = to_int(parts[2]);
            if (count < 2) throw UsageError("linspace '" + item + "' needs at least two points");
            for (int i = 0; i < count; ++i) out.push_back(i == count - 1 ? hi : lo + (hi - lo) * i / (count - 1));
        } else {
            throw UsageError("bad list item '" + item + "' (use v or lo:hi:count)");
        }
    }
    if (out.empty()) throw UsageError("empty list");
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (const auto& item : split(text, ',')) {
        const auto parts = split(item, ':');
        if (parts.size() == 1) {
            out.push_back(to_int(parts[0]));
        } else if (parts.size() == 2 || parts.size() == 3) {
            const int a = to_int(parts[0]), b = to_int(parts[1]);
            const int step = parts.size() == 3 ? to_int(parts[2]) : 1;
            if (step <= 0 || b < a) throw UsageError("bad range '" + item + "'");
            for (int v = a; v <= b; v += step) out.push_back(v);
        } else {
            throw UsageError("bad list item '" + item + "' (use v, a:b or a:b:step)");
        }
    }
    if (out.empty()) throw UsageError("empty list");
    return out;
}

namespace {

struct Options {
    std::string format = "csv";
    std::string out;
    double tol = 1e-9;
    int threads = 1;
    std::uint64_t seed = 1;

    std::string target;  // suite or topic
    std::string family, n, m, k, alpha, beta, t, x, y, theta, two_l, weights;
    std::string path = "closed", weight = "sigma", mode = "value";
    double c = 0.5, lambda = 0.5, eta = 0.0, nu = 0.0, C = 0.0, t_lo = 10.0, t_hi = 1000.0, window = 1e4;
    std::vector<std::string> compare;
    int grid = 2001, N = 256, trunc = 1000, nmax = -1, samples = 16, xgrid = 201;
    bool grid_default = false;
};

struct Outcome {
    ResultRecord rec;
    std::vector<std::string> failures;
};

std::vector<double> reals(const std::string& s, const char* fallback) { return parse_real_list(s.empty() ? fallback : s); }
std::vector<int> ints(const std::string& s, const char* fallback) { return parse_int_list(s.empty() ? fallback : s); }
std::int64_t I64(int v) { return v; }

void add_bound_row(Outcome& o, const BoundReport& r, std::vector<Cell> head) {
    head.insert(head.end(), {r.supremum, r.arg_x, r.bound, r.slack, r.pass, r.exploratory});
    o.rec.rows.push_back(std::move(head));
    if (!r.pass && !r.exploratory) {
        std::string what = r.name;
        for (std::size_t j = 0; j + 6 < o.rec.rows.back().size(); ++j)
            what += " " + o.rec.columns[j] + "=" + format_cell(o.rec.rows.back()[j]);
        o.failures.push_back(what);
    }
}

const std::vector<std::string> kBoundTail{"supremum", "arg_x", "rhs", "slack", "pass", "exploratory"};

std::vector<std::string> with_tail(std::vector<std::string> head) {
    head.insert(head.end(), kBoundTail.begin(), kBoundTail.end());
    return head;
}

// ---- eval ----------------------------------------------------------------

Outcome cmd_eval(const Options& o) {
    static const std::vector<std::string> families{"jacobi", "laguerre", "meixner", "gegenbauer", "legendre", "g", "R"};
    if (std::find(families.begin(), families.end(), o.family) == families.end())
        throw UsageError("eval: unknown family '" + o.family + "'");
    if (o.x.empty()) throw UsageError("eval: --x is required");
    Outcome out;
    out.rec.columns = {"family", "n", "alpha", "beta", "x", "value"};
    for (int n : ints(o.n, "0"))
        for (double a : reals(o.alpha, "0"))
            for (double b : reals(o.beta, "0"))
                for (double x : parse_real_list(o.x)) {
                    double v = 0.0;
                    if (o.family == "jacobi") v = jacobi_P(n, a, b, x);
                    else if (o.family == "laguerre") v = laguerre_L(n, a, x);
                    else if (o.family == "meixner") v = meixner_M(n, x, b, o.c);
                    else if (o.family == "gegenbauer") v = gegenbauer_P(n, o.lambda, x);
                    else if (o.family == "legendre") v = legendre_P(n, x);
                    else if (o.family == "g") v = g_fn(n, a, b, x);
                    else v = jacobi_R(n, a, b, x);
                    out.rec.rows.push_back({o.family, I64(n), a, b, x, v});
                }
    return out;
}

// ---- kernel --------------------------------------------------------------

class KernelPaths {
public:
    explicit KernelPaths(const Options& o) : o_(o) {}

    cplx eval(const std::string& path, double a, double t, int n, int m, int top) {
        if (path == "closed") return kernel_closed(a, t, n, m).value;
        if (path == "meixner") return kernel_meixner(a, t, n, m).value;
        if (path == "quadrature") return oracle_quadrature(a, t, n, m);
        if (path == "convolution") return kernel_convolution(a, t, n, m, o_.window).value;
        if (path == "matexp") {
            auto key = std::make_pair(a, t);
            auto it = blocks_.find(key);
            if (it == blocks_.end()) it = blocks_.emplace(key, oracle_matexp_block(a, o_.trunc, t, top)).first;
            return it->second(n, m);
        }
        throw UsageError("kernel: unknown path '" + path + "'");
    }

private:
    const Options& o_;
    std::map<std::pair<double, double>, Eigen::MatrixXcd> blocks_;
};

Outcome cmd_kernel(const Options& o) {
    std::vector<std::pair<int, int>> cells;
    if (o.nmax >= 0) {
        for (int n = 0; n <= o.nmax; ++n)
            for (int m = 0; m <= o.nmax; ++m) cells.emplace_back(n, m);
    } else {
        for (int n : ints(o.n, "0"))
            for (int m : ints(o.m, "0")) cells.emplace_back(n, m);
    }
    int top = 0;
    for (auto [n, m] : cells) {
        if (n < 0 || m < 0) throw UsageError("kernel: negative index");
        top = std::max({top, n, m});
    }
    std::string first = o.path, second;
    if (!o.compare.empty()) {
        const auto parts = o.compare.size() == 1 ? split(o.compare[0], ',') : o.compare;
        if (parts.size() != 2) throw UsageError("kernel: --compare takes two paths, e.g. closed,matexp");
        first = parts[0];
        second = parts[1];
    }
    KernelPaths paths(o);
    Outcome out;
    out.rec.columns = {"alpha", "n", "m", "t", "re", "im", "modulus"};
    if (!second.empty()) out.rec.columns.push_back("diff");
    double max_diff = 0.0;
    for (double a : reals(o.alpha, "0"))
        for (double t : reals(o.t, "1"))
            for (auto [n, m] : cells) {
                const cplx v = paths.eval(first, a, t, n, m, top);
                std::vector<Cell> row{a, I64(n), I64(m), t, v.real(), v.imag(), std::abs(v)};
                if (!second.empty()) {
                    const double d = std::abs(v - paths.eval(second, a, t, n, m, top));
                    max_diff = std::max(max_diff, d);
                    row.push_back(d);
                }
                out.rec.rows.push_back(std::move(row));
            }
    if (!second.empty()) out.rec.add_summary("max_diff", max_diff);
    return out;
}

// ---- verify --------------------------------------------------------------

struct BoundGrid {
    std::vector<int> n;
    std::vector<double> alpha, beta;
};

BoundGrid default_grid(NamedBound which) {
    switch (which) {
        case NamedBound::bernstein_legendre: return {parse_int_list("0:200:10"), {0.0}, {0.0}};
        case NamedBound::bern_a0: return {parse_int_list("0,1,2,3,5,10,20,50,100"), {}, {0, 0.3, 1, 2.7, 5}};
        case NamedBound::B01: return {parse_int_list("0,1,2,5,10,20,50"), {-0.5, 0, 1.5, 4}, {0, 1, 3}};
        case NamedBound::g_unif1:
        case NamedBound::g_unif2: return {parse_int_list("0,1,2,5,10,20,40,60"), {0, 1, 2, 5, 8}, {0, 1, 2, 5, 8}};
        case NamedBound::g_unif3: return {parse_int_list("0,1,5,20,50"), {0, 0.2, 1, 3.7, 10}, {0, 0.2, 1, 3.7, 10}};
        case NamedBound::burq: return {parse_int_list("0,1,5,20,50"), {0, 1, 2, 5, 10}, {0}};
    }
    return {};
}

void verify_named(const Options& o, NamedBound which, Outcome& out) {
    out.rec.columns = with_tail({"bound", "n", "alpha", "beta"});
    BoundGrid g = o.grid_default ? default_grid(which)
                                 : BoundGrid{ints(o.n, "0:10"), reals(o.alpha, "0"), reals(o.beta, "0")};
    const BoundOptions opt{o.grid, true, o.C, o.tol};
    for (double b : g.beta) {
        auto alphas = g.alpha;
        if (alphas.empty()) {  // bern_a0: alpha from the validity edge upward
            const double frac = b - std::floor(b);
            alphas = {frac, frac + 0.5, 2.0, 10.0};
        }
        for (double a : alphas)
            for (int n : g.n)
                add_bound_row(out, check_named_bound(which, n, {a, b}, opt), {to_string(which), I64(n), a, b});
    }
}

void verify_sonin(const Options& o, Outcome& out) {
    out.rec.columns = {"n", "alpha", "beta", "x0", "x1", "x2", "lambda_n", "x2_limit", "ordered", "x1_le_x2",
                       "exploratory"};
    for (int n : ints(o.n, "0:10"))
        for (double a : reals(o.alpha, "0"))
            for (double b : reals(o.beta, "0")) {
                const auto s = sonin_points(n, {a, b});
                const auto c = check_x1_le_x2(n, {a, b});
                const bool ordered = -1.0 <= s.x0 && s.x0 <= s.x1 && s.x1 <= 1.0;
                out.rec.rows.push_back(
                    {I64(n), a, b, s.x0, s.x1, s.x2, s.lambda_n, s.x2_limit, ordered, c.holds, c.exploratory});
                if (!ordered || (!c.exploratory && !c.holds))
                    out.failures.push_back("sonin n=" + std::to_string(n) + " alpha=" + format_double(a) +
                                           " beta=" + format_double(b));
            }
}

void verify_maxima(const Options& o, Outcome& out) {
    out.rec.columns = {"n", "alpha", "beta", "maxima", "holds", "detail"};
    for (int n : ints(o.n, "1:10"))
        for (double a : reals(o.alpha, "0"))
            for (double b : reals(o.beta, "0")) {
                const auto r = sonin_maxima_check(n, {a, b});
                out.rec.rows.push_back({I64(n), a, b, I64(r.maxima), r.holds, r.detail});
                if (!r.holds) out.failures.push_back("maxima n=" + std::to_string(n) + " " + r.detail);
            }
}

void verify_binom(const Options& o, Outcome& out) {
    out.rec.columns = {"x", "y", "lhs", "rhs", "slack", "pass"};
    for (double x : reals(o.x, "2"))
        for (double y : reals(o.y, "1")) {
            const auto r = binom_lower_bound_check(x, y, o.tol);
            out.rec.rows.push_back({x, y, r.supremum, r.bound, r.slack, r.pass});
            if (!r.pass) out.failures.push_back("binom x=" + format_double(x) + " y=" + format_double(y));
        }
}

void verify_wigner(const Options& o, Outcome& out) {
    out.rec.columns = {"two_l", "theta", "defect", "pass"};
    for (int L : ints(o.two_l, "0:8"))
        for (double th : reals(o.theta, "0.1,0.7,1.4")) {
            const double d = wigner_unitarity_defect(wigner_d(L, th));
            const bool pass = d < 1e-10;
            out.rec.rows.push_back({I64(L), th, d, pass});
            if (!pass) out.failures.push_back("wigner two_l=" + std::to_string(L));
        }
}

void verify_disk(const Options& o, Outcome& out) {
    out.rec.columns = {"alpha", "m", "n", "samples", "max_residual", "pass"};
    const auto samples = disk_samples(o.seed, o.samples);
    for (double a : reals(o.alpha, "1,2,3"))
        for (int m : ints(o.m, "0:6"))
            for (int n : ints(o.n, "0:6")) {
                double worst = 0.0;
                for (const auto& s : samples) worst = std::max(worst, verify_disk_addition(m, n, a, s));
                const bool pass = worst < 1e-9;
                out.rec.rows.push_back({a, I64(m), I64(n), I64(o.samples), worst, pass});
                if (!pass)
                    out.failures.push_back("disk alpha=" + format_double(a) + " m=" + std::to_string(m) +
                                           " n=" + std::to_string(n));
            }
}

void verify_biangle(const Options& o, Outcome& out) {
    out.rec.columns = with_tail({"n", "k", "alpha", "beta"});
    for (int n : ints(o.n, "0:4"))
        for (double a : reals(o.alpha, "1"))
            for (double b : reals(o.beta, "0")) {
                const auto ks = o.k.empty() ? parse_int_list("0:" + std::to_string(n)) : parse_int_list(o.k);
                for (int k : ks) {
                    if (k > n) continue;
                    add_bound_row(out, check_biangle_bound(n, k, a, b, 101, 1e-12), {I64(n), I64(k), a, b});
                }
            }
}

void verify_fm(const Options& o, Outcome& out) {
    out.rec.columns = {"m", "alpha", "max_abs", "rhs", "x0", "f_x0", "x0_below", "pass"};
    for (int m : ints(o.m, "1:10"))
        for (double a : reals(o.alpha, "0")) {
            const auto r = f_m_extremum_check(m, a);
            out.rec.rows.push_back(
                {I64(m), a, r.max_report.supremum, r.max_report.bound, r.x0, r.f_x0, r.x0_below, r.pass});
            if (!r.pass) out.failures.push_back("fm m=" + std::to_string(m) + " alpha=" + format_double(a));
        }
}

void verify_lemma(const Options& o, Outcome& out) {
    out.rec.columns = with_tail({"case", "alpha", "t", "n", "m"});
    for (double a : reals(o.alpha, "0"))
        for (double t : reals(o.t, "1"))
            for (int n : ints(o.n, "0:5"))
                for (int m : ints(o.m, "0:5")) {
                    const auto r = lemma_case_bounds(a, t, n, m, o.tol);
                    add_bound_row(out, r, {r.name, a, t, I64(n), I64(m)});
                }
}

void verify_decay(const Options& o, const std::string& which, Outcome& out) {
    out.rec.columns = with_tail({"check", "alpha", "t", "n", "m"});
    const char* alpha_default = which == "decay_flat" ? "0,1,2" : (which == "decay_hs" ? "0,3.3" : "0,0.5,1,2,5");
    const char* t_default = which == "decay_flat" ? "0.5,2,10" : (which == "decay_hs" ? "0.25,1,4" : "0,0.1,1,10,100");
    for (double a : reals(o.alpha, alpha_default))
        for (double t : reals(o.t, t_default)) {
            BoundReport r;
            if (which == "decay_flat") {
                if (a != std::floor(a)) throw UsageError("decay_flat: alpha must be a nonnegative integer");
                r = check_decay_flat(static_cast<int>(a), t, o.N);
            } else if (which == "decay_hs") {
                r = check_decay_hs(a, t, o.N, o.C > 0.0 ? o.C : kHsConstant);
            } else {
                r = check_decay_sharp(a, t);
            }
            add_bound_row(out, r, {which, a, t, I64(r.arg_n), I64(r.arg_m)});
        }
}

void verify_negative(const Options& o, Outcome& out) {
    out.rec.columns = {"alpha", "x", "lhs", "rhs"};
    const auto v = bern_a0_negative_alpha_search(reals(o.alpha, "-0.9:-0.1:9"), o.xgrid);
    for (const auto& e : v) out.rec.rows.push_back({e.alpha, e.x, e.lhs, e.bound});
    out.rec.add_summary("violations", I64(static_cast<int>(v.size())));
    if (v.empty()) out.failures.push_back("negative: no violation found for alpha < 0");
}

Outcome cmd_verify(const Options& o) {
    Outcome out;
    const std::string& s = o.target;
    static const std::vector<std::string> named{"bernstein_legendre", "bern_a0", "B01", "g_unif1",
                                                "g_unif2",            "g_unif3", "burq"};
    if (std::find(named.begin(), named.end(), s) != named.end()) verify_named(o, parse_named_bound(s), out);
    else if (s == "sonin") verify_sonin(o, out);
    else if (s == "maxima") verify_maxima(o, out);
    else if (s == "binom") verify_binom(o, out);
    else if (s == "wigner") verify_wigner(o, out);
    else if (s == "disk") verify_disk(o, out);
    else if (s == "biangle") verify_biangle(o, out);
    else if (s == "fm") verify_fm(o, out);
    else if (s == "lemma") verify_lemma(o, out);
    else if (s == "decay_flat" || s == "decay_hs" || s == "decay_sharp") verify_decay(o, s, out);
    else if (s == "negative") verify_negative(o, out);
    else throw UsageError("verify: unknown suite '" + s + "'");
    out.rec.add_summary("failures", I64(static_cast<int>(out.failures.size())));
    return out;
}

// ---- norm ----------------------------------------------------------------

WeightSeq make_weight(const Options& o, double alpha) {
    if (o.weight == "unit") return WeightSeq::unit();
    if (o.weight == "sigma") return WeightSeq::sigma(alpha);
    if (o.weight == "table") {
        if (o.weights.empty()) throw UsageError("norm: --weight table needs --weights");
        return WeightSeq::from_table(parse_real_list(o.weights));
    }
    throw UsageError("norm: unknown weight '" + o.weight + "'");
}

Outcome cmd_norm(const Options& o) {
    Outcome out;
    if (o.mode == "flat" || o.mode == "hs" || o.mode == "sharp") {
        verify_decay(o, "decay_" + o.mode, out);
        out.rec.add_summary("failures", I64(static_cast<int>(out.failures.size())));
        return out;
    }
    if (o.mode == "value") {
        out.rec.columns = {"alpha", "t", "norm", "n", "m", "theoretical", "relative_gap"};
        for (double a : reals(o.alpha, "0"))
            for (double t : reals(o.t, "1")) {
                const auto r = weighted_norm(a, t, make_weight(o, a), o.N);
                out.rec.rows.push_back({a, t, r.norm, I64(r.n), I64(r.m), r.theoretical, r.relative_gap});
            }
        return out;
    }
    if (o.mode == "slope") {
        out.rec.columns = {"alpha", "t", "norm", "in_fit"};
        for (double a : reals(o.alpha, "0")) {
            const auto fit = decay_slope_fit(a, make_weight(o, a), o.t_lo, o.t_hi, o.samples, o.N);
            for (std::size_t i = 0; i < fit.ts.size(); ++i)
                out.rec.rows.push_back({a, fit.ts[i], fit.norms[i], i > 0 && i + 1 < fit.ts.size()});
            out.rec.add_summary("slope@alpha=" + format_double(a), fit.slope);
        }
        return out;
    }
    if (o.mode == "etanu") {
        out.rec.columns = {"alpha", "eta", "nu", "C", "n", "m", "x"};
        const auto xs = scan::chebyshev_grid(o.xgrid);
        for (double a : reals(o.alpha, "0")) {
            const auto r = eta_nu_scan(a, o.eta, o.nu, make_weight(o, a), o.nmax < 0 ? 50 : o.nmax, xs);
            out.rec.rows.push_back({a, o.eta, o.nu, r.C, I64(r.n), I64(r.m), r.x});
        }
        return out;
    }
    throw UsageError("norm: unknown mode '" + o.mode + "'");
}

// ---- explore -------------------------------------------------------------

Outcome cmd_explore(const Options& o) {
    Outcome out;
    const std::string& topic = o.target;
    if (topic == "emn") {
        out.rec.columns = {"n", "alpha", "beta", "ratio", "arg_x"};
        double worst = -1.0;
        for (int n : ints(o.n, "0:50:10"))
            for (double a : reals(o.alpha, "-0.5,0,1,4"))
                for (double b : reals(o.beta, "-0.5,0,1,4")) {
                    const auto r = emn_scan(n, {a, b}, o.grid);
                    out.rec.rows.push_back({I64(n), a, b, r.supremum, r.argmax});
                    worst = std::max(worst, r.supremum);
                }
        out.rec.add_summary("worst_ratio", worst);
    } else if (topic == "gunif") {
        out.rec.columns = {"n", "alpha", "beta", "max_abs_g", "unif2_rhs", "ratio_unif1", "ratio_unif2"};
        double worst1 = 0.0, worst2 = 0.0;
        const BoundOptions opt{o.grid, true, 0.0, o.tol};
        for (int n : ints(o.n, "0:50"))
            for (double a : reals(o.alpha, "1.3"))
                for (double b : reals(o.beta, "2.7")) {
                    const auto r = check_named_bound(NamedBound::g_unif2, n, {a, b}, opt);
                    out.rec.rows.push_back({I64(n), a, b, r.supremum, r.bound, r.supremum, r.supremum / r.bound});
                    worst1 = std::max(worst1, r.supremum);
                    worst2 = std::max(worst2, r.supremum / r.bound);
                }
        out.rec.add_summary("worst_unif1", worst1);
        out.rec.add_summary("worst_unif2", worst2);
    } else if (topic == "subzero") {
        out.rec.columns = {"alpha", "t", "norm", "n", "m", "scaled"};
        for (double a : reals(o.alpha, "-0.5"))
            for (double t : reals(o.t, "1,2,5,10,20,50,100")) {
                const auto r = window_norm(a, t, WeightSeq::unit(), o.N);
                const double scaled = r.norm * std::exp(0.5 * (1.0 + a) * std::log1p(t * t));
                out.rec.rows.push_back({a, t, r.norm, I64(r.n), I64(r.m), scaled});
            }
    } else if (topic == "burq") {
        out.rec.columns = {"m", "n", "supremum", "ratio"};
        double worst = 0.0;
        const BoundOptions opt{o.grid, true, 1.0, o.tol};
        for (int m : ints(o.m, "0:5"))
            for (int n : ints(o.n, "0:60")) {
                const auto r = check_named_bound(NamedBound::burq, n, {static_cast<double>(m), 0.0}, opt);
                out.rec.rows.push_back({I64(m), I64(n), r.supremum, r.supremum / r.bound});
                worst = std::max(worst, r.supremum / r.bound);
            }
        out.rec.add_summary("worst_ratio", worst);
    } else {
        throw UsageError("explore: unknown topic '" + topic + "'");
    }
    return out;
}

const char* kFooter = R"(CSV columns (stable, append-only):
  eval     family,n,alpha,beta,x,value
  kernel   alpha,n,m,t,re,im,modulus[,diff]
  verify   <bound> bound,n,alpha,beta,supremum,arg_x,rhs,slack,pass,exploratory
           sonin   n,alpha,beta,x0,x1,x2,lambda_n,x2_limit,ordered,x1_le_x2,exploratory
           maxima  n,alpha,beta,maxima,holds,detail
           binom   x,y,lhs,rhs,slack,pass
           wigner  two_l,theta,defect,pass
           disk    alpha,m,n,samples,max_residual,pass
           biangle n,k,alpha,beta,supremum,arg_x,rhs,slack,pass,exploratory
           fm      m,alpha,max_abs,rhs,x0,f_x0,x0_below,pass
           lemma   case,alpha,t,n,m,supremum,arg_x,rhs,slack,pass,exploratory
           decay_* check,alpha,t,n,m,supremum,arg_x,rhs,slack,pass,exploratory
           negative alpha,x,lhs,rhs
  norm     value: alpha,t,norm,n,m,theoretical,relative_gap
           slope: alpha,t,norm,in_fit   etanu: alpha,eta,nu,C,n,m,x
  explore  emn: n,alpha,beta,ratio,arg_x   gunif: n,alpha,beta,max_abs_g,unif2_rhs,ratio_unif1,ratio_unif2
           subzero: alpha,t,norm,n,m,scaled   burq: m,n,supremum,ratio
The first CSV line is '#'-prefixed provenance; trailing '#' lines hold the summary.
Lists: comma separated; integers accept a:b and a:b:step, reals accept lo:hi:count.
Exit codes: 0 ok, 1 asserted bound failed, 2 usage error, 3 accuracy failure.)";

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    Options o;
    CLI::App app{"Discrete Laguerre evolution kernels, Jacobi polynomial bounds and dispersive decay."};
    app.name("lagdisp");
    app.footer(kFooter);
    app.option_defaults()->always_capture_default();
    app.set_config("--config", "", "key=value file presetting any flag (command line wins)");
    app.require_subcommand(1, 1);

    auto* eval = app.add_subcommand("eval", "Evaluate a polynomial family at points")->fallthrough();
    auto* kernel = app.add_subcommand("kernel", "Evolution kernel entries by a chosen path")->fallthrough();
    auto* verify = app.add_subcommand("verify", "Run an inequality suite; exit 1 on asserted failure")->fallthrough();
    auto* norm = app.add_subcommand("norm", "Weighted norms, decay checks, slope fits, eta-nu scans")->fallthrough();
    auto* explore = app.add_subcommand("explore", "Conjecture scans; never fail")->fallthrough();
    verify->add_option("suite", o.target,
                       "bernstein_legendre|bern_a0|B01|g_unif1|g_unif2|g_unif3|burq|sonin|maxima|binom|wigner|disk|"
                       "biangle|fm|lemma|decay_flat|decay_hs|decay_sharp|negative")
        ->required();
    explore->add_option("topic", o.target, "emn|gunif|subzero|burq")->required();

    app.add_option("--format", o.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", o.out, "output file (default stdout)");
    app.add_option("--tol", o.tol, "slack tolerance for bound checks")->check(CLI::PositiveNumber);
    app.add_option("--threads", o.threads, "OpenMP threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", o.seed, "seed for random angle samples");
    app.add_option("--family", o.family, "eval: jacobi|laguerre|meixner|gegenbauer|legendre|g|R");
    app.add_option("--n", o.n, "degree / row index list");
    app.add_option("--m", o.m, "column index list (kernel, lemma, disk, fm)");
    app.add_option("--k", o.k, "biangle k list");
    app.add_option("--alpha", o.alpha, "alpha list");
    app.add_option("--beta", o.beta, "beta list");
    app.add_option("--t", o.t, "time list");
    app.add_option("--x", o.x, "point list");
    app.add_option("--y", o.y, "binom y list");
    app.add_option("--theta", o.theta, "wigner theta list");
    app.add_option("--two-l", o.two_l, "wigner doubled l list");
    app.add_option("--c", o.c, "meixner parameter c");
    app.add_option("--lambda", o.lambda, "gegenbauer parameter");
    app.add_option("--path", o.path, "kernel: closed|meixner|matexp|quadrature|convolution");
    app.add_option("--compare", o.compare, "kernel: two paths, e.g. closed matexp")->expected(1, 2);
    app.add_option("--trunc", o.trunc, "matexp truncation size");
    app.add_option("--window", o.window, "convolution integration window");
    app.add_option("--nmax", o.nmax, "kernel block size / eta-nu index bound");
    app.add_option("--grid", o.grid, "sup-scan grid points");
    app.add_flag("--grid-default", o.grid_default, "verify: built-in parameter grid");
    app.add_option("--C", o.C, "constant for g_unif3, burq, decay_hs (0 = default)");
    app.add_option("--N", o.N, "norm window");
    app.add_option("--weight", o.weight, "unit|sigma|table");
    app.add_option("--weights", o.weights, "weight table for --weight table");
    app.add_option("--mode", o.mode, "norm: value|slope|etanu|flat|hs|sharp");
    app.add_option("--eta", o.eta, "eta-nu scan eta");
    app.add_option("--nu", o.nu, "eta-nu scan nu");
    app.add_option("--t-lo", o.t_lo, "slope fit lower t");
    app.add_option("--t-hi", o.t_hi, "slope fit upper t");
    app.add_option("--samples", o.samples, "slope samples / disk samples");
    app.add_option("--xgrid", o.xgrid, "x grid size for negative and eta-nu scans");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Outcome res;
    try {
        omp_set_num_threads(o.threads);
        if (*eval) res = cmd_eval(o);
        else if (*kernel) res = cmd_kernel(o);
        else if (*verify) res = cmd_verify(o);
        else if (*norm) res = cmd_norm(o);
        else res = cmd_explore(o);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "parameter error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const AccuracyError& e) {
        err << "accuracy failure: " << e.what() << " (achieved " << format_double(e.achieved()) << ")\n";
        return kExitAccuracy;
    } catch (const InternalError& e) {
        err << "consistency failure: " << e.what() << "\n";
        return kExitAccuracy;
    }

    auto* sub = app.get_subcommands().front();
    res.rec.command = sub->get_name();
    if (!o.target.empty()) res.rec.add_input(*verify ? "suite" : "topic", o.target);
    for (const auto* opt : app.get_options()) {
        const std::string name = opt->get_single_name();
        if (name == "help" || name == "config" || name == "threads" || name == "out") continue;
        std::string value;
        if (opt->count() > 0) {
            for (const auto& s : opt->results()) value += (value.empty() ? "" : ",") + s;
        } else {
            value = opt->get_default_str();
        }
        if (!value.empty() && value != "{}") res.rec.add_input(name, value);
    }

    const std::string text = o.format == "json" ? to_json(res.rec) : to_csv(res.rec);
    if (o.out.empty()) {
        out << text;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) {
            err << "usage error: cannot write " << o.out << "\n";
            return kExitUsage;
        }
        f << text;
    }
    for (const auto& f : res.failures) err << "FAILED " << f << "\n";
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    err << "wall time " << format_double(secs) << " s\n";
    return res.failures.empty() ? kExitOk : kExitBoundFailed;
}

}  // namespace lagdisp
