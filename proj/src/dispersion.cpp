// SPDX-License-Identifier: Apache-2.0
#include "lagdisp/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lagdisp/errors.hpp"
#include "lagdisp/evolution.hpp"
#include "lagdisp/scan.hpp"
#include "lagdisp/special_fn.hpp"

namespace lagdisp {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

scan::WindowSpec kernel_window(double alpha, double t, const WeightSeq& w, int N) {
    scan::WindowSpec s;
    s.alpha = alpha;
    s.u = 1.0 / (1.0 + t * t);
    s.v = t * t / (1.0 + t * t);
    s.N = N;
    s.log_w = w.log_table(N);
    return s;
}

double theoretical_norm(double alpha, double t, const WeightSeq& w) {
    if (w.kind == WeightSeq::Kind::sigma_alpha && w.alpha == alpha && alpha >= 0.0)
        return std::exp(-0.5 * (1.0 + alpha) * std::log1p(t * t));
    if (w.kind == WeightSeq::Kind::unit && alpha == 0.0) return 1.0 / std::sqrt(1.0 + t * t);
    return kNaN;
}

}  // namespace

double sigma_alpha(int n, double alpha) {
    if (!(alpha > -1.0)) throw DomainError("sigma_alpha: requires alpha > -1");
    if (n < 0) throw DomainError("sigma_alpha: negative index");
    return std::exp(0.5 * scan::log_binom_table(alpha, n)[n]);
}

WeightSeq WeightSeq::from_table(std::vector<double> w) {
    for (double v : w)
        if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("WeightSeq: weights must be positive and finite");
    return {Kind::table, 0.0, std::move(w)};
}

double WeightSeq::log_at(int n) const {
    switch (kind) {
        case Kind::unit: return 0.0;
        case Kind::sigma_alpha: return std::log(sigma_alpha(n, alpha));
        case Kind::table:
            if (n < 0 || n >= static_cast<int>(table.size())) throw UsageError("WeightSeq: index beyond the table");
            return std::log(table[n]);
    }
    return 0.0;
}

std::vector<double> WeightSeq::log_table(int N) const {
    switch (kind) {
        case Kind::unit: return {};
        case Kind::sigma_alpha: {
            if (!(alpha > -1.0)) throw DomainError("sigma_alpha: requires alpha > -1");
            auto lb = scan::log_binom_table(alpha, N);
            for (auto& v : lb) v *= 0.5;
            return lb;
        }
        case Kind::table: {
            if (static_cast<int>(table.size()) < N + 1) throw UsageError("WeightSeq: table shorter than the window");
            std::vector<double> out(N + 1);
            for (int k = 0; k <= N; ++k) out[k] = std::log(table[k]);
            return out;
        }
    }
    return {};
}

NormResult window_norm(double alpha, double t, const WeightSeq& w, int N) {
    if (!(alpha > -1.0)) throw DomainError("window_norm: requires alpha > -1");
    if (N < 0) throw UsageError("window_norm: negative window");
    const auto best = scan::omp::window_max(kernel_window(alpha, t, w, N));
    NormResult r;
    r.t = t;
    r.norm = std::exp(best.log_value);
    r.n = best.n;
    r.m = best.m;
    r.theoretical = theoretical_norm(alpha, t, w);
    r.relative_gap = (r.norm - r.theoretical) / r.theoretical;
    return r;
}

NormResult weighted_norm(double alpha, double t, const WeightSeq& w, int N) {
    if (N < 64) throw UsageError("weighted_norm: window must be at least 64");
    const auto a = window_norm(alpha, t, w, N);
    const auto b = window_norm(alpha, t, w, 2 * N);
    const double drift = std::abs(b.norm - a.norm) / std::max(a.norm, std::numeric_limits<double>::min());
    if (drift > 1e-12) throw AccuracyError("weighted_norm: supremum moved between windows N and 2N", drift);
    return a;
}

BoundReport check_decay_flat(int alpha, double t, int N) {
    if (alpha < 0) throw DomainError("check_decay_flat: requires alpha in N_0");
    const auto r = window_norm(alpha, t, WeightSeq::unit(), N);
    BoundReport rep;
    rep.name = "decay_flat";
    rep.supremum = r.norm;
    rep.arg_n = r.n;
    rep.arg_m = r.m;
    rep.bound = 1.0 / std::sqrt(1.0 + t * t);
    rep.slack = rep.bound - r.norm;
    rep.pass = rep.slack >= -1e-12;
    if (alpha == 0) rep.pass = rep.pass && std::abs(rep.slack) <= 1e-12;
    return rep;
}

BoundReport check_decay_hs(double alpha, double t, int N, double C) {
    if (!(alpha >= 0.0)) throw DomainError("check_decay_hs: requires alpha >= 0");
    if (t == 0.0) throw DomainError("check_decay_hs: requires t != 0");
    const scan::CellExtra extra{scan::CellExtra::Kind::hs, alpha};
    const auto best = scan::omp::window_max(kernel_window(alpha, t, WeightSeq::unit(), N), extra);
    BoundReport rep;
    rep.name = "decay_hs";
    rep.supremum = std::exp(best.log_value);
    rep.arg_n = best.n;
    rep.arg_m = best.m;
    rep.bound = C / std::sqrt(std::abs(t));
    rep.slack = rep.bound - rep.supremum;
    rep.pass = within_tolerance(rep.slack, rep.bound, 1e-9);
    return rep;
}

BoundReport check_decay_sharp(double alpha, double t, double rel_tol) {
    if (!(alpha >= 0.0)) throw DomainError("check_decay_sharp: requires alpha >= 0");
    const auto r = weighted_norm(alpha, t, WeightSeq::sigma(alpha));
    BoundReport rep;
    rep.name = "decay_sharp";
    rep.supremum = r.norm;
    rep.arg_n = r.n;
    rep.arg_m = r.m;
    rep.bound = r.theoretical;
    rep.slack = rep.bound - r.norm;
    rep.pass = std::abs(r.relative_gap) <= rel_tol && r.n == 0 && r.m == 0;
    return rep;
}

BoundReport lemma_case_bounds(double alpha, double t, int n, int m, double tol) {
    if (!(alpha > -1.0)) throw DomainError("lemma_case_bounds: requires alpha > -1");
    if (n < 0 || m < 0) throw DomainError("lemma_case_bounds: negative index");
    const double sn = sigma_alpha(n, alpha), sm = sigma_alpha(m, alpha);
    BoundReport rep;
    if (alpha >= std::abs(m - n)) {
        rep.name = "case1";
        rep.bound = sn * sm;
    } else if (m - n >= alpha) {
        rep.name = "case2";
        rep.bound = sm / sn * binom_real(n, m - n);
    } else {
        rep.name = "case3";
        rep.bound = sn / sm * binom_real(m, n - m);
    }
    rep.supremum = std::exp(0.5 * (1.0 + alpha) * std::log1p(t * t) + kernel_log_modulus(alpha, t, n, m));
    rep.arg_n = n;
    rep.arg_m = m;
    rep.slack = rep.bound - rep.supremum;
    rep.pass = within_tolerance(rep.slack, rep.bound, tol);
    return rep;
}

EtaNuResult eta_nu_scan(double alpha, double eta, double nu, const WeightSeq& w, int n_max,
                        const std::vector<double>& xs) {
    if (!(alpha > -1.0)) throw DomainError("eta_nu_scan: requires alpha > -1");
    if (!(eta >= 0.0 && eta <= 1.0 + alpha)) throw DomainError("eta_nu_scan: eta outside [0, 1+alpha]");
    if (!(nu >= 0.0)) throw DomainError("eta_nu_scan: nu must be nonnegative");
    if (n_max < 0) throw UsageError("eta_nu_scan: negative n_max");
    if (xs.empty()) throw UsageError("eta_nu_scan: empty x grid");
    for (double x : xs)
        if (!(x >= -1.0 && x <= 1.0)) throw DomainError("eta_nu_scan: x outside [-1, 1]");
    const auto log_w = w.log_table(n_max);
    const long count = static_cast<long>(xs.size());
    std::vector<scan::WindowMax> per_x(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
        scan::WindowSpec s;
        s.alpha = alpha;
        s.u = 0.5 * (1.0 - xs[i]);
        s.v = 0.5 * (1.0 + xs[i]);
        s.eta = eta;
        s.nu = nu;
        s.N = n_max;
        s.log_w = log_w;
        per_x[i] = scan::serial::window_max(s);
    }
    EtaNuResult out;
    double best = -std::numeric_limits<double>::infinity();
    for (long i = 0; i < count; ++i) {
        if (per_x[i].log_value > best) {
            best = per_x[i].log_value;
            out = {0.0, per_x[i].n, per_x[i].m, xs[i]};
        }
    }
    out.C = std::exp(best);
    return out;
}

SlopeFit decay_slope_fit(double alpha, const WeightSeq& w, double t_lo, double t_hi, int samples, int N) {
    if (!(t_lo >= 10.0 && t_hi <= 1000.0 && t_lo < t_hi)) throw UsageError("decay_slope_fit: t range must lie in [10, 1000]");
    if (samples < 8) throw UsageError("decay_slope_fit: needs at least 8 samples");
    SlopeFit fit;
    const double l0 = std::log(t_lo), l1 = std::log(t_hi);
    for (int i = 0; i < samples; ++i) {
        const double t = std::exp(l0 + (l1 - l0) * i / (samples - 1));
        const auto r = weighted_norm(alpha, t, w, N);
        if (!(r.norm > 0.0)) throw InternalError("decay_slope_fit: nonpositive norm");
        fit.ts.push_back(t);
        fit.norms.push_back(r.norm);
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int k = samples - 2;
    for (int i = 1; i + 1 < samples; ++i) {
        const double x = std::log(fit.ts[i]), y = std::log(fit.norms[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    fit.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / k;
    return fit;
}

}  // namespace lagdisp
