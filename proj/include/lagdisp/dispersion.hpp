// SPDX-License-Identifier: Apache-2.0
//
// Weighted l1 -> l-infinity norms of the evolution group, the sigma_alpha
// weights, the decay checks built on them, and the eta-nu family scan.
#pragma once

#include <vector>

#include "lagdisp/report.hpp"

namespace lagdisp {

/// sqrt(binom(n+a, n)), a > -1.
double sigma_alpha(int n, double alpha);

struct WeightSeq {
    enum class Kind { unit, sigma_alpha, table };
    Kind kind = Kind::unit;
    double alpha = 0.0;
    std::vector<double> table;  ///< strictly positive entries (Kind::table)

    static WeightSeq unit() { return {}; }
    static WeightSeq sigma(double a) { return {Kind::sigma_alpha, a, {}}; }
    static WeightSeq from_table(std::vector<double> w);

    double log_at(int n) const;
    /// ln w(0..N); empty for unit weights. Throws UsageError if a table is too short.
    std::vector<double> log_table(int N) const;
};

struct NormResult {
    double t = 0.0;
    double norm = 0.0;
    int n = 0;
    int m = 0;
    double theoretical;   ///< NaN when no theorem pins the value
    double relative_gap;  ///< (norm - theoretical) / theoretical, NaN likewise
};

/// max over 0 <= n, m <= N of |K(n, m)| / (w(n) w(m)) on a single window.
NormResult window_norm(double alpha, double t, const WeightSeq& w, int N);

/// window_norm on N and 2N; AccuracyError when they differ by more than
/// 1e-12 relative. N >= 64.
NormResult weighted_norm(double alpha, double t, const WeightSeq& w, int N = 256);

/// Unit-weight window norm (N = 256) against (1+t^2)^{-1/2}; for a = 0
/// equality within 1e-12 is also required.
BoundReport check_decay_flat(int alpha, double t, int N = 256);

/// max |K(n,m)| (n+m+a+1)^{1/4} over the window against C |t|^{-1/2}.
inline constexpr double kHsConstant = 8.48528137423857;  // 6 sqrt 2
BoundReport check_decay_hs(double alpha, double t, int N = 256, double C = kHsConstant);

/// sigma_a-weighted norm equals (1+t^2)^{-(1+a)/2} within rel_tol, argmax (0,0).
BoundReport check_decay_sharp(double alpha, double t, double rel_tol = 1e-10);

/// (1+t^2)^{(1+a)/2} |K(n,m)| against the first applicable case:
/// case1 a >= |m-n|, case2 m-n >= a, case3 n-m >= a. The case is the report name.
BoundReport lemma_case_bounds(double alpha, double t, int n, int m, double tol = 1e-9);

struct EtaNuResult {
    double C = 0.0;
    int n = 0;
    int m = 0;
    double x = 0.0;
};

/// sup over n <= m <= n_max and x in xs of
///   ((1-x)/2)^{(1+a-eta)/2} ((1+x)/2)^{(m-n+nu)/2} |P_n^{(a,m-n)}(x)|
///   / (w(n) w(m) sqrt((a+1)_n m! / ((a+1)_m n!))).
EtaNuResult eta_nu_scan(double alpha, double eta, double nu, const WeightSeq& w, int n_max,
                        const std::vector<double>& xs);

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    std::vector<double> ts;
    std::vector<double> norms;
};

/// Least-squares slope of ln(norm) against ln(t) on a log grid of `samples`
/// points in [t_lo, t_hi] within [10, 1000]; the two endpoints are excluded from the fit.
SlopeFit decay_slope_fit(double alpha, const WeightSeq& w, double t_lo = 10.0, double t_hi = 1000.0,
                         int samples = 16, int N = 256);

}  // namespace lagdisp
