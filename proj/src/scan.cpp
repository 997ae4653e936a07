// SPDX-License-Identifier: Apache-2.0
#include "lagdisp/scan.hpp"

#include <numbers>

#include "lagdisp/errors.hpp"
#include "lagdisp/polynomials.hpp"

namespace lagdisp::scan {

ArgMax first_max(const std::vector<double>& values) {
    ArgMax best;
    bool found = false;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (std::isnan(values[i])) continue;
        if (!found || values[i] > best.value) {
            best = {values[i], i};
            found = true;
        }
    }
    return best;
}

std::vector<double> chebyshev_grid(int count) {
    if (count < 2) throw DomainError("chebyshev_grid: need at least two points");
    std::vector<double> xs(count);
    for (int j = 0; j < count; ++j) xs[j] = -std::cos(std::numbers::pi * j / (count - 1));
    xs.front() = -1.0;
    xs.back() = 1.0;
    if (count % 2) xs[count / 2] = 0.0;
    return xs;
}

std::vector<double> log_binom_table(double alpha, int N) {
    std::vector<double> lb(N + 1, 0.0);
    for (int k = 1; k <= N; ++k) lb[k] = lb[k - 1] + std::log1p(alpha / k);
    return lb;
}

namespace {

// c * ln(x) with 0 * ln 0 = 0
double scaled_log(double c, double x) {
    if (c == 0.0) return 0.0;
    if (x == 0.0) return c > 0.0 ? -std::numeric_limits<double>::infinity() : std::numeric_limits<double>::infinity();
    return c * std::log(x);
}

void check_spec(const WindowSpec& spec) {
    if (spec.N < 0) throw DomainError("window_max: negative window");
    if (!spec.log_w.empty() && static_cast<int>(spec.log_w.size()) < spec.N + 1)
        throw UsageError("window_max: weight table shorter than the window");
}

}  // namespace

WindowMax diagonal_max(const WindowSpec& spec, const std::vector<double>& log_binom, int d, const CellExtra& extra) {
    WindowMax best;
    best.n = 0;
    best.m = d;
    const int len = spec.N - d;
    if (len < 0) return best;
    std::vector<double> lp;
    std::vector<int> sg;
    jacobi_log_column(len, spec.alpha, static_cast<double>(d), spec.u, lp, sg);
    const double head =
        scaled_log(0.5 * (1.0 + spec.alpha - spec.eta), spec.u) + scaled_log(0.5 * (d + spec.nu), spec.v);
    bool found = false;
    for (int n = 0; n <= len; ++n) {
        const int m = n + d;
        double val = head + lp[n] + 0.5 * (log_binom[m] - log_binom[n]) + extra(n, m);
        if (!spec.log_w.empty()) val -= spec.log_w[n] + spec.log_w[m];
        if (std::isnan(val)) continue;
        if (!found || val > best.log_value) {
            best = {val, n, m};
            found = true;
        }
    }
    return best;
}

namespace {

WindowMax reduce(const std::vector<WindowMax>& per_d) {
    WindowMax best;
    bool found = false;
    for (const auto& c : per_d) {
        if (!found || c.log_value > best.log_value) {
            best = c;
            found = true;
        }
    }
    return best;
}

}  // namespace

namespace serial {
WindowMax window_max(const WindowSpec& spec, const CellExtra& extra) {
    check_spec(spec);
    const auto lb = log_binom_table(spec.alpha, spec.N);
    std::vector<WindowMax> per_d(spec.N + 1);
    for (int d = 0; d <= spec.N; ++d) per_d[d] = diagonal_max(spec, lb, d, extra);
    return reduce(per_d);
}
}  // namespace serial

namespace omp {
WindowMax window_max(const WindowSpec& spec, const CellExtra& extra) {
    check_spec(spec);
    const auto lb = log_binom_table(spec.alpha, spec.N);
    std::vector<WindowMax> per_d(spec.N + 1);
    // diagonal lengths shrink with d; dynamic chunks keep threads busy
#pragma omp parallel for schedule(dynamic, 4)
    for (int d = 0; d <= spec.N; ++d) per_d[d] = diagonal_max(spec, lb, d, extra);
    return reduce(per_d);
}
}  // namespace omp

}  // namespace lagdisp::scan
