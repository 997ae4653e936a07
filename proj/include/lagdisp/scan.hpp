// SPDX-License-Identifier: Apache-2.0
//
// Max-reductions over grids and (n, m) windows. Every kernel exists twice:
// `serial` is the reference, `omp` evaluates cells in parallel into a buffer
// and then reduces serially, so both return bit-identical results at any
// thread count. Ties go to the first index.
#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace lagdisp::scan {

struct ArgMax {
    double value = -std::numeric_limits<double>::infinity();
    std::size_t index = 0;
};

/// First maximum of values[0..count); NaN entries are skipped.
ArgMax first_max(const std::vector<double>& values);

/// Chebyshev–Lobatto points -cos(pi j/(count-1)), ascending, endpoints included.
std::vector<double> chebyshev_grid(int count);

/// One cell family of the (n, m) window, n <= m <= N:
///   log value(n, m) = (1+a-eta)/2 ln u + (m-n+nu)/2 ln v
///                     + ln|P_n^{(a, m-n)}(1-2u)| + (ln B(m) - ln B(n))/2
///                     - log_w[n] - log_w[m] + extra(n, m),
/// with B(k) = binom(k+a, k) and v = 1-u passed separately for accuracy.
/// With eta = nu = 0, u = 1/(1+t^2) this is ln of |K(n,m)| / (w(n) w(m)).
struct WindowSpec {
    double alpha = 0.0;
    double u = 1.0;
    double v = 0.0;
    double eta = 0.0;
    double nu = 0.0;
    int N = 0;
    std::vector<double> log_w;  ///< N+1 entries (empty means unit weights)
};

struct WindowMax {
    double log_value = -std::numeric_limits<double>::infinity();
    int n = 0;
    int m = 0;
};

/// Per-cell additive log term; identity when absent.
struct CellExtra {
    enum class Kind { none, hs } kind = Kind::none;
    double alpha = 0.0;  ///< hs: + ln((n+m+a+1)^{1/4})
    double operator()(int n, int m) const {
        return kind == Kind::hs ? 0.25 * std::log(n + m + alpha + 1.0) : 0.0;
    }
};

/// Best cell on the diagonal m - n = d (first n on ties).
WindowMax diagonal_max(const WindowSpec& spec, const std::vector<double>& log_binom, int d, const CellExtra& extra);

/// ln binom(k+a, k) for k = 0..N as a running sum of log1p(a/j).
std::vector<double> log_binom_table(double alpha, int N);

namespace serial {
WindowMax window_max(const WindowSpec& spec, const CellExtra& extra = {});
template <class F>
ArgMax grid_max(const std::vector<double>& xs, F&& f) {
    std::vector<double> vals(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) vals[i] = f(xs[i]);
    return first_max(vals);
}
}  // namespace serial

namespace omp {
WindowMax window_max(const WindowSpec& spec, const CellExtra& extra = {});
template <class F>
std::vector<double> grid_values(const std::vector<double>& xs, F&& f) {
    std::vector<double> vals(xs.size());
    const long count = static_cast<long>(xs.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < count; ++i) vals[i] = f(xs[i]);
    return vals;
}
template <class F>
ArgMax grid_max(const std::vector<double>& xs, F&& f) {
    return first_max(grid_values(xs, f));
}
}  // namespace omp

}  // namespace lagdisp::scan
