// SPDX-License-Identifier: Apache-2.0
//
// Globally adaptive 7/15-point Gauss–Kronrod integration on a finite interval.
// Node constants come from Boost.Math; the subdivision driver is ours so that
// complex-valued integrands and a deterministic refinement order are supported.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace lagdisp::detail {

template <class T>
struct QuadResult {
    T value{};
    double error = 0.0;
    bool converged = false;
};

template <class T>
struct GkPanel {
    double a, b;
    T value;
    double error;
};

template <class T, class F>
GkPanel<T> gk15_panel(F&& f, double a, double b) {
    using gk = boost::math::quadrature::gauss_kronrod<double, 15>;
    using gl = boost::math::quadrature::gauss<double, 7>;
    const auto& xk = gk::abscissa();
    const auto& wk = gk::weights();
    const auto& wg = gl::weights();

    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    T f0 = f(mid);
    T kron = wk[0] * f0;
    T gauss = wg[0] * f0;
    for (std::size_t i = 1; i < xk.size(); ++i) {
        const double dx = half * xk[i];
        T pair = f(mid - dx) + f(mid + dx);
        kron += wk[i] * pair;
        // even Kronrod indices are the embedded Gauss nodes
        if (i % 2 == 0) gauss += wg[i / 2] * pair;
    }
    kron *= half;
    gauss *= half;
    return {a, b, kron, std::abs(kron - gauss)};
}

/// Integrate f over [a, b] until the summed panel error is below
/// max(rel_tol * |I|, abs_tol) or max_panels is reached.
template <class T, class F>
QuadResult<T> integrate_adaptive(F&& f, double a, double b, double rel_tol,
                                 double abs_tol = 0.0, std::size_t max_panels = 4000) {
    std::vector<GkPanel<T>> panels;
    panels.reserve(64);
    panels.push_back(gk15_panel<T>(f, a, b));

    auto totals = [&](T& sum, double& err) {
        sum = T{};
        err = 0.0;
        for (const auto& p : panels) {
            sum += p.value;
            err += p.error;
        }
    };

    T sum;
    double err;
    totals(sum, err);
    while (err > std::max(rel_tol * std::abs(sum), abs_tol)) {
        if (panels.size() >= max_panels) return {sum, err, false};
        auto worst = std::max_element(panels.begin(), panels.end(),
                                      [](const auto& l, const auto& r) { return l.error < r.error; });
        const double lo = worst->a, hi = worst->b, mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) return {sum, err, false};
        *worst = gk15_panel<T>(f, lo, mid);
        panels.push_back(gk15_panel<T>(f, mid, hi));
        totals(sum, err);
    }
    return {sum, err, true};
}

}  // namespace lagdisp::detail
