// SPDX-License-Identifier: Apache-2.0
#include "lagdisp/special_fn.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "lagdisp/detail/adaptive_quad.hpp"
#include "lagdisp/errors.hpp"

namespace lagdisp {

namespace {
constexpr int kProductThreshold = 64;
}

double log_abs_gamma(double x, int* sign) {
    int s = 1;
    const double v = ::lgamma_r(x, &s);
    if (sign) *sign = s;
    return v;
}

double log_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("log_gamma: argument must be finite and positive");
    return log_abs_gamma(x, nullptr);
}

double pochhammer(double x, int n) {
    if (n < 0) throw DomainError("pochhammer: negative n");
    if (n == 0) return 1.0;
    if (n <= kProductThreshold) {
        double p = 1.0;
        for (int k = 0; k < n; ++k) p *= x + k;
        return p;
    }
    // Γ(x+n)/Γ(x); a vanishing factor makes the whole product zero.
    int negatives = 0;
    for (int k = 0; k < n; ++k) {
        const double f = x + k;
        if (f == 0.0) return 0.0;
        if (f < 0.0) ++negatives;
        else break;
    }
    const double mag = std::exp(log_abs_gamma(x + n, nullptr) - log_abs_gamma(x, nullptr));
    return (negatives % 2) ? -mag : mag;
}

Saturating binom_real_checked(double x, int n) {
    if (!(x > -1.0)) throw DomainError("binom_real: requires x > -1");
    if (n < 0) throw DomainError("binom_real: negative n");
    if (n <= kProductThreshold) {
        double p = 1.0;
        for (int k = 1; k <= n; ++k) p *= (x + k) / k;
        return {p, std::isinf(p)};
    }
    const double lg = log_gamma(x + n + 1.0) - log_gamma(x + 1.0) - log_gamma(n + 1.0);
    if (lg > std::log(std::numeric_limits<double>::max()))
        return {std::numeric_limits<double>::infinity(), true};
    return {std::exp(lg), false};
}

double binom_real(double x, int n) { return binom_real_checked(x, n).value; }

double binom_gamma(double top, double bottom) {
    if (!(bottom >= 0.0) || !(top >= bottom)) throw DomainError("binom_gamma: requires top >= bottom >= 0");
    return std::exp(log_gamma(top + 1.0) - log_gamma(bottom + 1.0) - log_gamma(top - bottom + 1.0));
}

double log_binom_ratio(double x, int n, int m) {
    if (!(x > -1.0)) throw DomainError("log_binom_ratio: requires x > -1");
    if (n < 0 || m < 0) throw DomainError("log_binom_ratio: negative index");
    if (m < n) return -log_binom_ratio(x, m, n);
    if (m - n > 4096) {
        return (log_gamma(m + x + 1.0) - log_gamma(m + 1.0)) - (log_gamma(n + x + 1.0) - log_gamma(n + 1.0));
    }
    double s = 0.0;
    for (int j = n; j < m; ++j) s += std::log1p(x / (j + 1.0));
    return s;
}

cplx gen_exp_integral(double p, cplx z, double rel_tol) {
    if (!(p > 0.0)) throw DomainError("gen_exp_integral: requires p > 0");
    if (z.imag() == 0.0 && z.real() <= 0.0) throw DomainError("gen_exp_integral: z on the branch cut (-inf, 0]");

    const double phi = z.imag() > 0.0 ? std::numbers::pi / 4 : (z.imag() < 0.0 ? -std::numbers::pi / 4 : 0.0);
    const cplx dir = std::polar(1.0, phi);

    // ∫_0^∞ e^{-u d} (z + u d)^{-p} du; the decay rate along the ray is cos φ.
    auto integrand = [&](double u) { return std::exp(-u * dir) * std::pow(z + u * dir, -p); };
    const double upper = 60.0 / std::cos(phi);

    // Geometric panel edges resolve the peak of (z+ud)^{-p} when z is near the origin.
    const double scale = std::max(std::abs(z.imag()), z.real() > 0.0 ? z.real() : std::abs(z.imag()));
    cplx total{};
    double err = 0.0;
    double lo = 0.0;
    double hi = std::min(upper, std::max(scale, 1e-300) * 4.0);
    if (std::abs(z) > 1.0) hi = upper;
    while (true) {
        auto r = detail::integrate_adaptive<cplx>(integrand, lo, hi, rel_tol * 0.1, 0.0, 2000);
        if (!r.converged) throw AccuracyError("gen_exp_integral: quadrature did not converge", r.error);
        total += r.value;
        err += r.error;
        if (hi >= upper) break;
        lo = hi;
        hi = std::min(upper, hi * 4.0);
    }
    if (err > rel_tol * std::abs(total) && err > 0.0)
        throw AccuracyError("gen_exp_integral: accumulated error above target", err / std::abs(total));

    return std::pow(z, p - 1.0) * std::exp(-z) * dir * total;
}

}  // namespace lagdisp
