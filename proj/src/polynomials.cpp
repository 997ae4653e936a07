// SPDX-License-Identifier: Apache-2.0
#include "lagdisp/polynomials.hpp"

#include <cmath>
#include <limits>

#include "lagdisp/errors.hpp"
#include "lagdisp/gauss_rules.hpp"

namespace lagdisp {

namespace {

// binom(a, j) for real a and integer j >= 0, as a falling product.
long double falling_binom(long double a, int j) {
    long double p = 1.0L;
    for (int i = 1; i <= j; ++i) p *= (a - j + i) / i;
    return p;
}

long double jacobi_sum_u(int n, long double alpha, long double beta, long double u) {
    // P_n = sum_k binom(n+a, n-k) binom(n+b, k) (-u)^k (1-u)^{n-k}
    const long double v = 1.0L - u;
    long double total = 0.0L;
    for (int k = 0; k <= n; ++k) {
        long double term = falling_binom(n + alpha, n - k) * falling_binom(n + beta, k);
        term *= std::pow(-u, static_cast<long double>(k)) * std::pow(v, static_cast<long double>(n - k));
        total += term;
    }
    return total;
}

}  // namespace

long double jacobi_P_sum(int n, long double alpha, long double beta, long double x) {
    if (n < 0) throw DomainError("jacobi_P_sum: negative degree");
    return jacobi_sum_u(n, alpha, beta, (1.0L - x) / 2.0L);
}

double jacobi_P_u(int n, double alpha, double beta, double u) {
    if (n < 0) throw DomainError("jacobi_P: negative degree");
    if (n == 0) return 1.0;
    const double s = alpha + beta;
    double p0 = 1.0;
    double p1 = (alpha + 1.0) - (s + 2.0) * u;
    for (int k = 2; k <= n; ++k) {
        const double c = 2.0 * k + s;
        const double den = 2.0 * k * (k + s) * (c - 2.0);
        if (den == 0.0) return static_cast<double>(jacobi_sum_u(n, alpha, beta, u));
        const double d = 4.0 * k * (k - 1) + 2.0 * s * (2.0 * k - 1.0 + alpha);
        const double p2 =
            ((c - 1.0) * (d - 2.0 * c * (c - 2.0) * u) * p1 - 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * c * p0) /
            den;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

void jacobi_log_column(int nmax, double alpha, double beta, double u, std::vector<double>& log_abs,
                       std::vector<int>& sign) {
    if (nmax < 0) throw DomainError("jacobi_log_column: negative degree");
    log_abs.assign(nmax + 1, 0.0);
    sign.assign(nmax + 1, 1);
    auto store = [&](int k, double v, double scale) {
        if (v == 0.0) {
            log_abs[k] = -std::numeric_limits<double>::infinity();
            sign[k] = 0;
        } else {
            log_abs[k] = std::log(std::abs(v)) + scale;
            sign[k] = v > 0.0 ? 1 : -1;
        }
    };
    if (nmax == 0) return;
    const double s = alpha + beta;
    double p0 = 1.0;
    double p1 = (alpha + 1.0) - (s + 2.0) * u;
    double scale = 0.0;
    store(1, p1, scale);
    constexpr double kBig = 0x1p600;
    const double log_big = 600.0 * std::log(2.0);
    for (int k = 2; k <= nmax; ++k) {
        const double c = 2.0 * k + s;
        const double den = 2.0 * k * (k + s) * (c - 2.0);
        double p2;
        if (den == 0.0) {
            p2 = static_cast<double>(jacobi_sum_u(k, alpha, beta, u)) * std::exp(-scale);
        } else {
            const double d = 4.0 * k * (k - 1) + 2.0 * s * (2.0 * k - 1.0 + alpha);
            p2 = ((c - 1.0) * (d - 2.0 * c * (c - 2.0) * u) * p1 -
                  2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * c * p0) /
                 den;
        }
        p0 = p1;
        p1 = p2;
        if (std::abs(p1) > kBig || std::abs(p0) > kBig) {
            p0 /= kBig;
            p1 /= kBig;
            scale += log_big;
        } else if (std::abs(p1) < 1.0 / kBig && std::abs(p0) < 1.0 / kBig && (p0 != 0.0 || p1 != 0.0)) {
            p0 *= kBig;
            p1 *= kBig;
            scale -= log_big;
        }
        store(k, p1, scale);
    }
}

double jacobi_P(int n, double alpha, double beta, double x) { return jacobi_P_u(n, alpha, beta, 0.5 * (1.0 - x)); }

Saturating jacobi_P_checked(int n, double alpha, double beta, double x) {
    const double v = jacobi_P(n, alpha, beta, x);
    return {v, std::isinf(v)};
}

namespace {
template <class T>
T laguerre_impl(int n, double alpha, T z) {
    if (n < 0) throw DomainError("laguerre_L: negative degree");
    T prev{0.0};
    T cur{1.0};
    for (int k = 0; k < n; ++k) {
        T next = ((2.0 * k + 1.0 + alpha - z) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}
}  // namespace

double laguerre_L(int n, double alpha, double z) { return laguerre_impl<double>(n, alpha, z); }

std::complex<double> laguerre_L(int n, double alpha, std::complex<double> z) {
    return laguerre_impl<std::complex<double>>(n, alpha, z);
}

double meixner_M(int n, double x, double beta, double c) {
    if (n < 0) throw DomainError("meixner_M: negative degree");
    if (c == 0.0) throw DomainError("meixner_M: c must be nonzero");
    const long double w = 1.0L - 1.0L / static_cast<long double>(c);
    long double term = 1.0L;
    long double total = 1.0L;
    for (int k = 0; k < n; ++k) {
        const long double num = static_cast<long double>(k - n) * (static_cast<long double>(k) - x);
        if (num == 0.0L) break;
        const long double den = (static_cast<long double>(beta) + k) * (k + 1);
        if (den == 0.0L) throw DomainError("meixner_M: (beta)_k vanishes inside the sum");
        term *= num / den * w;
        total += term;
    }
    return static_cast<double>(total);
}

double gegenbauer_P(int n, double lambda, double x) {
    if (!(lambda > -0.5)) throw DomainError("gegenbauer_P: requires lambda > -1/2");
    const double scale = pochhammer(2.0 * lambda, n) / pochhammer(lambda + 0.5, n);
    if (scale == 0.0) return 0.0;
    return scale * jacobi_P(n, lambda - 0.5, lambda - 0.5, x);
}

double legendre_P(int n, double x) { return jacobi_P(n, 0.0, 0.0, x); }

double jacobi_R(int n, double alpha, double beta, double x) {
    if (!(alpha > -1.0)) throw DomainError("jacobi_R: requires alpha > -1");
    const double at_one = binom_real(alpha, n);
    if (at_one == 0.0) throw DomainError("jacobi_R: P_n(1) vanishes");
    if (x == 1.0) return 1.0;  // exact, where the recurrence would round
    return jacobi_P(n, alpha, beta, x) / at_one;
}

double endpoint_power(double base, double exponent) {
    if (base == 0.0) {
        if (exponent > 0.0) return 0.0;
        if (exponent == 0.0) return 1.0;
        throw DomainError("endpoint_power: negative exponent at zero base");
    }
    return std::pow(base, exponent);
}

double g_fn(int n, double alpha, double beta, double x) {
    if (n < 0) throw DomainError("g_fn: negative degree");
    if (!(n + alpha + 1.0 > 0.0) || !(n + beta + 1.0 > 0.0) || !(n + alpha + beta + 1.0 > 0.0))
        throw DomainError("g_fn: gamma arguments must be positive");
    if (!(x >= -1.0 && x <= 1.0)) throw DomainError("g_fn: x outside [-1, 1]");
    const double lognorm = 0.5 * (log_gamma(n + 1.0) + log_gamma(n + alpha + beta + 1.0) -
                                  log_gamma(n + alpha + 1.0) - log_gamma(n + beta + 1.0));
    const double u = 0.5 * (1.0 - x);
    const double v = 0.5 * (1.0 + x);
    const double weight = endpoint_power(u, 0.5 * alpha) * endpoint_power(v, 0.5 * beta);
    if (weight == 0.0) return 0.0;
    return std::exp(lognorm) * weight * jacobi_P_u(n, alpha, beta, u);
}

double jacobi_norm_sq(int n, double alpha, double beta) {
    if (n == 0) return 1.0;
    const double s = alpha + beta;
    const double lead = (n + s + 1.0) / (2.0 * n + s + 1.0);
    if (n <= 50)
        return lead * pochhammer(alpha + 1.0, n) / pochhammer(s + 2.0, n) * pochhammer(beta + 1.0, n) /
               std::exp(log_gamma(n + 1.0));
    // the Pochhammer symbols overflow separately long before their ratio does
    return lead * std::exp(log_gamma(n + alpha + 1.0) - log_gamma(alpha + 1.0) + log_gamma(n + beta + 1.0) -
                           log_gamma(beta + 1.0) - log_gamma(n + s + 2.0) + log_gamma(s + 2.0) -
                           log_gamma(n + 1.0));
}

double jacobi_orthonormal(int n, double alpha, double beta, double x) {
    if (!(alpha > -1.0) || !(beta > -1.0)) throw DomainError("jacobi_orthonormal: requires a, b > -1");
    const double s = alpha + beta;
    const double log_mass = (s + 1.0) * std::log(2.0) + log_gamma(alpha + 1.0) + log_gamma(beta + 1.0) -
                            log_gamma(s + 2.0);
    const double h = std::exp(log_mass) * jacobi_norm_sq(n, alpha, beta);
    return jacobi_P(n, alpha, beta, x) / std::sqrt(h);
}

double jacobi_inner_product(int n, int k, double alpha, double beta) {
    if (!(alpha > -1.0) || !(beta > -1.0)) throw DomainError("jacobi_inner_product: requires a, b > -1");
    if (n < 0 || k < 0) throw DomainError("jacobi_inner_product: negative degree");
    const int nodes = (n + k + 1) / 2 + 1;
    const auto rule = gauss_jacobi(nodes, alpha, beta);
    double total = 0.0;
    for (std::size_t j = 0; j < rule->nodes.size(); ++j) {
        const double x = rule->nodes[j];
        total += rule->weights[j] * jacobi_P(n, alpha, beta, x) * jacobi_P(k, alpha, beta, x);
    }
    return total;
}

}  // namespace lagdisp
