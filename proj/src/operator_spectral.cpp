// SPDX-License-Identifier: Apache-2.0
#include "lagdisp/operator_spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lagdisp/errors.hpp"
#include "lagdisp/gauss_rules.hpp"
#include "lagdisp/polynomials.hpp"

namespace lagdisp {

namespace {

void require_alpha(double alpha, const char* who) {
    if (!(alpha > -1.0)) throw DomainError(std::string(who) + ": requires alpha > -1");
}

void require_off_spectrum(cplx z, const char* who) {
    if (z.imag() == 0.0 && z.real() >= 0.0) throw DomainError(std::string(who) + ": z on the spectrum [0, inf)");
}

constexpr int kMinNodes = 64;
constexpr int kMaxNodes = 4096;
constexpr double kWeylTol = 1e-12;

}  // namespace

TruncatedOperator build_truncated(double alpha, int N) {
    require_alpha(alpha, "build_truncated");
    if (N < 1) throw DomainError("build_truncated: N must be positive");
    TruncatedOperator op;
    op.alpha = alpha;
    op.N = N;
    op.diag.resize(N);
    op.offdiag.resize(N - 1);
    for (int n = 0; n < N; ++n) op.diag[n] = 2.0 * n + 1.0 + alpha;
    for (int n = 0; n + 1 < N; ++n) op.offdiag[n] = std::sqrt((n + 1.0) * (n + 1.0 + alpha));
    return op;
}

double first_kind_P(double alpha, int n, double z) {
    require_alpha(alpha, "first_kind_P");
    const double sign = (n % 2) ? -1.0 : 1.0;
    return sign * laguerre_L(n, alpha, z) / std::sqrt(binom_real(alpha, n));
}

cplx first_kind_P(double alpha, int n, cplx z) {
    require_alpha(alpha, "first_kind_P");
    const double sign = (n % 2) ? -1.0 : 1.0;
    return sign * laguerre_L(n, alpha, z) / std::sqrt(binom_real(alpha, n));
}

double second_kind_Q(double alpha, int n, double z) {
    require_alpha(alpha, "second_kind_Q");
    std::vector<double> P, Q;
    operator_polynomials<double, double>(alpha, n, z, P, Q);
    return Q[n];
}

cplx second_kind_Q(double alpha, int n, cplx z) {
    require_alpha(alpha, "second_kind_Q");
    std::vector<cplx> P, Q;
    operator_polynomials<double, cplx>(alpha, n, z, P, Q);
    return Q[n];
}

cplx weyl_m_expint(double alpha, cplx z) {
    require_alpha(alpha, "weyl_m");
    require_off_spectrum(z, "weyl_m");
    return std::exp(-z) * gen_exp_integral(1.0 + alpha, -z);
}

cplx weyl_m(double alpha, cplx z) {
    require_alpha(alpha, "weyl_m");
    require_off_spectrum(z, "weyl_m");
    auto quad = [&](int K) {
        const auto rule = gauss_laguerre(K, alpha);
        cplx s{};
        for (int j = 0; j < K; ++j) s += rule->weights[j] / (rule->nodes[j] - z);
        return s;
    };
    cplx prev = quad(kMinNodes);
    for (int K = 2 * kMinNodes; K <= kMaxNodes; K *= 2) {
        const cplx cur = quad(K);
        if (std::abs(cur - prev) <= kWeylTol * std::abs(cur)) return cur;
        prev = cur;
    }
    return weyl_m_expint(alpha, z);
}

cplx weyl_m_boundary(double alpha, double lambda, int side) {
    require_alpha(alpha, "weyl_m_boundary");
    if (!(lambda > 0.0)) throw DomainError("weyl_m_boundary: requires lambda > 0");
    const double eps = 1e-6;
    const double sgn = side >= 0 ? 1.0 : -1.0;
    const cplx m1 = weyl_m_expint(alpha, {lambda, sgn * eps});
    const cplx m2 = weyl_m_expint(alpha, {lambda, sgn * 0.5 * eps});
    return 2.0 * m2 - m1;
}

double spectral_density(double alpha, double lambda) {
    require_alpha(alpha, "spectral_density");
    if (lambda < 0.0) return 0.0;
    if (lambda == 0.0) {
        if (alpha < 0.0) return std::numeric_limits<double>::infinity();
        return alpha == 0.0 ? 1.0 : 0.0;
    }
    return std::exp(-lambda + alpha * std::log(lambda) - log_gamma(alpha + 1.0));
}

std::vector<cplx> weyl_solution(double alpha, cplx z, int nmax) {
    require_alpha(alpha, "weyl_solution");
    require_off_spectrum(z, "weyl_solution");
    if (nmax < 0) throw DomainError("weyl_solution: negative nmax");

    auto b = [alpha](int n) { return std::sqrt((n + 1.0) * (n + 1.0 + alpha)); };
    auto a = [alpha](int n) { return 2.0 * n + 1.0 + alpha; };

    // ratios r_n = Psi_{n+1} / Psi_n for n < nmax, from r_L = 0
    auto ratios = [&](long L) {
        std::vector<cplx> r(std::max(nmax, 1));
        cplx rn{0.0, 0.0};
        for (long n = L; n >= 1; --n) {
            rn = -b(static_cast<int>(n - 1)) / ((a(static_cast<int>(n)) - z) + b(static_cast<int>(n)) * rn);
            if (n - 1 < nmax) r[n - 1] = rn;
        }
        return r;
    };

    constexpr long kMaxStart = 1L << 24;
    long L = std::max<long>(2L * nmax + 64, 128);
    std::vector<cplx> r = ratios(L);
    for (;;) {
        L *= 2;
        if (L > kMaxStart) throw AccuracyError("weyl_solution: backward recurrence did not settle", 0.0);
        std::vector<cplx> r2 = ratios(L);
        double diff = 0.0;
        for (int n = 0; n < nmax; ++n) diff = std::max(diff, std::abs(r2[n] - r[n]) / std::abs(r2[n]));
        r.swap(r2);
        if (diff <= 1e-14) break;
    }

    std::vector<cplx> psi(nmax + 1);
    psi[0] = weyl_m(alpha, z);
    for (int n = 0; n < nmax; ++n) psi[n + 1] = psi[n] * r[n];
    return psi;
}

cplx green_function(double alpha, cplx z, int n, int m) {
    if (n < 0 || m < 0) throw DomainError("green_function: negative index");
    const int lo = std::min(n, m), hi = std::max(n, m);
    const auto psi = weyl_solution(alpha, z, hi);
    std::vector<cplx> P, Q;
    operator_polynomials<double, cplx>(alpha, lo, z, P, Q);
    return P[lo] * psi[hi];
}

std::vector<cplx> green_column(double alpha, cplx z, int m, int nmax) {
    if (m < 0 || nmax < 0) throw DomainError("green_column: negative index");
    const auto psi = weyl_solution(alpha, z, std::max(m, nmax));
    std::vector<cplx> P, Q;
    operator_polynomials<double, cplx>(alpha, std::max(m, nmax), z, P, Q);
    std::vector<cplx> col(nmax + 1);
    for (int n = 0; n <= nmax; ++n) col[n] = n <= m ? P[n] * psi[m] : P[m] * psi[n];
    return col;
}

}  // namespace lagdisp
