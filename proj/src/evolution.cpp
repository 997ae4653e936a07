// SPDX-License-Identifier: Apache-2.0
#include "lagdisp/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <utility>
#include <vector>

#include "lagdisp/detail/adaptive_quad.hpp"
#include "lagdisp/errors.hpp"
#include "lagdisp/gauss_rules.hpp"
#include "lagdisp/operator_spectral.hpp"
#include "lagdisp/polynomials.hpp"

namespace lagdisp {

namespace {

constexpr cplx I{0.0, 1.0};

void require_alpha(double alpha, const char* who) {
    if (!(alpha > -1.0)) throw DomainError(std::string(who) + ": requires alpha > -1");
}

void require_indices(int n, int m, const char* who) {
    if (n < 0 || m < 0) throw DomainError(std::string(who) + ": negative index");
}

// (1+it)^{-(1+a)}, principal branch
cplx lead_factor(double alpha, double t) { return std::exp(-(1.0 + alpha) * std::log(cplx{1.0, t})); }

// log|P_n^{(a,b)}(1-2u)| and its sign, falling back to the rescaled column
// when the direct recurrence overflows.
double log_abs_jacobi(int n, double alpha, double beta, double u, int* sign) {
    const double p = jacobi_P_u(n, alpha, beta, u);
    if (std::isfinite(p)) {
        *sign = p > 0.0 ? 1 : (p < 0.0 ? -1 : 0);
        return p == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(std::abs(p));
    }
    std::vector<double> la;
    std::vector<int> sg;
    jacobi_log_column(n, alpha, beta, u, la, sg);
    *sign = sg[n];
    return la[n];
}

struct ModulusParts {
    double log_mod;  // ln|K|
    int sign;        // sign of the real prefactor, 0 when K vanishes
};

// n <= m, t != 0
ModulusParts modulus_parts(double alpha, double t, int n, int m) {
    const int d = m - n;
    const double t2 = t * t;
    const double u = 1.0 / (1.0 + t2);
    const double v = t2 / (1.0 + t2);
    int psign = 0;
    const double lp = log_abs_jacobi(n, alpha, d, u, &psign);
    if (psign == 0) return {-std::numeric_limits<double>::infinity(), 0};
    const double lm = -0.5 * (1.0 + alpha) * std::log1p(t2) + 0.5 * d * std::log(v) +
                      0.5 * log_binom_ratio(alpha, n, m) + lp;
    int s = psign * (((n + m) % 2) ? -1 : 1);
    if (t < 0.0 && (d % 2)) s = -s;  // arg(t)^d for negative t
    return {lm, s};
}

}  // namespace

KernelValue kernel_closed(double alpha, double t, int n, int m) {
    require_alpha(alpha, "kernel_closed");
    require_indices(n, m, "kernel_closed");
    if (n > m) std::swap(n, m);
    if (t == 0.0) return n == m ? KernelValue{{1.0, 0.0}, 1.0} : KernelValue{{0.0, 0.0}, 0.0};
    const auto parts = modulus_parts(alpha, t, n, m);
    if (parts.sign == 0) return {{0.0, 0.0}, 0.0};
    const double mod = std::exp(parts.log_mod);
    const double w = std::atan2(1.0, t);
    const double phase = -(1.0 + alpha) * std::atan(t) + (2.0 * n + (m - n)) * w;
    return {static_cast<double>(parts.sign) * std::polar(mod, phase), mod};
}

double kernel_log_modulus(double alpha, double t, int n, int m) {
    require_alpha(alpha, "kernel_log_modulus");
    require_indices(n, m, "kernel_log_modulus");
    if (n > m) std::swap(n, m);
    if (t == 0.0) return n == m ? 0.0 : -std::numeric_limits<double>::infinity();
    return modulus_parts(alpha, t, n, m).log_mod;
}

KernelValue kernel_closed_plus(double alpha, double t, int n, int m) {
    auto k = kernel_closed(alpha, t, n, m);
    k.value = std::conj(k.value);
    return k;
}

KernelValue kernel_meixner(double alpha, double t, int n, int m) {
    require_alpha(alpha, "kernel_meixner");
    require_indices(n, m, "kernel_meixner");
    if (t == 0.0) return kernel_closed(alpha, t, n, m);
    if (n > m) std::swap(n, m);
    const double t2 = t * t;
    const double c = t2 / (1.0 + t2);
    const cplx ratio = -I * t / cplx{1.0, t};
    const double norm = std::sqrt(binom_real(alpha, n) * binom_real(alpha, m));
    const cplx val = lead_factor(alpha, t) * std::pow(ratio, n + m) * norm * meixner_M(n, m, alpha + 1.0, c);
    return {val, std::abs(val)};
}

KernelValue kernel_special(double alpha, double t, int n, int m, KernelCase which) {
    require_alpha(alpha, "kernel_special");
    require_indices(n, m, "kernel_special");
    if (n > m) std::swap(n, m);
    const cplx lead = lead_factor(alpha, t);
    cplx val;
    switch (which) {
        case KernelCase::n0: {
            if (n != 0) throw UsageError("kernel_special: n0 case needs min(n, m) = 0");
            const cplx r = -I * t / cplx{1.0, t};
            val = lead * std::pow(r, m) * std::sqrt(binom_real(alpha, m));
            break;
        }
        case KernelCase::n1: {
            if (n != 1) throw UsageError("kernel_special: n1 case needs min(n, m) = 1");
            // (-it/(1+it))^{m+1} / t^2 written without the removable 0/0 at t = 0
            const cplx r = std::pow(-I / cplx{1.0, t}, m + 1) * std::pow(t, m - 1);
            const double norm = std::sqrt(binom_real(alpha + 1.0, m - 1) / m);
            val = lead * r * ((1.0 + alpha) * t * t - m) * norm;
            break;
        }
        case KernelCase::diag: {
            if (n != m) throw UsageError("kernel_special: diag case needs n = m");
            if (t == 0.0) return {{1.0, 0.0}, 1.0};
            const double u = 1.0 / (1.0 + t * t);
            const cplx rot = cplx{t, 1.0} / cplx{t, -1.0};
            val = lead * std::pow(rot, m) * jacobi_P_u(m, alpha, 0.0, u);
            break;
        }
    }
    return {val, std::abs(val)};
}

double kernel_recurrence_residual(double alpha, double t, int n, int m) {
    require_alpha(alpha, "kernel_recurrence_residual");
    require_indices(n, m, "kernel_recurrence_residual");
    if (n > m) throw UsageError("kernel_recurrence_residual: requires n <= m");
    if (t == 0.0) throw UsageError("kernel_recurrence_residual: requires t != 0");
    auto K = [&](double a, int i, int j) { return kernel_closed(a, t, i, j).value; };
    const double bn = std::sqrt((n + 1.0) * (n + 1.0 + alpha));
    const double bm = std::sqrt((m + 1.0) * (m + 1.0 + alpha));
    const double s = n + m + alpha + 2.0;
    const cplx lhs = K(alpha, n + 1, m + 1);

    const cplx rhs1 = bm / bn * (I + t) / (I - t) * K(alpha, n, m) + s / bn * t / (I - t) * K(alpha, n, m + 1);
    const cplx rhs2 = s / std::sqrt((n + 1.0) * (m + 1.0)) / cplx{1.0, t} * K(alpha + 1.0, n, m) +
                      std::sqrt((n + alpha + 1.0) * (m + 1.0 + alpha) / ((n + 1.0) * (m + 1.0))) *
                          cplx{t, 1.0} / cplx{t, -1.0} * K(alpha, n, m);
    return std::max(std::abs(lhs - rhs1), std::abs(lhs - rhs2));
}

namespace {

struct Eigensystem {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;  // columns are eigenvectors
};

std::shared_ptr<const Eigensystem> eigensystem(double alpha, int N) {
    static std::mutex mu;
    static std::map<std::pair<double, int>, std::shared_ptr<const Eigensystem>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({alpha, N});
        if (it != cache.end()) return it->second;
    }
    const auto op = build_truncated(alpha, N);
    Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(op.diag.data(), N);
    Eigen::VectorXd off(std::max(N - 1, 0));
    for (int k = 0; k + 1 < N; ++k) off[k] = op.offdiag[k];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success) throw InternalError("oracle_matexp: eigensolve failed");
    auto sys = std::make_shared<Eigensystem>();
    sys->values = es.eigenvalues();
    sys->vectors = es.eigenvectors();
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::make_pair(alpha, N), std::move(sys)).first->second;
}

void require_matexp(double alpha, int N) {
    require_alpha(alpha, "oracle_matexp");
    if (N < 1 || N > 1000) throw UsageError("oracle_matexp: N must lie in [1, 1000]");
}

Eigen::MatrixXcd matexp_rows(const Eigensystem& sys, double t, int rows) {
    const int N = static_cast<int>(sys.values.size());
    const Eigen::MatrixXd V = sys.vectors.topRows(rows);
    Eigen::MatrixXcd scaled(rows, N);
    for (int j = 0; j < N; ++j) scaled.col(j) = V.col(j).cast<cplx>() * std::exp(-I * (t * sys.values[j]));
    return scaled * V.transpose().cast<cplx>();
}

}  // namespace

Eigen::MatrixXcd oracle_matexp(double alpha, int N, double t) {
    require_matexp(alpha, N);
    if (t == 0.0) return Eigen::MatrixXcd::Identity(N, N);
    return matexp_rows(*eigensystem(alpha, N), t, N);
}

Eigen::MatrixXcd oracle_matexp_block(double alpha, int N, double t, int nmax) {
    require_matexp(alpha, N);
    if (nmax < 0 || nmax >= N) throw UsageError("oracle_matexp_block: block larger than the truncation");
    if (t == 0.0) return Eigen::MatrixXcd::Identity(nmax + 1, nmax + 1);
    return matexp_rows(*eigensystem(alpha, N), t, nmax + 1);
}

cplx oracle_quadrature(double alpha, double t, int n, int m) {
    require_alpha(alpha, "oracle_quadrature");
    require_indices(n, m, "oracle_quadrature");
    if (std::abs(t) > 5.0 || n > 20 || m > 20)
        throw UsageError("oracle_quadrature: outside the envelope |t| <= 5, n, m <= 20");
    const int top = std::max(n, m);
    // sum_j w_j e^{-it l_j} P_n(l_j) P_m(l_j) with the orthonormal P of the operator
    auto quad = [&](int K) {
        const auto rule = gauss_laguerre(K, alpha);
        cplx s{};
        std::vector<double> P, Q;
        for (int j = 0; j < K; ++j) {
            if (rule->weights[j] == 0.0) continue;
            operator_polynomials<double, double>(alpha, top, rule->nodes[j], P, Q);
            s += rule->weights[j] * P[n] * P[m] * std::exp(-I * (t * rule->nodes[j]));
        }
        return s;
    };
    constexpr double kTol = 1e-10;
    cplx prev = quad(64);
    double diff = 0.0;
    for (int K = 128; K <= 4096; K *= 2) {
        const cplx cur = quad(K);
        diff = std::abs(cur - prev);
        if (diff <= kTol) return cur;
        prev = cur;
    }
    throw AccuracyError("oracle_quadrature: node doubling did not settle", diff);
}

cplx conv_F(double alpha, int n, double t) {
    if (n < 0) throw DomainError("conv_F: negative index");
    const cplx q = cplx{-0.5, t} / cplx{0.5, t};
    return std::exp(-(1.0 + alpha) * std::log(cplx{0.5, t})) * std::pow(q, n);
}

cplx conv_G(double alpha, int n, double t) {
    if (n < 0) throw DomainError("conv_G: negative index");
    const cplx q = cplx{-0.5, t} / cplx{0.5, t};
    // sum_k c_k q^{n-k}, c_k = (a)_k / k!, by Horner in q
    cplx s{};
    double c = 1.0;
    for (int k = 0; k <= n; ++k) {
        s = s * q + c;
        c *= (alpha + k) / (k + 1.0);
    }
    return s / cplx{0.5, t};
}

ConvolutionResult kernel_convolution(double alpha, double t, int n, int m, double window, double target) {
    if (!(alpha >= 0.0)) throw DomainError("kernel_convolution: requires alpha >= 0");
    require_indices(n, m, "kernel_convolution");
    if (!(window > 0.0)) throw DomainError("kernel_convolution: window must be positive");
    const double pi = std::numbers::pi;

    auto h = [&](double x) { return conv_F(alpha, n, x) * conv_G(alpha, m, t - x); };

    // Breakpoints at ±2^k resolve the winding of q^n near the origin.
    std::vector<double> edges{0.0};
    for (double e = 1.0; e < window; e *= 2.0) edges.push_back(e);
    edges.push_back(window);
    cplx inner{};
    double quad_err = 0.0;
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
        for (int side : {-1, 1}) {
            const double a = side > 0 ? edges[k] : -edges[k + 1];
            const double b = side > 0 ? edges[k + 1] : -edges[k];
            auto r = detail::integrate_adaptive<cplx>(h, a, b, 1e-12, 1e-14, 4000);
            inner += r.value;
            quad_err += r.error;
        }
    }

    // Tail |x| > window from the large-|x| expansion
    //   h(x) ~ (ix)^{-(1+a)} (-ix)^{-1} [B + C1/(ix) + O(x^-2)].
    double B = 0.0, S = 0.0;
    {
        double c = 1.0;
        for (int k = 0; k <= m; ++k) {
            B += c;
            S += c * (m - k);
            c *= (alpha + k) / (k + 1.0);
        }
    }
    const cplx C1 = B * cplx{0.5 - (0.5 * (1.0 + alpha) + n), t} + S;
    const cplx T1 = B * 2.0 * std::cos(pi * alpha / 2.0) * std::pow(window, -(1.0 + alpha)) / (1.0 + alpha);
    const cplx T2 = -C1 * 2.0 * std::sin(pi * alpha / 2.0) * std::pow(window, -(2.0 + alpha)) / (2.0 + alpha);
    const double scale = B * std::pow(1.0 + std::abs(t) + n + m + alpha, 2.0);
    const double remainder = scale * std::pow(window, -(3.0 + alpha)) / pi;

    const double pref_mod = std::exp(-0.5 * log_binom_ratio(alpha, n, m));
    const double pref = ((n + m) % 2 ? -1.0 : 1.0) * pref_mod;
    ConvolutionResult res;
    res.value = pref * (inner + T1 + T2) / (2.0 * pi);
    res.error_bound = pref_mod * (quad_err / (2.0 * pi) + remainder);
    if (res.error_bound > target)
        throw AccuracyError("kernel_convolution: window too small for the target accuracy", res.error_bound);
    return res;
}

double unitarity_defect(double alpha, double t, int n) {
    require_alpha(alpha, "unitarity_defect");
    if (n < 0) throw DomainError("unitarity_defect: negative index");
    if (t == 0.0) return 0.0;
    // Along the row, |K(n,m)|^2 = v^m times a polynomial-like factor of degree
    // about 2n+a in m, which can dip to zero up to 2n times. A single small term
    // says nothing about the tail, so the bound uses the largest of the last
    // 2n+2 terms and the envelope ratio v (1+1/m)^{2n+a+2}, once that is < 1.
    const double v = t * t / (1.0 + t * t);
    const int window = 2 * n + 2;
    const double degree = 2.0 * n + std::max(alpha, 0.0) + 2.0;
    std::vector<double> recent(window, 0.0);
    long double sum = 0.0L;
    constexpr int kCap = 1000000;
    for (int m = 0; m < kCap; ++m) {
        const double term = std::exp(2.0 * kernel_log_modulus(alpha, t, n, m));
        sum += term;
        recent[m % window] = term;
        if (m <= n + window) continue;
        const double q = v * std::pow(1.0 + 1.0 / m, degree);
        if (q >= 1.0) continue;
        const double env = *std::max_element(recent.begin(), recent.end());
        if (env / (1.0 - q) < 1e-16) return std::abs(static_cast<double>(sum - 1.0L));
    }
    throw AccuracyError("unitarity_defect: term cap reached", std::abs(static_cast<double>(sum - 1.0L)));
}

}  // namespace lagdisp
