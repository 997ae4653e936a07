#include <doctest.h>

#include <cmath>
#include <random>

#include "lagdisp/dispersion.hpp"
#include "lagdisp/errors.hpp"
#include "lagdisp/evolution.hpp"
#include "lagdisp/polynomials.hpp"
#include "oracles/oracles.hpp"

using namespace lagdisp;
using doctest::Approx;

namespace {

const cplx I{0.0, 1.0};

double rel_err(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("kernel_closed examples") {
    CHECK(std::abs(kernel_closed(0.0, 1.0, 0, 0).value - cplx{0.5, -0.5}) < 1e-15);
    for (double a : {-0.5, 0.0, 3.0})
        for (int n = 0; n < 6; ++n)
            for (int m = 0; m < 6; ++m) {
                const auto k = kernel_closed(a, 0.0, n, m);
                CHECK(k.value == cplx{n == m ? 1.0 : 0.0, 0.0});
            }
    CHECK(std::abs(kernel_closed(0.0, 1.0, 1, 1).value) < 1e-15);
}

TEST_CASE("kernel_closed against the 50-digit moment expansion") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> as(-0.9, 6.0), ts(-8.0, 8.0);
    for (int i = 0; i < 200; ++i) {
        const double a = as(rng), t = ts(rng);
        const int n = static_cast<int>(rng() % 16), m = static_cast<int>(rng() % 16);
        const cplx ref = oracle::kernel_moments(a, t, n, m);
        const auto k = kernel_closed(a, t, n, m);
        CHECK(std::abs(k.value - ref) <= 1e-12 * std::max(std::abs(ref), 1e-3));
        CHECK(k.modulus == Approx(std::abs(k.value)).epsilon(1e-14));
    }
}

TEST_CASE("kernel is symmetric and bounded by one") {
    for (double a : {-0.7, 0.0, 2.5, 10.0})
        for (double t : {-3.0, 0.2, 1.0, 50.0})
            for (int n = 0; n <= 25; n += 3)
                for (int m = 0; m <= 25; m += 2) {
                    const auto k = kernel_closed(a, t, n, m);
                    CHECK(k.value == kernel_closed(a, t, m, n).value);
                    CHECK(k.modulus <= 1.0 + 1e-14);
                }
}

TEST_CASE("kernel_log_modulus and the plus-group entries") {
    for (auto [n, m] : {std::pair{0, 0}, {3, 9}, {12, 4}}) {
        const auto k = kernel_closed(1.5, 2.0, n, m);
        CHECK(kernel_log_modulus(1.5, 2.0, n, m) == Approx(std::log(k.modulus)).epsilon(1e-13));
        CHECK(kernel_closed_plus(1.5, 2.0, n, m).value == std::conj(k.value));
    }
    CHECK(std::isinf(kernel_log_modulus(0.0, 1.0, 1, 1)));
    // e^{+itH} = e^{-i(-t)H}
    CHECK(std::abs(kernel_closed_plus(0.5, 1.3, 2, 5).value - kernel_closed(0.5, -1.3, 2, 5).value) < 1e-15);
}

TEST_CASE("kernel_meixner agrees with the closed form") {
    for (int m = 0; m < 8; ++m)
        CHECK(rel_err(kernel_meixner(0.0, 1.0, 0, m).value, kernel_closed(0.0, 1.0, 0, m).value) < 1e-12);
    CHECK(rel_err(kernel_meixner(1.0, 2.0, 2, 3).value, kernel_closed(1.0, 2.0, 2, 3).value) < 1e-12);
    CHECK(rel_err(kernel_meixner(0.5, 0.3, 1, 1).value, kernel_closed(0.5, 0.3, 1, 1).value) < 1e-12);
    CHECK(kernel_meixner(0.5, 0.0, 2, 2).value == cplx{1.0, 0.0});
}

TEST_CASE("special cases n = 0, n = 1, n = m") {
    // n = 0: (-1)^m (1+it)^{-(1+a)} (t/(t-i))^m sqrt((a+1)_m/m!); the square root
    // is what the moment oracle confirms
    const cplx w{1.0, 1.0};
    const cplx expect = std::pow(w, -3.0) * (-I / w) * std::sqrt(3.0);
    CHECK(std::abs(kernel_special(2.0, 1.0, 0, 1, KernelCase::n0).value - expect) < 1e-14);
    CHECK(std::abs(oracle::kernel_moments(2.0, 1.0, 0, 1) - expect) < 1e-14);
    CHECK(std::abs(kernel_special(0.0, 1.0, 1, 1, KernelCase::n1).value) < 1e-15);
    for (double t : {1e2, 1e4}) {
        const double mod = kernel_special(0.0, t, 0, 0, KernelCase::diag).modulus;
        CHECK(mod == Approx(1.0 / std::sqrt(1.0 + t * t)).epsilon(1e-13));
    }
    for (double a : {0.0, 0.7, 3.0})
        for (double t : {0.4, 2.0, -5.0})
            for (int m = 0; m < 10; ++m) {
                CHECK(rel_err(kernel_special(a, t, 0, m, KernelCase::n0).value, kernel_closed(a, t, 0, m).value) < 1e-13);
                const cplx c1 = kernel_closed(a, t, 1, m).value;
                if (m >= 1) CHECK(std::abs(kernel_special(a, t, 1, m, KernelCase::n1).value - c1) < 1e-13 * std::max(1.0, std::abs(c1)));
                CHECK(rel_err(kernel_special(a, t, m, m, KernelCase::diag).value, kernel_closed(a, t, m, m).value) < 1e-13);
            }
    CHECK_THROWS_AS(kernel_special(0.0, 1.0, 2, 3, KernelCase::n1), UsageError);
    CHECK_THROWS_AS(kernel_special(0.0, 1.0, 2, 3, KernelCase::diag), UsageError);
}

TEST_CASE("three-term relations of the kernel") {
    CHECK(kernel_recurrence_residual(0.0, 1.0, 0, 0) < 1e-12);
    CHECK(kernel_recurrence_residual(1.5, 2.0, 2, 5) < 1e-11);
    for (double a : {0.0, 0.5, 4.0})
        for (double t : {0.3, 1.0, 7.0})
            for (int n = 0; n < 10; ++n) CHECK(kernel_recurrence_residual(a, t, n, n + 3) < 1e-11);
}

TEST_CASE("truncated matrix exponential") {
    const auto E = oracle_matexp(0.0, 400, 1.0);
    CHECK(std::abs(E(0, 0) - cplx{0.5, -0.5}) < 1e-10);
    const auto Z = oracle_matexp(1.0, 50, 0.0);
    CHECK((Z - Eigen::MatrixXcd::Identity(50, 50)).cwiseAbs().maxCoeff() < 1e-13);
    CHECK_THROWS_AS(oracle_matexp(0.0, 1001, 1.0), UsageError);
}

TEST_CASE("matrix exponential block matches the closed form once the truncation is wide enough") {
    // At t = 5 the wave started at n <= 20 reaches the N = 400 edge and
    // reflects (error ~0.3 at the 20 x 20 corner); N = 1000 is wide enough.
    const auto B = oracle_matexp_block(2.5, 1000, 5.0, 20);
    double worst = 0.0;
    for (int n = 0; n <= 20; ++n)
        for (int m = 0; m <= 20; ++m) worst = std::max(worst, std::abs(B(n, m) - kernel_closed(2.5, 5.0, n, m).value));
    CHECK(worst < 1e-8);
    const auto B400 = oracle_matexp_block(2.5, 400, 5.0, 20);
    double worst400 = 0.0;
    for (int n = 0; n <= 20; ++n)
        for (int m = 0; m <= 20; ++m) worst400 = std::max(worst400, std::abs(B400(n, m) - kernel_closed(2.5, 5.0, n, m).value));
    CHECK(worst400 > 1e-8);
    // short times stay inside the N = 400 envelope
    const auto S = oracle_matexp_block(2.5, 400, 1.0, 20);
    double worst_short = 0.0;
    for (int n = 0; n <= 20; ++n)
        for (int m = 0; m <= 20; ++m) worst_short = std::max(worst_short, std::abs(S(n, m) - kernel_closed(2.5, 1.0, n, m).value));
    CHECK(worst_short < 1e-8);
}

TEST_CASE("spectral quadrature oracle") {
    for (int n = 0; n < 4; ++n)
        for (int m = 0; m < 4; ++m) CHECK(std::abs(oracle_quadrature(0.0, 0.0, n, m) - (n == m ? 1.0 : 0.0)) < 1e-12);
    CHECK(std::abs(oracle_quadrature(0.0, 1.0, 0, 0) - cplx{0.5, -0.5}) < 1e-10);
    CHECK(std::abs(oracle_quadrature(1.0, 3.0, 2, 4) - kernel_closed(1.0, 3.0, 2, 4).value) < 1e-9);
    CHECK_THROWS_AS(oracle_quadrature(0.0, 6.0, 0, 0), UsageError);
    CHECK_THROWS_AS(oracle_quadrature(0.0, 1.0, 21, 0), UsageError);
}

TEST_CASE("convolution representation") {
    for (double t : {-2.0, 0.0, 0.7}) {
        const cplx one = 1.0 / (0.5 + I * t);
        CHECK(std::abs(conv_F(0.0, 0, t) - one) < 1e-15);
        CHECK(std::abs(conv_G(0.0, 0, t) - one) < 1e-15);
    }
    const auto r = kernel_convolution(0.0, 1.0, 0, 0, 200.0);
    CHECK(std::abs(r.value - cplx{0.5, -0.5}) < 1e-4);
    CHECK(r.error_bound < 1e-6);
    const auto s = kernel_convolution(1.0, 0.8, 2, 3, 200.0);
    CHECK(std::abs(s.value - kernel_closed(1.0, 0.8, 2, 3).value) < 1e-6);
    CHECK_THROWS_AS(kernel_convolution(0.0, 1.0, 0, 0, 1.0, 1e-12), AccuracyError);
}

TEST_CASE("unitarity of rows") {
    CHECK(unitarity_defect(0.0, 1.0, 0) < 1e-10);
    CHECK(unitarity_defect(1.7, 0.0, 4) == 0.0);
    CHECK(unitarity_defect(2.5, 10.0, 30) < 1e-8);
    CHECK(unitarity_defect(-0.5, 3.0, 7) < 1e-10);
    // rows whose terms dip near zero long before the tail starts
    for (int n : {20, 28, 30}) CHECK(unitarity_defect(0.0, 10.0, n) < 1e-10);
}

TEST_CASE("large-time modulus tends to the sigma product") {
    const double t = 1e4;
    for (double a : {0.0, 1.0, 2.5})
        for (int n = 0; n <= 5; ++n)
            for (int m = 0; m <= 5; ++m) {
                const double scaled = std::pow(1.0 + t * t, 0.5 * (1.0 + a)) * kernel_closed(a, t, n, m).modulus;
                CHECK(scaled == Approx(sigma_alpha(n, a) * sigma_alpha(m, a)).epsilon(1e-3));
            }
}

TEST_CASE("case bounds of the rough inequality") {
    for (double a : {0.5, 2.0, 6.0})
        for (double t : {0.5, 2.0, 20.0})
            for (int n = 0; n <= 30; ++n)
                for (int m = 0; m <= 30; ++m) {
                    const auto r = lemma_case_bounds(a, t, n, m);
                    CHECK_MESSAGE(r.pass, r.name, " a=", a, " t=", t, " n=", n, " m=", m);
                }
}

TEST_CASE("weighted Jacobi modulus form on the image of t") {
    // |K(n,m)| = u^{(1+a)/2} v^{(m-n)/2} sqrt((a+1)_m n!/((a+1)_n m!)) |P_n^{(a,m-n)}(x)|
    for (double a : {0.0, 1.5})
        for (double t = 0.0; t <= 100.0; t += 2.5)
            for (int n = 0; n <= 8; ++n)
                for (int m = n; m <= n + 8; ++m) {
                    const double u = 1.0 / (1.0 + t * t), v = 1.0 - u, x = v - u;
                    const double ratio = std::exp(0.5 * (std::log(binom_real(a, m)) - std::log(binom_real(a, n))));
                    const double form = std::pow(u, 0.5 * (1.0 + a)) * std::pow(v, 0.5 * (m - n)) * ratio *
                                        std::abs(jacobi_P(n, a, m - n, x));
                    CHECK(kernel_closed(a, t, n, m).modulus == Approx(form).epsilon(1e-11).scale(1e-300));
                }
}
