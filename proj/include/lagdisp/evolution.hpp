// SPDX-License-Identifier: Apache-2.0
//
// Matrix entries K(n, m) = <e^{-itH_a} delta_n, delta_m> of the Schrödinger
// group of the discrete Laguerre operator: closed form, Meixner form, special
// cases, recurrences, convolution representation, and two brute-force oracles
// (truncated matrix exponential, Gauss–Laguerre quadrature).
//
// Convention: x = (t^2-1)/(t^2+1), u = (1-x)/2 = 1/(1+t^2), v = (1+x)/2.
// For n <= m,
//   K(n,m) = (-1)^{n+m} (1+it)^{-(1+a)} ((t+i)/(t-i))^n (t/(t-i))^{m-n}
//            sqrt((a+1)_m n! / ((a+1)_n m!)) P_n^{(a, m-n)}(x),
// with the principal branch of (1+it)^{1+a}. The entries of e^{+itH} are the
// complex conjugates (H is real symmetric).
#pragma once

#include <Eigen/Dense>
#include <complex>

#include "lagdisp/special_fn.hpp"

namespace lagdisp {

struct KernelValue {
    cplx value;
    double modulus;
};

KernelValue kernel_closed(double alpha, double t, int n, int m);

/// ln|K(n, m)|, -inf when the entry vanishes. Cheaper than kernel_closed.
double kernel_log_modulus(double alpha, double t, int n, int m);

/// Entry of e^{+itH}: conj(K(n, m)).
KernelValue kernel_closed_plus(double alpha, double t, int n, int m);

/// Meixner form; t = 0 is delegated to kernel_closed.
KernelValue kernel_meixner(double alpha, double t, int n, int m);

enum class KernelCase { n0, n1, diag };

/// Closed forms of the n = 0, n = 1 and n = m entries. Index order is
/// canonicalized to n <= m first; UsageError when the case does not apply.
KernelValue kernel_special(double alpha, double t, int n, int m, KernelCase which);

/// max of |LHS - RHS| over the two three-term relations linking
/// K(n+1,m+1), K(n,m), K(n,m+1) and K_{a+1}(n,m). Requires n <= m, t != 0.
double kernel_recurrence_residual(double alpha, double t, int n, int m);

/// e^{-itH_N} for the N x N truncation, via a cached eigendecomposition.
Eigen::MatrixXcd oracle_matexp(double alpha, int N, double t);

/// Leading (nmax+1) x (nmax+1) block of oracle_matexp, O(N nmax^2).
Eigen::MatrixXcd oracle_matexp_block(double alpha, int N, double t, int nmax);

/// Gauss–Laguerre evaluation of the spectral integral of e^{-itl} P_n P_m.
/// Node count doubles from 64 until successive values agree to 1e-10.
/// Envelope |t| <= 5, n, m <= 20 (UsageError outside).
cplx oracle_quadrature(double alpha, double t, int n, int m);

/// (1/2 + it)^{-(1+a)} ((it - 1/2)/(it + 1/2))^n
cplx conv_F(double alpha, int n, double t);
/// (1/2 + it)^{-1} sum_{k<=n} (a)_k/k! ((it - 1/2)/(it + 1/2))^{n-k}
cplx conv_G(double alpha, int n, double t);

struct ConvolutionResult {
    cplx value;
    double error_bound;  ///< quadrature estimate + tail remainder estimate
};

/// K(n, m) as (-1)^{n+m} sqrt((a+1)_n m!/((a+1)_m n!)) (F_n * G_m)(t), the
/// convolution integral taken over [-window, window] with the first two
/// orders of the |x| -> inf tail added analytically. Requires a >= 0.
/// AccuracyError (carrying the bound) when the bound exceeds target.
ConvolutionResult kernel_convolution(double alpha, double t, int n, int m, double window, double target = 1e-6);

/// |sum_m |K(n,m)|^2 - 1|, summing until an envelope bound on the remaining
/// terms (largest of the last 2n+2 terms, geometric ratio from v) is below
/// 1e-16. AccuracyError past 10^6 terms.
double unitarity_defect(double alpha, double t, int n);

}  // namespace lagdisp
