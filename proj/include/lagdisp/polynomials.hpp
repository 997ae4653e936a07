// SPDX-License-Identifier: Apache-2.0
//
// Jacobi, Laguerre, Meixner, Gegenbauer and Legendre polynomials, plus the
// normalized variants R_n (R_n(1) = 1) and g_n (weighted, L^2-normalized).
#pragma once

#include <complex>
#include <vector>

#include "lagdisp/special_fn.hpp"

namespace lagdisp {

struct OrthoParams {
    double alpha = 0.0;
    double beta = 0.0;
};

/// P_n^{(a,b)}(x) by the three-term recurrence in n. Any real a, b; when a
/// recurrence denominator vanishes (a+b a negative integer) the explicit sum
/// is used instead.
double jacobi_P(int n, double alpha, double beta, double x);

/// Same polynomial written in u = (1-x)/2. Avoids forming x when u is known
/// to full relative precision (u near 0 or 1).
double jacobi_P_u(int n, double alpha, double beta, double u);

/// Value plus a flag set when the result overflowed to ±Inf.
Saturating jacobi_P_checked(int n, double alpha, double beta, double x);

/// Explicit two-binomial sum in extended precision. Cancels badly near x = 1
/// for large n; kept as an independent path and as the recurrence fallback.
long double jacobi_P_sum(int n, long double alpha, long double beta, long double x);

/// log|P_k^{(a,b)}(1-2u)| and sign for k = 0..nmax, from the same recurrence
/// with running rescaling, so values beyond the double range are representable.
/// A zero value is reported as log = -inf, sign = 0.
void jacobi_log_column(int nmax, double alpha, double beta, double u, std::vector<double>& log_abs,
                       std::vector<int>& sign);

/// L_n^{(a)}(z) from (n+1)L_{n+1} = (2n+1+a-z)L_n - (n+a)L_{n-1}.
double laguerre_L(int n, double alpha, double z);
std::complex<double> laguerre_L(int n, double alpha, std::complex<double> z);

/// M_n(x; beta, c) = 2F1(-n, -x; beta; 1 - 1/c) as a terminating sum.
/// Throws DomainError for c == 0 or when (beta)_k vanishes inside the sum.
double meixner_M(int n, double x, double beta, double c);

/// (2l)_n / (l+1/2)_n * P_n^{(l-1/2, l-1/2)}(x), l > -1/2.
double gegenbauer_P(int n, double lambda, double x);
double legendre_P(int n, double x);

/// P_n(x) / P_n(1). Throws DomainError when P_n(1) = 0.
double jacobi_R(int n, double alpha, double beta, double x);

/// ((1-x)/2)^{e} with the endpoint policy used throughout: exact 0 for a
/// positive exponent at zero base, exact 1 for a zero exponent, DomainError
/// for a negative exponent at zero base.
double endpoint_power(double base, double exponent);

/// g_n^{(a,b)}(x) = sqrt(n! Γ(n+a+b+1) / (Γ(n+a+1) Γ(n+b+1)))
///                  ((1-x)/2)^{a/2} ((1+x)/2)^{b/2} P_n^{(a,b)}(x).
/// Requires n+a+1, n+b+1, n+a+b+1 > 0 and x in [-1, 1].
double g_fn(int n, double alpha, double beta, double x);

/// Squared norm of P_n under the probability-normalized Jacobi weight.
double jacobi_norm_sq(int n, double alpha, double beta);

/// Orthonormal p_n with respect to w(x) = (1-x)^a (1+x)^b dx on [-1, 1]
/// (unnormalized weight).
double jacobi_orthonormal(int n, double alpha, double beta, double x);

/// <P_n, P_k> under the probability-normalized Jacobi weight, by a Gauss–Jacobi
/// rule with ceil((n+k)/2)+1 nodes. a, b > -1.
double jacobi_inner_product(int n, int k, double alpha, double beta);

}  // namespace lagdisp
