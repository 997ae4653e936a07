// SPDX-License-Identifier: Apache-2.0
//
// The discrete Laguerre operator H_a: (H u)_n = b_{n-1} u_{n-1} + a_n u_n + b_n u_{n+1}
// with a_n = 2n+1+a, b_n = sqrt((n+1)(n+1+a)).
#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "lagdisp/special_fn.hpp"

namespace lagdisp {

struct TruncatedOperator {
    double alpha = 0.0;
    int N = 0;
    std::vector<double> diag;     ///< N entries, 2n+1+a
    std::vector<double> offdiag;  ///< N-1 entries, sqrt((n+1)(n+1+a))
};

TruncatedOperator build_truncated(double alpha, int N);

/// First kind P_n and second kind Q_n, n = 0..nmax, from the operator
/// recurrence b_n y_{n+1} = (z - a_n) y_n - b_{n-1} y_{n-1}.
/// P_0 = 1, P_1 = (z - a_0)/b_0; Q_0 = 0, Q_1 = 1/b_0.
/// R is the real scalar type (double or an extended-precision type).
template <class R, class T>
void operator_polynomials(R alpha, int nmax, T z, std::vector<T>& P, std::vector<T>& Q) {
    using std::sqrt;
    P.assign(nmax + 1, T(0));
    Q.assign(nmax + 1, T(0));
    P[0] = T(1);
    if (nmax == 0) return;
    const R b0 = sqrt(R(1) + alpha);
    P[1] = (z - (R(1) + alpha)) / b0;
    Q[1] = T(R(1) / b0);
    for (int n = 1; n < nmax; ++n) {
        const R an = R(2 * n + 1) + alpha;
        const R bn = sqrt(R(n + 1) * (R(n + 1) + alpha));
        const R bp = sqrt(R(n) * (R(n) + alpha));
        P[n + 1] = ((z - an) * P[n] - bp * P[n - 1]) / bn;
        Q[n + 1] = ((z - an) * Q[n] - bp * Q[n - 1]) / bn;
    }
}

/// (-1)^n binom(n+a, n)^{-1/2} L_n^{(a)}(z).
double first_kind_P(double alpha, int n, double z);
cplx first_kind_P(double alpha, int n, cplx z);

double second_kind_Q(double alpha, int n, double z);
cplx second_kind_Q(double alpha, int n, cplx z);

/// Stieltjes transform of the spectral measure, z off [0, inf).
/// Gauss–Laguerre with doubling node count; near the spectrum, where that
/// does not settle, e^{-z} E_{1+a}(-z) is used.
cplx weyl_m(double alpha, cplx z);

/// Same quantity from e^{-z} E_{1+a}(-z) only.
cplx weyl_m_expint(double alpha, cplx z);

/// m(lambda ± i0) for lambda > 0: evaluated at lambda ± i eps for eps = 1e-6
/// and 5e-7, then extrapolated linearly to eps = 0.
cplx weyl_m_boundary(double alpha, double lambda, int side = +1);

/// e^{-l} l^a / Γ(a+1) for l > 0, 0 for l < 0; +Inf at l = 0 when a < 0.
double spectral_density(double alpha, double lambda);

/// Weyl solution Psi_n = Q_n + m P_n, n = 0..nmax, normalized by Psi_0 = m(z).
/// Ratios Psi_{n+1}/Psi_n come from backward recurrence (Miller) with the
/// start index doubled until the values settle.
std::vector<cplx> weyl_solution(double alpha, cplx z, int nmax);

/// <(H - z)^{-1} delta_n, delta_m> = P_min(n,m)(z) Psi_max(n,m)(z).
cplx green_function(double alpha, cplx z, int n, int m);

/// Column G(z; 0..nmax, m).
std::vector<cplx> green_column(double alpha, cplx z, int m, int nmax);

}  // namespace lagdisp
