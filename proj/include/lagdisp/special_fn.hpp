// SPDX-License-Identifier: Apache-2.0
//
// Gamma-family helpers and the generalized exponential integral.
#pragma once

#include <complex>

namespace lagdisp {

using cplx = std::complex<double>;

/// ln Γ(x) for x > 0. Throws DomainError otherwise.
double log_gamma(double x);

/// ln|Γ(x)| with the sign of Γ(x) written to *sign. Thread-safe (no signgam).
double log_abs_gamma(double x, int* sign);

/// Pochhammer symbol (x)_n = x(x+1)...(x+n-1), (x)_0 = 1.
/// Direct product for n <= 64, log-gamma ratio with tracked sign beyond.
double pochhammer(double x, int n);

struct Saturating {
    double value;
    bool saturated;  ///< true when the exact value overflows double
};

/// Binomial coefficient binom(n+x, n) = (x+1)_n / n!, x > -1.
double binom_real(double x, int n);
Saturating binom_real_checked(double x, int n);

/// Γ(top+1) / (Γ(bottom+1) Γ(top-bottom+1)) for real top >= bottom >= 0.
double binom_gamma(double top, double bottom);

/// ln( binom(m+x, m) / binom(n+x, n) ) for x > -1, as a sum of log1p terms
/// (lgamma differences beyond 4096 terms).
double log_binom_ratio(double x, int n, int m);

/// Principal value of E_p(z) = z^{p-1} ∫_z^∞ e^{-s} s^{-p} ds, p > 0,
/// for z off the branch cut (-∞, 0].
///
/// The integral is taken along a ray leaving z at ±45° (0° for real z), so
/// the path never meets the cut, and evaluated by adaptive Gauss–Kronrod.
/// Throws DomainError on the cut and AccuracyError when the quadrature does
/// not reach rel_tol.
cplx gen_exp_integral(double p, cplx z, double rel_tol = 1e-12);

}  // namespace lagdisp
