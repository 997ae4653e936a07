// SPDX-License-Identifier: Apache-2.0
//
// Bernstein-type bounds for Jacobi polynomials and the machinery around them:
// weighted sup-norm scans, named inequalities, Sonin–Pólya abscissas, the
// binomial lower bound, disk and parabolic-biangle polynomials, the f_m
// extremum, and the Erdélyi–Magnus–Nevai ratio.
#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lagdisp/polynomials.hpp"
#include "lagdisp/report.hpp"

namespace lagdisp {

struct SupResult {
    double supremum = 0.0;
    double argmax = 0.0;
};

/// sup over [lo, hi] of f: Chebyshev grid of `grid` points, then golden-section
/// refinement on the bracketing cells of the best grid point (tolerance 1e-12).
/// Uses the OpenMP grid kernel; the result does not depend on the thread count.
SupResult sup_on_interval(const std::function<double(double)>& f, double lo, double hi, int grid, bool refine);

/// sup over [-1, 1] of (1-x)^a (1+x)^b |P_n^{(al,be)}(x)|. grid >= 101.
SupResult sup_weighted_jacobi(int n, OrthoParams p, double a, double b, int grid = 2001, bool refine = true);

enum class NamedBound { bernstein_legendre, bern_a0, B01, g_unif1, g_unif2, g_unif3, burq };

NamedBound parse_named_bound(const std::string& name);
std::string to_string(NamedBound b);

struct BoundOptions {
    int grid = 2001;
    bool refine = true;
    double C = 0.0;  ///< constant for g_unif3 / burq; 0 selects the default
    double tol = 1e-9;
};

inline constexpr double kGUnif3DefaultC = 12.0;
inline constexpr double kBurqDefaultC = 1.0;

/// Scan the left side of the named inequality and compare with its right side.
/// For burq, params.alpha carries the integer order m of the Gegenbauer family.
/// Out-of-range parameters still run; the report is then marked exploratory.
BoundReport check_named_bound(NamedBound which, int n, OrthoParams params, const BoundOptions& opt = {});

/// Whether the named inequality is proven for these parameters.
bool named_bound_valid(NamedBound which, int n, OrthoParams params);

struct SoninBracket {
    double x0 = -1.0;
    double x1 = -1.0;
    double x2 = 1.0;
    double lambda_n = 0.0;
    bool x2_limit = false;  ///< a = 0: x2 is the a -> 0+ limit, not the formula
};

/// Requires a, b >= 0.
SoninBracket sonin_points(int n, OrthoParams p);

struct X1X2Check {
    bool holds = false;
    bool exploratory = false;
    double x1 = 0.0;
    double x2 = 0.0;
};
X1X2Check check_x1_le_x2(int n, OrthoParams p);

/// binom(x+y, x) against (x+y)^y (y <= 1) or ((x+y)/y)^y (y >= 1).
/// supremum carries binom(x+y, x); slack = lhs - rhs.
BoundReport binom_lower_bound_check(double x, double y, double tol = 1e-12);

struct SoninMaximaCheck {
    bool holds = true;
    int maxima = 0;
    std::string detail;
};

/// Local maxima of ((1+x)/2)^b P_n^2 located from sign changes of its
/// derivative on a dense grid: nondecreasing toward x = 1 on (x1, 1],
/// nonincreasing on (x0, x1), none on [-1, x0).
SoninMaximaCheck sonin_maxima_check(int n, OrthoParams p, int samples = 0);

/// r^{|m-n|} e^{i(m-n)phi} R_{min(m,n)}^{(a, |m-n|)}(2r^2-1).
std::complex<double> disk_R(int m, int n, double alpha, double r, double phi);
std::complex<double> disk_R(int m, int n, double alpha, std::complex<double> z);

struct DiskSample {
    double theta1, theta2, phi1, phi2, psi, r;
};

/// |LHS - RHS| of the disk-polynomial addition formula. Requires a > 0, m, n <= 8.
double verify_disk_addition(int m, int n, double alpha, const DiskSample& s);

/// Deterministic pseudo-random samples (std::mt19937_64 seeded by `seed`).
std::vector<DiskSample> disk_samples(std::uint64_t seed, int count);

/// R_{n-k}^{(a, b+k+1/2)}(2x1-1) x1^{k/2} R_k^{(b,b)}(x2/sqrt(x1)) on the
/// biangle 0 <= x2^2 <= x1 <= 1.
double biangle_R(int n, int k, double alpha, double beta, double x1, double x2);

/// sup of |biangle_R| over a triangular grid of the biangle, against 1.
/// Exploratory unless a >= b + 1/2 >= 0.
BoundReport check_biangle_bound(int n, int k, double alpha, double beta, int grid = 101, double tol = 1e-12);

/// sup_x (1-x^2)^{1/4} sqrt(w) |p_n| / max(1, (|a|+|b|)^{1/4}) with p_n orthonormal.
/// Reported, never asserted. Requires a, b >= -1/2.
SupResult emn_scan(int n, OrthoParams p, int grid = 4001);

/// f_m(x) = x^{(m-1)/2} ((m+1+a)x - m) on [0, 1]. The report compares
/// max|f_m| with 1+a; for m >= 2 the interior critical point
/// x0 = m(m-1)/((m+1)(m+1+a)) must also satisfy |f_m(x0)| < 2 sqrt(2)/3.
struct FmCheck {
    BoundReport max_report;
    double x0 = 0.0;
    double f_x0 = 0.0;
    bool x0_below = true;  ///< vacuous for m = 1
    bool pass = false;
};
FmCheck f_m_extremum_check(int m, double alpha);
double f_m(int m, double alpha, double x);

/// Search for violations of the bern_a0 form at n = 1, b = 0 with a in (-1, 0):
/// |P_1^{(a,0)}(x)| > 1+a. Returns every (a, x) on the given grids that fails.
struct Violation {
    double alpha, x, lhs, bound;
};
std::vector<Violation> bern_a0_negative_alpha_search(const std::vector<double>& alphas, int xgrid = 201);

}  // namespace lagdisp
