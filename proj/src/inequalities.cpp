// SPDX-License-Identifier: Apache-2.0
#include "lagdisp/inequalities.hpp"

#include <algorithm>
#include <boost/math/special_functions/digamma.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "lagdisp/errors.hpp"
#include "lagdisp/scan.hpp"
#include "lagdisp/special_fn.hpp"

namespace lagdisp {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// base^e with NaN for a zero base under a negative exponent, so grid scans
// of exploratory (singular) weights skip the endpoint instead of throwing.
double wpow(double base, double e) {
    if (base == 0.0 && e < 0.0) return kNaN;
    return endpoint_power(base, e);
}

constexpr double kHumpMargin = 1e-2;
constexpr std::size_t kMaxHumps = 16;

bool is_nonneg_integer(double v) { return v >= 0.0 && v == std::floor(v); }

// maximize f on [a, b] by golden sections down to width tol
SupResult golden_max(const std::function<double(double)>& f, double a, double b, double tol) {
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - g * (b - a);
    double d = a + g * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc >= fd || std::isnan(fd)) {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    return fc >= fd || std::isnan(fd) ? SupResult{fc, c} : SupResult{fd, d};
}

}  // namespace

SupResult sup_on_interval(const std::function<double(double)>& f, double lo, double hi, int grid, bool refine) {
    if (!(hi > lo)) throw DomainError("sup_on_interval: empty interval");
    auto xs = scan::chebyshev_grid(grid);
    for (auto& x : xs) x = lo + 0.5 * (hi - lo) * (1.0 + x);
    xs.front() = lo;
    xs.back() = hi;
    const auto vals = scan::omp::grid_values(xs, f);
    const auto best = scan::first_max(vals);
    SupResult res{best.value, xs[best.index]};
    if (std::isinf(res.supremum) && res.supremum < 0.0) return {kNaN, kNaN};
    if (!refine) return res;
    // Weighted Jacobi maxima nearly equioscillate, so the best grid point may
    // sit on the wrong hump. Refine every grid-local max close to the best.
    std::vector<std::size_t> cand;
    const std::size_t K = xs.size();
    for (std::size_t j = 0; j < K; ++j) {
        if (std::isnan(vals[j]) || vals[j] < best.value - kHumpMargin * std::abs(best.value)) continue;
        const bool left = j == 0 || std::isnan(vals[j - 1]) || vals[j] >= vals[j - 1];
        const bool right = j + 1 == K || std::isnan(vals[j + 1]) || vals[j] >= vals[j + 1];
        if (left && right) cand.push_back(j);
    }
    std::stable_sort(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
    if (cand.size() > kMaxHumps) cand.resize(kMaxHumps);
    for (std::size_t j : cand) {
        const auto r = golden_max(f, xs[j == 0 ? 0 : j - 1], xs[std::min(j + 1, K - 1)], 1e-12);
        if (r.supremum > res.supremum) res = r;
    }
    return res;
}

SupResult sup_weighted_jacobi(int n, OrthoParams p, double a, double b, int grid, bool refine) {
    if (grid < 101) throw UsageError("sup_weighted_jacobi: grid must be at least 101");
    if (n < 0) throw DomainError("sup_weighted_jacobi: negative degree");
    if (!(a >= 0.0) || !(b >= 0.0)) throw DomainError("sup_weighted_jacobi: weight exponents must be nonnegative");
    auto f = [=](double x) {
        return endpoint_power(1.0 - x, a) * endpoint_power(1.0 + x, b) * std::abs(jacobi_P(n, p.alpha, p.beta, x));
    };
    return sup_on_interval(f, -1.0, 1.0, grid, refine);
}

NamedBound parse_named_bound(const std::string& name) {
    if (name == "bernstein_legendre") return NamedBound::bernstein_legendre;
    if (name == "bern_a0") return NamedBound::bern_a0;
    if (name == "B01") return NamedBound::B01;
    if (name == "g_unif1") return NamedBound::g_unif1;
    if (name == "g_unif2") return NamedBound::g_unif2;
    if (name == "g_unif3") return NamedBound::g_unif3;
    if (name == "burq") return NamedBound::burq;
    throw UsageError("unknown bound '" + name + "'");
}

std::string to_string(NamedBound b) {
    switch (b) {
        case NamedBound::bernstein_legendre: return "bernstein_legendre";
        case NamedBound::bern_a0: return "bern_a0";
        case NamedBound::B01: return "B01";
        case NamedBound::g_unif1: return "g_unif1";
        case NamedBound::g_unif2: return "g_unif2";
        case NamedBound::g_unif3: return "g_unif3";
        case NamedBound::burq: return "burq";
    }
    return "?";
}

bool named_bound_valid(NamedBound which, int n, OrthoParams p) {
    const double a = p.alpha, b = p.beta;
    switch (which) {
        case NamedBound::bernstein_legendre: return true;
        case NamedBound::bern_a0: return b >= 0.0 && a >= b - std::floor(b);
        case NamedBound::B01: return a > -1.0 && is_nonneg_integer(b + n);
        case NamedBound::g_unif1:
        case NamedBound::g_unif2: return is_nonneg_integer(a) && is_nonneg_integer(b);
        case NamedBound::g_unif3: return a >= 0.0 && b >= 0.0;
        case NamedBound::burq: return is_nonneg_integer(a);
    }
    return false;
}

BoundReport check_named_bound(NamedBound which, int n, OrthoParams p, const BoundOptions& opt) {
    if (n < 0) throw DomainError("check_named_bound: negative degree");
    if (opt.grid < 101) throw UsageError("check_named_bound: grid must be at least 101");
    const double a = p.alpha, b = p.beta;
    std::function<double(double)> f;
    double bound = kNaN;
    switch (which) {
        case NamedBound::bernstein_legendre:
            f = [=](double x) { return endpoint_power((1.0 - x) * (1.0 + x), 0.25) * std::abs(legendre_P(n, x)); };
            bound = 2.0 / std::sqrt(std::numbers::pi * (2.0 * n + 1.0));
            break;
        case NamedBound::bern_a0:
            f = [=](double x) { return wpow(0.5 * (1.0 + x), 0.5 * b) * std::abs(jacobi_P(n, a, b, x)); };
            bound = a > -1.0 ? binom_real(a, n) : kNaN;
            break;
        case NamedBound::B01: {
            f = [=](double x) {
                return wpow(0.5 * (1.0 - x), 0.5 * (a + 1.0)) * wpow(0.5 * (1.0 + x), 0.5 * b) *
                       std::abs(jacobi_P(n, a, b, x));
            };
            int s1 = 1, s2 = 1, s3 = 1, s4 = 1;
            const double lg = log_abs_gamma(n + a + 1.0, &s1) + log_abs_gamma(n + b + 1.0, &s2) -
                              log_abs_gamma(n + 1.0, &s3) - log_abs_gamma(n + a + b + 1.0, &s4);
            bound = s1 * s2 * s3 * s4 > 0 ? std::exp(0.5 * lg) : kNaN;
            break;
        }
        case NamedBound::g_unif1:
            f = [=](double x) { return std::abs(g_fn(n, a, b, x)); };
            bound = 1.0;
            break;
        case NamedBound::g_unif2:
            f = [=](double x) { return std::abs(g_fn(n, a, b, x)); };
            bound = std::pow((n + 1.0) * (n + a + b + 1.0) / ((n + a + 1.0) * (n + b + 1.0)), 0.25);
            break;
        case NamedBound::g_unif3: {
            const double C = opt.C > 0.0 ? opt.C : kGUnif3DefaultC;
            f = [=](double x) { return endpoint_power((1.0 - x) * (1.0 + x), 0.25) * std::abs(g_fn(n, a, b, x)); };
            bound = C / std::pow(2.0 * n + a + b + 1.0, 0.25);
            break;
        }
        case NamedBound::burq: {
            if (!(a >= 0.0)) throw DomainError("check_named_bound: burq needs order m >= 0");
            const double C = opt.C > 0.0 ? opt.C : kBurqDefaultC;
            f = [=](double x) {
                return std::pow(std::abs(x), 1.0 / 6.0) * endpoint_power((1.0 - x) * (1.0 + x), 0.5 * a + 1.0 / 6.0) *
                       std::abs(jacobi_orthonormal(n, a, a, x));
            };
            bound = C * std::pow(n + a + 1.0, 1.0 / 6.0);
            break;
        }
    }
    const auto sup = sup_on_interval(f, -1.0, 1.0, opt.grid, opt.refine);
    BoundReport r;
    r.name = to_string(which);
    r.supremum = sup.supremum;
    r.arg_x = sup.argmax;
    r.arg_n = n;
    r.bound = bound;
    r.slack = bound - sup.supremum;
    r.pass = std::isfinite(r.slack) && within_tolerance(r.slack, bound, opt.tol);
    r.exploratory = !named_bound_valid(which, n, p);
    return r;
}

SoninBracket sonin_points(int n, OrthoParams p) {
    const double a = p.alpha, b = p.beta;
    if (n < 0) throw DomainError("sonin_points: negative degree");
    if (!(a >= 0.0) || !(b >= 0.0)) throw DomainError("sonin_points: requires alpha, beta >= 0");
    SoninBracket s;
    s.lambda_n = n * (n + a + b + 1.0);
    const double D = b * b + 2.0 * b * (1.0 + a) + 4.0 * s.lambda_n;
    if (D > 0.0) {
        s.x0 = -1.0 + 2.0 * b * b / D;
        s.x1 = 1.0 - 2.0 * (1.0 + 2.0 * a) * (b + b * a + 2.0 * s.lambda_n) / ((1.0 + a) * D);
    }
    // L = ln(binom(n+a, n) binom(n+a+b, n+b)); x2 = 1 - 2 exp(-L/a)
    if (a > 0.0) {
        const double L = std::log(binom_real(a, n)) + log_gamma(n + a + b + 1.0) - log_gamma(n + b + 1.0) -
                         log_gamma(a + 1.0);
        s.x2 = 1.0 - 2.0 * std::exp(-L / a);
    } else {
        // a -> 0+: L/a -> H_n + psi(n+b+1) + gamma
        double H = 0.0;
        for (int k = 1; k <= n; ++k) H += 1.0 / k;
        const double c = H + boost::math::digamma(n + b + 1.0) + std::numbers::egamma;
        s.x2 = 1.0 - 2.0 * std::exp(-c);
        s.x2_limit = true;
    }
    return s;
}

X1X2Check check_x1_le_x2(int n, OrthoParams p) {
    const auto s = sonin_points(n, p);
    X1X2Check c;
    c.x1 = s.x1;
    c.x2 = s.x2;
    c.holds = s.x1 <= s.x2 + 1e-14;
    c.exploratory = !((p.alpha >= 1.0 && n >= 1) || (p.alpha >= 0.0 && n >= 2));
    return c;
}

BoundReport binom_lower_bound_check(double x, double y, double tol) {
    if (!(x >= 0.0) || !(y >= 0.0)) throw DomainError("binom_lower_bound_check: requires x, y >= 0");
    BoundReport r;
    r.name = "binom";
    r.supremum = binom_gamma(x + y, x);
    r.bound = y <= 1.0 ? std::pow(x + y, y) : std::pow((x + y) / y, y);
    r.slack = r.supremum - r.bound;
    r.pass = within_tolerance(r.slack, r.bound, tol);
    return r;
}

SoninMaximaCheck sonin_maxima_check(int n, OrthoParams p, int samples) {
    const double a = p.alpha, b = p.beta;
    const auto br = sonin_points(n, p);
    if (samples <= 0) samples = 200 * (n + 1) + 2000;
    SoninMaximaCheck out;
    if (n == 0) return out;
    // sign of d/dx [((1+x)/2)^b P^2] = sign of P (b P / (2(1+x)) + P')
    auto deriv_sign = [&](double x) {
        const double P = jacobi_P(n, a, b, x);
        const double dP = 0.5 * (n + a + b + 1.0) * jacobi_P(n - 1, a + 1.0, b + 1.0, x);
        const double s = P * (0.5 * b * P / (1.0 + x) + dP);
        return s > 0.0 ? 1 : (s < 0.0 ? -1 : 0);
    };
    auto h = [&](double x) {
        const double P = jacobi_P(n, a, b, x);
        return endpoint_power(0.5 * (1.0 + x), b) * P * P;
    };
    std::vector<double> xs, hs;
    double prev_x = -1.0 + 1.0 / samples;
    int prev_s = deriv_sign(prev_x);
    for (int i = 1; i < samples; ++i) {
        const double x = -1.0 + (2.0 * i + 1.0) / samples;
        int s = deriv_sign(x);
        if (s == 0) s = prev_s;
        if (prev_s > 0 && s < 0) {
            double lo = prev_x, hi = x;
            for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
                const double mid = 0.5 * (lo + hi);
                (deriv_sign(mid) >= 0 ? lo : hi) = mid;
            }
            const double xm = 0.5 * (lo + hi);
            xs.push_back(xm);
            hs.push_back(h(xm));
        }
        prev_x = x;
        prev_s = s;
    }
    out.maxima = static_cast<int>(xs.size());
    std::ostringstream why;
    constexpr double rel = 1e-10;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < br.x0) {
            out.holds = false;
            why << "maximum at x=" << xs[i] << " below x0=" << br.x0 << "; ";
        }
        if (i == 0) continue;
        const double slackscale = rel * std::max(hs[i], hs[i - 1]);
        if (xs[i - 1] > br.x1 && hs[i] < hs[i - 1] - slackscale) {
            out.holds = false;
            why << "decrease above x1 at x=" << xs[i] << "; ";
        }
        if (xs[i] < br.x1 && xs[i - 1] > br.x0 && hs[i] > hs[i - 1] + slackscale) {
            out.holds = false;
            why << "increase below x1 at x=" << xs[i] << "; ";
        }
    }
    out.detail = why.str();
    return out;
}

std::complex<double> disk_R(int m, int n, double alpha, double r, double phi) {
    if (m < 0 || n < 0) throw DomainError("disk_R: negative index");
    if (!(r >= 0.0 && r <= 1.0)) throw DomainError("disk_R: requires 0 <= r <= 1");
    const int d = std::abs(m - n);
    const double radial = std::pow(r, d) * jacobi_R(std::min(m, n), alpha, d, 2.0 * r * r - 1.0);
    return std::polar(radial, (m - n) * phi);
}

std::complex<double> disk_R(int m, int n, double alpha, std::complex<double> z) {
    const double r = std::min(std::abs(z), 1.0);
    return disk_R(m, n, alpha, r, z == 0.0 ? 0.0 : std::arg(z));
}

double verify_disk_addition(int m, int n, double alpha, const DiskSample& s) {
    if (!(alpha > 0.0)) throw DomainError("verify_disk_addition: requires alpha > 0");
    if (m < 0 || n < 0) throw DomainError("verify_disk_addition: negative index");
    if (m > 8 || n > 8) throw UsageError("verify_disk_addition: m, n <= 8");
    using C = std::complex<double>;
    const C z1 = std::polar(std::cos(s.theta1), s.phi1);
    const C z2 = std::polar(std::cos(s.theta2), s.phi2);
    const C lhs_arg = z1 * z2 + std::sin(s.theta1) * std::sin(s.theta2) * std::polar(s.r, s.psi);
    const C lhs = disk_R(m, n, alpha, lhs_arg);
    const double s1 = std::sin(s.theta1), s2 = std::sin(s.theta2);
    C rhs{};
    for (int k = 0; k <= m; ++k) {
        for (int l = 0; l <= n; ++l) {
            const double c = alpha / (alpha + k + l) * binom_real(k, m - k) * binom_real(l, n - l) *
                             pochhammer(alpha + n + 1.0, k) * pochhammer(alpha + m + 1.0, l) /
                             (pochhammer(alpha + l, k) * pochhammer(alpha + k, l));
            const double a2 = alpha + k + l;
            rhs += c * std::pow(s1, k + l) * disk_R(m - k, n - l, a2, z1) * std::pow(s2, k + l) *
                   disk_R(m - k, n - l, a2, z2) * disk_R(k, l, alpha - 1.0, s.r, s.psi);
        }
    }
    return std::abs(lhs - rhs);
}

std::vector<DiskSample> disk_samples(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
    std::uniform_real_distribution<double> turn(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<DiskSample> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        DiskSample s;
        s.theta1 = angle(rng);
        s.theta2 = angle(rng);
        s.phi1 = turn(rng);
        s.phi2 = turn(rng);
        s.psi = turn(rng);
        s.r = unit(rng);
        out.push_back(s);
    }
    return out;
}

double biangle_R(int n, int k, double alpha, double beta, double x1, double x2) {
    if (k < 0 || k > n) throw DomainError("biangle_R: requires 0 <= k <= n");
    if (!(x1 >= 0.0 && x1 <= 1.0) || x2 * x2 > x1 * (1.0 + 1e-14))
        throw DomainError("biangle_R: point outside 0 <= x2^2 <= x1 <= 1");
    if (x1 == 0.0) return k == 0 ? jacobi_R(n, alpha, beta + 0.5, -1.0) : 0.0;
    const double s = std::sqrt(x1);
    const double y = std::clamp(x2 / s, -1.0, 1.0);
    return jacobi_R(n - k, alpha, beta + k + 0.5, 2.0 * x1 - 1.0) * std::pow(s, k) * jacobi_R(k, beta, beta, y);
}

BoundReport check_biangle_bound(int n, int k, double alpha, double beta, int grid, double tol) {
    if (grid < 2) throw UsageError("check_biangle_bound: grid must be at least 2");
    BoundReport r;
    r.name = "biangle";
    r.bound = 1.0;
    r.arg_n = n;
    r.arg_m = k;
    double best = -1.0;
    for (int i = 0; i < grid; ++i) {
        const double x1 = static_cast<double>(i) / (grid - 1);
        const double s = std::sqrt(x1);
        for (int j = 0; j < grid; ++j) {
            const double x2 = j == grid - 1 ? s : -s + 2.0 * s * j / (grid - 1);
            const double v = std::abs(biangle_R(n, k, alpha, beta, x1, x2));
            if (v > best) {
                best = v;
                r.arg_x = x1;
            }
        }
    }
    r.supremum = best;
    r.slack = 1.0 - best;
    r.pass = within_tolerance(r.slack, 1.0, tol);
    r.exploratory = !(alpha >= beta + 0.5 && beta + 0.5 >= 0.0);
    return r;
}

SupResult emn_scan(int n, OrthoParams p, int grid) {
    const double a = p.alpha, b = p.beta;
    if (!(a >= -0.5) || !(b >= -0.5)) throw DomainError("emn_scan: requires alpha, beta >= -1/2");
    const double scale = std::max(1.0, std::pow(std::abs(a) + std::abs(b), 0.25));
    auto f = [=](double x) {
        return wpow(1.0 - x, 0.25 + 0.5 * a) * wpow(1.0 + x, 0.25 + 0.5 * b) *
               std::abs(jacobi_orthonormal(n, a, b, x)) / scale;
    };
    return sup_on_interval(f, -1.0, 1.0, grid, true);
}

double f_m(int m, double alpha, double x) {
    return endpoint_power(x, 0.5 * (m - 1)) * ((m + 1.0 + alpha) * x - m);
}

FmCheck f_m_extremum_check(int m, double alpha) {
    if (m < 1) throw DomainError("f_m_extremum_check: requires m >= 1");
    if (!(alpha >= 0.0)) throw DomainError("f_m_extremum_check: requires alpha >= 0");
    FmCheck c;
    const auto sup = sup_on_interval([&](double x) { return std::abs(f_m(m, alpha, x)); }, 0.0, 1.0, 2001, true);
    auto& r = c.max_report;
    r.name = "f_m";
    r.supremum = sup.supremum;
    r.arg_x = sup.argmax;
    r.arg_m = m;
    r.bound = 1.0 + alpha;
    r.slack = r.bound - r.supremum;
    r.pass = within_tolerance(r.slack, r.bound, 1e-12);
    if (m >= 2) {
        c.x0 = m * (m - 1.0) / ((m + 1.0) * (m + 1.0 + alpha));
        c.f_x0 = f_m(m, alpha, c.x0);
        c.x0_below = std::abs(c.f_x0) < 2.0 * std::numbers::sqrt2 / 3.0;
    }
    c.pass = r.pass && c.x0_below;
    return c;
}

std::vector<Violation> bern_a0_negative_alpha_search(const std::vector<double>& alphas, int xgrid) {
    if (xgrid < 2) throw UsageError("bern_a0_negative_alpha_search: grid must be at least 2");
    std::vector<Violation> out;
    for (double a : alphas) {
        if (!(a > -1.0 && a < 0.0)) throw DomainError("bern_a0_negative_alpha_search: alpha must lie in (-1, 0)");
        for (int i = 0; i < xgrid; ++i) {
            const double x = -1.0 + 2.0 * i / (xgrid - 1);
            const double lhs = std::abs(jacobi_P(1, a, 0.0, x));
            if (lhs > (1.0 + a) * (1.0 + 1e-12)) out.push_back({a, x, lhs, 1.0 + a});
        }
    }
    return out;
}

}  // namespace lagdisp
