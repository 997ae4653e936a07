// SPDX-License-Identifier: Apache-2.0
#include "lagdisp/wigner.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "lagdisp/errors.hpp"
#include "lagdisp/polynomials.hpp"

namespace lagdisp {

namespace {

// doubled indices: K = 2k, J = 2j, L = 2l; requires K >= |J|
double base_entry(int L, int K, int J, double x) {
    return g_fn((L - K) / 2, 0.5 * (K - J), 0.5 * (K + J), x);
}

double parity(int J, int K) { return ((J - K) / 2) % 2 ? -1.0 : 1.0; }

}  // namespace

double wigner_unitarity_defect(const Eigen::MatrixXd& D) {
    const Eigen::MatrixXd E = D.transpose() * D - Eigen::MatrixXd::Identity(D.rows(), D.cols());
    return E.cwiseAbs().maxCoeff();
}

Eigen::MatrixXd wigner_d(int two_l, double theta) {
    if (two_l < 0) throw DomainError("wigner_d: two_l must be nonnegative");
    if (!(theta >= 0.0 && theta <= 0.5 * std::numbers::pi)) throw DomainError("wigner_d: theta outside [0, pi/2]");
    const int d = two_l + 1;
    const double x = std::cos(2.0 * theta);
    Eigen::MatrixXd D(d, d);
    for (int r = 0; r < d; ++r) {
        const int K = 2 * r - two_l;
        for (int c = 0; c < d; ++c) {
            const int J = 2 * c - two_l;
            double v;
            if (K >= std::abs(J))
                v = base_entry(two_l, K, J, x);
            else if (J >= std::abs(K))
                v = parity(J, K) * base_entry(two_l, J, K, x);
            else if (-K >= std::abs(J))
                v = parity(J, K) * base_entry(two_l, -K, -J, x);
            else
                v = base_entry(two_l, -J, -K, x);
            D(r, c) = v;
        }
    }
    const double defect = wigner_unitarity_defect(D);
    if (!(defect <= 1e-8)) throw InternalError("wigner_d: unitarity defect " + std::to_string(defect));
    return D;
}

}  // namespace lagdisp
