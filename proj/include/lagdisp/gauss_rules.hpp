// SPDX-License-Identifier: Apache-2.0
//
// Gauss rules for probability-normalized Jacobi and Laguerre weights.
// Nodes are eigenvalues of the Jacobi (recurrence) matrix; weights are
// Christoffel numbers 1 / sum_k p_k(x_j)^2 from the orthonormal recurrence,
// which stays accurate where eigenvector components underflow.
#pragma once

#include <memory>
#include <vector>

namespace lagdisp {

struct GaussRule {
    std::vector<double> nodes;    ///< ascending
    std::vector<double> weights;  ///< sum to 1
};

/// Rule from orthonormal recurrence data: b[k] p_{k+1} = (x - a[k]) p_k - b[k-1] p_{k-1}.
/// a has K entries, b has at least K-1.
GaussRule gauss_rule_from_recurrence(const std::vector<double>& a, const std::vector<double>& b);

/// K-point rule for (1-x)^a (1+x)^b dx / mass on [-1, 1]; cached, thread-safe.
std::shared_ptr<const GaussRule> gauss_jacobi(int K, double alpha, double beta);

/// K-point rule for e^{-x} x^a dx / Γ(a+1) on [0, inf); cached, thread-safe.
std::shared_ptr<const GaussRule> gauss_laguerre(int K, double alpha);

/// Orthonormal recurrence coefficients of the probability Jacobi weight.
void jacobi_recurrence(int K, double alpha, double beta, std::vector<double>& a, std::vector<double>& b);

}  // namespace lagdisp
