// SPDX-License-Identifier: Apache-2.0
//
// Wigner d-matrix of the degree d = two_l + 1 representation of SU(2) at
// phi = varphi = 0, built from g-functions at cos(2 theta).
#pragma once

#include <Eigen/Dense>

namespace lagdisp {

/// Rows and columns are indexed by k, j = -l, ..., l in ascending order.
/// Entries with k >= |j| come from g_{l-k}^{(k-j,k+j)}(cos 2theta); the rest
/// follow by symmetry. Throws InternalError if ||D^T D - I||_max > 1e-8.
Eigen::MatrixXd wigner_d(int two_l, double theta);

/// ||D^T D - I||_max for the matrix above.
double wigner_unitarity_defect(const Eigen::MatrixXd& D);

}  // namespace lagdisp
