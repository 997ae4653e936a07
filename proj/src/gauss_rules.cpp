// SPDX-License-Identifier: Apache-2.0
#include "lagdisp/gauss_rules.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "lagdisp/errors.hpp"

namespace lagdisp {

GaussRule gauss_rule_from_recurrence(const std::vector<double>& a, const std::vector<double>& b) {
    const int K = static_cast<int>(a.size());
    if (K < 1 || static_cast<int>(b.size()) < K - 1) throw InternalError("gauss rule: bad recurrence data");

    GaussRule rule;
    if (K == 1) {
        rule.nodes = {a[0]};
        rule.weights = {1.0};
        return rule;
    }
    Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(a.data(), K);
    Eigen::VectorXd sub = Eigen::Map<const Eigen::VectorXd>(b.data(), K - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw InternalError("gauss rule: tridiagonal eigensolve failed");

    rule.nodes.resize(K);
    rule.weights.resize(K);
    constexpr double kBig = 1e150;
    for (int j = 0; j < K; ++j) {
        const double x = es.eigenvalues()[j];
        // Christoffel number, with running rescaling so huge p_k do not overflow.
        double prev = 0.0, cur = 1.0, sum = 1.0, log_scale = 0.0;
        for (int k = 0; k + 1 < K; ++k) {
            const double back = k > 0 ? b[k - 1] * prev : 0.0;
            const double next = ((x - a[k]) * cur - back) / b[k];
            prev = cur;
            cur = next;
            sum += cur * cur;
            if (std::abs(cur) > kBig) {
                prev /= kBig;
                cur /= kBig;
                sum /= kBig * kBig;
                log_scale += 2.0 * std::log(kBig);
            }
        }
        rule.nodes[j] = x;
        rule.weights[j] = std::exp(-std::log(sum) - log_scale);
    }
    return rule;
}

void jacobi_recurrence(int K, double alpha, double beta, std::vector<double>& a, std::vector<double>& b) {
    const double s = alpha + beta;
    a.assign(K, 0.0);
    b.assign(K > 0 ? K - 1 : 0, 0.0);
    for (int k = 0; k < K; ++k) {
        if (k == 0) {
            a[k] = (beta - alpha) / (s + 2.0);
        } else {
            a[k] = (beta * beta - alpha * alpha) / ((2.0 * k + s) * (2.0 * k + s + 2.0));
        }
    }
    for (int k = 1; k < K; ++k) {
        double b2;
        if (k == 1) {
            b2 = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + s) * (2.0 + s) * (3.0 + s));
        } else {
            const double c = 2.0 * k + s;
            b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + s) / (c * c * (c + 1.0) * (c - 1.0));
        }
        b[k - 1] = std::sqrt(b2);
    }
}

namespace {

using Key = std::tuple<int, int, double, double>;  // kind, K, alpha, beta

std::shared_ptr<const GaussRule> cached(const Key& key, GaussRule (*build)(int, double, double)) {
    static std::mutex mutex;
    static std::map<Key, std::shared_ptr<const GaussRule>> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto rule = std::make_shared<const GaussRule>(build(std::get<1>(key), std::get<2>(key), std::get<3>(key)));
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, std::move(rule)).first->second;
}

GaussRule build_jacobi(int K, double alpha, double beta) {
    std::vector<double> a, b;
    jacobi_recurrence(K, alpha, beta, a, b);
    return gauss_rule_from_recurrence(a, b);
}

GaussRule build_laguerre(int K, double alpha, double) {
    std::vector<double> a(K), b(K > 0 ? K - 1 : 0);
    for (int k = 0; k < K; ++k) a[k] = 2.0 * k + 1.0 + alpha;
    for (int k = 0; k + 1 < K; ++k) b[k] = std::sqrt((k + 1.0) * (k + 1.0 + alpha));
    return gauss_rule_from_recurrence(a, b);
}

}  // namespace

std::shared_ptr<const GaussRule> gauss_jacobi(int K, double alpha, double beta) {
    if (K < 1) throw DomainError("gauss_jacobi: need at least one node");
    if (!(alpha > -1.0) || !(beta > -1.0)) throw DomainError("gauss_jacobi: requires a, b > -1");
    return cached({0, K, alpha, beta}, &build_jacobi);
}

std::shared_ptr<const GaussRule> gauss_laguerre(int K, double alpha) {
    if (K < 1) throw DomainError("gauss_laguerre: need at least one node");
    if (!(alpha > -1.0)) throw DomainError("gauss_laguerre: requires a > -1");
    return cached({1, K, alpha, 0.0}, &build_laguerre);
}

}  // namespace lagdisp
