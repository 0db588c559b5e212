#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "lusin/error.hpp"

namespace lusin {

// Dense element of E (x) (R^N)^{(x) k}. Index order (e, i1, ..., ik) with the
// last tensor slot fastest.
struct TensorPower {
    int dimE = 0;
    int spaceDim = 0;
    int order = 0;
    Eigen::VectorXd data;

    TensorPower(int e, int n, int k)
        : dimE(e), spaceDim(n), order(k), data(Eigen::VectorXd::Zero(e * ipow(n, k))) {
        if (e < 1 || n < 1 || k < 1) throw InvalidDimension("tensor dimensions must be positive");
    }

    static std::int64_t ipow(int base, int exp) {
        std::int64_t p = 1;
        for (int i = 0; i < exp; ++i) p *= base;
        return p;
    }

    std::int64_t offset(int e, const std::vector<int>& idx) const {
        std::int64_t o = e;
        for (int j = 0; j < order; ++j) o = o * spaceDim + idx[j];
        return o;
    }

    double& at(int e, const std::vector<int>& idx) { return data[offset(e, idx)]; }
    double at(int e, const std::vector<int>& idx) const { return data[offset(e, idx)]; }
};

/// e (x) xi (x) ... (x) xi with k frequency slots.
inline TensorPower decomposable_tensor(const Eigen::VectorXd& e, const Eigen::VectorXd& xi, int k) {
    TensorPower t(static_cast<int>(e.size()), static_cast<int>(xi.size()), k);
    const std::int64_t block = TensorPower::ipow(t.spaceDim, k);
    for (int a = 0; a < t.dimE; ++a) {
        std::vector<int> idx(k, 0);
        for (std::int64_t flat = 0; flat < block; ++flat) {
            std::int64_t rem = flat;
            double mono = 1.0;
            for (int j = k - 1; j >= 0; --j) {
                idx[j] = static_cast<int>(rem % t.spaceDim);
                rem /= t.spaceDim;
                mono *= xi[idx[j]];
            }
            t.data[a * block + flat] = e[a] * mono;
        }
    }
    return t;
}

// Contracts the last k-1 tensor slots of P with copies of v, leaving an
// element of E (x) R^N (returned as a dimE x N matrix). For k = 1 the
// contraction is empty and P is returned unchanged.
inline Eigen::MatrixXd bullet_product(const TensorPower& P, const Eigen::VectorXd& v) {
    if (v.size() != P.spaceDim) throw InvalidDimension("contraction vector has wrong length");
    const int N = P.spaceDim;
    const int k = P.order;
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(P.dimE, N);
    const std::int64_t tail = TensorPower::ipow(N, k - 1);
    const std::int64_t block = TensorPower::ipow(N, k);
    for (int a = 0; a < P.dimE; ++a) {
        for (int i1 = 0; i1 < N; ++i1) {
            double acc = 0.0;
            for (std::int64_t flat = 0; flat < tail; ++flat) {
                std::int64_t rem = flat;
                double mono = 1.0;
                for (int j = k - 2; j >= 0; --j) {
                    mono *= v[static_cast<int>(rem % N)];
                    rem /= N;
                }
                acc += P.data[a * block + i1 * tail + flat] * mono;
            }
            out(a, i1) = acc;
        }
    }
    return out;
}

} // namespace lusin
