#pragma once

#include <map>
#include <vector>

#include <Eigen/Dense>

#include "lusin/combinatorics.hpp"
#include "lusin/error.hpp"

namespace lusin {

// A homogeneous constant-coefficient operator sum_{|alpha|=k} A_alpha d^alpha,
// with A_alpha in Hom(E;F). Coefficients are keyed by multi-index; missing
// keys are zero matrices.
struct OperatorSpec {
    int spaceDim = 0; // N
    int dimE = 0;
    int dimF = 0;
    int order = 0; // k
    std::map<std::vector<int>, Eigen::MatrixXd> coeffs;

    OperatorSpec() = default;

    OperatorSpec(int N, int e, int f, int k, std::map<std::vector<int>, Eigen::MatrixXd> c)
        : spaceDim(N), dimE(e), dimF(f), order(k), coeffs(std::move(c)) {
        if (N < 1 || e < 1 || f < 1 || k < 1)
            throw InvalidDimension("operator dimensions must be positive");
        bool anyNonzero = false;
        for (const auto& [alpha, mat] : coeffs) {
            if (static_cast<int>(alpha.size()) != N)
                throw InvalidDimension("multi-index length does not match space dimension");
            if (multiindex_modulus(alpha) != k)
                throw InvalidDimension("multi-index modulus does not match operator order");
            if (mat.rows() != f || mat.cols() != e)
                throw InvalidDimension("coefficient matrix has wrong shape");
            if (mat.cwiseAbs().maxCoeff() > 0.0) anyNonzero = true;
        }
        if (!anyNonzero) throw ZeroOperator("all coefficient matrices are zero");
    }

    /// Coefficient of a multi-index, zero when absent.
    Eigen::MatrixXd coeff(const std::vector<int>& alpha) const {
        auto it = coeffs.find(alpha);
        if (it != coeffs.end()) return it->second;
        return Eigen::MatrixXd::Zero(dimF, dimE);
    }

    /// First-order coefficient A_i (the matrix of d/dx_i). Requires k == 1.
    Eigen::MatrixXd coeffAxis(int axis) const {
        if (order != 1) throw UnsupportedOrder("coeffAxis requires a first-order operator");
        std::vector<int> alpha(spaceDim, 0);
        alpha[axis] = 1;
        return coeff(alpha);
    }
};

/// Principal symbol sum_alpha A_alpha xi^alpha, a k-homogeneous matrix
/// polynomial in the frequency variable.
inline Eigen::MatrixXd symbol_eval(const OperatorSpec& op, const Eigen::VectorXd& xi) {
    if (xi.size() != op.spaceDim) throw InvalidDimension("frequency vector has wrong length");
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(op.dimF, op.dimE);
    for (const auto& [alpha, mat] : op.coeffs) {
        double mono = 1.0;
        for (int i = 0; i < op.spaceDim; ++i)
            for (int c = 0; c < alpha[i]; ++c) mono *= xi[i];
        s += mono * mat;
    }
    return s;
}

/// Gradient of maps R^N -> R^M as a first-order operator: values are M x N
/// matrices flattened row-major, so dimF = M*N and the symbol sends e to
/// e (x) xi.
inline OperatorSpec gradient_operator_spec(int N, int M = 1) {
    if (N < 1 || M < 1) throw InvalidDimension("gradient operator needs N, M >= 1");
    std::map<std::vector<int>, Eigen::MatrixXd> coeffs;
    for (int i = 0; i < N; ++i) {
        Eigen::MatrixXd A = Eigen::MatrixXd::Zero(M * N, M);
        for (int a = 0; a < M; ++a) A(a * N + i, a) = 1.0;
        std::vector<int> alpha(N, 0);
        alpha[i] = 1;
        coeffs.emplace(std::move(alpha), std::move(A));
    }
    return OperatorSpec(N, M, M * N, 1, std::move(coeffs));
}

/// Divergence of vector fields on R^N.
inline OperatorSpec divergence_operator_spec(int N) {
    if (N < 1) throw InvalidDimension("divergence operator needs N >= 1");
    std::map<std::vector<int>, Eigen::MatrixXd> coeffs;
    for (int i = 0; i < N; ++i) {
        Eigen::MatrixXd A = Eigen::MatrixXd::Zero(1, N);
        A(0, i) = 1.0;
        std::vector<int> alpha(N, 0);
        alpha[i] = 1;
        coeffs.emplace(std::move(alpha), std::move(A));
    }
    return OperatorSpec(N, N, 1, 1, std::move(coeffs));
}

/// Lexicographic list of the index pairs (i,j), i<j, coordinatizing skew
/// N x N matrices via the basis E_ij - E_ji.
inline std::vector<std::pair<int, int>> skew_pairs(int N) {
    std::vector<std::pair<int, int>> p;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) p.emplace_back(i, j);
    return p;
}

/// Skew matrix from its coefficient vector in the skew_pairs basis.
inline Eigen::MatrixXd skew_from_coeffs(const Eigen::VectorXd& c, int N) {
    const auto pairs = skew_pairs(N);
    if (c.size() != static_cast<int>(pairs.size()))
        throw InvalidDimension("skew coefficient vector has wrong length");
    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(N, N);
    for (std::size_t s = 0; s < pairs.size(); ++s) {
        W(pairs[s].first, pairs[s].second) = c[static_cast<int>(s)];
        W(pairs[s].second, pairs[s].first) = -c[static_cast<int>(s)];
    }
    return W;
}

/// Row divergence on skew-symmetric matrix fields, (curl* V)_i = d_j V_ij.
/// Symbol: coefficients c map to W(c) xi. Image measures are divergence free.
inline OperatorSpec curl_star_operator_spec(int N) {
    if (N < 2) throw InvalidDimension("curl* needs N >= 2");
    const auto pairs = skew_pairs(N);
    const int dimE = static_cast<int>(pairs.size());
    std::map<std::vector<int>, Eigen::MatrixXd> coeffs;
    for (int l = 0; l < N; ++l) {
        Eigen::MatrixXd A = Eigen::MatrixXd::Zero(N, dimE);
        for (std::size_t s = 0; s < pairs.size(); ++s) {
            const auto [a, b] = pairs[s];
            // (A_l c)_i = V_il with V = skew(c)
            if (b == l) A(a, static_cast<int>(s)) += 1.0;
            if (a == l) A(b, static_cast<int>(s)) -= 1.0;
        }
        std::vector<int> alpha(N, 0);
        alpha[l] = 1;
        coeffs.emplace(std::move(alpha), std::move(A));
    }
    return OperatorSpec(N, dimE, N, 1, std::move(coeffs));
}

} // namespace lusin
