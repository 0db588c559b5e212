#pragma once

#include <vector>

#include <Eigen/Dense>

#include "lusin/combinatorics.hpp"
#include "lusin/error.hpp"
#include "lusin/operator_spec.hpp"

namespace lusin {

/// Dense multivector dimension cap; C(8,4) = 70 coefficients at most.
inline constexpr int kMaxExteriorDim = 8;

// Multivector in Lambda^m R^N. Coefficients are indexed by strictly
// increasing index tuples in lexicographic order; all signs follow from
// sorting permutation parity.
struct MultiVector {
    int spaceDim = 0;
    int degree = 0;
    Eigen::VectorXd coeffs;

    MultiVector(int N, int m)
        : spaceDim(N), degree(m),
          coeffs(Eigen::VectorXd::Zero(binomial(N, m))) {
        if (N < 1 || N > kMaxExteriorDim) throw InvalidDimension("space dimension out of range");
        if (m < 0 || m > N) throw InvalidDegree("degree outside [0, N]");
    }

    MultiVector(int N, int m, Eigen::VectorXd c) : MultiVector(N, m) {
        if (c.size() != coeffs.size()) throw InvalidDimension("coefficient length mismatch");
        coeffs = std::move(c);
    }

    /// Basis element e_{t0} ^ e_{t1} ^ ... for a strictly increasing tuple.
    static MultiVector basis(int N, const std::vector<int>& tuple) {
        MultiVector v(N, static_cast<int>(tuple.size()));
        v.coeffs[increasing_tuple_rank(tuple, N)] = 1.0;
        return v;
    }
};

namespace detail {

// Merge two strictly increasing tuples; returns false when they collide.
// sign collects (-1) per transposition moving the concatenation into order.
inline bool merge_tuples(const std::vector<int>& a, const std::vector<int>& b,
                         std::vector<int>& out, int& sign) {
    out.clear();
    sign = 1;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            // b[j] moves past the remaining entries of a
            if ((a.size() - i) % 2 == 1) sign = -sign;
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return true;
}

} // namespace detail

/// Graded-anticommutative wedge product.
inline MultiVector wedge(const MultiVector& a, const MultiVector& b) {
    if (a.spaceDim != b.spaceDim) throw InvalidDimension("wedge factors in different spaces");
    const int N = a.spaceDim;
    if (a.degree + b.degree > N) throw DegreeOverflow("wedge degree exceeds space dimension");
    MultiVector out(N, a.degree + b.degree);
    const auto ta = increasing_tuples(N, a.degree);
    const auto tb = increasing_tuples(N, b.degree);
    std::vector<int> merged;
    int sign;
    for (std::size_t i = 0; i < ta.size(); ++i) {
        if (a.coeffs[static_cast<int>(i)] == 0.0) continue;
        for (std::size_t j = 0; j < tb.size(); ++j) {
            if (b.coeffs[static_cast<int>(j)] == 0.0) continue;
            if (!detail::merge_tuples(ta[i], tb[j], merged, sign)) continue;
            out.coeffs[increasing_tuple_rank(merged, N)] +=
                sign * a.coeffs[static_cast<int>(i)] * b.coeffs[static_cast<int>(j)];
        }
    }
    return out;
}

// Interior product omega -| v, the adjoint of right-wedge:
// <omega -| v, eta> = <omega, eta ^ v> for every eta of degree m-1.
// On basis elements e_I -| e_j = (-1)^{m-p} e_{I minus j} with j the p-th
// entry of I (1-based).
inline MultiVector interior_product(const MultiVector& omega, const Eigen::VectorXd& v) {
    if (v.size() != omega.spaceDim) throw InvalidDimension("vector has wrong length");
    if (omega.degree == 0) throw DegreeUnderflow("interior product of a 0-vector");
    const int N = omega.spaceDim;
    const int m = omega.degree;
    MultiVector out(N, m - 1);
    const auto tuples = increasing_tuples(N, m);
    std::vector<int> reduced(m - 1);
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        const double c = omega.coeffs[static_cast<int>(i)];
        if (c == 0.0) continue;
        for (int p = 0; p < m; ++p) {
            const int j = tuples[i][p];
            if (v[j] == 0.0) continue;
            int r = 0;
            for (int q = 0; q < m; ++q)
                if (q != p) reduced[r++] = tuples[i][q];
            const double sign = ((m - 1 - p) % 2 == 0) ? 1.0 : -1.0;
            out.coeffs[increasing_tuple_rank(reduced, N)] += sign * c * v[j];
        }
    }
    return out;
}

/// Boundary operator on (m+1)-vector fields as a first-order operator:
/// dimE = C(N,m+1), dimF = C(N,m), A_i the matrix of omega -> omega -| e_i.
inline OperatorSpec boundary_operator_spec(int N, int m) {
    if (N < 1 || N > kMaxExteriorDim) throw InvalidDimension("space dimension out of range");
    if (m < 0 || m >= N) throw InvalidDegree("boundary operator needs 0 <= m < N");
    const int dimE = static_cast<int>(binomial(N, m + 1));
    const int dimF = static_cast<int>(binomial(N, m));
    const auto inputTuples = increasing_tuples(N, m + 1);
    std::map<std::vector<int>, Eigen::MatrixXd> coeffs;
    for (int i = 0; i < N; ++i) {
        Eigen::MatrixXd A(dimF, dimE);
        for (int c = 0; c < dimE; ++c) {
            MultiVector col = interior_product(MultiVector::basis(N, inputTuples[c]),
                                               Eigen::VectorXd::Unit(N, i));
            A.col(c) = col.coeffs;
        }
        std::vector<int> alpha(N, 0);
        alpha[i] = 1;
        coeffs.emplace(std::move(alpha), std::move(A));
    }
    return OperatorSpec(N, dimE, dimF, 1, std::move(coeffs));
}

/// Exterior derivative on m-vector fields: symbol a -> a ^ xi. The symbol
/// matrices are the transposes of the boundary operator's.
inline OperatorSpec derivative_operator_spec(int N, int m) {
    if (N < 1 || N > kMaxExteriorDim) throw InvalidDimension("space dimension out of range");
    if (m < 0 || m >= N) throw InvalidDegree("derivative operator needs 0 <= m < N");
    const int dimE = static_cast<int>(binomial(N, m));
    const int dimF = static_cast<int>(binomial(N, m + 1));
    const auto inputTuples = increasing_tuples(N, m);
    std::map<std::vector<int>, Eigen::MatrixXd> coeffs;
    for (int i = 0; i < N; ++i) {
        Eigen::MatrixXd A(dimF, dimE);
        Eigen::VectorXd ei = Eigen::VectorXd::Zero(N);
        ei[i] = 1.0;
        MultiVector eiVec(N, 1, ei);
        for (int c = 0; c < dimE; ++c) {
            MultiVector col = wedge(MultiVector::basis(N, inputTuples[c]), eiVec);
            A.col(c) = col.coeffs;
        }
        std::vector<int> alpha(N, 0);
        alpha[i] = 1;
        coeffs.emplace(std::move(alpha), std::move(A));
    }
    return OperatorSpec(N, dimE, dimF, 1, std::move(coeffs));
}

} // namespace lusin
