#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "lusin/combinatorics.hpp"
#include "lusin/error.hpp"
#include "lusin/operator_spec.hpp"
#include "lusin/rng.hpp"

namespace lusin {

/// Relative singular value threshold for all rank decisions.
inline constexpr double kRankTolerance = 1e-10;

// The linear map A on E (x) Sym^k(R^N) defined by A[e (x)^k xi] = symbol(xi) e,
// together with its Moore-Penrose pseudoinverse and an orthonormal basis of
// the essential range. Symmetric tensors are coordinatized by nondecreasing
// index tuples (monomial coordinates: the decomposable xi^{(x)k} has
// coordinate xi^alpha in slot alpha); the lifted vector of e (x) S stacks one
// dimE block per symmetric slot, so for k = 1 the matrix is the horizontal
// block [A_1 | ... | A_N].
struct LiftedMap {
    int spaceDim = 0;
    int dimE = 0;
    int dimF = 0;
    int order = 0;
    std::vector<std::vector<int>> symTuples; // Sym^k basis order
    Eigen::MatrixXd matrixA;                 // dimF x (dimE * dimSym)
    Eigen::MatrixXd pseudoInverse;           // (dimE * dimSym) x dimF
    Eigen::MatrixXd rangeBasis;              // dimF x rangeDim, orthonormal columns
    double sigmaMin = 0.0;                   // smallest nonzero singular value
    double opNorm = 0.0;                     // largest singular value

    int dimSym() const { return static_cast<int>(symTuples.size()); }
    int liftedDim() const { return dimE * dimSym(); }
    int rangeDim() const { return static_cast<int>(rangeBasis.cols()); }

    /// Lifted coordinate vector of the decomposable e (x)^k xi.
    Eigen::VectorXd lift_decomposable(const Eigen::VectorXd& e, const Eigen::VectorXd& xi) const {
        if (e.size() != dimE || xi.size() != spaceDim)
            throw InvalidDimension("decomposable factors have wrong dimensions");
        Eigen::VectorXd v(liftedDim());
        for (int s = 0; s < dimSym(); ++s) {
            double mono = 1.0;
            for (int ax : symTuples[s]) mono *= xi[ax];
            v.segment(s * dimE, dimE) = mono * e;
        }
        return v;
    }

    /// Reshape a lifted vector to a dimE x N matrix of axis columns (k = 1).
    Eigen::MatrixXd unlift_matrix(const Eigen::VectorXd& v) const {
        if (order != 1) throw UnsupportedOrder("matrix reshape requires k = 1");
        if (v.size() != liftedDim()) throw InvalidDimension("lifted vector has wrong length");
        Eigen::MatrixXd P(dimE, spaceDim);
        for (int i = 0; i < spaceDim; ++i) P.col(i) = v.segment(i * dimE, dimE);
        return P;
    }

    /// Lifted vector of a dimE x N matrix (k = 1).
    Eigen::VectorXd lift_matrix(const Eigen::MatrixXd& P) const {
        if (order != 1) throw UnsupportedOrder("matrix lift requires k = 1");
        if (P.rows() != dimE || P.cols() != spaceDim)
            throw InvalidDimension("gradient matrix has wrong shape");
        Eigen::VectorXd v(liftedDim());
        for (int i = 0; i < spaceDim; ++i) v.segment(i * dimE, dimE) = P.col(i);
        return v;
    }
};

/// Orthonormal basis of the essential range, computed from the horizontally
/// stacked coefficient blocks [A_alpha]. Monomials are linearly independent,
/// so this span equals span{symbol(xi) e}.
inline Eigen::MatrixXd essential_range(const OperatorSpec& op) {
    const int nBlocks = static_cast<int>(op.coeffs.size());
    Eigen::MatrixXd stacked(op.dimF, nBlocks * op.dimE);
    int c = 0;
    for (const auto& [alpha, mat] : op.coeffs) {
        stacked.middleCols(c, op.dimE) = mat;
        c += op.dimE;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const double cutoff = kRankTolerance * sv[0];
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] > cutoff) ++rank;
    return svd.matrixU().leftCols(rank);
}

namespace detail {

// For k >= 2 the block matrices are recovered from sampled decomposables:
// sum_s xi^alpha(s) M_s = symbol(xi) over dimSym + 5 seeded directions is a
// Vandermonde-type system with the coefficient blocks as its unique solution.
inline Eigen::MatrixXd solve_lift_from_samples(const OperatorSpec& op,
                                               const std::vector<std::vector<int>>& tuples,
                                               std::uint64_t seed) {
    const int dimSym = static_cast<int>(tuples.size());
    const int nSamples = dimSym + 5;
    Rng rng(seed);
    Eigen::MatrixXd V(nSamples, dimSym);
    std::vector<Eigen::MatrixXd> rhs(nSamples);
    for (int t = 0; t < nSamples; ++t) {
        const Eigen::VectorXd xi = rng.unit_vector(op.spaceDim);
        for (int s = 0; s < dimSym; ++s) {
            double mono = 1.0;
            for (int ax : tuples[s]) mono *= xi[ax];
            V(t, s) = mono;
        }
        rhs[t] = symbol_eval(op, xi);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(V, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv[sv.size() - 1] <= kRankTolerance * sv[0])
        throw LiftConstructionFailed(
            "sampled lift system is rank-deficient; retry with new samples");

    // Entrywise least squares sharing the Vandermonde factor.
    Eigen::MatrixXd A(op.dimF, op.dimE * dimSym);
    Eigen::VectorXd b(nSamples);
    for (int r = 0; r < op.dimF; ++r) {
        for (int c = 0; c < op.dimE; ++c) {
            for (int t = 0; t < nSamples; ++t) b[t] = rhs[t](r, c);
            const Eigen::VectorXd m = svd.solve(b);
            for (int s = 0; s < dimSym; ++s) A(r, s * op.dimE + c) = m[s];
        }
    }

    // Re-verify the defining identity on fresh samples.
    Rng fresh(seed ^ 0x9e3779b97f4a7c15ULL);
    for (int t = 0; t < 5; ++t) {
        const Eigen::VectorXd xi = fresh.unit_vector(op.spaceDim);
        const Eigen::MatrixXd sym = symbol_eval(op, xi);
        for (int j = 0; j < op.dimE; ++j) {
            Eigen::VectorXd lifted(op.dimE * dimSym);
            for (int s = 0; s < dimSym; ++s) {
                double mono = 1.0;
                for (int ax : tuples[s]) mono *= xi[ax];
                lifted.segment(s * op.dimE, op.dimE) =
                    mono * Eigen::VectorXd::Unit(op.dimE, j);
            }
            const Eigen::VectorXd want = sym.col(j);
            if ((A * lifted - want).norm() > 1e-10 * (1.0 + want.norm()))
                throw LiftConstructionFailed("lift identity fails on fresh samples");
        }
    }
    return A;
}

} // namespace detail

/// Builds the lifted matrix. First order: direct block layout. Higher order:
/// sampled linear system (seeded) with verification on fresh samples.
inline LiftedMap lifted_map(const OperatorSpec& op, std::uint64_t seed = 2024) {
    LiftedMap lm;
    lm.spaceDim = op.spaceDim;
    lm.dimE = op.dimE;
    lm.dimF = op.dimF;
    lm.order = op.order;
    lm.symTuples = nondecreasing_tuples(op.spaceDim, op.order);
    if (op.order == 1) {
        lm.matrixA.resize(op.dimF, lm.liftedDim());
        for (int i = 0; i < op.spaceDim; ++i)
            lm.matrixA.middleCols(i * op.dimE, op.dimE) = op.coeffAxis(i);
    } else {
        lm.matrixA = detail::solve_lift_from_samples(op, lm.symTuples, seed);
    }
    return lm;
}

/// Populates the Moore-Penrose pseudoinverse, range basis and singular data.
inline LiftedMap pseudo_inverse(LiftedMap lm) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(lm.matrixA,
                                          Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv[0] < 1e-290)
        throw ZeroOperator("lifted matrix is numerically zero");
    const double cutoff = kRankTolerance * sv[0];
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] > cutoff) ++rank;
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
    for (int i = 0; i < rank; ++i) inv[i] = 1.0 / sv[i];
    lm.pseudoInverse =
        svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
    lm.rangeBasis = svd.matrixU().leftCols(rank);
    lm.opNorm = sv[0];
    lm.sigmaMin = sv[rank - 1];
    return lm;
}

/// lifted_map followed by pseudo_inverse.
inline LiftedMap lifted_map_with_pinv(const OperatorSpec& op, std::uint64_t seed = 2024) {
    return pseudo_inverse(lifted_map(op, seed));
}

} // namespace lusin
