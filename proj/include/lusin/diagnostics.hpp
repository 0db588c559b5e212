#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "lusin/lifted_map.hpp"
#include "lusin/operator_spec.hpp"
#include "lusin/rng.hpp"

namespace lusin {

struct ConstantRankReport {
    bool isConstantRank = false; // sampled evidence, not a proof
    std::set<int> observedRanks;
};

namespace detail {

inline int symbol_rank(const OperatorSpec& op, const Eigen::VectorXd& zeta) {
    const Eigen::MatrixXd s = symbol_eval(op, zeta);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(s);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv[0] == 0.0) return 0;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] > kRankTolerance * sv[0]) ++rank;
    return rank;
}

/// Distance from w to the column space of the symbol at zeta.
inline double image_distance(const OperatorSpec& op, const Eigen::VectorXd& zeta,
                             const Eigen::VectorXd& w) {
    const Eigen::MatrixXd s = symbol_eval(op, zeta);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(s, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv[0] == 0.0) return w.norm();
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] > kRankTolerance * sv[0]) ++rank;
    const Eigen::MatrixXd U = svd.matrixU().leftCols(rank);
    return (w - U * (U.transpose() * w)).norm();
}

} // namespace detail

/// Samples symbol ranks on the unit sphere: the coordinate axes, the
/// normalized all-ones direction, and seeded random unit vectors.
inline ConstantRankReport constant_rank_report(const OperatorSpec& op, int sampleCount,
                                               std::uint64_t seed) {
    if (sampleCount < 1) throw InvalidDimension("sampleCount must be >= 1");
    ConstantRankReport rep;
    std::vector<Eigen::VectorXd> samples;
    for (int i = 0; i < op.spaceDim; ++i) {
        samples.push_back(Eigen::VectorXd::Unit(op.spaceDim, i));
        samples.push_back(-Eigen::VectorXd::Unit(op.spaceDim, i));
    }
    samples.push_back(Eigen::VectorXd::Ones(op.spaceDim).normalized());
    Rng rng(seed);
    while (static_cast<int>(samples.size()) < 2 * op.spaceDim + 1 + sampleCount)
        samples.push_back(rng.unit_vector(op.spaceDim));
    for (const auto& z : samples) rep.observedRanks.insert(detail::symbol_rank(op, z));
    rep.isConstantRank = rep.observedRanks.size() == 1;
    return rep;
}

// Approximate distance from w to the image cone U_{|zeta|=1} im symbol(zeta).
// Coarse deterministic sphere grid followed by golden-section sweeps along
// tangent directions. Every evaluation is at a genuine unit vector, so the
// result is an upper bound on the true distance. Diagnostic, not certified.
inline double image_cone_distance(const OperatorSpec& op, const Eigen::VectorXd& w,
                                  int sphereGridSize = 1) {
    if (w.size() != op.dimF) throw InvalidDimension("cone query vector has wrong length");
    if (sphereGridSize < 1) sphereGridSize = 1;
    const int N = op.spaceDim;

    std::vector<Eigen::VectorXd> grid;
    for (int i = 0; i < N; ++i) {
        grid.push_back(Eigen::VectorXd::Unit(N, i));
        grid.push_back(-Eigen::VectorXd::Unit(N, i));
    }
    const int target = 64 * sphereGridSize;
    if (N == 1) {
        // sphere is {-1, +1}; axis directions already cover it
    } else if (N == 2) {
        for (int k = 0; k < target; ++k) {
            const double th = 2.0 * M_PI * k / target;
            grid.push_back((Eigen::VectorXd(2) << std::cos(th), std::sin(th)).finished());
        }
    } else {
        Rng rng(0x5eedULL);
        for (int k = 0; k < target; ++k) grid.push_back(rng.unit_vector(N));
    }

    double best = std::numeric_limits<double>::infinity();
    Eigen::VectorXd bestZeta = grid.front();
    for (const auto& z : grid) {
        const double d = detail::image_distance(op, z, w);
        if (d < best) {
            best = d;
            bestZeta = z;
        }
    }
    if (N == 1) return best;

    // Local refinement: golden-section along great circles through bestZeta.
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int sweep = 0; sweep < 3; ++sweep) {
        for (int axis = 0; axis < N; ++axis) {
            Eigen::VectorXd t = Eigen::VectorXd::Unit(N, axis);
            t -= t.dot(bestZeta) * bestZeta;
            if (t.norm() < 1e-12) continue;
            t.normalize();
            auto eval = [&](double th) {
                const Eigen::VectorXd z = std::cos(th) * bestZeta + std::sin(th) * t;
                return detail::image_distance(op, z, w);
            };
            double a = -M_PI / (4 << sweep), b = M_PI / (4 << sweep);
            double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
            double f1 = eval(x1), f2 = eval(x2);
            for (int it = 0; it < 40; ++it) {
                if (f1 < f2) {
                    b = x2; x2 = x1; f2 = f1;
                    x1 = b - gr * (b - a); f1 = eval(x1);
                } else {
                    a = x1; x1 = x2; f1 = f2;
                    x2 = a + gr * (b - a); f2 = eval(x2);
                }
            }
            const double th = (a + b) / 2;
            const double f = eval(th);
            if (f < best) {
                best = f;
                bestZeta = (std::cos(th) * bestZeta + std::sin(th) * t).normalized();
            }
        }
    }
    return best;
}

} // namespace lusin
