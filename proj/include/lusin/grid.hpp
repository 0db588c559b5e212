#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "lusin/error.hpp"

namespace lusin {

// Uniform grid on the open unit cube (0,1)^N with r cells per axis.
// Linear cell order is row-major: axis 0 slowest, last axis fastest.
struct Grid {
    int spaceDim = 0;
    int cellsPerAxis = 0;

    Grid() = default;
    Grid(int N, int r) : spaceDim(N), cellsPerAxis(r) {
        if (N < 1 || r < 1) throw InvalidDimension("grid needs N >= 1 and r >= 1");
    }

    double h() const { return 1.0 / cellsPerAxis; }

    std::int64_t cellCount() const {
        std::int64_t c = 1;
        for (int i = 0; i < spaceDim; ++i) c *= cellsPerAxis;
        return c;
    }

    std::int64_t linearIndex(const std::vector<int>& q) const {
        std::int64_t idx = 0;
        for (int i = 0; i < spaceDim; ++i) idx = idx * cellsPerAxis + q[i];
        return idx;
    }

    std::vector<int> cellIndex(std::int64_t linear) const {
        std::vector<int> q(spaceDim);
        for (int i = spaceDim - 1; i >= 0; --i) {
            q[i] = static_cast<int>(linear % cellsPerAxis);
            linear /= cellsPerAxis;
        }
        return q;
    }

    Eigen::VectorXd origin(const std::vector<int>& q) const {
        Eigen::VectorXd o(spaceDim);
        for (int i = 0; i < spaceDim; ++i) o[i] = static_cast<double>(q[i]) * h();
        return o;
    }

    /// Cell containing x (interior points; boundary coordinates clamp).
    std::vector<int> cellOf(const Eigen::VectorXd& x) const {
        std::vector<int> q(spaceDim);
        for (int i = 0; i < spaceDim; ++i) {
            int c = static_cast<int>(x[i] * cellsPerAxis);
            if (c < 0) c = 0;
            if (c >= cellsPerAxis) c = cellsPerAxis - 1;
            q[i] = c;
        }
        return q;
    }
};

// Per-cell vector data on a grid, canonical cell order.
struct CellField {
    Grid grid;
    int dim = 0;
    std::vector<Eigen::VectorXd> values;

    CellField() = default;
    CellField(const Grid& g, int d)
        : grid(g), dim(d), values(g.cellCount(), Eigen::VectorXd::Zero(d)) {}

    /// Exact L1 norm of the piecewise-constant field.
    double l1_norm() const {
        double cellVol = 1.0;
        for (int i = 0; i < grid.spaceDim; ++i) cellVol *= grid.h();
        double s = 0.0;
        for (const auto& v : values) s += v.norm();
        return s * cellVol;
    }
};

} // namespace lusin
