#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "adaptmesh/core.hpp"
#include "adaptmesh/polynomial.hpp"

namespace adaptmesh {

/// Bookkeeping for one solver step on [x, x_next]. Adaptive solves fill the
/// estimator fields (bar_x, G, dd_norm); fixed-mesh drives leave them empty.
struct StepRecord {
    int index = 0;
    double x = 0.0;
    double x_next = 0.0;
    double h = 0.0;
    std::optional<double> bar_x;     ///< auxiliary point used by the estimator
    StateVector y;
    StateVector y_next;
    std::optional<double> G;         ///< local error coefficient
    std::optional<double> dd_norm;   ///< max norm of the divided difference
    std::int64_t f_evals = 0;           ///< raw rhs evaluations in this step
    std::int64_t f_evals_distinct = 0;  ///< distinct (t,y) arguments in this step
};

/// A piecewise-polynomial approximation of the solution on [a, b]:
/// strictly increasing mesh x_0 = a < ... < x_m = b, one step record and one
/// polynomial piece per subinterval. Consecutive pieces agree at shared mesh
/// points through the y_next handoff.
struct Trajectory {
    int order = 1;
    std::vector<double> mesh;
    std::vector<StepRecord> steps;
    std::vector<PolynomialPiece> pieces;
    std::int64_t total_f_evals = 0;
    std::int64_t total_f_evals_distinct = 0;

    /// Target local error of the adaptive solve that produced this
    /// trajectory; empty for fixed-mesh runs.
    std::optional<double> epsilon;

    int step_count() const noexcept { return static_cast<int>(steps.size()); }
    double a() const { return mesh.front(); }
    double b() const { return mesh.back(); }

    /// Dense evaluation at any t in [a, b] via the covering piece.
    StateVector value_at(double t) const;

    /// Largest step length in the mesh.
    double max_step() const;
};

}  // namespace adaptmesh
