#pragma once

#include <span>

#include "adaptmesh/core.hpp"
#include "adaptmesh/method.hpp"
#include "adaptmesh/trajectory.hpp"

namespace adaptmesh {

/// The auxiliary (prediction) point x_i + min(h(eps), b - x_i). Throws
/// StepTooSmall when the resulting gap is below 10 * machine_eps * (b - a).
double auxiliary_point(double x_i, double b, const SolverConfig& cfg);

struct LocalCoefficient {
    double G = 0.0;        ///< per-step coefficient: local error <= G * h^{r+1}
    double dd_norm = 0.0;  ///< max norm of the divided difference behind it
};

/// Estimates the local error coefficient at (x_i, y_i): builds the auxiliary
/// approximation on [x_i, bar_x] with the method, evaluates
/// H(t) = f(t, l_bar(t)) at the r+1 equidistant nodes of [x_i, bar_x],
/// takes the componentwise order-r divided difference and applies the
/// configured preset formula. Consumes method.evals_per_step + r + 1 rhs
/// evaluations.
LocalCoefficient local_coefficient(IvpProblem& problem, double x_i, const StateVector& y_i,
                                   double bar_x, const OneStepMethod& method,
                                   const SolverConfig& cfg);

/// Adaptive solve with the basic Picard method: each step estimates G_i at an
/// auxiliary point, selects x_{i+1} = x_i + min((eps/G_i)^{1/(r+1)}, b - x_i),
/// and advances with one Picard step. Every step consumes exactly
/// 2r^2 + 3r + 1 raw rhs evaluations.
Trajectory adapt_mesh_solve(IvpProblem& problem, const SolverConfig& cfg);

/// The same controller driving an arbitrary one-step method; G_i uses the
/// method's declared bar_beta and beta (cfg.bar_beta, when set, wins).
Trajectory adapt_mesh_gen_solve(const OneStepMethod& method, IvpProblem& problem,
                                const SolverConfig& cfg);

/// Drives the method across a given mesh a = x_0 < ... < x_m = b with no
/// estimator calls.
Trajectory fixed_mesh_solve(const OneStepMethod& method, IvpProblem& problem,
                            std::span<const double> mesh);

}  // namespace adaptmesh
