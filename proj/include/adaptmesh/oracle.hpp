#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "adaptmesh/core.hpp"
#include "adaptmesh/trajectory.hpp"

namespace adaptmesh {

/// Exact solution of the local problem z' = f(t, z), z(x) = y, evaluated at
/// time t >= x. Satisfies solve(x, y, x) = y and the semigroup property
/// solve(x, y, t) = solve(s, solve(x, y, s), t) for x <= s <= t.
struct LocalSolutionOracle {
    enum class Provenance { ClosedForm, ReferenceIntegrator };

    Provenance provenance = Provenance::ClosedForm;
    std::function<StateVector(double x, const StateVector& y, double t)> solve;
};

/// A problem bundled with its local-solution oracle.
struct RegistryProblem {
    std::string id;
    IvpProblem problem;
    LocalSolutionOracle oracle;
    std::string smoothness;
};

/// The scalar test problem z' = (3/4)(z-1)^{-3/2} on [0,1], z(0) = 1 + delta,
/// whose local solutions are known in closed form. The right-hand side is
/// only defined for y > 1; evaluations at y <= 1 raise DomainViolation.
RegistryProblem make_test_problem(double delta);

/// Closed-form problem registry: test(delta), exp (z' = z), exp-decay
/// (z' = -z), rotation (d = 2), logistic, and the trivial zero problem.
std::vector<RegistryProblem> registry(double test_delta = 0.1);

/// Looks up a registry problem by id; delta applies to the test problem.
/// Throws InvalidArgument for unknown ids.
RegistryProblem find_problem(const std::string& id, double delta = 0.1);

/// Fallback oracle: integrates the local problem with the basic Picard
/// method at order min(method_order + 2, 6) on uniform substeps, halving the
/// substep until two successive answers agree within tol/4 in max norm.
/// Throws OracleFailure after 24 fruitless halvings.
StateVector reference_local_solution(IvpProblem& problem, double x, const StateVector& y,
                                     double t, double tol, int method_order = 4);

/// MAXERR of a trajectory: the maximum over steps of the endpoint defect
/// || oracle(x_i, y_i, x_{i+1}) - y_{i+1} ||. With interval_sup set, each
/// piece is additionally sampled at 8 interior points to approximate the
/// supremum over the subinterval.
double max_local_error(const Trajectory& trajectory, const LocalSolutionOracle& oracle,
                       bool interval_sup = false);

/// Least-squares slope of log(error) against log(scale). Zero-error samples
/// are dropped; fewer than 3 usable points raise InvalidArgument.
double empirical_order(std::span<const std::pair<double, double>> samples);

}  // namespace adaptmesh
