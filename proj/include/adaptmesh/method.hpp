#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "adaptmesh/core.hpp"
#include "adaptmesh/picard.hpp"
#include "adaptmesh/polynomial.hpp"

namespace adaptmesh {

/// Behavioral contract for a one-step method usable with the generalized
/// mesh controller: given (problem, x_i, x_next, y_i), step() returns a dense
/// local approximation on [x_i, x_next] anchored at (x_i, y_i), deterministic
/// for identical inputs. bar_beta and beta are the constants declared by the
/// method's local error bound
///     sup |z_i - l_i| <= bar_beta * ((1/r!) sup |z_i^{(r+1)}| + beta) * h^{r+1},
/// and evals_per_step is the number of rhs evaluations one step() call costs.
struct OneStepMethod {
    std::string name;
    int order = 1;
    double bar_beta = 2.0;
    double beta = 1.0;
    std::int64_t evals_per_step = 0;
    std::function<PolynomialPiece(IvpProblem&, double, double, const StateVector&)> step;
};

/// The basic Picard method of the given order, declaring bar_beta = bb and
/// beta = b in its error bound.
OneStepMethod make_picard_method(int order, double bb = 2.0, double b = 1.0);

/// The basic method wired for a specific configuration: order, beta and the
/// preset-resolved bar_beta are taken from cfg, so driving the generalized
/// controller with this wrapper reproduces the specialized solver exactly.
OneStepMethod make_picard_method(const SolverConfig& cfg);

}  // namespace adaptmesh
