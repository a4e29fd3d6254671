#pragma once

#include "adaptmesh/core.hpp"
#include "adaptmesh/polynomial.hpp"

namespace adaptmesh {

/// One step of the basic method on [x_i, x_i + h]: r+1 approximate Picard
/// sweeps, each interpolating g(t) = f(t, l_j(t)) at r equidistant nodes of
/// the interval (the single node x_i when r = 1) and integrating from
/// (x_i, y_i). Returns the final degree-<=r piece; consumes exactly r*(r+1)
/// rhs evaluations.
PolynomialPiece picard_local_step(IvpProblem& problem, double x_i, const StateVector& y_i,
                                  double h, int r);

/// Horner evaluation of a piece in its local variable t - x_start.
/// t may overshoot the interval by at most 10 * machine_eps * length for
/// endpoint rounding; beyond that OutOfRange is thrown.
StateVector evaluate_piece(const PolynomialPiece& piece, double t);

}  // namespace adaptmesh
