#pragma once

#include <span>
#include <vector>

#include "adaptmesh/core.hpp"
#include "adaptmesh/polynomial.hpp"

namespace adaptmesh {

/// A set of pairwise distinct interpolation nodes. Generated node sets are
/// strictly increasing; hand-built ones may come in any order as long as the
/// points are distinct.
struct NodeSet {
    std::vector<double> points;

    /// Throws InvalidNodes on coincident (or non-finite) points.
    explicit NodeSet(std::vector<double> pts);

    int count() const noexcept { return static_cast<int>(points.size()); }
};

/// count equally spaced nodes on [x0, x1]; a single node is placed at x0.
/// For count >= 2 the first node is exactly x0 and the last exactly x1.
NodeSet equidistant_nodes(double x0, double x1, int count);

/// Lagrange interpolation of vector values, one value per node, realized via
/// the Newton divided-difference table and expanded to dense monomial
/// coefficients in the nodes' own frame. Exact (up to roundoff) for
/// polynomial data of degree <= count-1.
VectorPolynomial interpolate(const NodeSet& nodes, std::span<const StateVector> values);

/// Antiderivative of q with value y_i at the frame origin: returns P with
/// P' = q coefficientwise and constant row exactly y_i. Both q and the result
/// are read in the local variable t - x_i.
VectorPolynomial integrate_from(const VectorPolynomial& q, double x_i, const StateVector& y_i);

/// Order-(count-1) Newton divided difference, computed component by
/// component via the standard recursive table.
StateVector divided_difference(const NodeSet& nodes, std::span<const StateVector> values);

}  // namespace adaptmesh
