#pragma once

#include <vector>

#include "adaptmesh/core.hpp"

namespace adaptmesh {

/// A vector-valued polynomial stored as one dense coefficient row per
/// component, lowest power first. The variable is whatever frame the
/// producer chose; piece-building code works in the local variable t - x_i.
struct VectorPolynomial {
    std::vector<std::vector<double>> coeffs;  // [component][power]

    int dimension() const noexcept { return static_cast<int>(coeffs.size()); }
    int degree() const noexcept {
        return coeffs.empty() ? 0 : static_cast<int>(coeffs.front().size()) - 1;
    }

    /// Horner evaluation at local coordinate s.
    StateVector eval(double s) const;
};

/// A degree-<=r polynomial approximation on one subinterval [x_start, x_end],
/// with coefficients in the local variable t - x_start. The constant
/// coefficient row equals the step's initial value exactly.
struct PolynomialPiece {
    double x_start = 0.0;
    double x_end = 0.0;
    VectorPolynomial poly;

    int dimension() const noexcept { return poly.dimension(); }
    double length() const noexcept { return x_end - x_start; }
};

}  // namespace adaptmesh
