#include "adaptmesh/polynomial.hpp"

namespace adaptmesh {

StateVector VectorPolynomial::eval(double s) const {
    StateVector out(coeffs.size());
    for (std::size_t c = 0; c < coeffs.size(); ++c) {
        const auto& row = coeffs[c];
        double acc = row.back();
        // Two statements per power keep multiply and add as separate
        // roundings; cross-routine bitwise reproducibility relies on it.
        for (std::size_t p = row.size() - 1; p-- > 0;) {
            acc = acc * s;
            acc += row[p];
        }
        out[c] = acc;
    }
    return out;
}

}  // namespace adaptmesh
