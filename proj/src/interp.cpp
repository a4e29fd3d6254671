#include "adaptmesh/interp.hpp"

#include <algorithm>
#include <cmath>

namespace adaptmesh {

NodeSet::NodeSet(std::vector<double> pts) : points(std::move(pts)) {
    if (points.empty()) throw InvalidNodes("NodeSet: needs at least one node");
    for (double p : points) {
        if (!std::isfinite(p)) throw InvalidNodes("NodeSet: non-finite node");
    }
    std::vector<double> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1]) throw InvalidNodes("NodeSet: coincident nodes");
    }
}

NodeSet equidistant_nodes(double x0, double x1, int count) {
    if (count < 1 || !(x0 < x1)) throw InvalidNodes("equidistant_nodes: needs count >= 1 and x0 < x1");
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(count));
    if (count == 1) {
        pts.push_back(x0);
    } else {
        const double h = (x1 - x0) / (count - 1);
        for (int k = 0; k < count; ++k) pts.push_back(x0 + k * h);
        pts.back() = x1;  // exact endpoint regardless of rounding
    }
    return NodeSet(std::move(pts));
}

namespace {

// Newton divided-difference table over vector values; newton[k] is the
// order-k difference anchored at nodes[0..k].
std::vector<StateVector> newton_table(const NodeSet& nodes, std::span<const StateVector> values) {
    const int n = nodes.count();
    if (static_cast<int>(values.size()) != n)
        throw InvalidArgument("interpolation: one value per node required");
    const std::size_t d = values.front().size();
    for (const auto& v : values) {
        if (v.size() != d) throw InvalidArgument("interpolation: values must share dimension");
    }
    std::vector<StateVector> table(values.begin(), values.end());
    std::vector<StateVector> newton;
    newton.reserve(static_cast<std::size_t>(n));
    newton.push_back(table.front());
    for (int level = 1; level < n; ++level) {
        for (int i = 0; i + level < n; ++i) {
            const double dt = nodes.points[static_cast<std::size_t>(i + level)] -
                              nodes.points[static_cast<std::size_t>(i)];
            for (std::size_t c = 0; c < d; ++c)
                table[static_cast<std::size_t>(i)][c] =
                    (table[static_cast<std::size_t>(i) + 1][c] - table[static_cast<std::size_t>(i)][c]) / dt;
        }
        newton.push_back(table.front());
    }
    return newton;
}

}  // namespace

VectorPolynomial interpolate(const NodeSet& nodes, std::span<const StateVector> values) {
    const auto newton = newton_table(nodes, values);
    const int n = nodes.count();
    const std::size_t d = values.front().size();

    // Expand the Newton form sum_k a_k * prod_{p<k} (s - s_p) into monomials.
    // With the first node at the local origin the constant row stays exact.
    VectorPolynomial poly;
    poly.coeffs.assign(d, std::vector<double>{});
    for (std::size_t c = 0; c < d; ++c) {
        std::vector<double> row{newton[static_cast<std::size_t>(n) - 1][c]};
        for (int k = n - 2; k >= 0; --k) {
            const double node = nodes.points[static_cast<std::size_t>(k)];
            std::vector<double> next(row.size() + 1, 0.0);
            for (std::size_t p = 0; p < row.size(); ++p) {
                next[p + 1] += row[p];
                next[p] -= node * row[p];
            }
            next[0] += newton[static_cast<std::size_t>(k)][c];
            row = std::move(next);
        }
        poly.coeffs[c] = std::move(row);
    }
    return poly;
}

VectorPolynomial integrate_from(const VectorPolynomial& q, double x_i, const StateVector& y_i) {
    if (!std::isfinite(x_i)) throw NonFiniteValue("integrate_from: non-finite anchor");
    if (!all_finite(y_i)) throw NonFiniteValue("integrate_from: non-finite initial value");
    if (q.dimension() != static_cast<int>(y_i.size()))
        throw InvalidArgument("integrate_from: dimension mismatch");
    VectorPolynomial out;
    out.coeffs.resize(y_i.size());
    for (std::size_t c = 0; c < y_i.size(); ++c) {
        const auto& src = q.coeffs[c];
        auto& dst = out.coeffs[c];
        dst.resize(src.size() + 1);
        dst[0] = y_i[c];
        for (std::size_t p = 0; p < src.size(); ++p) dst[p + 1] = src[p] / static_cast<double>(p + 1);
    }
    return out;
}

StateVector divided_difference(const NodeSet& nodes, std::span<const StateVector> values) {
    return newton_table(nodes, values).back();
}

}  // namespace adaptmesh
