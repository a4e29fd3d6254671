#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "adaptmesh/core.hpp"
#include "adaptmesh/oracle.hpp"
#include "adaptmesh/trajectory.hpp"

namespace adaptmesh {

/// One cell of the cost/error table: adaptive solve followed by the same
/// method on the uniform mesh with the same interval count.
struct TableRow {
    double delta = 0.0;
    double eps = 0.0;
    int r = 1;
    std::int64_t m_star = 0;
    double maxerr_over_eps = 0.0;
    double equidist_over_eps = 0.0;
    std::int64_t f_evals_adaptive = 0;
    std::int64_t f_evals_uniform = 0;
    double wall_time_ms = 0.0;
    std::optional<std::string> error;  ///< set when the cell failed; numeric fields are sentinels
};

inline constexpr const char* kTableCsvHeader =
    "delta,eps,r,m_star,maxerr_over_eps,equidist_over_eps,f_evals_adaptive,"
    "f_evals_uniform,wall_time_ms";

/// Shortest-round-trip formatting with 17 significant digits.
std::string format_double(double v);

std::string table_to_csv(std::span<const TableRow> rows);
std::vector<TableRow> table_from_csv(const std::string& csv);
nlohmann::json table_to_json(std::span<const TableRow> rows);

/// Full trajectory dump: mesh, step records and piece coefficient rows,
/// enough to reproduce any step from the file alone.
nlohmann::json trajectory_to_json(const std::string& problem_id, const SolverConfig& cfg,
                                  const Trajectory& trajectory);

/// Mesh points and solution values as CSV (columns x, y0, ..., y<d-1>).
std::string trajectory_to_csv(const Trajectory& trajectory);

nlohmann::json config_to_json(const SolverConfig& cfg);

/// Computes one table cell. Solver errors are captured into row.error with
/// sentinel numeric fields rather than thrown.
TableRow run_table_cell(const RegistryProblem& reg, double delta, double eps, int r,
                        const SolverConfig& base);

/// Runs the full (delta, eps, r) grid, optionally across jobs threads.
/// Rows come out sorted by (delta, eps, r).
std::vector<TableRow> run_table(const std::string& problem_id, std::span<const double> deltas,
                                std::span<const double> epsilons, std::span<const int> orders,
                                const SolverConfig& base, int jobs = 1);

enum class OrderCheckMode { Local, Global, MeshScaling };

struct OrderFit {
    std::string problem;
    OrderCheckMode mode = OrderCheckMode::Global;
    int r = 1;
    double slope = 0.0;
    int samples = 0;
};

/// Fits empirical convergence orders:
///  - Local: endpoint defect of a single step of size (b-a)/m versus h;
///  - Global: endpoint global error on the uniform m-mesh versus max h;
///  - MeshScaling: adaptive m*(eps) versus 1/eps.
/// scales is the m-list for Local/Global and the eps-list for MeshScaling.
std::vector<OrderFit> run_order_check(const std::string& problem_id, double delta,
                                      std::span<const int> orders, OrderCheckMode mode,
                                      std::span<const double> scales, const SolverConfig& base);

const char* to_string(OrderCheckMode mode) noexcept;

}  // namespace adaptmesh
