#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adaptmesh/errors.hpp"

namespace adaptmesh {

/// A point in R^d. All solver operations use the maximum norm.
using StateVector = std::vector<double>;

/// max_k |v_k|. Throws NonFiniteValue if any component is NaN or infinite.
double norm_max(const StateVector& v);

bool all_finite(const StateVector& v) noexcept;

/// Right-hand side f(t, y) of the system z' = f(t, z).
using RhsFn = std::function<StateVector(double, const StateVector&)>;

/// An initial value problem z' = f(t, z) on [a,b], z(a) = eta, with
/// instrumented evaluation counting.
///
/// Two counters are kept per instance: the raw count (one per eval() call)
/// and a distinct count that skips calls whose (t, y) arguments were already
/// seen since the last begin_memo_epoch(). Solvers open one memo epoch per
/// step, so the distinct count reports the cost a caching implementation
/// would pay. Counters are reset at the start of each solve.
///
/// Instances are not thread-safe; concurrent solves must use distinct copies.
class IvpProblem {
public:
    IvpProblem(int dimension, double a, double b, StateVector eta, RhsFn rhs);

    int dimension() const noexcept { return dimension_; }
    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    const StateVector& eta() const noexcept { return eta_; }

    /// Evaluates f(t, y), counting the call. Throws NonFiniteValue on
    /// non-finite input and DomainViolation (with the offending t, y) if the
    /// right-hand side produces a non-finite component.
    StateVector eval(double t, const StateVector& y);

    std::int64_t eval_count() const noexcept { return eval_count_; }
    std::int64_t distinct_eval_count() const noexcept { return distinct_count_; }

    void reset_counters();

    /// Starts a new memo epoch for distinct-argument counting.
    void begin_memo_epoch();

private:
    int dimension_;
    double a_;
    double b_;
    StateVector eta_;
    RhsFn rhs_;
    std::int64_t eval_count_ = 0;
    std::int64_t distinct_count_ = 0;
    std::vector<std::pair<double, StateVector>> memo_;
};

/// Rule for the length h(eps) of the auxiliary (prediction) interval.
enum class AuxStepRule {
    EpsPower,       ///< h = eps^{1/(r+1)}
    RoundoffPower,  ///< h = u^{1/(r+1)}, u = roundoff_u, independent of eps
    Fixed,          ///< h = aux_fixed_step
};

/// Which formula turns the divided-difference norm into the coefficient G_i.
enum class CoefficientPreset {
    Theory,      ///< G = (4/3) * bar_beta * (|dd| + beta) * (1 + varphi)
    Experiment,  ///< G = bar_beta * |dd| + bar_beta / 2
};

/// Solver parameters. See validate() for the accepted ranges.
struct SolverConfig {
    double epsilon = 1e-4;  ///< target local error per step, in (0,1)
    double beta = 1.0;      ///< safety offset added to the divided difference
    double varphi = 0.5;    ///< estimator slack factor, in (0,1)
    int order = 1;          ///< method order r, 1..10

    AuxStepRule aux_rule = AuxStepRule::RoundoffPower;
    double aux_fixed_step = 0.0;  ///< h(eps) when aux_rule == Fixed
    double roundoff_u = 1e-15;    ///< u in the RoundoffPower rule

    CoefficientPreset preset = CoefficientPreset::Experiment;

    /// Leading factor bar_beta of the coefficient formula. When unset it is
    /// resolved per preset: Theory uses the basic method's value 2, and
    /// Experiment uses 2r (so r=1 gives G = 2|dd|+1 and r=2 gives 4|dd|+2).
    std::optional<double> bar_beta;

    /// Smallest admissible step. When unset, 100 * machine_eps * (b - a) is
    /// used at solve time.
    std::optional<double> min_step;

    std::int64_t max_steps = 100'000'000;

    /// Throws InvalidArgument when any field is out of range.
    void validate() const;

    /// bar_beta with the preset-dependent default applied.
    double resolved_bar_beta() const;

    /// The auxiliary interval length h(eps) for this configuration.
    double aux_step_length() const;

    /// Effective minimum step for a problem on [a, b].
    double resolved_min_step(double a, double b) const;
};

const char* to_string(AuxStepRule rule) noexcept;
const char* to_string(CoefficientPreset preset) noexcept;

}  // namespace adaptmesh
