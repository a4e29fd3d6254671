#include "adaptmesh/core.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace adaptmesh {

bool all_finite(const StateVector& v) noexcept {
    for (double c : v) {
        if (!std::isfinite(c)) return false;
    }
    return true;
}

double norm_max(const StateVector& v) {
    double m = 0.0;
    for (double c : v) {
        if (!std::isfinite(c)) throw NonFiniteValue("norm_max: non-finite component");
        m = std::max(m, std::fabs(c));
    }
    return m;
}

IvpProblem::IvpProblem(int dimension, double a, double b, StateVector eta, RhsFn rhs)
    : dimension_(dimension), a_(a), b_(b), eta_(std::move(eta)), rhs_(std::move(rhs)) {
    if (dimension_ < 1) throw InvalidArgument("IvpProblem: dimension must be >= 1");
    if (!(a_ < b_)) throw InvalidArgument("IvpProblem: requires a < b");
    if (!std::isfinite(a_) || !std::isfinite(b_)) throw InvalidArgument("IvpProblem: non-finite interval");
    if (static_cast<int>(eta_.size()) != dimension_)
        throw InvalidArgument("IvpProblem: eta length does not match dimension");
    if (!all_finite(eta_)) throw NonFiniteValue("IvpProblem: non-finite initial value");
    if (!rhs_) throw InvalidArgument("IvpProblem: missing right-hand side");
}

StateVector IvpProblem::eval(double t, const StateVector& y) {
    if (!std::isfinite(t) || !all_finite(y)) throw NonFiniteValue("IvpProblem::eval: non-finite argument");
    ++eval_count_;
    bool seen = false;
    for (const auto& [mt, my] : memo_) {
        if (mt == t && my == y) {
            seen = true;
            break;
        }
    }
    if (!seen) {
        ++distinct_count_;
        memo_.emplace_back(t, y);
    }
    StateVector out = rhs_(t, y);
    if (static_cast<int>(out.size()) != dimension_)
        throw InvalidArgument("IvpProblem::eval: rhs output has wrong dimension");
    if (!all_finite(out)) {
        std::ostringstream msg;
        msg << "rhs returned a non-finite value at t=" << t;
        throw DomainViolation(t, y, msg.str());
    }
    return out;
}

void IvpProblem::reset_counters() {
    eval_count_ = 0;
    distinct_count_ = 0;
    memo_.clear();
}

void IvpProblem::begin_memo_epoch() { memo_.clear(); }

void SolverConfig::validate() const {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw InvalidArgument("SolverConfig: epsilon must be in (0,1)");
    if (!(varphi > 0.0 && varphi < 1.0)) throw InvalidArgument("SolverConfig: varphi must be in (0,1)");
    if (!(beta > 0.0)) throw InvalidArgument("SolverConfig: beta must be positive");
    if (order < 1 || order > 10) throw InvalidArgument("SolverConfig: order must be in 1..10");
    if (aux_rule == AuxStepRule::Fixed && !(aux_fixed_step > 0.0))
        throw InvalidArgument("SolverConfig: fixed aux rule needs a positive step");
    if (!(roundoff_u > 0.0 && roundoff_u < 1.0))
        throw InvalidArgument("SolverConfig: roundoff_u must be in (0,1)");
    if (bar_beta && !(*bar_beta > 0.0)) throw InvalidArgument("SolverConfig: bar_beta must be positive");
    if (min_step && !(*min_step > 0.0)) throw InvalidArgument("SolverConfig: min_step must be positive");
    if (max_steps < 1) throw InvalidArgument("SolverConfig: max_steps must be positive");
}

double SolverConfig::resolved_bar_beta() const {
    if (bar_beta) return *bar_beta;
    return preset == CoefficientPreset::Experiment ? 2.0 * order : 2.0;
}

double SolverConfig::aux_step_length() const {
    const double p = 1.0 / (order + 1);
    switch (aux_rule) {
        case AuxStepRule::EpsPower: return std::pow(epsilon, p);
        case AuxStepRule::RoundoffPower: return std::pow(roundoff_u, p);
        case AuxStepRule::Fixed: return aux_fixed_step;
    }
    return aux_fixed_step;
}

double SolverConfig::resolved_min_step(double a, double b) const {
    if (min_step) return *min_step;
    return 100.0 * std::numeric_limits<double>::epsilon() * (b - a);
}

const char* to_string(AuxStepRule rule) noexcept {
    switch (rule) {
        case AuxStepRule::EpsPower: return "eps_power";
        case AuxStepRule::RoundoffPower: return "roundoff_power";
        case AuxStepRule::Fixed: return "fixed";
    }
    return "?";
}

const char* to_string(CoefficientPreset preset) noexcept {
    switch (preset) {
        case CoefficientPreset::Theory: return "theory";
        case CoefficientPreset::Experiment: return "experiment";
    }
    return "?";
}

}  // namespace adaptmesh
