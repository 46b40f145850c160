#pragma once

#include "tfcdr/error.hpp"
#include "tfcdr/grid.hpp"
#include "tfcdr/history.hpp"
#include "tfcdr/problem.hpp"
#include "tfcdr/weights.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tfcdr {

struct StepDiagnostics {
    std::size_t i = 0;
    /// Side condition at level i+1/2; absent for i = 0.
    std::optional<bool> half_condition;
    bool full_condition = false;
    double half_residual = 0.0;
    double full_residual = 0.0;
};

struct RunDiagnostics {
    std::vector<StepDiagnostics> steps;

    double max_residual() const;
    bool all_conditions_hold() const;
};

/// Marches the two-level scheme one half step at a time.
///
/// Construction fills level 0 from ψ₁. Boundary layers j ∈ {0,1,M−1,M} of
/// every new level come from the problem's boundary data.
class Stepper {
public:
    /// Throws ContractError when the problem lacks two-layer boundary data.
    Stepper(const Problem& prob, const GridSpec& grid, const FractionalParams& p);

    const HalfStepHistory& history() const { return hist_; }
    const RunDiagnostics& diagnostics() const { return diag_; }
    /// Index i of the step in progress: levels 0..i (and i+1/2 after advance_half).
    std::size_t step() const { return hist_.last().floor(); }
    bool finished() const { return hist_.last() == HalfIndex::whole(grid_.N()); }

    /// Solves for U^{α_i} and appends U^{i+1/2}. Throws SolverError.
    void advance_half();
    /// Solves for U^{θ_i} and appends U^{i+1}. Throws SolverError.
    void advance_full();

    /// Averaged unknown from the most recent solve (interior nodes j = 2..M−2).
    const std::vector<double>& last_averaged() const { return averaged_; }

    HalfStepHistory take_history() && { return std::move(hist_); }

private:
    void append_recovered(HalfIndex target, const std::vector<double>& averaged);

    const Problem& prob_;
    GridSpec grid_;
    FractionalParams params_;
    WeightTable table_;
    double scale_;
    HalfStepHistory hist_;
    RunDiagnostics diag_;
    std::vector<double> averaged_;
};

/// Thrown by run(): a solve failed; carries everything computed before it.
class RunAborted : public SolverError {
public:
    RunAborted(const std::string& what, std::size_t step, HalfStepHistory partial,
               RunDiagnostics diag)
        : SolverError(what, step), partial_(std::move(partial)), diag_(std::move(diag)) {}

    const HalfStepHistory& partial_history() const { return partial_; }
    const RunDiagnostics& diagnostics() const { return diag_; }

private:
    HalfStepHistory partial_;
    RunDiagnostics diag_;
};

struct RunResult {
    HalfStepHistory history;
    RunDiagnostics diagnostics;
};

/// Full march to t = T. Throws RunAborted on the first failed solve.
RunResult run(const Problem& prob, const GridSpec& grid, const FractionalParams& p);

} // namespace tfcdr
