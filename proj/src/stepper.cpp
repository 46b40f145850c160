#include "tfcdr/stepper.hpp"

#include "tfcdr/linsys.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tfcdr {

namespace {

// Same ratio as stability_condition, read off weights already in hand.
bool half_condition(const FractionalParams& p, const HalfLevelWeights& w) {
    const std::size_t i = w.i;
    const double ratio = (w.f_tilde[i - 1] + w.f_tilde[i]) / (w.d_tilde[i - 1] - w.f_tilde[i - 1]);
    return stability_residual(p.alpha(), ratio) <= 0.0;
}

bool full_condition(const FractionalParams& p, const FullLevelWeights& w) {
    const std::size_t i = w.i;
    const double ratio = (w.f_tilde[i] + w.f_tilde[i + 1]) / (w.d_tilde[i] - w.f_tilde[i]);
    return stability_residual(p.alpha(), ratio) <= 0.0;
}

std::vector<double> solve_checked(const PentaSystem& sys, std::size_t step, const char* stage,
                                  double& residual) {
    std::vector<double> x;
    try {
        x = solve_penta(sys);
    } catch (const SingularMatrixError& e) {
        std::ostringstream os;
        os << stage << " solve failed at step " << step << ": " << e.what();
        throw SolverError(os.str(), step);
    }
    for (double v : x) {
        if (!std::isfinite(v)) {
            std::ostringstream os;
            os << stage << " solve produced a non-finite value at step " << step;
            throw SolverError(os.str(), step);
        }
    }
    residual = residual_inf(sys, x);
    return x;
}

} // namespace

double RunDiagnostics::max_residual() const {
    double worst = 0.0;
    for (const auto& s : steps) worst = std::max({worst, s.half_residual, s.full_residual});
    return worst;
}

bool RunDiagnostics::all_conditions_hold() const {
    return std::all_of(steps.begin(), steps.end(), [](const StepDiagnostics& s) {
        return s.full_condition && s.half_condition.value_or(true);
    });
}

Stepper::Stepper(const Problem& prob, const GridSpec& grid, const FractionalParams& p)
    : prob_(prob), grid_(grid), params_(p), table_(p, grid.N()),
      scale_(caputo_scale(p, grid.k())), hist_(grid) {
    if (!prob.boundary) {
        throw ContractError("problem '" + prob.name + "' has no two-layer boundary data");
    }
    if (!prob.psi1 || !prob.q || !prob.p || !prob.g || !prob.s) {
        throw ContractError("problem '" + prob.name + "' is missing a coefficient or initial data");
    }
    std::vector<double> u0(grid.points());
    for (std::size_t j = 0; j < u0.size(); ++j) {
        u0[j] = prob.psi1(grid.x(j));
        if (!std::isfinite(u0[j])) {
            std::ostringstream os;
            os << "initial data of '" << prob.name << "' is not finite at x=" << grid.x(j);
            throw ContractError(os.str());
        }
    }
    hist_.append(u0);
}

void Stepper::append_recovered(HalfIndex target, const std::vector<double>& averaged) {
    const std::size_t M = grid_.M();
    const double two_a = 2.0 * params_.alpha();
    const double one_2a = 1.0 + two_a;
    const auto old = hist_.level(hist_.last());
    const double t = grid_.t_half(target.twice());
    std::vector<double> next(grid_.points());
    for (std::size_t r : {std::size_t{0}, std::size_t{1}, M - 1, M}) next[r] = prob_.boundary(grid_.x(r), t);
    for (std::size_t j = 2; j <= M - 2; ++j) next[j] = (averaged[j - 2] + two_a * old[j]) / one_2a;
    hist_.append(next);
}

void Stepper::advance_half() {
    const HalfIndex last = hist_.last();
    if (!last.is_whole()) throw HistoryError("advance_half needs a history ending at a whole level");
    const std::size_t i = last.floor();
    if (i >= grid_.N()) throw ContractError("run already reached t = T");

    const HalfLevelWeights tilde = table_.half(i);
    StepDiagnostics d;
    d.i = i;
    if (i >= 1) d.half_condition = half_condition(params_, tilde);
    const PentaSystem sys = assemble_half(prob_, grid_, params_, i, scaled(tilde, scale_), hist_);
    averaged_ = solve_checked(sys, i, "half-level", d.half_residual);
    append_recovered(HalfIndex::half(i), averaged_);
    diag_.steps.push_back(d);
}

void Stepper::advance_full() {
    const HalfIndex last = hist_.last();
    if (last.is_whole()) throw HistoryError("advance_full needs a history ending at a half level");
    const std::size_t i = last.floor();

    const FullLevelWeights tilde = table_.full(i);
    StepDiagnostics& d = diag_.steps.back();
    d.full_condition = full_condition(params_, tilde);
    const PentaSystem sys = assemble_full(prob_, grid_, params_, i, scaled(tilde, scale_), hist_);
    averaged_ = solve_checked(sys, i, "full-level", d.full_residual);
    append_recovered(HalfIndex::whole(i + 1), averaged_);
}

RunResult run(const Problem& prob, const GridSpec& grid, const FractionalParams& p) {
    Stepper st(prob, grid, p);
    try {
        while (!st.finished()) {
            st.advance_half();
            st.advance_full();
        }
    } catch (const SolverError& e) {
        throw RunAborted(e.what(), e.step(), st.history(), st.diagnostics());
    }
    RunDiagnostics diag = st.diagnostics();
    return {std::move(st).take_history(), std::move(diag)};
}

} // namespace tfcdr
