#pragma once

#include "tfcdr/history.hpp"

#include <functional>
#include <optional>
#include <string>

namespace tfcdr {

using TimeFunction = std::function<double(double t)>;
using SpaceFunction = std::function<double(double x)>;
using SpaceTimeFunction = std::function<double(double x, double t)>;

/// cD^λ u − q(t) u_xx + p(t) u_x + g(x,t) u = s(x,t) on (0, L1) × (0, T],
/// with u(x,0) = psi1(x) and boundary data on the two outermost node layers
/// at each end.
///
/// Coefficients are evaluated at the shifted times t_{i+1/2+α}, t_{i+1+α},
/// which run past T; every function must be defined on [0, time_max()].
struct Problem {
    std::string name;
    double L1 = 1.0;
    double T = 1.0;

    TimeFunction q;        // diffusion, q ≥ γ > 0
    TimeFunction p;        // convection, p ≥ 0
    SpaceTimeFunction g;   // reaction, g ≥ 0
    SpaceTimeFunction s;   // source
    SpaceFunction psi1;    // initial data
    /// Boundary data, queried at x_0, x_1, x_{M-1}, x_M. Left and right may
    /// differ; they are distinguished by x.
    SpaceTimeFunction boundary;
    std::optional<SpaceTimeFunction> exact;

    /// End of the extended time domain, T + T/4.
    double time_max() const { return T + 0.25 * T; }
    bool has_exact() const { return exact.has_value(); }
};

/// Lower bounds of q and g estimated on a sample grid, used in diagnostics.
struct CoefficientBounds {
    double q_min = 0.0;
    double p_min = 0.0;
    double g_min = 0.0;
};

/// Samples q, p, g on a 64 × 64 grid of [0, L1] × [0, t_end] (t_end defaults
/// to time_max()).
CoefficientBounds sample_coefficient_bounds(const Problem& prob, double t_end = -1.0);

/// Throws ContractError if a function is missing, a sign condition fails on the
/// sample grid, or (when an exact solution is given) psi1/boundary disagree with
/// it by more than 1e-13.
void validate(const Problem& prob);

/// u = t sin x with q = 1, p = 1, g = 0 on the unit square.
Problem example1(double lambda);
/// u = t² sin(πx) with q = e^t, p = 0, g = 1 − sin 2t on the unit square.
Problem example2(double lambda);

struct ExactErrors {
    double linf_l2 = 0.0;  ///< max over half levels of the discrete L² error
    double l2_l2 = 0.0;    ///< space-time L² error (half-step rectangle rule)
};

/// Errors of a computed history against prob.exact. Throws ContractError
/// without an exact solution.
ExactErrors error_vs_exact(const HalfStepHistory& hist, const Problem& prob);

/// History of the exact solution sampled on the grid of `like` with the same
/// number of levels.
HalfStepHistory sample_exact(const HalfStepHistory& like, const Problem& prob);

} // namespace tfcdr
