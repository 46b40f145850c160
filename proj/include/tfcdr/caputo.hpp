#pragma once

#include "tfcdr/history.hpp"
#include "tfcdr/weights.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace tfcdr {

/// (u^{l+1/2} − u^l) / (k/2) at every node.
std::vector<double> delta_t(const HalfStepHistory& hist, HalfIndex l);

/// Discrete Caputo derivative at t_{i+1/2+α} from the expanded weights:
///   i = 0:  f_{1/2,0} δ_t u^0
///   i ≥ 1:  ḟ δ_t u^0 + Σ_{l<i} [f_l δ_t u^{l+1} + (d_l − f_l) δ_t u^{l+1/2}] + f_i δ_t u^i
/// Needs levels 0..i+1/2.
std::vector<double> discrete_caputo_half(const HalfStepHistory& hist, const FractionalParams& p,
                                         std::size_t i);

/// Discrete Caputo derivative at t_{i+1+α}:
///   Σ_{l≤i} [f_l δ_t u^{l+1/2} + (d_l − f_l) δ_t u^l] + f_{i+1} δ_t u^{i+1/2}
/// Needs levels 0..i+1.
std::vector<double> discrete_caputo_full(const HalfStepHistory& hist, const FractionalParams& p,
                                         std::size_t i);

/// Same operators written as k^{1−λ}/Γ(2−λ) Σ_m a_{level,m+1/2} δ_t u^m.
/// Level is i+1/2 for the first and i+1 for the second stage.
std::vector<double> discrete_caputo_aseq(const HalfStepHistory& hist, const FractionalParams& p,
                                         HalfIndex level);

using ScalarFunction = std::function<double(double)>;

struct OracleResult {
    double value = 0.0;
    double estimated_error = 0.0;  ///< |difference between the last two refinements|
    int panels = 0;
};

/// (1/Γ(1−λ)) ∫₀ᵗ f′(τ)(t−τ)^{−λ} dτ by composite Gauss–Legendre on panels
/// graded toward the singular endpoint τ = t.
///
/// Only the derivative enters the integral; `f` is accepted so callers pass the
/// pair they differentiate. Doubles the panel count from `n_panels` until two
/// successive estimates agree to `rel_tol` (relative, absolute near zero).
/// Throws OracleError carrying the last achieved difference if that never happens.
OracleResult caputo_quadrature_oracle(const ScalarFunction& f, const ScalarFunction& df,
                                      double lambda, double t, int n_panels = 4,
                                      double rel_tol = 1e-10);

} // namespace tfcdr
