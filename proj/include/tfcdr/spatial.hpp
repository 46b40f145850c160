#pragma once

#include "tfcdr/grid.hpp"
#include "tfcdr/history.hpp"
#include "tfcdr/problem.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace tfcdr {

/// Fourth-order five-point second derivative at node j (2 ≤ j ≤ M−2):
/// (−u_{j+2} + 16u_{j+1} − 30u_j + 16u_{j−1} − u_{j−2}) / (12h²).
double stencil_dxx4(const GridSpec& grid, std::span<const double> u, std::size_t j);

/// Fourth-order five-point first derivative at node j (2 ≤ j ≤ M−2):
/// (−u_{j+2} + 8u_{j+1} − 8u_{j−1} + u_{j−2}) / (12h).
double stencil_dx4(const GridSpec& grid, std::span<const double> u, std::size_t j);

/// L_h u = q u_xx − p u_x − g u with the five-point stencils, coefficients at
/// t_eval. The result has M+1 entries; only j = 2..M−2 are computed and the
/// closure layers {0, 1, M−1, M} are left at zero.
std::vector<double> apply_Lh(const GridSpec& grid, std::span<const double> u,
                             const Problem& prob, double t_eval);

/// (u, v) = h Σ_{j=1}^{M−1} u_j v_j
double inner(const GridSpec& grid, std::span<const double> u, std::span<const double> v);

/// ‖u‖ = (h Σ_{j=1}^{M−1} u_j²)^{1/2}
double l2_norm(const GridSpec& grid, std::span<const double> u);

/// ((k/2) Σ_{l=1/2,1,...,N} ‖u^l‖²)^{1/2}. Needs every level up to N.
double space_time_l2_norm(const HalfStepHistory& hist);

/// max over stored levels of ‖u^l‖.
double max_level_l2_norm(const HalfStepHistory& hist);

} // namespace tfcdr
