#pragma once

#include "tfcdr/grid.hpp"
#include "tfcdr/history.hpp"
#include "tfcdr/problem.hpp"
#include "tfcdr/weights.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace tfcdr {

/// Five-diagonal system A x = rhs. Row r holds A(r, r+d) for d = −2..+2 in
/// band(d); entries that would fall outside the matrix are kept at zero.
class PentaSystem {
public:
    explicit PentaSystem(std::size_t n);

    std::size_t size() const { return n_; }

    double& band(int offset, std::size_t row);
    double band(int offset, std::size_t row) const;
    /// A(row, col), zero off the band.
    double entry(std::size_t row, std::size_t col) const;

    std::vector<double>& rhs() { return rhs_; }
    const std::vector<double>& rhs() const { return rhs_; }

private:
    std::size_t n_;
    std::array<std::vector<double>, 5> bands_;
    std::vector<double> rhs_;
};

/// Banded LU with partial pivoting; the upper bandwidth grows to at most 4.
/// Throws SingularMatrixError on a zero pivot.
std::vector<double> solve_penta(const PentaSystem& sys);

/// ‖A x − b‖∞
double residual_inf(const PentaSystem& sys, std::span<const double> x);
/// ‖A‖∞
double norm_inf(const PentaSystem& sys);
bool strictly_diagonally_dominant(const PentaSystem& sys);

/// Values of the averaged unknown (1+2α)U^{new} − 2α U^{old} on the closure
/// layers {0, 1, M−1, M}, with U^{new} from the boundary data at `target`
/// and U^{old} the last stored level. Other entries are zero.
std::vector<double> averaged_boundary(const Problem& prob, const FractionalParams& p,
                                      const HalfStepHistory& hist, HalfIndex target);

/// System for U^{α_i} = (1+2α)U^{i+1/2} − 2αU^i at nodes j = 2..M−2 (n = M−3).
///
/// `w` are the k-scaled half-level weights for step i (tilde weights times
/// k^{1−λ}/Γ(2−λ)); the history must end at level i.
PentaSystem assemble_half(const Problem& prob, const GridSpec& grid, const FractionalParams& p,
                          std::size_t i, const HalfLevelWeights& w, const HalfStepHistory& hist);

/// System for U^{θ_i} = (1+2α)U^{i+1} − 2αU^{i+1/2}; the history must end at
/// level i+1/2 and `w` are the k-scaled full-level weights for step i.
PentaSystem assemble_full(const Problem& prob, const GridSpec& grid, const FractionalParams& p,
                          std::size_t i, const FullLevelWeights& w, const HalfStepHistory& hist);

} // namespace tfcdr
