#pragma once

#include "tfcdr/half_index.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tfcdr {

/// Order λ of the Caputo derivative together with the time shift α = 1 − λ.
///
/// α is derived from λ on construction and cannot be set independently.
class FractionalParams {
public:
    /// Throws ContractError unless 0 < λ < 1.
    explicit FractionalParams(double lambda);

    double lambda() const { return lambda_; }
    double alpha() const { return alpha_; }

private:
    double lambda_;
    double alpha_;
};

/// Γ(x) for x > 0. Throws DomainError otherwise.
double gamma_fn(double x);

/// k^{1−λ} / Γ(2−λ): the factor turning tilde weights into the weights that
/// multiply δ_t differences in the discrete Caputo operators.
double caputo_scale(const FractionalParams& p, double k);

/// Weights of the discrete Caputo operator evaluated at t_{i+1/2+α}.
///
/// f_tilde has i+1 entries (l = 0..i), d_tilde has i entries (l = 0..i−1).
/// For i = 0 the only entry is f_tilde[0] = (1/2+α)^{1−λ} and fdot_tilde is empty.
struct HalfLevelWeights {
    std::size_t i = 0;
    std::vector<double> f_tilde;
    std::vector<double> d_tilde;
    std::optional<double> fdot_tilde;
};

/// Weights of the discrete Caputo operator evaluated at t_{i+1+α}.
///
/// f_tilde has i+2 entries (l = 0..i+1), d_tilde has i+1 entries (l = 0..i).
struct FullLevelWeights {
    std::size_t i = 0;
    std::vector<double> f_tilde;
    std::vector<double> d_tilde;
};

HalfLevelWeights half_level_weights(const FractionalParams& p, std::size_t i);
FullLevelWeights full_level_weights(const FractionalParams& p, std::size_t i);

/// Tabulated d̃(m+α) and f̃(m+α) for m = 1..max_m.
///
/// Every weight with l < i depends on i and l only through m = i − l, so a
/// whole run needs one table instead of O(N²) powers. Results are bitwise equal
/// to half_level_weights / full_level_weights.
class WeightTable {
public:
    WeightTable(const FractionalParams& p, std::size_t max_m);

    std::size_t max_m() const { return d_.size(); }
    /// Needs i ≤ max_m.
    HalfLevelWeights half(std::size_t i) const;
    /// Needs i + 1 ≤ max_m.
    FullLevelWeights full(std::size_t i) const;

private:
    double lambda_;
    double alpha_;
    double f_last_;
    std::vector<double> d_;  // d_[m−1]
    std::vector<double> f_;
};

/// Every entry multiplied by `factor` (normally caputo_scale(p, k)).
HalfLevelWeights scaled(const HalfLevelWeights& w, double factor);
FullLevelWeights scaled(const FullLevelWeights& w, double factor);

/// Combined weight sequence a_{level, l} for l = 1/2, 1, ..., level.
///
/// With it both discrete Caputo operators become a single sum
///   k^{1−λ}/Γ(2−λ) · Σ_{m} a_{level, m+1/2} δ_t u^m   (m = 0, 1/2, ..., level−1/2).
struct ASequence {
    HalfIndex level;
    /// values[n] = a_{level, (n+1)/2}
    std::vector<double> values;

    /// a_{level, l}; throws ContractError when l is 0 or beyond the level.
    double at(HalfIndex l) const;
};

ASequence a_sequence(const FractionalParams& p, HalfIndex level);

enum class LevelKind { half, full };

struct StabilityCheck {
    double residual = 0.0;
    bool satisfied = false;
};

/// 4α² − (1+4α)(ratio − 1), where ratio is the last a-value over the one before it.
double stability_residual(double alpha, double ratio);

/// Side condition on the last two entries of the a-sequence at level i+1/2
/// (kind = half, i ≥ 1) or i+1 (kind = full, i ≥ 0). Diagnostic only.
StabilityCheck stability_condition(const FractionalParams& p, std::size_t i, LevelKind kind);

struct InequalityResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
};

struct PropertySuiteResult {
    /// False when λ ≥ 2/3; the inequalities are only claimed below that.
    bool applicable = false;
    std::vector<InequalityResult> results;

    bool passed() const;
    std::size_t total_checked() const;
};

/// Checks positivity, sign conditions, monotonicity and the lower bound of the
/// coefficient sequences for every level up to i = max_i (both half and full).
PropertySuiteResult check_coefficient_inequalities(const FractionalParams& p, std::size_t max_i);

} // namespace tfcdr
