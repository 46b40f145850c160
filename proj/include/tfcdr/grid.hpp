#pragma once

#include <cstddef>

namespace tfcdr {

/// Uniform space-time mesh x_j = j h (j = 0..M), t_i = i k (i = 0..N).
class GridSpec {
public:
    /// Throws ContractError unless M ≥ 4, N ≥ 1, L1 > 0 and T > 0.
    GridSpec(std::size_t M, std::size_t N, double L1, double T);

    std::size_t M() const { return M_; }
    std::size_t N() const { return N_; }
    double L1() const { return L1_; }
    double T() const { return T_; }
    double h() const { return h_; }
    double k() const { return k_; }

    double x(std::size_t j) const { return static_cast<double>(j) * h_; }
    /// Time at a level measured in half steps: t = (twice / 2) k.
    double t_half(std::size_t twice) const { return 0.5 * static_cast<double>(twice) * k_; }
    std::size_t points() const { return M_ + 1; }

    bool operator==(const GridSpec&) const = default;

private:
    std::size_t M_;
    std::size_t N_;
    double L1_;
    double T_;
    double h_;
    double k_;
};

} // namespace tfcdr
