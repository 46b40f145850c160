#pragma once

#include "tfcdr/grid.hpp"
#include "tfcdr/half_index.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace tfcdr {

/// Solution vectors at the contiguous half levels 0, 1/2, 1, ... of one run.
///
/// The discrete Caputo operators are non-local in time, so every level is
/// kept. Appending level l+1/2 also stores δ_t u^l = (u^{l+1/2} − u^l)/(k/2).
class HalfStepHistory {
public:
    explicit HalfStepHistory(GridSpec grid);

    const GridSpec& grid() const { return grid_; }

    /// Number of stored levels.
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }
    /// Highest stored level. Throws HistoryError when empty.
    HalfIndex last() const;
    bool contains(HalfIndex l) const { return l.twice() < count_; }

    /// Throws HistoryError if l is not stored.
    std::span<const double> level(HalfIndex l) const;
    /// Cached δ_t u^l. Throws HistoryError unless l and l+1/2 are stored.
    std::span<const double> delta(HalfIndex l) const;

    /// Every cached δ_t row back to back (size() − 1 rows of points() values).
    std::span<const double> deltas() const { return deltas_; }

    /// Appends the next half level. Throws DimensionError on a length mismatch.
    void append(std::span<const double> values);

    double time(HalfIndex l) const { return grid_.t_half(l.twice()); }

    bool operator==(const HalfStepHistory&) const = default;

private:
    GridSpec grid_;
    std::size_t count_ = 0;
    std::vector<double> values_;
    std::vector<double> deltas_;
};

} // namespace tfcdr
