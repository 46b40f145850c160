#include "tfcdr/history.hpp"

#include "tfcdr/error.hpp"

#include <sstream>

namespace tfcdr {

HalfStepHistory::HalfStepHistory(GridSpec grid) : grid_(grid) {}

HalfIndex HalfStepHistory::last() const {
    if (count_ == 0) throw HistoryError("history is empty");
    return HalfIndex::from_twice(count_ - 1);
}

std::span<const double> HalfStepHistory::level(HalfIndex l) const {
    if (!contains(l)) {
        throw HistoryError("level " + l.str() + " not in history of " + std::to_string(count_) +
                           " half levels");
    }
    const std::size_t n = grid_.points();
    return {values_.data() + l.twice() * n, n};
}

std::span<const double> HalfStepHistory::delta(HalfIndex l) const {
    if (!contains(l.next())) {
        throw HistoryError("delta_t at level " + l.str() + " needs level " + l.next().str());
    }
    const std::size_t n = grid_.points();
    return {deltas_.data() + l.twice() * n, n};
}

void HalfStepHistory::append(std::span<const double> values) {
    const std::size_t n = grid_.points();
    if (values.size() != n) {
        std::ostringstream os;
        os << "history level needs " << n << " values, got " << values.size();
        throw DimensionError(os.str());
    }
    values_.insert(values_.end(), values.begin(), values.end());
    if (count_ > 0) {
        const double inv = 2.0 / grid_.k();
        const double* prev = values_.data() + (count_ - 1) * n;
        for (std::size_t j = 0; j < n; ++j) deltas_.push_back((values[j] - prev[j]) * inv);
    }
    ++count_;
}

} // namespace tfcdr
