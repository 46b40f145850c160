#include "tfcdr/weights.hpp"

#include <cmath>
#include <numeric>

namespace tfcdr {

namespace {

struct Tally {
    InequalityResult positivity{"positivity of f, d, fdot and d-f", 0, 0};
    InequalityResult pair_sum{"f[j-1] + f[j] - d[j] < 0", 0, 0};
    InequalityResult twice_f{"2 f[j] - d[j] > 0", 0, 0};
    InequalityResult monotone{"a[l] < a[l+1/2]", 0, 0};
    InequalityResult lower_bound{"a[l] > c (level + alpha - l)^(-lambda)", 0, 0};

    static void record(InequalityResult& r, bool ok) {
        ++r.checked;
        if (!ok) ++r.failed;
    }
};

void check_weights(Tally& t, const std::vector<double>& f, const std::vector<double>& d,
                   const double* fdot) {
    for (double v : f) Tally::record(t.positivity, v > 0.0);
    for (double v : d) Tally::record(t.positivity, v > 0.0);
    if (fdot != nullptr) Tally::record(t.positivity, *fdot > 0.0);
    for (std::size_t j = 0; j < d.size(); ++j) {
        Tally::record(t.positivity, d[j] - f[j] > 0.0);
        Tally::record(t.twice_f, 2.0 * f[j] - d[j] > 0.0);
        if (j >= 1) Tally::record(t.pair_sum, f[j - 1] + f[j] - d[j] < 0.0);
    }
}

void check_sequence(Tally& t, const FractionalParams& p, const ASequence& a) {
    const double lambda = p.lambda();
    const double c = (2.0 - 3.0 * lambda) * (1.0 - lambda) / (2.0 * (2.0 - lambda));
    for (std::size_t n = 0; n + 1 < a.values.size(); ++n) {
        Tally::record(t.monotone, a.values[n] < a.values[n + 1]);
    }
    for (std::size_t n = 0; n < a.values.size(); ++n) {
        const double l = 0.5 * static_cast<double>(n + 1);
        const double bound = c * std::pow(a.level.value() + p.alpha() - l, -lambda);
        Tally::record(t.lower_bound, a.values[n] > bound);
    }
}

} // namespace

bool PropertySuiteResult::passed() const {
    if (!applicable) return true;
    for (const auto& r : results) {
        if (r.failed != 0) return false;
    }
    return true;
}

std::size_t PropertySuiteResult::total_checked() const {
    return std::accumulate(results.begin(), results.end(), std::size_t{0},
                           [](std::size_t s, const InequalityResult& r) { return s + r.checked; });
}

PropertySuiteResult check_coefficient_inequalities(const FractionalParams& p, std::size_t max_i) {
    PropertySuiteResult out;
    out.applicable = p.lambda() < 2.0 / 3.0;
    if (!out.applicable) return out;

    Tally t;
    for (std::size_t i = 0; i <= max_i; ++i) {
        const HalfLevelWeights hw = half_level_weights(p, i);
        check_weights(t, hw.f_tilde, hw.d_tilde, hw.fdot_tilde ? &*hw.fdot_tilde : nullptr);
        check_sequence(t, p, a_sequence(p, HalfIndex::half(i)));

        const FullLevelWeights fw = full_level_weights(p, i);
        check_weights(t, fw.f_tilde, fw.d_tilde, nullptr);
        check_sequence(t, p, a_sequence(p, HalfIndex::whole(i + 1)));
    }
    out.results = {t.positivity, t.pair_sum, t.twice_f, t.monotone, t.lower_bound};
    return out;
}

} // namespace tfcdr
