#include "tfcdr/caputo.hpp"

#include "tfcdr/error.hpp"

namespace tfcdr {

namespace {

void require_level(const HalfStepHistory& hist, HalfIndex needed) {
    if (!hist.contains(needed)) {
        throw HistoryError("discrete Caputo operator needs history through level " + needed.str());
    }
}

void axpy(std::vector<double>& acc, double a, std::span<const double> x) {
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += a * x[j];
}

void scale(std::vector<double>& v, double s) {
    for (double& x : v) x *= s;
}

} // namespace

std::vector<double> delta_t(const HalfStepHistory& hist, HalfIndex l) {
    const auto d = hist.delta(l);
    return {d.begin(), d.end()};
}

std::vector<double> discrete_caputo_half(const HalfStepHistory& hist, const FractionalParams& p,
                                         std::size_t i) {
    require_level(hist, HalfIndex::half(i));
    const HalfLevelWeights w = half_level_weights(p, i);
    std::vector<double> out(hist.grid().points(), 0.0);
    if (i == 0) {
        axpy(out, w.f_tilde[0], hist.delta(HalfIndex::whole(0)));
    } else {
        axpy(out, *w.fdot_tilde, hist.delta(HalfIndex::whole(0)));
        for (std::size_t l = 0; l < i; ++l) {
            axpy(out, w.f_tilde[l], hist.delta(HalfIndex::whole(l + 1)));
            axpy(out, w.d_tilde[l] - w.f_tilde[l], hist.delta(HalfIndex::half(l)));
        }
        axpy(out, w.f_tilde[i], hist.delta(HalfIndex::whole(i)));
    }
    scale(out, caputo_scale(p, hist.grid().k()));
    return out;
}

std::vector<double> discrete_caputo_full(const HalfStepHistory& hist, const FractionalParams& p,
                                         std::size_t i) {
    require_level(hist, HalfIndex::whole(i + 1));
    const FullLevelWeights w = full_level_weights(p, i);
    std::vector<double> out(hist.grid().points(), 0.0);
    for (std::size_t l = 0; l <= i; ++l) {
        axpy(out, w.f_tilde[l], hist.delta(HalfIndex::half(l)));
        axpy(out, w.d_tilde[l] - w.f_tilde[l], hist.delta(HalfIndex::whole(l)));
    }
    axpy(out, w.f_tilde[i + 1], hist.delta(HalfIndex::half(i)));
    scale(out, caputo_scale(p, hist.grid().k()));
    return out;
}

std::vector<double> discrete_caputo_aseq(const HalfStepHistory& hist, const FractionalParams& p,
                                         HalfIndex level) {
    require_level(hist, level);
    const ASequence a = a_sequence(p, level);
    std::vector<double> out(hist.grid().points(), 0.0);
    for (std::size_t n = 0; n < a.values.size(); ++n) {
        axpy(out, a.values[n], hist.delta(HalfIndex::from_twice(n)));
    }
    scale(out, caputo_scale(p, hist.grid().k()));
    return out;
}

} // namespace tfcdr
