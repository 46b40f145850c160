#include "tfcdr/linsys.hpp"

#include "tfcdr/error.hpp"

#include <array>
#include <cmath>

namespace tfcdr {

namespace {

struct StencilCoefficients {
    // offsets −2, −1, +1, +2
    std::array<double, 4> off;
    double diag_spatial;  // without the weight sum and without g
};

StencilCoefficients stencil_coefficients(double c, double h, double q, double p) {
    return {{c * (q + h * p), -c * (16.0 * q + 8.0 * h * p), -c * (16.0 * q - 8.0 * h * p),
             c * (q - h * p)},
            c * 30.0 * q};
}

void require_last(const HalfStepHistory& hist, HalfIndex expected, const char* who) {
    if (hist.empty() || hist.last() != expected) {
        throw HistoryError(std::string(who) + " needs a history ending at level " + expected.str());
    }
}

// Shared assembly: `F` is the weight sum multiplying the new level, `base` the
// last stored level, `history` the interior history sum R_j (indexed by grid j),
// `t` the shifted evaluation time.
PentaSystem assemble(const Problem& prob, const GridSpec& grid, const FractionalParams& p,
                     double F, std::span<const double> base, const std::vector<double>& history,
                     const std::vector<double>& boundary, double t) {
    const std::size_t M = grid.M();
    const double h = grid.h();
    const double one_2a = 1.0 + 2.0 * p.alpha();
    const double c = one_2a * grid.k() / (24.0 * h * h);
    const double half_k = one_2a * 0.5 * grid.k();
    const StencilCoefficients sc = stencil_coefficients(c, h, prob.q(t), prob.p(t));

    PentaSystem sys(M - 3);
    auto& rhs = sys.rhs();
    for (std::size_t j = 2; j <= M - 2; ++j) {
        const std::size_t row = j - 2;
        const double x = grid.x(j);
        sys.band(0, row) = F + sc.diag_spatial + c * 12.0 * h * h * prob.g(x, t);
        double b = F * base[j] - half_k * (history[j] - prob.s(x, t));
        constexpr std::array<int, 4> offsets{-2, -1, 1, 2};
        for (std::size_t m = 0; m < offsets.size(); ++m) {
            const std::size_t col = static_cast<std::size_t>(static_cast<long>(j) + offsets[m]);
            if (col < 2 || col > M - 2) {
                b -= sc.off[m] * boundary[col];
            } else {
                sys.band(offsets[m], row) = sc.off[m];
            }
        }
        rhs[row] = b;
    }
    return sys;
}

// Σ_n w[n] δ^{n/2} at the interior nodes, four levels per pass over j.
std::vector<double> history_sum(const HalfStepHistory& hist, const std::vector<double>& w) {
    const std::size_t M = hist.grid().M();
    std::vector<double> out(hist.grid().points(), 0.0);
    double* acc = out.data();
    if (w.size() + 1 > hist.size()) throw HistoryError("history sum reaches past the stored levels");
    const std::size_t stride = hist.grid().points();
    const double* base = hist.deltas().data();
    const auto delta = [&](std::size_t n) { return base + n * stride; };
    std::size_t n = 0;
    for (; n + 4 <= w.size(); n += 4) {
        const double* d0 = delta(n);
        const double* d1 = delta(n + 1);
        const double* d2 = delta(n + 2);
        const double* d3 = delta(n + 3);
        for (std::size_t j = 2; j <= M - 2; ++j) {
            acc[j] += w[n] * d0[j] + w[n + 1] * d1[j] + w[n + 2] * d2[j] + w[n + 3] * d3[j];
        }
    }
    for (; n < w.size(); ++n) {
        const double* d = delta(n);
        for (std::size_t j = 2; j <= M - 2; ++j) acc[j] += w[n] * d[j];
    }
    return out;
}

} // namespace

std::vector<double> averaged_boundary(const Problem& prob, const FractionalParams& p,
                                      const HalfStepHistory& hist, HalfIndex target) {
    const GridSpec& grid = hist.grid();
    const std::size_t M = grid.M();
    const auto old = hist.level(hist.last());
    const double t = grid.t_half(target.twice());
    const double one_2a = 1.0 + 2.0 * p.alpha();
    std::vector<double> out(grid.points(), 0.0);
    for (std::size_t r : {std::size_t{0}, std::size_t{1}, M - 1, M}) {
        out[r] = one_2a * prob.boundary(grid.x(r), t) - 2.0 * p.alpha() * old[r];
    }
    return out;
}

PentaSystem assemble_half(const Problem& prob, const GridSpec& grid, const FractionalParams& p,
                          std::size_t i, const HalfLevelWeights& w, const HalfStepHistory& hist) {
    require_last(hist, HalfIndex::whole(i), "assemble_half");
    if (w.i != i) throw ContractError("half-level weights belong to a different step");

    // Weights of δ^{n/2}, n = 0..2i−1; the δ^i term carries the unknown.
    std::vector<double> coef(2 * i, 0.0);
    double F = 0.0;
    if (i == 0) {
        F = w.f_tilde[0];
    } else {
        F = w.f_tilde[i] + w.f_tilde[i - 1];
        coef[0] += *w.fdot_tilde;
        for (std::size_t l = 0; l + 2 <= i; ++l) coef[2 * (l + 1)] += w.f_tilde[l];
        for (std::size_t l = 0; l < i; ++l) coef[2 * l + 1] += w.d_tilde[l] - w.f_tilde[l];
    }
    const auto history = history_sum(hist, coef);
    const auto boundary = averaged_boundary(prob, p, hist, HalfIndex::half(i));
    const double t = grid.t_half(2 * i) + (0.5 + p.alpha()) * grid.k();
    return assemble(prob, grid, p, F, hist.level(HalfIndex::whole(i)), history, boundary, t);
}

PentaSystem assemble_full(const Problem& prob, const GridSpec& grid, const FractionalParams& p,
                          std::size_t i, const FullLevelWeights& w, const HalfStepHistory& hist) {
    require_last(hist, HalfIndex::half(i), "assemble_full");
    if (w.i != i) throw ContractError("full-level weights belong to a different step");

    // Weights of δ^{n/2}, n = 0..2i; the δ^{i+1/2} term carries the unknown.
    std::vector<double> coef(2 * i + 1, 0.0);
    for (std::size_t l = 0; l <= i; ++l) coef[2 * l] += w.d_tilde[l] - w.f_tilde[l];
    for (std::size_t l = 0; l < i; ++l) coef[2 * l + 1] += w.f_tilde[l];
    const double F = w.f_tilde[i] + w.f_tilde[i + 1];

    const auto history = history_sum(hist, coef);
    const auto boundary = averaged_boundary(prob, p, hist, HalfIndex::whole(i + 1));
    const double t = grid.t_half(2 * i + 1) + (0.5 + p.alpha()) * grid.k();
    return assemble(prob, grid, p, F, hist.level(HalfIndex::half(i)), history, boundary, t);
}

} // namespace tfcdr
