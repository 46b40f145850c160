#include "tfcdr/caputo.hpp"

#include "tfcdr/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace tfcdr {

namespace {

constexpr int kGaussPoints = 10;

struct GaussRule {
    std::array<double, kGaussPoints> nodes{};
    std::array<double, kGaussPoints> weights{};
};

// Legendre roots by Newton iteration from the Chebyshev-like initial guess.
GaussRule make_gauss_legendre() {
    GaussRule rule;
    constexpr int n = kGaussPoints;
    for (int r = 0; r < n; ++r) {
        double x = std::cos(std::numbers::pi * (r + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int m = 2; m <= n; ++m) {
                const double p2 = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / m;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        rule.nodes[r] = x;
        rule.weights[r] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

const GaussRule& gauss_rule() {
    static const GaussRule rule = make_gauss_legendre();
    return rule;
}

// ∫₀ᵗ df(t−s) s^{−λ} ds with s = w^g, g = 1/(1−λ): the Jacobian g w^{g−1}
// cancels s^{−λ}, leaving g ∫₀^{t^{1/g}} df(t − w^g) dw. Uniform panels in w are
// panels in s graded toward s = 0 (τ = t) with exponent g.
double graded_integral(const ScalarFunction& df, double lambda, double t, int panels) {
    const GaussRule& rule = gauss_rule();
    const double grade = 1.0 / (1.0 - lambda);
    const double w_end = std::pow(t, 1.0 - lambda);
    const double width = w_end / panels;
    double sum = 0.0;
    for (int k = 0; k < panels; ++k) {
        const double a = k * width;
        const double mid = a + 0.5 * width;
        double panel = 0.0;
        for (int r = 0; r < kGaussPoints; ++r) {
            const double w = mid + 0.5 * width * rule.nodes[r];
            panel += rule.weights[r] * df(t - std::pow(w, grade));
        }
        sum += 0.5 * width * panel;
    }
    return grade * sum;
}

} // namespace

OracleResult caputo_quadrature_oracle(const ScalarFunction& /*f*/, const ScalarFunction& df,
                                      double lambda, double t, int n_panels, double rel_tol) {
    if (!(lambda > 0.0 && lambda < 1.0)) throw ContractError("oracle needs 0 < lambda < 1");
    if (!(t > 0.0)) throw ContractError("oracle needs t > 0");
    if (n_panels < 1) n_panels = 1;

    constexpr int kMaxPanels = 1 << 16;
    const double norm = 1.0 / gamma_fn(1.0 - lambda);
    double previous = graded_integral(df, lambda, t, n_panels);
    double diff = 0.0;
    for (int panels = 2 * n_panels; panels <= kMaxPanels; panels *= 2) {
        const double current = graded_integral(df, lambda, t, panels);
        diff = std::abs(current - previous);
        if (diff <= rel_tol * std::max(std::abs(current), 1e-14)) {
            return {current * norm, diff * norm, panels};
        }
        previous = current;
    }
    std::ostringstream os;
    os << "Caputo quadrature did not converge at t=" << t << " (last difference " << diff << ")";
    throw OracleError(os.str(), diff * norm);
}

} // namespace tfcdr
