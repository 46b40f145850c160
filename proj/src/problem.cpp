#include "tfcdr/problem.hpp"

#include "tfcdr/error.hpp"
#include "tfcdr/spatial.hpp"
#include "tfcdr/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace tfcdr {

namespace {

constexpr int kSamples = 64;
constexpr double kExactTol = 1e-13;

} // namespace

CoefficientBounds sample_coefficient_bounds(const Problem& prob, double t_end) {
    if (t_end < 0.0) t_end = prob.time_max();
    CoefficientBounds b{std::numeric_limits<double>::infinity(),
                        std::numeric_limits<double>::infinity(),
                        std::numeric_limits<double>::infinity()};
    for (int it = 0; it < kSamples; ++it) {
        const double t = t_end * it / (kSamples - 1);
        b.q_min = std::min(b.q_min, prob.q(t));
        b.p_min = std::min(b.p_min, prob.p(t));
        for (int ix = 0; ix < kSamples; ++ix) {
            const double x = prob.L1 * ix / (kSamples - 1);
            b.g_min = std::min(b.g_min, prob.g(x, t));
        }
    }
    return b;
}

void validate(const Problem& prob) {
    if (!prob.q || !prob.p || !prob.g || !prob.s || !prob.psi1) {
        throw ContractError("problem '" + prob.name + "' is missing a coefficient or initial data");
    }
    if (!prob.boundary) {
        throw ContractError("problem '" + prob.name +
                            "' has no boundary data for the two outer node layers");
    }
    if (!(prob.L1 > 0.0) || !(prob.T > 0.0)) {
        throw ContractError("problem '" + prob.name + "' needs positive L1 and T");
    }
    const CoefficientBounds b = sample_coefficient_bounds(prob);
    if (!(b.q_min > 0.0) || !(b.p_min >= 0.0) || !(b.g_min >= 0.0)) {
        std::ostringstream os;
        os << "problem '" << prob.name << "' violates q > 0, p >= 0, g >= 0 on the sample grid"
           << " (min q=" << b.q_min << ", p=" << b.p_min << ", g=" << b.g_min << ")";
        throw ContractError(os.str());
    }
    if (prob.exact) {
        const auto& u = *prob.exact;
        double worst = 0.0;
        for (int ix = 0; ix < kSamples; ++ix) {
            const double x = prob.L1 * ix / (kSamples - 1);
            worst = std::max(worst, std::abs(prob.psi1(x) - u(x, 0.0)));
        }
        // Boundary data is only consumed near the ends; probe a band there.
        for (int it = 0; it < kSamples; ++it) {
            const double t = prob.time_max() * it / (kSamples - 1);
            for (double x : {0.0, 0.1 * prob.L1, 0.9 * prob.L1, prob.L1}) {
                worst = std::max(worst, std::abs(prob.boundary(x, t) - u(x, t)));
            }
        }
        if (worst > kExactTol) {
            std::ostringstream os;
            os << "problem '" << prob.name << "': initial/boundary data differ from the exact "
               << "solution by " << worst;
            throw ContractError(os.str());
        }
    }
}

Problem example1(double lambda) {
    const FractionalParams params(lambda);
    const double inv_gamma = 1.0 / gamma_fn(2.0 - params.lambda());
    Problem prob;
    prob.name = "example1";
    prob.L1 = 1.0;
    prob.T = 1.0;
    prob.q = [](double) { return 1.0; };
    prob.p = [](double) { return 1.0; };
    prob.g = [](double, double) { return 0.0; };
    prob.s = [inv_gamma, lambda](double x, double t) {
        const double tpow = t > 0.0 ? std::pow(t, 1.0 - lambda) : 0.0;
        return inv_gamma * tpow * std::sin(x) + t * (std::sin(x) + std::cos(x));
    };
    auto u = [](double x, double t) { return t * std::sin(x); };
    prob.psi1 = [u](double x) { return u(x, 0.0); };
    prob.boundary = u;
    prob.exact = u;
    return prob;
}

Problem example2(double lambda) {
    const FractionalParams params(lambda);
    const double inv_gamma = 1.0 / gamma_fn(3.0 - params.lambda());
    constexpr double pi = std::numbers::pi;
    Problem prob;
    prob.name = "example2";
    prob.L1 = 1.0;
    prob.T = 1.0;
    prob.q = [](double t) { return std::exp(t); };
    prob.p = [](double) { return 0.0; };
    prob.g = [](double, double t) { return 1.0 - std::sin(2.0 * t); };
    prob.s = [inv_gamma, lambda](double x, double t) {
        const double tpow = t > 0.0 ? std::pow(t, 2.0 - lambda) : 0.0;
        return (pi * pi * t * t * std::exp(t) + t * t * (1.0 - std::sin(2.0 * t)) +
                2.0 * inv_gamma * tpow) *
               std::sin(pi * x);
    };
    auto u = [](double x, double t) { return t * t * std::sin(pi * x); };
    prob.psi1 = [u](double x) { return u(x, 0.0); };
    prob.boundary = u;
    prob.exact = u;
    return prob;
}

HalfStepHistory sample_exact(const HalfStepHistory& like, const Problem& prob) {
    if (!prob.exact) throw ContractError("problem '" + prob.name + "' has no exact solution");
    const GridSpec& grid = like.grid();
    HalfStepHistory out(grid);
    std::vector<double> v(grid.points());
    for (std::size_t n = 0; n < like.size(); ++n) {
        const double t = grid.t_half(n);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = (*prob.exact)(grid.x(j), t);
        out.append(v);
    }
    return out;
}

ExactErrors error_vs_exact(const HalfStepHistory& hist, const Problem& prob) {
    if (!prob.exact) throw ContractError("problem '" + prob.name + "' has no exact solution");
    const GridSpec& grid = hist.grid();
    HalfStepHistory err(grid);
    std::vector<double> e(grid.points());
    ExactErrors out;
    for (std::size_t n = 0; n < hist.size(); ++n) {
        const auto u = hist.level(HalfIndex::from_twice(n));
        const double t = grid.t_half(n);
        for (std::size_t j = 0; j < e.size(); ++j) e[j] = u[j] - (*prob.exact)(grid.x(j), t);
        out.linf_l2 = std::max(out.linf_l2, l2_norm(grid, e));
        err.append(e);
    }
    out.l2_l2 = space_time_l2_norm(err);
    return out;
}

} // namespace tfcdr
