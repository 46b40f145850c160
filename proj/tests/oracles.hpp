// Independent reference implementations used by the unit and acceptance tests.
// Nothing here calls into the library's weights, assembly or solver code.
#pragma once

#include "tfcdr/problem.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace oracle {

// Γ(x) by upward recurrence to x ≥ 15 and the Stirling series for log Γ.
inline double gamma_stirling(double x) {
    double shift = 1.0;
    while (x < 15.0) {
        shift *= x;
        x += 1.0;
    }
    const double z = x;
    const double z2 = z * z;
    double series = 1.0 / (12.0 * z);
    double zp = z;
    const double coef[] = {-1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0, 1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0};
    for (double c : coef) {
        zp *= z2;
        series += c / zp;
    }
    const double lg = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + series;
    return std::exp(lg) / shift;
}

using Dense = std::vector<std::vector<double>>;

// Gaussian elimination with partial pivoting on a dense copy.
inline std::vector<double> dense_solve(Dense a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r) {
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        }
        if (a[piv][c] == 0.0) throw std::runtime_error("dense_solve: singular");
        std::swap(a[c], a[piv]);
        std::swap(b[c], b[piv]);
        for (std::size_t r = c + 1; r < n; ++r) {
            const double m = a[r][c] / a[c][c];
            if (m == 0.0) continue;
            for (std::size_t k = c; k < n; ++k) a[r][k] -= m * a[c][k];
            b[r] -= m * b[c];
        }
    }
    std::vector<double> x(n);
    for (std::size_t r = n; r-- > 0;) {
        double s = b[r];
        for (std::size_t k = r + 1; k < n; ++k) s -= a[r][k] * x[k];
        x[r] = s / a[r][r];
    }
    return x;
}

// Thomas algorithm: lower[i] = A(i, i−1), diag[i] = A(i, i), upper[i] = A(i, i+1).
inline std::vector<double> thomas(std::vector<double> lower, std::vector<double> diag, std::vector<double> upper,
                                  std::vector<double> rhs) {
    const std::size_t n = diag.size();
    for (std::size_t i = 1; i < n; ++i) {
        const double m = lower[i] / diag[i - 1];
        diag[i] -= m * upper[i - 1];
        rhs[i] -= m * rhs[i - 1];
    }
    std::vector<double> x(n);
    x[n - 1] = rhs[n - 1] / diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = (rhs[i] - upper[i] * x[i + 1]) / diag[i];
    return x;
}

// Plain re-statement of the two-level scheme: all M+1 nodes are unknowns, the
// four closure nodes are identity rows, weights come straight from their
// closed forms with std::pow, and the Caputo sums are written out term by
// term from the stored levels. Levels are stored by half-step index n (t = n k/2).
class DenseSchemeReference {
public:
    DenseSchemeReference(const tfcdr::Problem& prob, std::size_t M, std::size_t N, double lambda)
        : prob_(prob), M_(M), N_(N), lambda_(lambda), alpha_(1.0 - lambda), h_(prob.L1 / M), k_(prob.T / N) {
        std::vector<double> u0(M + 1);
        for (std::size_t j = 0; j <= M; ++j) u0[j] = prob.psi1(j * h_);
        levels_.push_back(u0);
    }

    const std::vector<std::vector<double>>& levels() const { return levels_; }
    // Replaces the stored levels, e.g. to assemble from another solver's history.
    void set_levels(std::vector<std::vector<double>> levels) { levels_ = std::move(levels); }

    struct System {
        Dense A;
        std::vector<double> b;
    };

    // Dense system for the next averaged unknown over all M+1 nodes (half
    // stage if the last level is whole, full stage otherwise).
    System next_system() const {
        const std::size_t last = levels_.size() - 1;
        const bool half = last % 2 == 0;
        const std::size_t i = last / 2;
        const double a = alpha_, lam = lambda_;
        const double scale = std::pow(k_, 1.0 - lam) / std::tgamma(2.0 - lam);
        const auto P = [&](double base, double e) { return std::pow(base, e); };
        const auto dt = [&](std::size_t n, std::size_t j) {
            return (levels_[n + 1][j] - levels_[n][j]) / (k_ / 2.0);
        };

        // Caputo weight on the unknown slope δ^{last} and the known remainder R_j.
        double F = 0.0;
        std::vector<double> R(M_ + 1, 0.0);
        const auto dw = [&](double x) { return P(x, 1 - lam) - P(x - 1, 1 - lam); };
        const auto fw = [&](double x) {
            return 2.0 / (2.0 - lam) * (P(x, 2 - lam) - P(x - 1, 2 - lam)) - 0.5 * (P(x, 1 - lam) + 3 * P(x - 1, 1 - lam));
        };
        if (half) {
            if (i == 0) {
                F = P(0.5 + a, 1 - lam);
            } else {
                const double fdot = P(i + 0.5 + a, 1 - lam) - P(i + a, 1 - lam);
                for (std::size_t j = 0; j <= M_; ++j) R[j] += fdot * dt(0, j);
                for (std::size_t l = 0; l < i; ++l) {
                    const double x = static_cast<double>(i) + a - static_cast<double>(l);
                    const double f = fw(x), d = dw(x);
                    for (std::size_t j = 0; j <= M_; ++j) {
                        // f δ^{l+1}: when l = i−1 this is δ^i, the unknown slope.
                        if (l + 1 == i) continue;
                        R[j] += f * dt(2 * (l + 1), j);
                    }
                    for (std::size_t j = 0; j <= M_; ++j) R[j] += (d - f) * dt(2 * l + 1, j);
                    if (l + 1 == i) F += f;
                }
                F += P(a, 1 - lam);
            }
        } else {
            for (std::size_t l = 0; l <= i; ++l) {
                const double x = static_cast<double>(i) + 1 + a - static_cast<double>(l);
                const double f = fw(x), d = dw(x);
                for (std::size_t j = 0; j <= M_; ++j) R[j] += (d - f) * dt(2 * l, j);
                if (l == i) {
                    F += f;
                } else {
                    for (std::size_t j = 0; j <= M_; ++j) R[j] += f * dt(2 * l + 1, j);
                }
            }
            F += P(a, 1 - lam);
        }
        F *= scale;
        for (double& r : R) r *= scale;

        // δ^{last} = (V − U^{last}) / ((1+2α) k/2) with V the averaged unknown.
        const double w = (1.0 + 2.0 * a) * k_ / 2.0;
        const double t_eval = (static_cast<double>(last) * 0.5 + 0.5 + a) * k_;
        const double t_new = static_cast<double>(last + 1) * 0.5 * k_;
        const std::vector<double>& old = levels_[last];
        const double q = prob_.q(t_eval), p = prob_.p(t_eval);

        Dense A(M_ + 1, std::vector<double>(M_ + 1, 0.0));
        std::vector<double> b(M_ + 1, 0.0);
        for (std::size_t j = 0; j <= M_; ++j) {
            const double xj = j * h_;
            if (j < 2 || j + 2 > M_) {
                A[j][j] = 1.0;
                b[j] = (1.0 + 2.0 * a) * prob_.boundary(xj, t_new) - 2.0 * a * old[j];
                continue;
            }
            // F δ + R − q D2 V + p D1 V + g V = s, multiplied through by w.
            const double c2 = q / (12.0 * h_ * h_);
            const double c1 = p / (12.0 * h_);
            A[j][j] = F + w * (30.0 * c2 + prob_.g(xj, t_eval));
            A[j][j - 1] = w * (-16.0 * c2 - 8.0 * c1);
            A[j][j + 1] = w * (-16.0 * c2 + 8.0 * c1);
            A[j][j - 2] = w * (c2 + c1);
            A[j][j + 2] = w * (c2 - c1);
            b[j] = F * old[j] + w * (prob_.s(xj, t_eval) - R[j]);
        }
        return {A, b};
    }

    void advance() {
        const std::size_t last = levels_.size() - 1;
        const double a = alpha_;
        const double t_new = static_cast<double>(last + 1) * 0.5 * k_;
        const std::vector<double>& old = levels_[last];
        const System sys = next_system();
        const std::vector<double> V = dense_solve(sys.A, sys.b);
        std::vector<double> next(M_ + 1);
        for (std::size_t j = 0; j <= M_; ++j) {
            next[j] = (j < 2 || j + 2 > M_) ? prob_.boundary(j * h_, t_new) : (V[j] + 2.0 * a * old[j]) / (1.0 + 2.0 * a);
        }
        levels_.push_back(next);
        last_averaged_ = V;
    }

    const std::vector<double>& last_averaged() const { return last_averaged_; }

private:
    const tfcdr::Problem& prob_;
    std::size_t M_, N_;
    double lambda_, alpha_, h_, k_;
    std::vector<std::vector<double>> levels_;
    std::vector<double> last_averaged_;
};

} // namespace oracle
