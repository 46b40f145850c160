#include "tfcdr/error.hpp"
#include "tfcdr/linsys.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tfcdr {

PentaSystem::PentaSystem(std::size_t n) : n_(n), rhs_(n, 0.0) {
    if (n == 0) throw ContractError("pentadiagonal system needs at least one unknown");
    for (auto& b : bands_) b.assign(n, 0.0);
}

double& PentaSystem::band(int offset, std::size_t row) {
    if (offset < -2 || offset > 2 || row >= n_) throw ContractError("band index out of range");
    return bands_[static_cast<std::size_t>(offset + 2)][row];
}

double PentaSystem::band(int offset, std::size_t row) const {
    if (offset < -2 || offset > 2 || row >= n_) throw ContractError("band index out of range");
    return bands_[static_cast<std::size_t>(offset + 2)][row];
}

double PentaSystem::entry(std::size_t row, std::size_t col) const {
    const long offset = static_cast<long>(col) - static_cast<long>(row);
    if (row >= n_ || col >= n_ || offset < -2 || offset > 2) return 0.0;
    return bands_[static_cast<std::size_t>(offset + 2)][row];
}

namespace {

// Row r keeps columns r−2 .. r+4: the original band plus two columns of
// fill-in from row interchanges.
class BandWorkspace {
public:
    static constexpr long kLow = 2;
    static constexpr long kWidth = 7;

    explicit BandWorkspace(const PentaSystem& sys) : n_(sys.size()), data_(n_ * kWidth, 0.0) {
        for (std::size_t r = 0; r < n_; ++r) {
            for (int d = -2; d <= 2; ++d) {
                const long c = static_cast<long>(r) + d;
                if (c >= 0 && c < static_cast<long>(n_)) at(r, static_cast<std::size_t>(c)) = sys.band(d, r);
            }
        }
    }

    double& at(std::size_t r, std::size_t c) {
        return data_[r * kWidth + static_cast<std::size_t>(static_cast<long>(c) - static_cast<long>(r) + kLow)];
    }

    std::size_t n() const { return n_; }

private:
    std::size_t n_;
    std::vector<double> data_;
};

} // namespace

std::vector<double> solve_penta(const PentaSystem& sys) {
    BandWorkspace a(sys);
    const std::size_t n = a.n();
    std::vector<double> b = sys.rhs();

    for (std::size_t c = 0; c < n; ++c) {
        const std::size_t last_row = std::min(n - 1, c + 2);
        std::size_t piv = c;
        double best = std::abs(a.at(c, c));
        for (std::size_t r = c + 1; r <= last_row; ++r) {
            const double v = std::abs(a.at(r, c));
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (!(best > 0.0) || !std::isfinite(best)) {
            std::ostringstream os;
            os << "zero pivot in banded LU at column " << c << " of " << n;
            throw SingularMatrixError(os.str(), c);
        }
        const std::size_t last_col = std::min(n - 1, c + 4);
        if (piv != c) {
            for (std::size_t col = c; col <= last_col; ++col) std::swap(a.at(c, col), a.at(piv, col));
            std::swap(b[c], b[piv]);
        }
        const double pivot = a.at(c, c);
        for (std::size_t r = c + 1; r <= last_row; ++r) {
            const double m = a.at(r, c) / pivot;
            if (m == 0.0) continue;
            a.at(r, c) = 0.0;
            for (std::size_t col = c + 1; col <= std::min(last_col, r + 4); ++col) {
                a.at(r, col) -= m * a.at(c, col);
            }
            b[r] -= m * b[c];
        }
    }

    std::vector<double> x(n, 0.0);
    for (std::size_t r = n; r-- > 0;) {
        double s = b[r];
        const std::size_t last_col = std::min(n - 1, r + 4);
        for (std::size_t col = r + 1; col <= last_col; ++col) s -= a.at(r, col) * x[col];
        x[r] = s / a.at(r, r);
    }
    return x;
}

double residual_inf(const PentaSystem& sys, std::span<const double> x) {
    if (x.size() != sys.size()) throw DimensionError("solution length does not match system");
    double worst = 0.0;
    for (std::size_t r = 0; r < sys.size(); ++r) {
        double s = -sys.rhs()[r];
        for (int d = -2; d <= 2; ++d) {
            const long c = static_cast<long>(r) + d;
            if (c >= 0 && c < static_cast<long>(sys.size())) s += sys.band(d, r) * x[static_cast<std::size_t>(c)];
        }
        worst = std::max(worst, std::abs(s));
    }
    return worst;
}

double norm_inf(const PentaSystem& sys) {
    double worst = 0.0;
    for (std::size_t r = 0; r < sys.size(); ++r) {
        double s = 0.0;
        for (int d = -2; d <= 2; ++d) s += std::abs(sys.band(d, r));
        worst = std::max(worst, s);
    }
    return worst;
}

bool strictly_diagonally_dominant(const PentaSystem& sys) {
    for (std::size_t r = 0; r < sys.size(); ++r) {
        double off = 0.0;
        for (int d : {-2, -1, 1, 2}) off += std::abs(sys.band(d, r));
        if (!(std::abs(sys.band(0, r)) > off)) return false;
    }
    return true;
}

} // namespace tfcdr
