#include "tfcdr/spatial.hpp"

#include "tfcdr/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tfcdr {

namespace {

void require_length(const GridSpec& grid, std::span<const double> u) {
    if (u.size() != grid.points()) {
        std::ostringstream os;
        os << "grid vector has " << u.size() << " entries, grid needs " << grid.points();
        throw DimensionError(os.str());
    }
}

void require_interior(const GridSpec& grid, std::size_t j) {
    if (j < 2 || j + 2 > grid.M()) {
        std::ostringstream os;
        os << "five-point stencil at j=" << j << " outside [2, " << grid.M() - 2 << "]";
        throw StencilRangeError(os.str());
    }
}

} // namespace

double stencil_dxx4(const GridSpec& grid, std::span<const double> u, std::size_t j) {
    require_length(grid, u);
    require_interior(grid, j);
    const double h = grid.h();
    return (-u[j + 2] + 16.0 * u[j + 1] - 30.0 * u[j] + 16.0 * u[j - 1] - u[j - 2]) / (12.0 * h * h);
}

double stencil_dx4(const GridSpec& grid, std::span<const double> u, std::size_t j) {
    require_length(grid, u);
    require_interior(grid, j);
    return (-u[j + 2] + 8.0 * u[j + 1] - 8.0 * u[j - 1] + u[j - 2]) / (12.0 * grid.h());
}

std::vector<double> apply_Lh(const GridSpec& grid, std::span<const double> u, const Problem& prob,
                             double t_eval) {
    require_length(grid, u);
    const double q = prob.q(t_eval);
    const double p = prob.p(t_eval);
    const double h = grid.h();
    const double cxx = q / (12.0 * h * h);
    const double cx = p / (12.0 * h);
    std::vector<double> out(grid.points(), 0.0);
    for (std::size_t j = 2; j + 2 <= grid.M(); ++j) {
        const double dxx = -u[j + 2] + 16.0 * u[j + 1] - 30.0 * u[j] + 16.0 * u[j - 1] - u[j - 2];
        const double dx = -u[j + 2] + 8.0 * u[j + 1] - 8.0 * u[j - 1] + u[j - 2];
        out[j] = cxx * dxx - cx * dx - prob.g(grid.x(j), t_eval) * u[j];
    }
    return out;
}

double inner(const GridSpec& grid, std::span<const double> u, std::span<const double> v) {
    require_length(grid, u);
    require_length(grid, v);
    double s = 0.0;
    for (std::size_t j = 1; j < grid.M(); ++j) s += u[j] * v[j];
    return grid.h() * s;
}

double l2_norm(const GridSpec& grid, std::span<const double> u) {
    return std::sqrt(inner(grid, u, u));
}

double space_time_l2_norm(const HalfStepHistory& hist) {
    const GridSpec& grid = hist.grid();
    if (hist.empty() || hist.last() != HalfIndex::whole(grid.N())) {
        throw HistoryError("space-time norm needs every half level up to N = " +
                           std::to_string(grid.N()));
    }
    double s = 0.0;
    for (std::size_t n = 1; n < hist.size(); ++n) {
        const auto u = hist.level(HalfIndex::from_twice(n));
        s += inner(grid, u, u);
    }
    return std::sqrt(0.5 * grid.k() * s);
}

double max_level_l2_norm(const HalfStepHistory& hist) {
    double m = 0.0;
    for (std::size_t n = 0; n < hist.size(); ++n) {
        m = std::max(m, l2_norm(hist.grid(), hist.level(HalfIndex::from_twice(n))));
    }
    return m;
}

} // namespace tfcdr
