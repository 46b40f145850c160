#include "tfcdr/error.hpp"
#include "tfcdr/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace tfcdr {

namespace {

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5e", v);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw Error("write to '" + path + "' failed");
}

// Maps [lo, hi] onto [a, b] (b < a allowed, for the flipped SVG y axis).
struct Axis {
    double lo, hi, a, b;
    double operator()(double v) const { return a + (v - lo) / (hi - lo) * (b - a); }
};

std::pair<double, double> padded_range(double lo, double hi) {
    if (hi - lo < 1e-12) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double pad = 0.06 * (hi - lo);
    return {lo - pad, hi + pad};
}

std::string fmt(double v, int digits = 2) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

} // namespace

void emit_csv(const ConvergenceReport& report, const std::string& path) {
    if (report.rows.empty()) throw ContractError("cannot write an empty report");
    std::ostringstream os;
    os << "h,k,exact_norm,numeric_norm,error,rate\n";
    for (const auto& r : report.rows) {
        os << sci(r.h) << ',' << sci(r.k) << ',' << sci(r.exact_norm) << ',' << sci(r.numeric_norm)
           << ',' << sci(r.error) << ',';
        if (r.rate) os << sci(*r.rate);
        os << '\n';
    }
    write_file(path, os.str());
}

void emit_plot(const ConvergenceReport& report, const std::string& path) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : report.rows) {
        if (!r.failure && r.error > 0.0 && std::isfinite(r.error)) pts.emplace_back(std::log2(r.h), std::log2(r.error));
    }
    if (pts.size() < 2) throw ContractError("error plot needs at least two successful rows");

    constexpr double W = 960, H = 420, panel = 400, margin = 60;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\" viewBox=\"0 0 " << W << ' ' << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Left: log2 h vs log2 error.
    {
        double xmin = pts.front().first, xmax = xmin, ymin = pts.front().second, ymax = ymin;
        for (const auto& [x, y] : pts) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
        // Slope-4 line through the finest point, across the h range.
        const auto finest = *std::min_element(pts.begin(), pts.end());
        const double ref_lo = finest.second;
        const double ref_hi = finest.second + 4.0 * (xmax - finest.first);
        ymin = std::min(ymin, ref_lo);
        ymax = std::max(ymax, ref_hi);
        const auto [x0, x1] = padded_range(xmin, xmax);
        const auto [y0, y1] = padded_range(ymin, ymax);
        const Axis ax{x0, x1, margin, margin + panel - 80};
        const Axis ay{y0, y1, H - margin, margin};

        os << "<g class=\"convergence\">\n";
        os << "<text x=\"" << margin << "\" y=\"30\">" << report.problem << ", lambda = " << report.lambda
           << ": log2(error) vs log2(h)</text>\n";
        os << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << panel - 80 << "\" height=\""
           << H - 2 * margin << "\" fill=\"none\" stroke=\"black\"/>\n";
        os << "<line class=\"reference\" x1=\"" << fmt(ax(finest.first)) << "\" y1=\"" << fmt(ay(ref_lo))
           << "\" x2=\"" << fmt(ax(xmax)) << "\" y2=\"" << fmt(ay(ref_hi))
           << "\" stroke=\"gray\" stroke-dasharray=\"6 4\"/>\n";
        os << "<text x=\"" << fmt(ax(xmax) - 70) << "\" y=\"" << fmt(ay(ref_hi) - 6) << "\" fill=\"gray\">slope 4</text>\n";
        os << "<polyline fill=\"none\" stroke=\"red\" points=\"";
        for (const auto& [x, y] : pts) os << fmt(ax(x)) << ',' << fmt(ay(y)) << ' ';
        os << "\"/>\n";
        for (const auto& [x, y] : pts) {
            os << "<circle class=\"data\" cx=\"" << fmt(ax(x)) << "\" cy=\"" << fmt(ay(y))
               << "\" r=\"4\" fill=\"red\"><title>log2 h = " << fmt(x, 3) << ", log2 error = " << fmt(y, 3)
               << "</title></circle>\n";
        }
        os << "<text x=\"" << margin << "\" y=\"" << H - 20 << "\">log2 h from " << fmt(xmin, 1) << " to "
           << fmt(xmax, 1) << ", log2 error from " << fmt(ymin, 1) << " to " << fmt(ymax, 1) << "</text>\n";
        os << "</g>\n";
    }

    // Right: exact (green) and numerical (blue) solution at t = T.
    if (!report.final_x.empty()) {
        const auto& xs = report.final_x;
        double vmin = report.final_exact.front(), vmax = vmin;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            vmin = std::min({vmin, report.final_exact[j], report.final_numeric[j]});
            vmax = std::max({vmax, report.final_exact[j], report.final_numeric[j]});
        }
        const auto [v0, v1] = padded_range(vmin, vmax);
        const double left = margin + panel + 40;
        const Axis ax{xs.front(), xs.back(), left, W - margin};
        const Axis ay{v0, v1, H - margin, margin};
        os << "<g class=\"solution\">\n";
        os << "<text x=\"" << left << "\" y=\"30\">t = T: exact (green), numerical (blue)</text>\n";
        os << "<rect x=\"" << left << "\" y=\"" << margin << "\" width=\"" << W - margin - left << "\" height=\""
           << H - 2 * margin << "\" fill=\"none\" stroke=\"black\"/>\n";
        const auto curve = [&](const std::vector<double>& v, const char* colour, const char* dash) {
            os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\"" << dash << " points=\"";
            for (std::size_t j = 0; j < xs.size(); ++j) os << fmt(ax(xs[j])) << ',' << fmt(ay(v[j])) << ' ';
            os << "\"/>\n";
        };
        curve(report.final_exact, "green", "");
        curve(report.final_numeric, "blue", " stroke-dasharray=\"5 3\"");
        os << "</g>\n";
    }
    os << "</svg>\n";
    write_file(path, os.str());
}

} // namespace tfcdr
