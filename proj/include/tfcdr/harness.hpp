#pragma once

#include "tfcdr/config.hpp"
#include "tfcdr/problem.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tfcdr {

enum class Coupling { time_coupled, independent };
enum class ErrorNorm { l2_l2, linf_l2 };

struct StudyConfig {
    /// example1, example2 or a config file path.
    std::string problem = "example1";
    double lambda = 0.5;
    /// Space refinement exponents, h = L1 · 2^{−l}.
    std::vector<int> levels;
    Coupling coupling = Coupling::time_coupled;
    /// Independent mode. Broadcast against levels when either has one entry,
    /// otherwise paired entry by entry.
    std::vector<double> k_list;
    ErrorNorm norm = ErrorNorm::l2_l2;
    std::string out_csv;
    std::string out_svg;

    /// Throws ConfigError.
    void validate() const;
};

/// Parses "a..b" or "a,b,c".
std::vector<int> parse_levels(const std::string& text);
/// Parses "k1,k2,...".
std::vector<double> parse_k_list(const std::string& text);

/// Study settings from a config file (keys problem, lambda, levels, coupling,
/// k, norm, out_csv, out_svg). A config that only defines a problem names
/// itself as the problem.
StudyConfig study_from_config(const ConfigFile& cfg);

/// h^{4/(2−λ/2)}: temporal and spatial error terms shrink together.
double coupled_time_step(double h, double lambda);

struct SnappedStep {
    std::size_t N;
    double k;
};
/// N = ceil(T/k) (with a relative 1e−12 slack so an exact divisor is kept), k = T/N.
SnappedStep snap_time_step(double T, double k);

struct ConvergenceRow {
    int level = 0;
    double h = 0.0;
    double k = 0.0;
    std::size_t M = 0;
    std::size_t N = 0;
    double exact_norm = 0.0;
    double numeric_norm = 0.0;
    double error = 0.0;
    std::optional<double> rate;
    double seconds = 0.0;
    bool conditions_hold = true;
    /// Set when the solve failed; the numeric columns are then meaningless.
    std::optional<std::string> failure;
};

struct ConvergenceReport {
    std::string problem;
    double lambda = 0.0;
    ErrorNorm norm = ErrorNorm::l2_l2;
    std::vector<ConvergenceRow> rows;
    /// Nodes, exact and numerical solution at t = T for the finest successful row.
    std::vector<double> final_x;
    std::vector<double> final_exact;
    std::vector<double> final_numeric;

    bool any_failure() const;
};

/// log2(prev/cur), absent when either error is not positive and finite.
std::optional<double> observed_rate(double prev_error, double error);

/// Least-squares slope of log2(error) against log2(h) over successful rows.
/// Throws ContractError with fewer than two.
double fitted_slope(const ConvergenceReport& report);

/// One solver run per row, rows in the given order. A failed solve is recorded
/// in its row and the study continues. Throws ConfigError for a bad config and
/// ContractError when the problem has no exact solution.
ConvergenceReport run_study(const StudyConfig& cfg);

/// Header `h,k,exact_norm,numeric_norm,error,rate`, six significant digits,
/// empty rate in the first row. Throws Error naming the path on I/O failure.
void emit_csv(const ConvergenceReport& report, const std::string& path);

/// Self-contained SVG: log2 h against log2 error with a slope-4 reference
/// line, and exact vs numerical solution at t = T for the finest level.
/// Throws ContractError (writing nothing) with fewer than two plottable rows.
void emit_plot(const ConvergenceReport& report, const std::string& path);

} // namespace tfcdr
