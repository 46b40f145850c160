// Command-line driver for convergence studies.
//
//   tfcdr run --problem example1 --lambda 0.9 --levels 3..5 --couple-time --out-csv t1.csv
//
// Exit codes: 0 success, 1 configuration error, 2 solver failure,
// 3 coefficient property failure.

#include "tfcdr/config.hpp"
#include "tfcdr/error.hpp"
#include "tfcdr/harness.hpp"
#include "tfcdr/weights.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitSolver = 2;
constexpr int kExitProperty = 3;

struct Options {
    std::string problem = "example1";
    std::optional<double> lambda;
    std::string levels;
    bool couple_time = false;
    std::string k_list;
    std::string out_csv;
    std::string out_svg;
    std::string norm;
    bool check_properties = false;
    std::size_t property_levels = 50;
};

bool is_example(const std::string& id) { return id == "example1" || id == "example2"; }

tfcdr::StudyConfig build_config(const Options& o) {
    tfcdr::StudyConfig cfg;
    bool lambda_given = o.lambda.has_value();
    if (!is_example(o.problem)) {
        if (!std::filesystem::exists(o.problem)) {
            throw tfcdr::ConfigError("--problem must be example1, example2 or an existing config file, got '" +
                                     o.problem + "'");
        }
        const auto file = tfcdr::ConfigFile::load(o.problem);
        cfg = tfcdr::study_from_config(file);
        lambda_given = lambda_given || file.has("lambda");
    } else {
        cfg.problem = o.problem;
    }
    if (!lambda_given) throw tfcdr::ConfigError("--lambda is required");
    if (o.lambda) cfg.lambda = *o.lambda;
    if (!o.levels.empty()) cfg.levels = tfcdr::parse_levels(o.levels);
    if (o.couple_time) {
        cfg.coupling = tfcdr::Coupling::time_coupled;
        cfg.k_list.clear();
    }
    if (!o.k_list.empty()) {
        cfg.coupling = tfcdr::Coupling::independent;
        cfg.k_list = tfcdr::parse_k_list(o.k_list);
    }
    if (!o.norm.empty()) cfg.norm = o.norm == "linf_l2" ? tfcdr::ErrorNorm::linf_l2 : tfcdr::ErrorNorm::l2_l2;
    if (!o.out_csv.empty()) cfg.out_csv = o.out_csv;
    if (!o.out_svg.empty()) cfg.out_svg = o.out_svg;
    return cfg;
}

int check_properties(double lambda, std::size_t max_i) {
    const tfcdr::PropertySuiteResult res =
        tfcdr::check_coefficient_inequalities(tfcdr::FractionalParams(lambda), max_i);
    if (!res.applicable) {
        std::printf("coefficient inequalities: not claimed for lambda = %g >= 2/3, skipped\n", lambda);
        return kExitOk;
    }
    for (const auto& r : res.results) {
        std::printf("%-48s %s  (%zu checked, %zu failed)\n", r.name.c_str(), r.failed == 0 ? "PASS" : "FAIL",
                    r.checked, r.failed);
    }
    std::printf("coefficient inequalities up to i = %zu: %s\n", max_i, res.passed() ? "PASS" : "FAIL");
    return res.passed() ? kExitOk : kExitProperty;
}

void print_report(const tfcdr::ConvergenceReport& rep) {
    std::printf("%s, lambda = %g\n", rep.problem.c_str(), rep.lambda);
    std::printf("%5s %12s %12s %8s %12s %12s %12s %8s %9s\n", "l", "h", "k", "N", "exact_norm", "numeric_norm",
                "error", "rate", "seconds");
    for (const auto& r : rep.rows) {
        if (r.failure) {
            std::printf("%5d %12.5e %12.5e %8zu  FAILED: %s\n", r.level, r.h, r.k, r.N, r.failure->c_str());
            continue;
        }
        char rate[16] = "";
        if (r.rate) std::snprintf(rate, sizeof rate, "%.4f", *r.rate);
        std::printf("%5d %12.5e %12.5e %8zu %12.5e %12.5e %12.5e %8s %9.2f%s\n", r.level, r.h, r.k, r.N,
                    r.exact_norm, r.numeric_norm, r.error, rate, r.seconds,
                    r.conditions_hold ? "" : "  (side condition not met)");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-level fourth-order solver for time-fractional convection-diffusion-reaction problems"};
    app.require_subcommand(1);
    Options o;
    CLI::App* run = app.add_subcommand("run", "run a convergence study");
    run->add_option("--problem", o.problem, "example1, example2 or a config file");
    run->add_option("--lambda", o.lambda, "Caputo order, 0 < lambda < 1");
    run->add_option("--levels", o.levels, "space levels, h = 2^-l: a..b or a,b,c");
    auto* couple = run->add_flag("--couple-time", o.couple_time, "k = h^(4/(2-lambda/2)), snapped to T/N");
    run->add_option("--k", o.k_list, "explicit time steps, comma separated")->excludes(couple);
    run->add_option("--out-csv", o.out_csv, "CSV report path");
    run->add_option("--out-svg", o.out_svg, "SVG plot path");
    run->add_option("--norm", o.norm, "error norm")->check(CLI::IsMember({"l2_l2", "linf_l2"}));
    run->add_flag("--check-properties", o.check_properties, "check the coefficient inequalities for lambda");
    run->add_option("--property-levels", o.property_levels, "largest level i for --check-properties");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        const tfcdr::StudyConfig cfg = build_config(o);
        int status = kExitOk;
        if (o.check_properties) status = check_properties(cfg.lambda, o.property_levels);
        if (cfg.levels.empty()) {
            if (o.check_properties) return status;
            throw tfcdr::ConfigError("--levels is required");
        }
        if (cfg.out_csv.empty()) throw tfcdr::ConfigError("--out-csv is required");

        const tfcdr::ConvergenceReport rep = tfcdr::run_study(cfg);
        print_report(rep);
        tfcdr::emit_csv(rep, cfg.out_csv);
        if (!cfg.out_svg.empty()) tfcdr::emit_plot(rep, cfg.out_svg);
        if (rep.any_failure()) return kExitSolver;
        return status;
    } catch (const tfcdr::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const tfcdr::ContractError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const tfcdr::SolverError& e) {
        std::cerr << "solver failure: " << e.what() << '\n';
        return kExitSolver;
    } catch (const tfcdr::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}
