#include "tfcdr/harness.hpp"

#include "tfcdr/error.hpp"
#include "tfcdr/spatial.hpp"
#include "tfcdr/stepper.hpp"
#include "tfcdr/weights.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

namespace tfcdr {

namespace {

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad " + what + " '" + s + "'");
    }
}

double parse_real(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad " + what + " '" + s + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) {
        const auto b = item.find_first_not_of(' ');
        const auto e = item.find_last_not_of(' ');
        out.push_back(b == std::string::npos ? std::string{} : item.substr(b, e - b + 1));
    }
    // getline drops a trailing empty field; keep it so "0.1," is rejected.
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

struct RowPlan {
    int level;
    std::optional<double> k;  // empty: coupled
};

std::vector<RowPlan> plan_rows(const StudyConfig& cfg) {
    std::vector<RowPlan> plan;
    if (cfg.coupling == Coupling::time_coupled) {
        for (int l : cfg.levels) plan.push_back({l, std::nullopt});
        return plan;
    }
    const std::size_t nl = cfg.levels.size();
    const std::size_t nk = cfg.k_list.size();
    const std::size_t rows = std::max(nl, nk);
    for (std::size_t r = 0; r < rows; ++r) {
        plan.push_back({cfg.levels[nl == 1 ? 0 : r], cfg.k_list[nk == 1 ? 0 : r]});
    }
    return plan;
}

} // namespace

void StudyConfig::validate() const {
    FractionalParams check(lambda);  // throws ContractError on a bad λ
    (void)check;
    if (levels.empty()) throw ConfigError("study needs at least one level");
    for (std::size_t r = 0; r < levels.size(); ++r) {
        if (levels[r] < 2 || levels[r] > 20) {
            throw ConfigError("level " + std::to_string(levels[r]) + " outside 2..20 (need M >= 4)");
        }
        if (coupling == Coupling::time_coupled && r > 0 && levels[r] <= levels[r - 1]) {
            throw ConfigError("levels must be strictly increasing");
        }
    }
    if (coupling == Coupling::independent) {
        if (k_list.empty()) throw ConfigError("independent time stepping needs a k list");
        for (double k : k_list) {
            if (!(k > 0.0) || !std::isfinite(k)) throw ConfigError("time steps must be positive");
        }
        if (levels.size() != 1 && k_list.size() != 1 && levels.size() != k_list.size()) {
            throw ConfigError("levels and k list must have equal length unless one has a single entry");
        }
        if (levels.size() > 1 && k_list.size() == 1) {
            for (std::size_t r = 1; r < levels.size(); ++r) {
                if (levels[r] <= levels[r - 1]) throw ConfigError("levels must be strictly increasing");
            }
        }
    } else if (!k_list.empty()) {
        throw ConfigError("a k list cannot be combined with time coupling");
    }
}

std::vector<int> parse_levels(const std::string& text) {
    std::vector<int> out;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const int a = parse_int(text.substr(0, dots), "level range");
        const int b = parse_int(text.substr(dots + 2), "level range");
        if (b < a) throw ConfigError("empty level range '" + text + "'");
        for (int l = a; l <= b; ++l) out.push_back(l);
        return out;
    }
    for (const auto& item : split(text, ',')) out.push_back(parse_int(item, "level"));
    return out;
}

std::vector<double> parse_k_list(const std::string& text) {
    std::vector<double> out;
    for (const auto& item : split(text, ',')) out.push_back(parse_real(item, "time step"));
    return out;
}

StudyConfig study_from_config(const ConfigFile& cfg) {
    StudyConfig s;
    s.problem = cfg.get("problem").value_or(cfg.has("q") ? cfg.origin() : std::string("example1"));
    if (const auto v = cfg.get("lambda")) s.lambda = parse_real(*v, "lambda");
    if (const auto v = cfg.get("levels")) s.levels = parse_levels(*v);
    if (const auto v = cfg.get("coupling")) {
        if (*v == "coupled") s.coupling = Coupling::time_coupled;
        else if (*v == "independent") s.coupling = Coupling::independent;
        else throw ConfigError("coupling must be 'coupled' or 'independent', got '" + *v + "'");
    }
    if (const auto v = cfg.get("k")) {
        s.k_list = parse_k_list(*v);
        if (!cfg.has("coupling")) s.coupling = Coupling::independent;
    }
    if (const auto v = cfg.get("norm")) {
        if (*v == "l2_l2") s.norm = ErrorNorm::l2_l2;
        else if (*v == "linf_l2") s.norm = ErrorNorm::linf_l2;
        else throw ConfigError("norm must be 'l2_l2' or 'linf_l2', got '" + *v + "'");
    }
    s.out_csv = cfg.get("out_csv").value_or("");
    s.out_svg = cfg.get("out_svg").value_or("");
    return s;
}

double coupled_time_step(double h, double lambda) {
    if (!(h > 0.0)) throw ContractError("mesh size must be positive");
    return std::pow(h, 4.0 / (2.0 - 0.5 * lambda));
}

SnappedStep snap_time_step(double T, double k) {
    if (!(T > 0.0) || !(k > 0.0)) throw ContractError("T and k must be positive");
    const double ratio = T / k;
    auto N = static_cast<std::size_t>(std::ceil(ratio * (1.0 - 1e-12)));
    N = std::max<std::size_t>(N, 1);
    return {N, T / static_cast<double>(N)};
}

bool ConvergenceReport::any_failure() const {
    return std::any_of(rows.begin(), rows.end(), [](const ConvergenceRow& r) { return r.failure.has_value(); });
}

std::optional<double> observed_rate(double prev_error, double error) {
    if (!(prev_error > 0.0) || !(error > 0.0) || !std::isfinite(prev_error) || !std::isfinite(error)) {
        return std::nullopt;
    }
    return std::log2(prev_error / error);
}

double fitted_slope(const ConvergenceReport& report) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : report.rows) {
        if (!r.failure && r.error > 0.0 && std::isfinite(r.error)) pts.emplace_back(std::log2(r.h), std::log2(r.error));
    }
    if (pts.size() < 2) throw ContractError("slope fit needs at least two successful rows");
    double mx = 0.0, my = 0.0;
    for (const auto& [x, y] : pts) {
        mx += x;
        my += y;
    }
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double sxy = 0.0, sxx = 0.0;
    for (const auto& [x, y] : pts) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    if (sxx == 0.0) throw ContractError("slope fit needs distinct mesh sizes");
    return sxy / sxx;
}

ConvergenceReport run_study(const StudyConfig& cfg) {
    cfg.validate();
    const Problem prob = resolve_problem(cfg.problem, cfg.lambda);
    if (!prob.exact) throw ContractError("convergence study needs a problem with an exact solution");
    validate(prob);
    const FractionalParams params(cfg.lambda);

    ConvergenceReport report;
    report.problem = prob.name;
    report.lambda = cfg.lambda;
    report.norm = cfg.norm;

    for (const RowPlan& plan : plan_rows(cfg)) {
        ConvergenceRow row;
        row.level = plan.level;
        row.M = std::size_t{1} << plan.level;
        row.h = prob.L1 / static_cast<double>(row.M);
        const double k_raw = plan.k ? *plan.k : coupled_time_step(row.h, cfg.lambda);
        const SnappedStep snap = snap_time_step(prob.T, k_raw);
        row.N = snap.N;
        row.k = snap.k;

        const GridSpec grid(row.M, row.N, prob.L1, prob.T);
        const auto start = std::chrono::steady_clock::now();
        try {
            const RunResult res = run(prob, grid, params);
            const HalfStepHistory exact = sample_exact(res.history, prob);
            const ExactErrors err = error_vs_exact(res.history, prob);
            if (cfg.norm == ErrorNorm::l2_l2) {
                row.exact_norm = space_time_l2_norm(exact);
                row.numeric_norm = space_time_l2_norm(res.history);
                row.error = err.l2_l2;
            } else {
                row.exact_norm = max_level_l2_norm(exact);
                row.numeric_norm = max_level_l2_norm(res.history);
                row.error = err.linf_l2;
            }
            row.conditions_hold = res.diagnostics.all_conditions_hold();

            const auto u = res.history.level(HalfIndex::whole(row.N));
            report.final_x.clear();
            report.final_exact.clear();
            report.final_numeric.assign(u.begin(), u.end());
            for (std::size_t j = 0; j < grid.points(); ++j) {
                report.final_x.push_back(grid.x(j));
                report.final_exact.push_back((*prob.exact)(grid.x(j), prob.T));
            }
        } catch (const SolverError& e) {
            row.failure = e.what();
            row.error = std::nan("");
            row.exact_norm = std::nan("");
            row.numeric_norm = std::nan("");
        }
        row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!report.rows.empty()) {
            const ConvergenceRow& prev = report.rows.back();
            if (!prev.failure && !row.failure) row.rate = observed_rate(prev.error, row.error);
        }
        report.rows.push_back(row);
    }
    return report;
}

} // namespace tfcdr
