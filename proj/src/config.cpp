#include "tfcdr/config.hpp"

#include "tfcdr/error.hpp"
#include "tfcdr/expr.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace tfcdr {

namespace {

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys{
        // problem definition
        "name", "L1", "T", "q", "p", "g", "s", "psi1", "boundary", "boundary_left", "boundary_right",
        "exact",
        // study settings
        "problem", "lambda", "levels", "coupling", "k", "norm", "out_csv", "out_svg"};
    return keys;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const ConfigFile& cfg, const std::string& key, double fallback) {
    const auto v = cfg.get(key);
    if (!v) return fallback;
    try {
        std::size_t used = 0;
        const double d = std::stod(*v, &used);
        if (used != v->size()) throw std::invalid_argument(key);
        return d;
    } catch (const std::exception&) {
        throw ConfigError(cfg.origin() + ": '" + key + "' is not a number: " + *v);
    }
}

Expr required_expr(const ConfigFile& cfg, const std::string& key, double lambda) {
    const auto v = cfg.get(key);
    if (!v) throw ConfigError(cfg.origin() + ": missing key '" + key + "'");
    return Expr::compile(*v, lambda);
}

} // namespace

ConfigFile ConfigFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

ConfigFile ConfigFile::parse(const std::string& text, const std::string& origin) {
    ConfigFile cfg;
    cfg.origin_ = origin;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = trim(line);
        if (body.empty() || body[0] == '#') continue;
        const auto eq = body.find('=');
        const std::string where = origin + ":" + std::to_string(lineno);
        if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (!known_keys().count(key)) throw ConfigError(where + ": unknown key '" + key + "'");
        if (value.empty()) throw ConfigError(where + ": empty value for '" + key + "'");
        if (!cfg.entries_.emplace(key, value).second) {
            throw ConfigError(where + ": duplicate key '" + key + "'");
        }
    }
    return cfg;
}

std::optional<std::string> ConfigFile::get(const std::string& key) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

Problem problem_from_config(const ConfigFile& cfg, double lambda) {
    Problem prob;
    prob.name = cfg.get("name").value_or(cfg.origin());
    prob.L1 = parse_number(cfg, "L1", 1.0);
    prob.T = parse_number(cfg, "T", 1.0);

    const Expr q = required_expr(cfg, "q", lambda);
    const Expr p = required_expr(cfg, "p", lambda);
    if (q.uses_x() || p.uses_x()) throw ConfigError(cfg.origin() + ": q and p may depend on t only");
    const Expr g = required_expr(cfg, "g", lambda);
    const Expr s = required_expr(cfg, "s", lambda);
    const Expr psi1 = required_expr(cfg, "psi1", lambda);

    prob.q = [q](double t) { return q(0.0, t); };
    prob.p = [p](double t) { return p(0.0, t); };
    prob.g = g;
    prob.s = s;
    // psi1 is read at t = 0, so an expression shared with the exact solution works.
    prob.psi1 = [psi1](double x) { return psi1(x, 0.0); };

    if (const auto u = cfg.get("exact")) prob.exact = Expr::compile(*u, lambda);

    const bool split = cfg.has("boundary_left") || cfg.has("boundary_right");
    if (split && cfg.has("boundary")) {
        throw ConfigError(cfg.origin() + ": give either 'boundary' or 'boundary_left'/'boundary_right'");
    }
    if (split) {
        const Expr left = required_expr(cfg, "boundary_left", lambda);
        const Expr right = required_expr(cfg, "boundary_right", lambda);
        const double mid = 0.5 * prob.L1;
        prob.boundary = [left, right, mid](double x, double t) { return x < mid ? left(x, t) : right(x, t); };
    } else if (const auto b = cfg.get("boundary")) {
        prob.boundary = Expr::compile(*b, lambda);
    } else if (prob.exact) {
        prob.boundary = *prob.exact;
    } else {
        throw ConfigError(cfg.origin() + ": boundary data needs 'boundary' or an 'exact' solution");
    }
    return prob;
}

Problem resolve_problem(const std::string& id, double lambda) {
    if (id == "example1") return example1(lambda);
    if (id == "example2") return example2(lambda);
    return problem_from_config(ConfigFile::load(id), lambda);
}

} // namespace tfcdr
