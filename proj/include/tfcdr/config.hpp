#pragma once

#include "tfcdr/problem.hpp"

#include <map>
#include <optional>
#include <string>

namespace tfcdr {

/// Flat `key = value` text. Blank lines and lines starting with '#' are
/// skipped; a key may appear once.
class ConfigFile {
public:
    /// Throws ConfigError when the file cannot be read or a line is malformed.
    static ConfigFile load(const std::string& path);
    static ConfigFile parse(const std::string& text, const std::string& origin = "<string>");

    std::optional<std::string> get(const std::string& key) const;
    bool has(const std::string& key) const { return entries_.count(key) != 0; }
    const std::map<std::string, std::string>& entries() const { return entries_; }
    const std::string& origin() const { return origin_; }

private:
    std::string origin_;
    std::map<std::string, std::string> entries_;
};

/// Builds a problem from expression keys.
///
/// Required: q, p, g, s, psi1 and either boundary (or boundary_left and
/// boundary_right) or exact. Optional: name, L1, T, exact. q and p may only
/// depend on t, psi1 only on x. Without explicit boundary data the exact
/// solution supplies it. Throws ConfigError.
Problem problem_from_config(const ConfigFile& cfg, double lambda);

/// example1, example2, or a path to a config file.
Problem resolve_problem(const std::string& id, double lambda);

} // namespace tfcdr
