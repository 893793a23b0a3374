#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gifzs/attractor.hpp"

namespace gifzs {

struct ConfigError : std::runtime_error {
    int line;
    std::string field;
    ConfigError(int line_, std::string field_, const std::string& what)
        : std::runtime_error((line_ > 0 ? "line " + std::to_string(line_) + ": " : "") +
                             (field_.empty() ? "" : field_ + ": ") + what),
          line(line_), field(std::move(field_)) {}
};

struct MapConfig {
    std::vector<double> blocks; // degree blocks of dim*dim entries, row-major
    std::vector<double> offset;
};

struct RunConfig {
    int max_iter = 0;
    double tol = -1.0;
    std::string seed = "center"; // center | full
};

/// Line-oriented key=value sections: [domain], [system], repeated [map] and
/// [grey] pairs, optional [run]. Serializing and reparsing reproduces every
/// field exactly.
struct SystemConfig {
    int dim = 1;
    std::vector<double> lo, hi;
    std::vector<CellIndex> cells;
    bool wrap = false;
    int degree = 1;
    int levels = 255;
    bool allow_zero_grey = false;
    std::vector<MapConfig> maps;
    std::vector<std::string> greys; // serialized specs, parsed via GreyLevelMap
    RunConfig run;

    bool operator==(const SystemConfig& other) const;
};

SystemConfig parse_config(const std::string& text);
SystemConfig load_config(const std::string& path);
std::string serialize_config(const SystemConfig& cfg);

/// Validates and assembles the system; diagnostics name the offending map,
/// grey or field (Lipschitz bound >= 1, admissibility clause, shape errors).
Gifzs build_system(const SystemConfig& cfg);

RunParams run_params(const SystemConfig& cfg);
std::vector<FuzzyGrid> seeds_from(const SystemConfig& cfg, const Gifzs& z);

/// Emits a round-trippable config for a built system (used by the inverse
/// approximation to hand its result back through the parser).
SystemConfig config_from(const Gifzs& z, const RunConfig& run = {});

} // namespace gifzs
