#include "gifzs/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace gifzs {

namespace {

std::string trim(const std::string& s) {
    auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<double> parse_doubles(const std::string& text, int line, const std::string& field) {
    std::vector<double> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        std::istringstream val(item);
        double x;
        if (!(val >> x))
            throw ConfigError(line, field, "expected a number, got '" + trim(item) + "'");
        out.push_back(x);
        double extra;
        while (val >> extra) out.push_back(extra); // allow space separation too
    }
    if (out.empty())
        throw ConfigError(line, field, "expected at least one number");
    return out;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_doubles(const std::vector<double>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += format_double(xs[i]);
    }
    return out;
}

} // namespace

bool SystemConfig::operator==(const SystemConfig& other) const {
    auto maps_equal = [&]() {
        if (maps.size() != other.maps.size()) return false;
        for (std::size_t i = 0; i < maps.size(); ++i)
            if (maps[i].blocks != other.maps[i].blocks ||
                maps[i].offset != other.maps[i].offset)
                return false;
        return true;
    };
    return dim == other.dim && lo == other.lo && hi == other.hi && cells == other.cells &&
           wrap == other.wrap && degree == other.degree && levels == other.levels &&
           allow_zero_grey == other.allow_zero_grey && maps_equal() &&
           greys == other.greys && run.max_iter == other.run.max_iter &&
           run.tol == other.run.tol && run.seed == other.run.seed;
}

SystemConfig parse_config(const std::string& text) {
    SystemConfig cfg;
    cfg.lo.clear();
    cfg.hi.clear();

    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line = 0;
    bool saw_domain = false, saw_system = false;

    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(raw);
        auto hash = s.find('#');
        if (hash != std::string::npos) s = trim(s.substr(0, hash));
        if (s.empty()) continue;

        if (s.front() == '[') {
            if (s.back() != ']')
                throw ConfigError(line, "", "unterminated section header");
            section = s.substr(1, s.size() - 2);
            if (section == "domain") saw_domain = true;
            else if (section == "system") saw_system = true;
            else if (section == "map") cfg.maps.emplace_back();
            else if (section == "grey") cfg.greys.emplace_back();
            else if (section != "run")
                throw ConfigError(line, "", "unknown section [" + section + "]");
            continue;
        }

        auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError(line, "", "expected key = value");
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));
        if (section.empty())
            throw ConfigError(line, key, "key outside any section");

        auto as_int = [&](const std::string& what) {
            try {
                std::size_t pos = 0;
                int v = std::stoi(value, &pos);
                if (pos != value.size()) throw std::invalid_argument("");
                return v;
            } catch (...) {
                throw ConfigError(line, what, "expected an integer, got '" + value + "'");
            }
        };
        auto as_bool = [&](const std::string& what) {
            if (value == "0" || value == "false") return false;
            if (value == "1" || value == "true") return true;
            throw ConfigError(line, what, "expected 0 or 1, got '" + value + "'");
        };

        if (section == "domain") {
            if (key == "dim") cfg.dim = as_int("dim");
            else if (key == "lo") cfg.lo = parse_doubles(value, line, "lo");
            else if (key == "hi") cfg.hi = parse_doubles(value, line, "hi");
            else if (key == "wrap") cfg.wrap = as_bool("wrap");
            else if (key == "cells") {
                cfg.cells.clear();
                for (double x : parse_doubles(value, line, "cells")) {
                    if (x < 1 || x != static_cast<CellIndex>(x))
                        throw ConfigError(line, "cells", "cell counts must be positive integers");
                    cfg.cells.push_back(static_cast<CellIndex>(x));
                }
            } else
                throw ConfigError(line, key, "unknown [domain] key");
        } else if (section == "system") {
            if (key == "degree") cfg.degree = as_int("degree");
            else if (key == "levels") cfg.levels = as_int("levels");
            else if (key == "allow_zero_grey") cfg.allow_zero_grey = as_bool("allow_zero_grey");
            else
                throw ConfigError(line, key, "unknown [system] key");
        } else if (section == "map") {
            if (cfg.maps.empty())
                throw ConfigError(line, key, "map key before any [map] section");
            if (key == "blocks") cfg.maps.back().blocks = parse_doubles(value, line, "blocks");
            else if (key == "offset") cfg.maps.back().offset = parse_doubles(value, line, "offset");
            else
                throw ConfigError(line, key, "unknown [map] key");
        } else if (section == "grey") {
            if (cfg.greys.empty())
                throw ConfigError(line, key, "grey key before any [grey] section");
            if (key == "spec") cfg.greys.back() = value;
            else
                throw ConfigError(line, key, "unknown [grey] key");
        } else if (section == "run") {
            if (key == "max_iter") cfg.run.max_iter = as_int("max_iter");
            else if (key == "tol") cfg.run.tol = parse_doubles(value, line, "tol")[0];
            else if (key == "seed") cfg.run.seed = value;
            else
                throw ConfigError(line, key, "unknown [run] key");
        }
    }

    if (!saw_domain) throw ConfigError(0, "", "missing [domain] section");
    if (!saw_system) throw ConfigError(0, "", "missing [system] section");
    if (cfg.dim < 1) throw ConfigError(0, "dim", "dimension must be positive");
    if (static_cast<int>(cfg.lo.size()) != cfg.dim ||
        static_cast<int>(cfg.hi.size()) != cfg.dim ||
        static_cast<int>(cfg.cells.size()) != cfg.dim)
        throw ConfigError(0, "domain", "lo, hi and cells must each have dim entries");
    return cfg;
}

SystemConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError(0, "", "cannot open config file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

std::string serialize_config(const SystemConfig& cfg) {
    std::ostringstream out;
    out << "[domain]\n";
    out << "dim = " << cfg.dim << "\n";
    out << "lo = " << format_doubles(cfg.lo) << "\n";
    out << "hi = " << format_doubles(cfg.hi) << "\n";
    out << "cells = ";
    for (std::size_t i = 0; i < cfg.cells.size(); ++i)
        out << (i ? ", " : "") << cfg.cells[i];
    out << "\n";
    out << "wrap = " << (cfg.wrap ? 1 : 0) << "\n\n";
    out << "[system]\n";
    out << "degree = " << cfg.degree << "\n";
    out << "levels = " << cfg.levels << "\n";
    if (cfg.allow_zero_grey) out << "allow_zero_grey = 1\n";
    for (const auto& map : cfg.maps) {
        out << "\n[map]\n";
        out << "blocks = " << format_doubles(map.blocks) << "\n";
        out << "offset = " << format_doubles(map.offset) << "\n";
    }
    for (const auto& grey : cfg.greys) {
        out << "\n[grey]\n";
        out << "spec = " << grey << "\n";
    }
    out << "\n[run]\n";
    out << "max_iter = " << cfg.run.max_iter << "\n";
    out << "tol = " << format_double(cfg.run.tol) << "\n";
    out << "seed = " << cfg.run.seed << "\n";
    return out.str();
}

Gifzs build_system(const SystemConfig& cfg) {
    if (cfg.degree < 1) throw ConfigError(0, "degree", "degree must be positive");
    if (cfg.levels < 1 || cfg.levels > 65535)
        throw ConfigError(0, "levels", "levels must be in [1, 65535]");
    if (cfg.maps.empty()) throw ConfigError(0, "map", "need at least one [map]");
    if (cfg.maps.size() != cfg.greys.size())
        throw ConfigError(0, "grey", "need exactly one [grey] per [map], got " +
                                         std::to_string(cfg.greys.size()) + " for " +
                                         std::to_string(cfg.maps.size()) + " maps");

    DomainBox box = [&] {
        try {
            return DomainBox(cfg.lo, cfg.hi, cfg.cells, cfg.wrap);
        } catch (const std::exception& e) {
            throw ConfigError(0, "domain", e.what());
        }
    }();

    std::vector<AffineContraction> maps;
    std::size_t expected = static_cast<std::size_t>(cfg.degree) * cfg.dim * cfg.dim;
    for (std::size_t j = 0; j < cfg.maps.size(); ++j) {
        const auto& mc = cfg.maps[j];
        std::string field = "map " + std::to_string(j);
        if (mc.blocks.size() != expected)
            throw ConfigError(0, field, "blocks: expected " + std::to_string(expected) +
                                            " entries (degree*dim*dim), got " +
                                            std::to_string(mc.blocks.size()));
        if (mc.offset.size() != static_cast<std::size_t>(cfg.dim))
            throw ConfigError(0, field, "offset: expected " + std::to_string(cfg.dim) +
                                            " entries, got " + std::to_string(mc.offset.size()));
        AffineContraction f(cfg.degree, cfg.dim, mc.blocks, mc.offset);
        if (f.lip_bound() >= 1.0)
            throw ConfigError(0, field, "Lipschitz bound " + std::to_string(f.lip_bound()) +
                                            " >= 1");
        maps.push_back(std::move(f));
    }

    GreySystem greys;
    for (std::size_t j = 0; j < cfg.greys.size(); ++j) {
        try {
            greys.maps.push_back(
                GreyLevelMap::parse_spec(cfg.levels, cfg.greys[j], cfg.allow_zero_grey));
        } catch (const std::exception& e) {
            throw ConfigError(0, "grey " + std::to_string(j), e.what());
        }
    }
    AdmissibilityReport adm = check_admissible(greys);
    if (!adm.pass) {
        std::string msg = "grey system not admissible:";
        for (const auto& v : adm.violations) msg += " " + v + ";";
        throw ConfigError(0, "grey", msg);
    }

    try {
        return Gifzs(CrispGifs(std::move(box), cfg.degree, std::move(maps)),
                     std::move(greys), cfg.levels, cfg.allow_zero_grey);
    } catch (const std::exception& e) {
        throw ConfigError(0, "system", e.what());
    }
}

RunParams run_params(const SystemConfig& cfg) {
    RunParams p;
    p.max_iter = cfg.run.max_iter;
    p.tol = cfg.run.tol;
    return p;
}

std::vector<FuzzyGrid> seeds_from(const SystemConfig& cfg, const Gifzs& z) {
    if (cfg.run.seed == "center" || cfg.run.seed.empty()) return default_seeds(z);
    if (cfg.run.seed == "full") return universe_seeds(z);
    throw ConfigError(0, "seed", "unknown seed spec '" + cfg.run.seed +
                                     "' (expected center or full)");
}

SystemConfig config_from(const Gifzs& z, const RunConfig& run) {
    SystemConfig cfg;
    cfg.dim = z.box().dim();
    cfg.lo = z.box().lo();
    cfg.hi = z.box().hi();
    cfg.cells = z.box().cells();
    cfg.wrap = z.box().wrap();
    cfg.degree = z.degree();
    cfg.levels = z.levels;
    for (const auto& f : z.gifs.maps)
        cfg.maps.push_back(MapConfig{f.blocks(), f.offset()});
    for (const auto& rho : z.greys.maps) {
        if (rho.spec().empty())
            throw std::invalid_argument("config_from: grey map has no serializable spec");
        cfg.greys.push_back(rho.spec());
        if (rho.is_zero()) cfg.allow_zero_grey = true;
    }
    cfg.run = run;
    return cfg;
}

} // namespace gifzs
