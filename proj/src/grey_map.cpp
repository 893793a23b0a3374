#include "gifzs/grey_map.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gifzs {

namespace {

Level quantize(double value, int levels) {
    if (value < 0.0 || value > 1.0)
        throw std::invalid_argument("grey map value outside [0, 1]");
    return static_cast<Level>(std::lround(value * levels));
}

} // namespace

GreyLevelMap::GreyLevelMap(int levels, std::vector<Level> samples, std::string spec,
                           bool allow_zero)
    : levels_(levels), samples_(std::move(samples)), spec_(std::move(spec)) {
    if (levels_ < 1)
        throw std::invalid_argument("GreyLevelMap: levels must be positive");
    if (samples_.size() != static_cast<std::size_t>(levels_) + 1)
        throw std::invalid_argument("GreyLevelMap: need levels+1 samples");
    for (int l = 0; l <= levels_; ++l) {
        if (samples_[l] > levels_)
            throw std::invalid_argument("GreyLevelMap: sample above the lattice");
        if (l > 0 && samples_[l] < samples_[l - 1])
            throw std::invalid_argument("GreyLevelMap: samples must be nondecreasing");
    }
    if (!allow_zero && samples_.back() == 0)
        throw std::invalid_argument(
            "GreyLevelMap: identically zero map is not a grey level map (nonzero clause)");
}

GreyLevelMap GreyLevelMap::identity(int levels) {
    std::vector<Level> s(levels + 1);
    for (int l = 0; l <= levels; ++l) s[l] = static_cast<Level>(l);
    return GreyLevelMap(levels, std::move(s), "id");
}

GreyLevelMap GreyLevelMap::scale(int levels, double factor) {
    if (factor < 0.0 || factor > 1.0)
        throw std::invalid_argument("scale grey map: factor outside [0, 1]");
    std::vector<Level> s(levels + 1);
    for (int l = 0; l <= levels; ++l) s[l] = quantize(factor * l / levels, levels);
    std::ostringstream spec;
    spec << "scale:" << factor;
    return GreyLevelMap(levels, std::move(s), spec.str(), factor == 0.0);
}

GreyLevelMap GreyLevelMap::step(int levels, double a) {
    if (a <= 0.0 || a > 1.0)
        throw std::invalid_argument("step grey map: threshold outside (0, 1]");
    Level al = quantize(a, levels);
    if (al == 0)
        throw std::invalid_argument("step grey map: threshold quantizes to zero");
    std::vector<Level> s(levels + 1, 0);
    for (int l = al; l <= levels; ++l) s[l] = al;
    std::ostringstream spec;
    spec << "step:" << a;
    return GreyLevelMap(levels, std::move(s), spec.str());
}

GreyLevelMap GreyLevelMap::zero_below(int levels, double c) {
    if (c < 0.0 || c > 1.0)
        throw std::invalid_argument("zero-below grey map: cutoff outside [0, 1]");
    Level cl = quantize(c, levels);
    std::vector<Level> s(levels + 1, 0);
    for (int l = cl; l <= levels; ++l) s[l] = static_cast<Level>(l);
    std::ostringstream spec;
    spec << "zero-below:" << c;
    return GreyLevelMap(levels, std::move(s), spec.str());
}

GreyLevelMap GreyLevelMap::from_breakpoints(
    int levels, const std::vector<std::pair<double, double>>& points, bool allow_zero) {
    std::vector<Level> s(levels + 1, 0);
    double prev_t = -1.0, prev_v = 0.0;
    for (const auto& [t, v] : points) {
        if (t < 0.0 || t > 1.0)
            throw std::invalid_argument("grey breakpoint t outside [0, 1]");
        if (t <= prev_t)
            throw std::invalid_argument("grey breakpoints must have increasing t");
        if (v < prev_v)
            throw std::invalid_argument("grey breakpoints must have nondecreasing values");
        prev_t = t;
        prev_v = v;
    }
    std::size_t next = 0;
    double value = 0.0;
    for (int l = 0; l <= levels; ++l) {
        double t = static_cast<double>(l) / levels;
        while (next < points.size() && points[next].first <= t + 1e-12)
            value = points[next++].second;
        s[l] = quantize(value, levels);
    }
    std::ostringstream spec;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i) spec << ' ';
        spec << '(' << points[i].first << ',' << points[i].second << ')';
    }
    return GreyLevelMap(levels, std::move(s), spec.str(), allow_zero);
}

GreyLevelMap GreyLevelMap::parse_spec(int levels, const std::string& text, bool allow_zero) {
    std::string t = text;
    auto strip = [](std::string& s) {
        s.erase(0, s.find_first_not_of(" \t"));
        auto pos = s.find_last_not_of(" \t");
        s.erase(pos == std::string::npos ? 0 : pos + 1);
    };
    strip(t);
    if (t == "id") return identity(levels);
    auto colon = t.find(':');
    if (colon != std::string::npos) {
        std::string head = t.substr(0, colon);
        double arg = std::stod(t.substr(colon + 1));
        if (head == "scale") return scale(levels, arg);
        if (head == "step") return step(levels, arg);
        if (head == "zero-below") return zero_below(levels, arg);
        throw std::invalid_argument("unknown grey map token '" + head + "'");
    }
    if (!t.empty() && t.front() == '(') {
        std::vector<std::pair<double, double>> pts;
        std::istringstream in(t);
        char ch;
        while (in >> ch) {
            if (ch != '(')
                throw std::invalid_argument("grey breakpoints: expected '('");
            double a, b;
            char comma, close;
            if (!(in >> a >> comma >> b >> close) || comma != ',' || close != ')')
                throw std::invalid_argument("grey breakpoints: expected '(t,v)'");
            pts.emplace_back(a, b);
        }
        if (pts.empty())
            throw std::invalid_argument("grey breakpoints: empty list");
        return from_breakpoints(levels, pts, allow_zero);
    }
    throw std::invalid_argument("unparseable grey map spec '" + text + "'");
}

std::optional<int> beta(const GreyLevelMap& rho, int alpha_level) {
    if (alpha_level <= 0)
        throw std::invalid_argument("beta: alpha must be positive");
    if (alpha_level > rho.top()) return std::nullopt; // empty-cut sentinel
    const auto& s = rho.samples();
    auto it = std::lower_bound(s.begin(), s.end(), static_cast<Level>(alpha_level));
    return static_cast<int>(it - s.begin());
}

int r_plus(const GreyLevelMap& rho) {
    const auto& s = rho.samples();
    for (int l = 0; l <= rho.levels(); ++l)
        if (s[l] > 0) return l;
    return rho.levels() + 1;
}

FuzzyGrid apply_grey(const GreyLevelMap& rho, const FuzzyGrid& u) {
    if (rho.levels() != u.levels())
        throw std::invalid_argument("apply_grey: grey map and grid quantization differ");
    std::vector<Level> values(u.values().size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = rho.at(u.values()[i]);
    return FuzzyGrid(u.box(), u.levels(), std::move(values));
}

AdmissibilityReport check_admissible(const GreySystem& sys) {
    AdmissibilityReport report;
    if (sys.maps.empty()) {
        report.pass = false;
        report.violations.push_back("system has no grey maps");
        return report;
    }
    bool some_full = false;
    for (std::size_t j = 0; j < sys.maps.size(); ++j) {
        const auto& rho = sys.maps[j];
        const auto& s = rho.samples();
        for (std::size_t l = 1; l < s.size(); ++l)
            if (s[l] < s[l - 1]) {
                report.violations.push_back("map " + std::to_string(j) +
                                            ": clause a violated (not nondecreasing)");
                break;
            }
        // clause b (right continuity) holds for every sampled step map
        if (s.front() != 0)
            report.violations.push_back("map " + std::to_string(j) +
                                        ": clause c violated (rho(0) != 0)");
        if (rho.top() == static_cast<Level>(rho.levels())) some_full = true;
        if (rho.is_zero())
            report.warnings.push_back("map " + std::to_string(j) +
                                      ": identically zero (degenerate grey map)");
    }
    if (!some_full)
        report.violations.push_back("clause d violated (no map with rho(1) = 1)");
    report.pass = report.violations.empty();
    return report;
}

PropernessReport check_proper(const GreySystem& sys) {
    PropernessReport report;
    for (const auto& rho : sys.maps) {
        PropernessReport::PerMap pm;
        pm.r_plus_ok = r_plus(rho) <= 1;
        if (rho.top() > 0) {
            auto b = beta(rho, rho.top());
            pm.beta_top_ok = b && *b == rho.levels();
        }
        report.per_map.push_back(pm);
        if (!pm.r_plus_ok || !pm.beta_top_ok) report.pass = false;
    }
    return report;
}

} // namespace gifzs
