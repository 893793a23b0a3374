#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gifzs/fuzzy_grid.hpp"

namespace gifzs {

/// Nondecreasing right-continuous map [0,1] -> [0,1], stored as quantized
/// samples at the L+1 lattice points. Right continuity is automatic for the
/// sampled representation (the map is read as the right-continuous step
/// function through the samples).
///
/// Off-lattice maps are quantized within 1/L; identity, constants and steps
/// at lattice points are exact. Quantization rounds half away from zero.
class GreyLevelMap {
public:
    GreyLevelMap(int levels, std::vector<Level> samples, std::string spec = "",
                 bool allow_zero = false);

    static GreyLevelMap identity(int levels);
    /// t -> s * t
    static GreyLevelMap scale(int levels, double s);
    /// a * indicator([a, 1]); the building block of the density construction.
    static GreyLevelMap step(int levels, double a);
    /// 0 below c, identity from c on.
    static GreyLevelMap zero_below(int levels, double c);
    /// Right-continuous step function through (t, v) breakpoints; value 0
    /// before the first breakpoint.
    static GreyLevelMap from_breakpoints(int levels,
                                         const std::vector<std::pair<double, double>>& points,
                                         bool allow_zero = false);
    /// Parses the serialized forms: "id", "scale:<s>", "step:<a>",
    /// "zero-below:<c>", or a breakpoint list "(t,v) (t,v) ...".
    static GreyLevelMap parse_spec(int levels, const std::string& text,
                                   bool allow_zero = false);

    int levels() const { return levels_; }
    Level at(int level) const { return samples_[level]; }
    /// rho(1) in level units; cuts above it are empty.
    Level top() const { return samples_.back(); }
    bool is_zero() const { return top() == 0; }
    const std::string& spec() const { return spec_; }
    const std::vector<Level>& samples() const { return samples_; }

    bool operator==(const GreyLevelMap& other) const {
        return levels_ == other.levels_ && samples_ == other.samples_;
    }

private:
    int levels_;
    std::vector<Level> samples_;
    std::string spec_;
};

/// Generalized inverse beta(alpha) = min{ t on the lattice : rho(t) >= alpha }
/// for 0 < alpha <= rho(1); transports cuts through rho. Returns nullopt for
/// alpha above rho(1) -- the consumer reads that as the empty cut.
std::optional<int> beta(const GreyLevelMap& rho, int alpha_level);

/// Smallest lattice point with rho(t) > 0 (always attained on the lattice);
/// 0 when rho(0) > 0, levels+1 for the identically-zero map.
int r_plus(const GreyLevelMap& rho);

/// Cellwise composition rho(u); its cuts obey the beta transport law exactly
/// on the lattice.
FuzzyGrid apply_grey(const GreyLevelMap& rho, const FuzzyGrid& u);

struct GreySystem {
    std::vector<GreyLevelMap> maps;
};

struct AdmissibilityReport {
    bool pass = true;
    std::vector<std::string> violations; // one entry per violated clause, named a-d
    std::vector<std::string> warnings;
};

/// Clause (a) nondecreasing, (b) right continuous (automatic), (c) rho(0)=0
/// for every map, (d) rho(1)=1 for at least one map.
AdmissibilityReport check_admissible(const GreySystem& sys);

struct PropernessReport {
    struct PerMap {
        bool r_plus_ok = false;   // r+ <= 1/L (the lattice reading of r+ = 0)
        bool beta_top_ok = false; // beta(rho(1)) = 1
    };
    bool pass = true;
    std::vector<PerMap> per_map;
};

/// Proper grey systems force the 0-cut/1-cut equalities between the fuzzy
/// attractor and the crisp attractors. On the lattice "r+ = 0" is read as
/// r+ <= 1/L (the quantized identity already has r+ = 1/L).
PropernessReport check_proper(const GreySystem& sys);

} // namespace gifzs
