#pragma once

#include <random>
#include <string>
#include <vector>

#include "gifzs/attractor.hpp"

namespace gifzs {

/// Random member of the normal family on a grid: independent levels with
/// the given support density, one random cell forced to the top level.
FuzzyGrid random_normal_grid(const DomainBox& box, int levels, std::mt19937& rng,
                             double support_density = 0.65);

enum class CheckStatus { Pass, Fail, Skip };

struct VerifyCheck {
    std::string name;
    CheckStatus status = CheckStatus::Skip;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }
};

struct VerifyParams {
    int contraction_samples = 25;
    int collage_samples = 15;
    unsigned rng_seed = 1234;
    RunParams run;
};

/// Runs the theorem battery on one system: sampled operator contraction and
/// collage bounds, monotone iteration from the universe, and the cut
/// relations between the fuzzy attractor and the crisp attractors.
VerifyReport verify_system(const Gifzs& z, const VerifyParams& params = {});

std::string to_string(CheckStatus s);

} // namespace gifzs
