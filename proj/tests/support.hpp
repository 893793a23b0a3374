#pragma once

// Shared generators for randomized tests: contractive systems that map the
// box into themselves, admissible grey families, normal grids.

#include <random>
#include <vector>

#include "gifzs/fuzzification.hpp"

namespace testsupport {

using namespace gifzs;

inline FuzzyGrid random_normal_grid(const DomainBox& box, int levels, std::mt19937& rng,
                                    double density = 0.65) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> level(1, levels);
    std::vector<Level> values(box.total_cells(), 0);
    for (auto& v : values)
        if (coin(rng) < density) v = static_cast<Level>(level(rng));
    values[rng() % box.total_cells()] = static_cast<Level>(levels);
    return FuzzyGrid(box, levels, std::move(values));
}

/// Random affine contraction with Lipschitz bound at most lambda_max whose
/// image of the box lies inside the box.
inline AffineContraction random_contraction(const DomainBox& box, int degree,
                                            std::mt19937& rng, double lambda_max = 0.6) {
    int d = box.dim();
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    std::vector<double> blocks(static_cast<std::size_t>(degree) * d * d);
    for (auto& b : blocks) b = entry(rng) / degree;
    AffineContraction trial(degree, d, blocks, std::vector<double>(d, 0.0));
    if (trial.lip_bound() > lambda_max) {
        double scale = lambda_max / trial.lip_bound() * 0.95;
        for (auto& b : blocks) b *= scale;
    }

    // Image interval of the linear part over the box, per output axis.
    std::vector<double> img_lo(d, 0.0), img_hi(d, 0.0);
    for (int i = 0; i < degree; ++i)
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                double e = blocks[(static_cast<std::size_t>(i) * d + r) * d + c];
                double a = e * box.lo()[c], b = e * box.hi()[c];
                img_lo[r] += std::min(a, b);
                img_hi[r] += std::max(a, b);
            }
    std::vector<double> offset(d);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int r = 0; r < d; ++r) {
        double low = box.lo()[r] - img_lo[r];
        double high = box.hi()[r] - img_hi[r];
        offset[r] = low + (high - low) * unit(rng);
    }
    return AffineContraction(degree, d, std::move(blocks), std::move(offset));
}

/// Random admissible grey map drawn from the shipped families.
inline GreyLevelMap random_grey_map(int levels, std::mt19937& rng, bool force_full) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int kind = force_full ? static_cast<int>(rng() % 3) : static_cast<int>(rng() % 5);
    switch (kind) {
        case 0: return GreyLevelMap::identity(levels);
        case 1: return GreyLevelMap::zero_below(levels, 0.2 + 0.6 * unit(rng));
        case 2: {
            // random full-range breakpoints
            std::vector<std::pair<double, double>> pts{{0.0, 0.0}};
            double t = 0.2 + 0.3 * unit(rng);
            pts.emplace_back(t, 0.3 * unit(rng) + 0.1);
            pts.emplace_back(0.9, 1.0);
            return GreyLevelMap::from_breakpoints(levels, pts);
        }
        case 3: return GreyLevelMap::scale(levels, 0.3 + 0.6 * unit(rng));
        default: return GreyLevelMap::step(levels, 0.2 + 0.7 * unit(rng));
    }
}

inline Gifzs random_system(const DomainBox& box, int levels, int degree, int n_maps,
                           std::mt19937& rng, bool all_identity_greys = false) {
    std::vector<AffineContraction> maps;
    for (int j = 0; j < n_maps; ++j) maps.push_back(random_contraction(box, degree, rng));
    std::vector<GreyLevelMap> greys;
    for (int j = 0; j < n_maps; ++j) {
        if (all_identity_greys)
            greys.push_back(GreyLevelMap::identity(levels));
        else
            greys.push_back(random_grey_map(levels, rng, j == 0));
    }
    return Gifzs(CrispGifs(box, degree, std::move(maps)), GreySystem{std::move(greys)}, levels);
}

} // namespace testsupport
