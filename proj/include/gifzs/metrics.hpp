#pragma once

#include <cstdint>
#include <vector>

#include "gifzs/fuzzy_grid.hpp"

namespace gifzs {

struct HausdorffResult {
    double value = 0.0;
    CellIndex witness_a = 0; // pair realizing the max-min
    CellIndex witness_b = 0;
};

struct HausdorffOptions {
    /// Above this |A|*|B| product the occupancy-grid nearest-cell search is
    /// used instead of the double loop. Both paths return bit-identical
    /// values. Set to 0 to force the accelerated path.
    std::uint64_t brute_force_limit = 1'000'000;
};

/// Exact two-sided Hausdorff distance between nonempty cell sets, measured
/// between cell centers.
HausdorffResult hausdorff(const CrispCellSet& a, const CrispCellSet& b,
                          const HausdorffOptions& opts = {});

/// One-sided sup-inf distance from every cell of `from` to the set `to`.
double directed_hausdorff(const CrispCellSet& from, const CrispCellSet& to,
                          const HausdorffOptions& opts = {});

/// sup over the positive lattice levels of the Hausdorff distance between
/// the alpha-cuts. The alpha = 0 term is omitted: on a grid the level-1 cut
/// already equals the support, so the supremum over positive levels is the
/// whole supremum. Operands must be normal.
double d_infty(const FuzzyGrid& u, const FuzzyGrid& v,
               const HausdorffOptions& opts = {});

/// Max metric on m-tuples: max_i d_infty(u_i, v_i).
double d_infty_m(const std::vector<const FuzzyGrid*>& us,
                 const std::vector<const FuzzyGrid*>& vs,
                 const HausdorffOptions& opts = {});

} // namespace gifzs
