#pragma once

#include <vector>

#include "gifzs/fuzzification.hpp"

namespace gifzs::oracle {

/// Bounds under which the brute-force references finish in well under a
/// second: grids of at most 16 cells, 16 grey levels, degree 2, 3 maps.
void require_tiny(const Gifzs& z);
void require_tiny_grid(const DomainBox& box, int levels);

/// Literal sup-over-preimages transcription: for every output cell, every
/// input tuple is enumerated; no pruning, no sharing with the main path.
FuzzyGrid zadeh(const AffineContraction& f,
                const std::vector<const FuzzyGrid*>& inputs);

/// Full double-loop two-sided Hausdorff distance.
double hausdorff_ref(const CrispCellSet& a, const CrispCellSet& b);

/// sup over all L+1 cuts, the alpha = 0 (support) cut included.
double dinfty(const FuzzyGrid& u, const FuzzyGrid& v);
/// Same supremum restricted to the positive levels; equality with dinfty
/// certifies that dropping the alpha = 0 term never changes the value.
double dinfty_positive(const FuzzyGrid& u, const FuzzyGrid& v);

/// d_infty between the Cartesian products of two m-tuples, computed on the
/// product grid under the max metric -- the independent side of the
/// product-isometry check.
double dinfty_product(const std::vector<const FuzzyGrid*>& us,
                      const std::vector<const FuzzyGrid*>& vs);

struct Run {
    FuzzyGrid attractor;
    int iterations = 0;
    bool converged = false;
    bool cycle_detected = false;
};

/// Fixed-point iteration built exclusively from the oracle operator until
/// exact stationarity; a revisited state without a fixed point is reported
/// as a cycle (a quantization artifact that must be surfaced, not hidden).
Run attractor(const Gifzs& z, std::vector<FuzzyGrid> seeds, int max_iter = 4096);

} // namespace gifzs::oracle
