#pragma once

#include <optional>
#include <vector>

#include "gifzs/fuzzification.hpp"
#include "gifzs/metrics.hpp"

namespace gifzs {

struct RunParams {
    int max_iter = 0;   // <= 0: ceil(log(diam/tol)/log(1/lambda)) + degree
    double tol = -1.0;  // < 0: one cell diagonal; 0: exact lattice stop only
    bool use_levelset = false; // drive the level-set operator route instead
};

struct AttractorRun {
    FuzzyGrid attractor;
    int iterations = 0;
    std::vector<double> decay; // d_infty change per operator application
    bool converged = false;
    bool collapsed_exact = false; // exact lattice fixed point detected
    bool cycle_detected = false;
    std::uint64_t clamped = 0;
};

/// m copies of the indicator of the grid's center cell.
std::vector<FuzzyGrid> default_seeds(const Gifzs& z);
/// m copies of the universe (guarantees a monotone, exactly stationary run).
std::vector<FuzzyGrid> universe_seeds(const Gifzs& z);

/// m-step recurrence u_{k+m} = Z(u_{k+m-1}, ..., u_k) (newest iterate feeds
/// coordinate 0). Stops on an exact lattice fixed point (values equal across
/// a full window), on d_infty change <= tol over a window, or at max_iter
/// (flagged, never thrown). A revisited window is reported as a cycle.
AttractorRun iterate_attractor(const Gifzs& z, std::vector<FuzzyGrid> seeds,
                               const RunParams& params = {});

struct CollageReport {
    double residual = 0.0; // d_infty(u, Z(u,...,u))
    double lambda = 0.0;   // system contraction bound
    double bound = 0.0;    // residual / (1 - lambda)
    std::optional<double> actual; // d_infty(u, attractor) when supplied
};

/// A-posteriori bound d(u, u_Z) <= residual / (1 - lambda) from a single
/// operator application.
CollageReport collage(const Gifzs& z, const FuzzyGrid& u,
                      const FuzzyGrid* attractor = nullptr);

enum class MonotoneDirection { NonIncreasing, NonDecreasing, NotComparable };

struct MonotoneRun {
    MonotoneDirection direction = MonotoneDirection::NotComparable;
    bool ordered = false;     // every iterate comparable to its predecessor
    bool bound_holds = false; // final attractor on the right side of v
    AttractorRun run;
};

/// Seeds (v,...,v); when Z(v,...,v) <= v the whole run must be nonincreasing
/// and end below v (dually for >=). Otherwise reports NotComparable.
MonotoneRun monotone_iterate(const Gifzs& z, const FuzzyGrid& v,
                             const RunParams& params = {});

struct CutComparison {
    CrispCellSet crisp_full; // attractor of all maps
    CrispCellSet crisp_sub;  // attractor of the maps with rho_j(1) = 1
    bool proper = false;          // lattice properness of the grey system
    bool all_full_grey = false;   // every map has rho_j(1) = 1
    bool beta_one_exact = false;  // beta_j(1) = 1 for all full-grey maps
    bool support_contained = false; // supp u* inside dilated crisp_full
    bool support_equal = false;     // two-sided within one cell diagonal
    bool core_contains_sub = false; // crisp_sub inside dilated [u*]^1
    bool core_equal = false;
    bool crisp = false; // u* takes only the values 0 and L
};

/// Confronts a converged fuzzy attractor with the two crisp attractors
/// computed through the independent crisp path; every containment is tested
/// within a one-cell-diagonal dilation.
CutComparison compare_cuts(const Gifzs& z, const AttractorRun& run);

struct Approximation {
    Gifzs system;                    // degree-1 system whose attractor approximates the target
    std::vector<CellIndex> centers;  // greedy cover sites
    CollageReport certificate;
    double epsilon = 0.0;
};

/// Inverse problem: builds a degree-1 system from an (eps/4)-cover of the
/// target's support, with step grey maps carrying the local sup of the
/// membership. The certificate bounds d_infty(target, attractor) below eps.
Approximation approximate_ifzs(const FuzzyGrid& target, double epsilon);

/// Smallest epsilon accepted for a given grid.
double min_feasible_epsilon(const DomainBox& box);

} // namespace gifzs
