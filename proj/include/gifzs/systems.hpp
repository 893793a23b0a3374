#pragma once

#include <cstdint>
#include <vector>

#include "gifzs/fuzzy_grid.hpp"

namespace gifzs {

/// Affine map R^(d*m) -> R^d: x_0..x_{m-1} |-> sum_i A_i x_i + b, with the
/// Lipschitz bound sum_i |A_i|_2 (valid for the max metric on the product)
/// computed at construction. Construction does not require contractivity;
/// CrispGifs does.
class AffineContraction {
public:
    AffineContraction(int degree, int dim, std::vector<double> blocks,
                      std::vector<double> offset);

    int degree() const { return degree_; }
    int dim() const { return dim_; }
    const std::vector<double>& blocks() const { return blocks_; }
    const std::vector<double>& offset() const { return offset_; }
    double lip_bound() const { return lip_; }
    bool block_is_zero(int i) const { return zero_block_[i]; }

    /// Evaluates at m points of dimension d; `out` receives d coordinates.
    void apply(const double* const* points, double* out) const;

    /// Same map with an extra ignored coordinate (zero block appended).
    AffineContraction lifted() const;

private:
    int degree_, dim_;
    std::vector<double> blocks_; // degree blocks of d*d entries, row-major
    std::vector<double> offset_;
    std::vector<char> zero_block_;
    double lip_ = 0.0;
};

/// Crisp generalized iterated function system: n contractive affine maps of
/// a common degree on one grid.
struct CrispGifs {
    DomainBox box;
    int degree;
    std::vector<AffineContraction> maps;

    CrispGifs(DomainBox b, int deg, std::vector<AffineContraction> ms);

    double lip_bound() const; // max over maps
};

struct MappedCells {
    CrispCellSet cells;
    std::uint64_t clamped = 0; // image points that left the box
};

/// { nearest-cell(f(x_{c_0},...,x_{c_{m-1}})) : c_i in operands[i] }.
MappedCells map_cellset(const DomainBox& box, const AffineContraction& f,
                        const std::vector<const CrispCellSet*>& operands);

/// Union of map_cellset over every map of the system.
MappedCells ghb_apply(const CrispGifs& sys,
                      const std::vector<const CrispCellSet*>& operands);

struct CrispRun {
    CrispCellSet attractor;
    int iterations = 0;         // operator applications performed
    std::vector<double> decay;  // Hausdorff change per application
    bool converged = false;
    bool collapsed_exact = false;
    bool cycle_detected = false;
    std::uint64_t clamped = 0;
};

/// m-step recurrence K_{k+m} = S(K_{k+m-1}, ..., K_k) (newest iterate feeds
/// coordinate 0) until the set is stationary across a full window, the
/// Hausdorff change stays at or below tol, or max_iter is hit.
/// tol < 0 selects one cell diagonal; tol == 0 keeps only the exact stop.
CrispRun crisp_attractor(const CrispGifs& sys, std::vector<CrispCellSet> seeds,
                         int max_iter = 0, double tol = -1.0);

} // namespace gifzs
