#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace gifzs {

using CellIndex = std::uint32_t;

/// Uniform cell grid over an axis-aligned box in R^d.
///
/// Cells are addressed by a flat index (axis 0 fastest) or by a per-axis
/// multi-index; all geometry is evaluated at cell centers. A box may be
/// periodic (wrap), in which case point location and center distances are
/// taken modulo the box extent on every axis.
class DomainBox {
public:
    DomainBox(std::vector<double> lo, std::vector<double> hi,
              std::vector<CellIndex> cells, bool wrap = false);

    int dim() const { return static_cast<int>(lo_.size()); }
    bool wrap() const { return wrap_; }
    const std::vector<double>& lo() const { return lo_; }
    const std::vector<double>& hi() const { return hi_; }
    const std::vector<CellIndex>& cells() const { return cells_; }

    std::uint64_t total_cells() const { return total_; }
    double width(int axis) const { return width_[axis]; }
    double extent(int axis) const { return hi_[axis] - lo_[axis]; }

    /// Length of one cell's diagonal; the unit in which grid-quantization
    /// tolerances are expressed throughout the library.
    double cell_diagonal() const;

    /// Diameter of the box (largest center-to-center distance).
    double diameter() const;

    void to_multi(CellIndex flat, CellIndex* multi) const;
    CellIndex to_flat(const CellIndex* multi) const;

    double center(CellIndex flat, int axis) const {
        return lo_[axis] + (axis_index(flat, axis) + 0.5) * width_[axis];
    }
    void center_point(CellIndex flat, double* point) const;

    CellIndex axis_index(CellIndex flat, int axis) const {
        return static_cast<CellIndex>((flat / stride_[axis]) % cells_[axis]);
    }

    /// Distance between two cell centers (per-axis wrap-around when the box
    /// is periodic). Every distance in the library funnels through here so
    /// that independent algorithms produce bit-identical values.
    double cell_distance(CellIndex a, CellIndex b) const {
        double sum = 0.0;
        for (int k = 0; k < dim(); ++k) {
            double delta = std::fabs(static_cast<double>(axis_index(a, k)) -
                                     static_cast<double>(axis_index(b, k))) *
                           width_[k];
            if (wrap_) {
                double alt = extent(k) - delta;
                if (alt < delta) delta = alt;
            }
            sum += delta * delta;
        }
        return std::sqrt(sum);
    }

    /// Nearest cell to an arbitrary point. Points outside the box are
    /// clamped (or wrapped when periodic); a point on a shared cell boundary
    /// goes to the lower index. `clamped`, when given, is incremented if
    /// clamping actually moved the point.
    CellIndex locate(const double* point, std::uint64_t* clamped = nullptr) const;

    /// Cell whose multi-index is the per-axis midpoint; the default seed site.
    CellIndex center_cell() const;

    bool operator==(const DomainBox& other) const;
    bool operator!=(const DomainBox& other) const { return !(*this == other); }

private:
    std::vector<double> lo_, hi_, width_;
    std::vector<CellIndex> cells_;
    std::vector<std::uint64_t> stride_;
    bool wrap_ = false;
    std::uint64_t total_ = 0;
};

} // namespace gifzs
