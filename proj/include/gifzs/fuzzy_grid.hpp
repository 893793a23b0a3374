#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gifzs/domain_box.hpp"

namespace gifzs {

using Level = std::uint16_t;

/// Finite set of grid cells, kept sorted and duplicate-free. Holds alpha-cuts
/// and the operands/results of the crisp Hutchinson-Barnsley machinery.
struct CrispCellSet {
    DomainBox box;
    std::vector<CellIndex> cells; // sorted, unique

    CrispCellSet(DomainBox b, std::vector<CellIndex> raw);

    std::size_t size() const { return cells.size(); }
    bool empty() const { return cells.empty(); }
    bool contains(CellIndex c) const;

    bool operator==(const CrispCellSet& other) const {
        return box == other.box && cells == other.cells;
    }
};

CrispCellSet union_sets(const CrispCellSet& a, const CrispCellSet& b);
bool is_subset(const CrispCellSet& inner, const CrispCellSet& outer);
CrispCellSet full_cell_set(const DomainBox& box);

/// Discretized fuzzy set: one quantized membership level per cell,
/// membership = level / levels. Immutable after construction.
class FuzzyGrid {
public:
    FuzzyGrid(DomainBox box, int levels, std::vector<Level> values);

    /// Constant membership everywhere; `constant(box, L, L)` is the universe.
    static FuzzyGrid constant(const DomainBox& box, int levels, Level value);

    const DomainBox& box() const { return box_; }
    int levels() const { return levels_; }
    const std::vector<Level>& values() const { return values_; }
    Level at(CellIndex c) const { return values_[c]; }

    Level max_level() const;
    bool is_normal() const { return max_level() == levels_; }
    /// Throws unless the grid is a member of the normal family the
    /// attractor theory lives in (some cell at the top level).
    void require_normal(const char* context) const;

    bool operator==(const FuzzyGrid& other) const {
        return box_ == other.box_ && levels_ == other.levels_ && values_ == other.values_;
    }
    bool operator!=(const FuzzyGrid& other) const { return !(*this == other); }

    /// Cellwise <= (the fuzzy inclusion order).
    bool le(const FuzzyGrid& other) const;

private:
    DomainBox box_;
    int levels_;
    std::vector<Level> values_;
};

/// {c : u(c) >= level} for level in [1, L]; the support {c : u(c) > 0} for
/// level 0 (closure is the identity on a finite grid).
CrispCellSet alpha_cut(const FuzzyGrid& u, int level);

/// Converts a real alpha in [0,1] to its lattice level; rejects values that
/// do not sit on the quantization lattice (prevents silent threshold drift).
int level_from_alpha(double alpha, int levels);

/// Indicator of a nonempty cell set; crisp and normal by construction.
FuzzyGrid indicator(const CrispCellSet& k, int levels);

/// Cellwise max; cuts satisfy [u v v]^a = [u]^a u [v]^a for a > 0.
FuzzyGrid join(const FuzzyGrid& u, const FuzzyGrid& v);

/// Inverse of the alpha-cut stack: cuts[l-1] is the prescribed cut at level
/// l for l = 1..L. The stack must be nested (nonincreasing in l) and the top
/// cut nonempty.
FuzzyGrid reconstruct_from_cuts(const DomainBox& box, int levels,
                                const std::vector<CrispCellSet>& cuts);

/// Lazy Cartesian product of m fuzzy grids over a shared box: membership of
/// a tuple is the min of the factor memberships. Never materialized.
class FuzzyGridProduct {
public:
    explicit FuzzyGridProduct(std::vector<FuzzyGrid> factors);

    int degree() const { return static_cast<int>(factors_.size()); }
    const FuzzyGrid& factor(int i) const { return factors_[i]; }
    const DomainBox& box() const { return factors_.front().box(); }
    int levels() const { return factors_.front().levels(); }

    Level membership(const CellIndex* tuple) const;
    bool is_normal() const;

    /// Factor cuts whose product is the cut of the product (exact for
    /// level > 0; level 0 yields the factor supports).
    std::vector<CrispCellSet> cut_factors(int level) const;

private:
    std::vector<FuzzyGrid> factors_;
};

FuzzyGridProduct cartesian_product(std::vector<FuzzyGrid> factors);

} // namespace gifzs
