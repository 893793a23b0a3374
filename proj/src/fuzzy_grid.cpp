#include "gifzs/fuzzy_grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gifzs {

CrispCellSet::CrispCellSet(DomainBox b, std::vector<CellIndex> raw)
    : box(std::move(b)), cells(std::move(raw)) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    if (!cells.empty() && cells.back() >= box.total_cells())
        throw std::invalid_argument("CrispCellSet: cell index out of range");
}

bool CrispCellSet::contains(CellIndex c) const {
    return std::binary_search(cells.begin(), cells.end(), c);
}

CrispCellSet union_sets(const CrispCellSet& a, const CrispCellSet& b) {
    if (a.box != b.box)
        throw std::invalid_argument("union_sets: mismatched boxes");
    std::vector<CellIndex> out;
    out.reserve(a.cells.size() + b.cells.size());
    std::set_union(a.cells.begin(), a.cells.end(), b.cells.begin(), b.cells.end(),
                   std::back_inserter(out));
    return CrispCellSet(a.box, std::move(out));
}

bool is_subset(const CrispCellSet& inner, const CrispCellSet& outer) {
    return std::includes(outer.cells.begin(), outer.cells.end(),
                         inner.cells.begin(), inner.cells.end());
}

CrispCellSet full_cell_set(const DomainBox& box) {
    std::vector<CellIndex> all(box.total_cells());
    std::iota(all.begin(), all.end(), CellIndex(0));
    return CrispCellSet(box, std::move(all));
}

FuzzyGrid::FuzzyGrid(DomainBox box, int levels, std::vector<Level> values)
    : box_(std::move(box)), levels_(levels), values_(std::move(values)) {
    if (levels_ < 1 || levels_ > 65535)
        throw std::invalid_argument("FuzzyGrid: levels must be in [1, 65535]");
    if (values_.size() != box_.total_cells())
        throw std::invalid_argument("FuzzyGrid: value count does not match grid size");
    for (Level v : values_)
        if (v > levels_)
            throw std::invalid_argument("FuzzyGrid: membership level above quantization maximum");
}

FuzzyGrid FuzzyGrid::constant(const DomainBox& box, int levels, Level value) {
    return FuzzyGrid(box, levels, std::vector<Level>(box.total_cells(), value));
}

Level FuzzyGrid::max_level() const {
    Level best = 0;
    for (Level v : values_)
        if (v > best) best = v;
    return best;
}

void FuzzyGrid::require_normal(const char* context) const {
    if (!is_normal())
        throw std::invalid_argument(std::string(context) +
                                    ": fuzzy grid is not normal (no cell at the top level)");
}

bool FuzzyGrid::le(const FuzzyGrid& other) const {
    if (box_ != other.box_ || levels_ != other.levels_)
        throw std::invalid_argument("FuzzyGrid::le: mismatched grids");
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] > other.values_[i]) return false;
    return true;
}

CrispCellSet alpha_cut(const FuzzyGrid& u, int level) {
    if (level < 0 || level > u.levels())
        throw std::invalid_argument("alpha_cut: level outside [0, levels]");
    std::vector<CellIndex> cells;
    const auto& vals = u.values();
    if (level == 0) {
        for (CellIndex c = 0; c < vals.size(); ++c)
            if (vals[c] > 0) cells.push_back(c);
    } else {
        for (CellIndex c = 0; c < vals.size(); ++c)
            if (vals[c] >= level) cells.push_back(c);
    }
    return CrispCellSet(u.box(), std::move(cells));
}

int level_from_alpha(double alpha, int levels) {
    if (alpha < 0.0 || alpha > 1.0)
        throw std::invalid_argument("alpha must lie in [0, 1]");
    double scaled = alpha * levels;
    double nearest = std::nearbyint(scaled);
    if (std::fabs(scaled - nearest) > 1e-9 * levels)
        throw std::invalid_argument("alpha is not a multiple of 1/levels");
    return static_cast<int>(nearest);
}

FuzzyGrid indicator(const CrispCellSet& k, int levels) {
    if (k.empty())
        throw std::invalid_argument("indicator: empty cell set is not a normal fuzzy set");
    std::vector<Level> values(k.box.total_cells(), 0);
    for (CellIndex c : k.cells) values[c] = static_cast<Level>(levels);
    return FuzzyGrid(k.box, levels, std::move(values));
}

FuzzyGrid join(const FuzzyGrid& u, const FuzzyGrid& v) {
    if (u.box() != v.box() || u.levels() != v.levels())
        throw std::invalid_argument("join: mismatched grids");
    std::vector<Level> values(u.values());
    const auto& other = v.values();
    for (std::size_t i = 0; i < values.size(); ++i)
        if (other[i] > values[i]) values[i] = other[i];
    return FuzzyGrid(u.box(), u.levels(), std::move(values));
}

FuzzyGrid reconstruct_from_cuts(const DomainBox& box, int levels,
                                const std::vector<CrispCellSet>& cuts) {
    if (static_cast<int>(cuts.size()) != levels)
        throw std::invalid_argument("reconstruct_from_cuts: need one cut per level 1..levels");
    for (int l = 1; l < levels; ++l)
        if (!is_subset(cuts[l], cuts[l - 1]))
            throw std::invalid_argument("reconstruct_from_cuts: cut stack is not nested");
    if (cuts[levels - 1].empty())
        throw std::invalid_argument("reconstruct_from_cuts: top cut empty, result would not be normal");
    std::vector<Level> values(box.total_cells(), 0);
    for (int l = 0; l < levels; ++l) {
        if (cuts[l].box != box)
            throw std::invalid_argument("reconstruct_from_cuts: cut box mismatch");
        for (CellIndex c : cuts[l].cells) values[c] = static_cast<Level>(l + 1);
    }
    return FuzzyGrid(box, levels, std::move(values));
}

FuzzyGridProduct::FuzzyGridProduct(std::vector<FuzzyGrid> factors)
    : factors_(std::move(factors)) {
    if (factors_.empty())
        throw std::invalid_argument("FuzzyGridProduct: need at least one factor");
    for (const auto& f : factors_)
        if (f.box() != factors_.front().box() || f.levels() != factors_.front().levels())
            throw std::invalid_argument("FuzzyGridProduct: factors must share box and levels");
}

Level FuzzyGridProduct::membership(const CellIndex* tuple) const {
    Level m = factors_[0].at(tuple[0]);
    for (std::size_t i = 1; i < factors_.size(); ++i) {
        Level v = factors_[i].at(tuple[i]);
        if (v < m) m = v;
    }
    return m;
}

bool FuzzyGridProduct::is_normal() const {
    for (const auto& f : factors_)
        if (!f.is_normal()) return false;
    return true;
}

std::vector<CrispCellSet> FuzzyGridProduct::cut_factors(int level) const {
    std::vector<CrispCellSet> out;
    out.reserve(factors_.size());
    for (const auto& f : factors_) out.push_back(alpha_cut(f, level));
    return out;
}

FuzzyGridProduct cartesian_product(std::vector<FuzzyGrid> factors) {
    return FuzzyGridProduct(std::move(factors));
}

} // namespace gifzs
