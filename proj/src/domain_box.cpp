#include "gifzs/domain_box.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace gifzs {

DomainBox::DomainBox(std::vector<double> lo, std::vector<double> hi,
                     std::vector<CellIndex> cells, bool wrap)
    : lo_(std::move(lo)), hi_(std::move(hi)), cells_(std::move(cells)), wrap_(wrap) {
    if (lo_.empty() || lo_.size() != hi_.size() || lo_.size() != cells_.size())
        throw std::invalid_argument("DomainBox: lo/hi/cells must share a positive dimension");
    total_ = 1;
    width_.resize(lo_.size());
    stride_.resize(lo_.size());
    for (std::size_t k = 0; k < lo_.size(); ++k) {
        if (!(lo_[k] < hi_[k]))
            throw std::invalid_argument("DomainBox: lo[" + std::to_string(k) + "] must be < hi");
        if (cells_[k] == 0)
            throw std::invalid_argument("DomainBox: cells[" + std::to_string(k) + "] must be positive");
        width_[k] = (hi_[k] - lo_[k]) / cells_[k];
        stride_[k] = total_;
        total_ *= cells_[k];
        if (total_ > (std::uint64_t(1) << 32))
            throw std::invalid_argument("DomainBox: too many cells for 32-bit indexing");
    }
}

double DomainBox::cell_diagonal() const {
    double sum = 0.0;
    for (int k = 0; k < dim(); ++k) sum += width_[k] * width_[k];
    return std::sqrt(sum);
}

double DomainBox::diameter() const {
    double sum = 0.0;
    for (int k = 0; k < dim(); ++k) {
        double span = (cells_[k] - 1) * width_[k];
        if (wrap_) span = 0.5 * extent(k);
        sum += span * span;
    }
    return std::sqrt(sum);
}

void DomainBox::to_multi(CellIndex flat, CellIndex* multi) const {
    for (int k = 0; k < dim(); ++k) multi[k] = axis_index(flat, k);
}

CellIndex DomainBox::to_flat(const CellIndex* multi) const {
    std::uint64_t flat = 0;
    for (int k = 0; k < dim(); ++k) flat += stride_[k] * multi[k];
    return static_cast<CellIndex>(flat);
}

void DomainBox::center_point(CellIndex flat, double* point) const {
    for (int k = 0; k < dim(); ++k) point[k] = center(flat, k);
}

CellIndex DomainBox::locate(const double* point, std::uint64_t* clamped) const {
    std::uint64_t flat = 0;
    bool moved = false;
    for (int k = 0; k < dim(); ++k) {
        double t;
        if (wrap_) {
            double rel = std::fmod(point[k] - lo_[k], extent(k));
            if (rel < 0) rel += extent(k);
            t = rel / width_[k];
        } else {
            t = (point[k] - lo_[k]) / width_[k];
        }
        // ceil(t)-1 puts boundary points into the lower-index cell.
        long idx = static_cast<long>(std::ceil(t)) - 1;
        if (idx < 0) {
            if (!wrap_ && t < 0) moved = true;
            idx = 0;
        } else if (idx >= static_cast<long>(cells_[k])) {
            if (!wrap_) moved = true;
            idx = cells_[k] - 1;
        }
        flat += stride_[k] * static_cast<std::uint64_t>(idx);
    }
    if (moved && clamped) ++*clamped;
    return static_cast<CellIndex>(flat);
}

CellIndex DomainBox::center_cell() const {
    std::vector<CellIndex> multi(dim());
    for (int k = 0; k < dim(); ++k) multi[k] = cells_[k] / 2;
    return to_flat(multi.data());
}

bool DomainBox::operator==(const DomainBox& other) const {
    return lo_ == other.lo_ && hi_ == other.hi_ && cells_ == other.cells_ &&
           wrap_ == other.wrap_;
}

} // namespace gifzs
