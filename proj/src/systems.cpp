#include "gifzs/systems.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "gifzs/metrics.hpp"

namespace gifzs {

namespace {

double spectral_norm(const double* entries, int dim) {
    if (dim == 1) return std::fabs(entries[0]);
    Eigen::MatrixXd m(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m(r, c) = entries[r * dim + c];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    return svd.singularValues()(0);
}

int auto_max_iter(const DomainBox& box, double lambda, double tol, int degree) {
    double diam = std::max(box.diameter(), tol);
    int k = static_cast<int>(std::ceil(std::log(diam / tol) / std::log(1.0 / lambda)));
    return std::max(k, 1) + degree;
}

} // namespace

AffineContraction::AffineContraction(int degree, int dim, std::vector<double> blocks,
                                     std::vector<double> offset)
    : degree_(degree), dim_(dim), blocks_(std::move(blocks)), offset_(std::move(offset)) {
    if (degree_ < 1 || dim_ < 1)
        throw std::invalid_argument("AffineContraction: degree and dim must be positive");
    if (blocks_.size() != static_cast<std::size_t>(degree_) * dim_ * dim_)
        throw std::invalid_argument("AffineContraction: expected degree*dim*dim block entries, got " +
                                    std::to_string(blocks_.size()));
    if (offset_.size() != static_cast<std::size_t>(dim_))
        throw std::invalid_argument("AffineContraction: offset must have dim entries");
    zero_block_.resize(degree_, 1);
    for (int i = 0; i < degree_; ++i) {
        const double* block = blocks_.data() + static_cast<std::size_t>(i) * dim_ * dim_;
        for (int e = 0; e < dim_ * dim_; ++e)
            if (block[e] != 0.0) zero_block_[i] = 0;
        if (!zero_block_[i]) lip_ += spectral_norm(block, dim_);
    }
}

void AffineContraction::apply(const double* const* points, double* out) const {
    for (int r = 0; r < dim_; ++r) out[r] = offset_[r];
    for (int i = 0; i < degree_; ++i) {
        if (zero_block_[i]) continue;
        const double* block = blocks_.data() + static_cast<std::size_t>(i) * dim_ * dim_;
        const double* x = points[i];
        for (int r = 0; r < dim_; ++r) {
            double acc = 0.0;
            for (int c = 0; c < dim_; ++c) acc += block[r * dim_ + c] * x[c];
            out[r] += acc;
        }
    }
}

AffineContraction AffineContraction::lifted() const {
    std::vector<double> blocks = blocks_;
    blocks.resize(blocks.size() + static_cast<std::size_t>(dim_) * dim_, 0.0);
    return AffineContraction(degree_ + 1, dim_, std::move(blocks), offset_);
}

CrispGifs::CrispGifs(DomainBox b, int deg, std::vector<AffineContraction> ms)
    : box(std::move(b)), degree(deg), maps(std::move(ms)) {
    if (maps.empty())
        throw std::invalid_argument("CrispGifs: need at least one map");
    for (std::size_t j = 0; j < maps.size(); ++j) {
        if (maps[j].degree() != degree)
            throw std::invalid_argument("CrispGifs: map " + std::to_string(j) +
                                        " has the wrong degree");
        if (maps[j].dim() != box.dim())
            throw std::invalid_argument("CrispGifs: map " + std::to_string(j) +
                                        " has the wrong dimension");
        if (maps[j].lip_bound() >= 1.0)
            throw std::invalid_argument("CrispGifs: map " + std::to_string(j) +
                                        ": Lipschitz bound " +
                                        std::to_string(maps[j].lip_bound()) + " >= 1");
    }
}

double CrispGifs::lip_bound() const {
    double lambda = 0.0;
    for (const auto& f : maps) lambda = std::max(lambda, f.lip_bound());
    return lambda;
}

namespace {

/// Enumerates operand tuples over the coordinates the map actually reads
/// (zero blocks are skipped; they cannot move the image) and rasterizes the
/// image points into an occupancy buffer.
void rasterize_images(const DomainBox& box, const AffineContraction& f,
                      const std::vector<const CrispCellSet*>& operands,
                      std::vector<std::uint8_t>& hit, std::uint64_t& clamped) {
    int m = f.degree();
    std::vector<int> active;
    for (int i = 0; i < m; ++i)
        if (!f.block_is_zero(i)) active.push_back(i);

    std::vector<std::vector<double>> points(m, std::vector<double>(box.dim(), 0.0));
    std::vector<const double*> point_ptrs(m);
    for (int i = 0; i < m; ++i) point_ptrs[i] = points[i].data();
    std::vector<double> image(box.dim());

    if (active.empty()) {
        f.apply(point_ptrs.data(), image.data());
        hit[box.locate(image.data(), &clamped)] = 1;
        return;
    }

    std::vector<std::size_t> cursor(active.size(), 0);
    for (std::size_t a = 0; a < active.size(); ++a)
        box.center_point(operands[active[a]]->cells[0], points[active[a]].data());
    while (true) {
        f.apply(point_ptrs.data(), image.data());
        hit[box.locate(image.data(), &clamped)] = 1;
        std::size_t a = 0;
        for (; a < active.size(); ++a) {
            if (++cursor[a] < operands[active[a]]->cells.size()) {
                box.center_point(operands[active[a]]->cells[cursor[a]],
                                 points[active[a]].data());
                break;
            }
            cursor[a] = 0;
            box.center_point(operands[active[a]]->cells[0], points[active[a]].data());
        }
        if (a == active.size()) break;
    }
}

void check_operands(const DomainBox& box, int degree,
                    const std::vector<const CrispCellSet*>& operands) {
    if (operands.size() != static_cast<std::size_t>(degree))
        throw std::invalid_argument("expected one operand cell set per degree");
    for (const auto* op : operands) {
        if (op->empty())
            throw std::invalid_argument("operand cell set is empty");
        if (op->box != box)
            throw std::invalid_argument("operand cell set lives on a different box");
    }
}

CrispCellSet collect(const DomainBox& box, const std::vector<std::uint8_t>& hit) {
    std::vector<CellIndex> cells;
    for (CellIndex c = 0; c < hit.size(); ++c)
        if (hit[c]) cells.push_back(c);
    return CrispCellSet(box, std::move(cells));
}

} // namespace

MappedCells map_cellset(const DomainBox& box, const AffineContraction& f,
                        const std::vector<const CrispCellSet*>& operands) {
    check_operands(box, f.degree(), operands);
    std::vector<std::uint8_t> hit(box.total_cells(), 0);
    std::uint64_t clamped = 0;
    rasterize_images(box, f, operands, hit, clamped);
    return MappedCells{collect(box, hit), clamped};
}

MappedCells ghb_apply(const CrispGifs& sys, const std::vector<const CrispCellSet*>& operands) {
    check_operands(sys.box, sys.degree, operands);
    std::vector<std::uint8_t> hit(sys.box.total_cells(), 0);
    std::uint64_t clamped = 0;
    for (const auto& f : sys.maps) rasterize_images(sys.box, f, operands, hit, clamped);
    return MappedCells{collect(sys.box, hit), clamped};
}

CrispRun crisp_attractor(const CrispGifs& sys, std::vector<CrispCellSet> seeds,
                         int max_iter, double tol) {
    int m = sys.degree;
    if (seeds.size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("crisp_attractor: need one seed per degree");
    if (tol < 0.0) tol = sys.box.cell_diagonal();
    if (max_iter <= 0)
        max_iter = auto_max_iter(sys.box, sys.lip_bound(),
                                 tol > 0.0 ? tol : sys.box.cell_diagonal(), m);

    std::deque<CrispCellSet> window(seeds.begin(), seeds.end());
    std::vector<std::vector<CellIndex>> history; // window snapshots, flattened
    auto snapshot = [&]() {
        std::vector<CellIndex> snap;
        for (const auto& k : window) {
            snap.push_back(static_cast<CellIndex>(k.cells.size()));
            snap.insert(snap.end(), k.cells.begin(), k.cells.end());
        }
        return snap;
    };

    CrispRun run{window.back(), 0, {}, false, false, false, 0};
    history.push_back(snapshot());
    for (int it = 0; it < max_iter; ++it) {
        std::vector<const CrispCellSet*> args(m);
        for (int i = 0; i < m; ++i) args[i] = &window[m - 1 - i]; // newest first
        MappedCells next = ghb_apply(sys, args);
        run.clamped += next.clamped;
        ++run.iterations;
        run.decay.push_back(hausdorff(next.cells, window.back()).value);

        bool stationary = true;
        for (const auto& k : window)
            if (!(k == next.cells)) { stationary = false; break; }

        window.pop_front();
        window.push_back(std::move(next.cells));
        run.attractor = window.back();

        if (stationary) {
            run.converged = true;
            run.collapsed_exact = true;
            return run;
        }
        if (tol > 0.0 && run.decay.size() >= static_cast<std::size_t>(m)) {
            bool settled = true;
            for (int i = 0; i < m; ++i)
                if (run.decay[run.decay.size() - 1 - i] > tol) { settled = false; break; }
            if (settled) {
                run.converged = true;
                return run;
            }
        }
        auto snap = snapshot();
        if (std::find(history.begin(), history.end(), snap) != history.end()) {
            run.cycle_detected = true;
            return run;
        }
        history.push_back(std::move(snap));
    }
    return run; // unconverged, flagged by converged == false
}

} // namespace gifzs
