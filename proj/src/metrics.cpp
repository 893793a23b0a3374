#include "gifzs/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

namespace gifzs {

namespace {

struct DirectedResult {
    double value = 0.0;
    CellIndex witness_from = 0;
    CellIndex witness_to = 0;
};

DirectedResult directed_brute(const CrispCellSet& from, const CrispCellSet& to) {
    const DomainBox& box = from.box;
    DirectedResult best;
    best.value = -1.0;
    for (CellIndex a : from.cells) {
        double nearest = -1.0;
        CellIndex nearest_cell = to.cells.front();
        for (CellIndex b : to.cells) {
            double d = box.cell_distance(a, b);
            if (nearest < 0.0 || d < nearest) {
                nearest = d;
                nearest_cell = b;
            }
        }
        if (nearest > best.value) {
            best.value = nearest;
            best.witness_from = a;
            best.witness_to = nearest_cell;
        }
    }
    return best;
}

/// Nearest-member search over an occupancy bitmap, expanding Chebyshev rings
/// around the query cell. Distances funnel through DomainBox::cell_distance,
/// so the result is bit-identical to the double loop.
class NearestCellFinder {
public:
    NearestCellFinder(const DomainBox& box, const CrispCellSet& members)
        : box_(box), occupied_(box.total_cells(), 0) {
        for (CellIndex c : members.cells) occupied_[c] = 1;
        min_width_ = box.width(0);
        for (int k = 1; k < box.dim(); ++k) min_width_ = std::min(min_width_, box.width(k));
        max_radius_ = 0;
        for (int k = 0; k < box.dim(); ++k) {
            long range = box.wrap() ? (box.cells()[k] + 1) / 2 : box.cells()[k] - 1;
            max_radius_ = std::max(max_radius_, range);
        }
    }

    std::pair<double, CellIndex> nearest(CellIndex query) const {
        int d = box_.dim();
        std::vector<CellIndex> base(d);
        box_.to_multi(query, base.data());
        double best = -1.0;
        CellIndex best_cell = query;
        long stop = max_radius_;
        for (long r = 0; r <= stop; ++r) {
            visit_ring(base, r, [&](CellIndex c) {
                if (!occupied_[c]) return;
                double dist = box_.cell_distance(query, c);
                if (best < 0.0 || dist < best) {
                    best = dist;
                    best_cell = c;
                    // Overshoot by two rings so floating-point slack in the
                    // radius bound can never hide a closer member.
                    stop = std::min(max_radius_,
                                    static_cast<long>(std::floor(best / min_width_)) + 2);
                }
            });
        }
        return {best, best_cell};
    }

private:
    template <typename Fn>
    void visit_ring(const std::vector<CellIndex>& base, long r, Fn&& fn) const {
        int d = box_.dim();
        std::vector<long> offset(d, 0);
        std::function<void(int, bool)> recurse = [&](int axis, bool pinned) {
            if (axis == d) {
                if (!pinned) return;
                std::uint64_t flat = 0;
                for (int k = 0; k < d; ++k) {
                    long idx = static_cast<long>(base[k]) + offset[k];
                    long n = box_.cells()[k];
                    if (box_.wrap()) {
                        idx %= n;
                        if (idx < 0) idx += n;
                    } else if (idx < 0 || idx >= n) {
                        return;
                    }
                    flat += stride(k) * static_cast<std::uint64_t>(idx);
                }
                fn(static_cast<CellIndex>(flat));
                return;
            }
            long span = box_.wrap() ? (box_.cells()[axis] + 1) / 2
                                    : static_cast<long>(box_.cells()[axis]) - 1;
            long lim = std::min(r, span);
            bool last_chance = !pinned && axis == d - 1;
            for (long o = -lim; o <= lim; ++o) {
                if (last_chance && std::labs(o) != r) continue;
                offset[axis] = o;
                recurse(axis + 1, pinned || std::labs(o) == r);
            }
        };
        if (r == 0) {
            std::uint64_t flat = 0;
            for (int k = 0; k < d; ++k) flat += stride(k) * base[k];
            fn(static_cast<CellIndex>(flat));
            return;
        }
        recurse(0, false);
    }

    std::uint64_t stride(int axis) const {
        std::uint64_t s = 1;
        for (int k = 0; k < axis; ++k) s *= box_.cells()[k];
        return s;
    }

    const DomainBox& box_;
    std::vector<std::uint8_t> occupied_;
    double min_width_ = 0.0;
    long max_radius_ = 0;
};

DirectedResult directed_accelerated(const CrispCellSet& from, const CrispCellSet& to) {
    NearestCellFinder finder(from.box, to);
    DirectedResult best;
    best.value = -1.0;
    for (CellIndex a : from.cells) {
        auto [dist, cell] = finder.nearest(a);
        if (dist > best.value) {
            best.value = dist;
            best.witness_from = a;
            best.witness_to = cell;
        }
    }
    return best;
}

DirectedResult directed(const CrispCellSet& from, const CrispCellSet& to,
                        const HausdorffOptions& opts) {
    if (from.empty() || to.empty())
        throw std::invalid_argument("hausdorff: operands must be nonempty");
    if (from.box != to.box)
        throw std::invalid_argument("hausdorff: operands must share a box");
    std::uint64_t work = static_cast<std::uint64_t>(from.size()) * to.size();
    if (work > opts.brute_force_limit) return directed_accelerated(from, to);
    return directed_brute(from, to);
}

} // namespace

double directed_hausdorff(const CrispCellSet& from, const CrispCellSet& to,
                          const HausdorffOptions& opts) {
    return directed(from, to, opts).value;
}

HausdorffResult hausdorff(const CrispCellSet& a, const CrispCellSet& b,
                          const HausdorffOptions& opts) {
    DirectedResult ab = directed(a, b, opts);
    DirectedResult ba = directed(b, a, opts);
    HausdorffResult out;
    if (ab.value >= ba.value) {
        out.value = ab.value;
        out.witness_a = ab.witness_from;
        out.witness_b = ab.witness_to;
    } else {
        out.value = ba.value;
        out.witness_a = ba.witness_to;
        out.witness_b = ba.witness_from;
    }
    return out;
}

double d_infty(const FuzzyGrid& u, const FuzzyGrid& v, const HausdorffOptions& opts) {
    if (u.box() != v.box() || u.levels() != v.levels())
        throw std::invalid_argument("d_infty: mismatched grids");
    u.require_normal("d_infty");
    v.require_normal("d_infty");
    // The cut pair is piecewise constant in the threshold; it changes only at
    // levels that actually occur, so the sup over (0,1] is a max over those.
    std::set<Level> thresholds;
    for (Level x : u.values())
        if (x > 0) thresholds.insert(x);
    for (Level x : v.values())
        if (x > 0) thresholds.insert(x);
    double best = 0.0;
    for (Level t : thresholds) {
        double h = hausdorff(alpha_cut(u, t), alpha_cut(v, t), opts).value;
        if (h > best) best = h;
    }
    return best;
}

double d_infty_m(const std::vector<const FuzzyGrid*>& us,
                 const std::vector<const FuzzyGrid*>& vs, const HausdorffOptions& opts) {
    if (us.size() != vs.size() || us.empty())
        throw std::invalid_argument("d_infty_m: tuples must be nonempty and equally long");
    double best = 0.0;
    for (std::size_t i = 0; i < us.size(); ++i)
        best = std::max(best, d_infty(*us[i], *vs[i], opts));
    return best;
}

} // namespace gifzs
