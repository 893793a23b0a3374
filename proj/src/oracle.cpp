#include "gifzs/oracle.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace gifzs::oracle {

void require_tiny_grid(const DomainBox& box, int levels) {
    if (box.total_cells() > 16 || levels > 16)
        throw std::invalid_argument("oracle: instance exceeds the tiny bounds (16 cells, 16 levels)");
}

void require_tiny(const Gifzs& z) {
    require_tiny_grid(z.box(), z.levels);
    if (z.degree() > 2 || z.map_count() > 3)
        throw std::invalid_argument("oracle: instance exceeds the tiny bounds (degree 2, 3 maps)");
}

FuzzyGrid zadeh(const AffineContraction& f, const std::vector<const FuzzyGrid*>& inputs) {
    const DomainBox& box = inputs.at(0)->box();
    require_tiny_grid(box, inputs[0]->levels());
    int m = f.degree();
    if (inputs.size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("oracle::zadeh: operand count mismatch");
    std::uint64_t total = box.total_cells();

    std::vector<std::vector<double>> points(m, std::vector<double>(box.dim()));
    std::vector<const double*> point_ptrs(m);
    for (int i = 0; i < m; ++i) point_ptrs[i] = points[i].data();
    std::vector<double> image(box.dim());
    std::vector<CellIndex> tuple(m, 0);

    std::vector<Level> out(total, 0);
    for (CellIndex target = 0; target < total; ++target) {
        Level best = 0;
        std::fill(tuple.begin(), tuple.end(), 0);
        while (true) {
            for (int i = 0; i < m; ++i) box.center_point(tuple[i], points[i].data());
            f.apply(point_ptrs.data(), image.data());
            if (box.locate(image.data()) == target) {
                Level lvl = inputs[0]->at(tuple[0]);
                for (int i = 1; i < m; ++i) lvl = std::min(lvl, inputs[i]->at(tuple[i]));
                if (lvl > best) best = lvl;
            }
            int i = 0;
            for (; i < m; ++i) {
                if (++tuple[i] < total) break;
                tuple[i] = 0;
            }
            if (i == m) break;
        }
        out[target] = best;
    }
    return FuzzyGrid(box, inputs[0]->levels(), std::move(out));
}

double hausdorff_ref(const CrispCellSet& a, const CrispCellSet& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("oracle::hausdorff_ref: empty operand");
    const DomainBox& box = a.box;
    double worst = 0.0;
    for (CellIndex x : a.cells) {
        double nearest = -1.0;
        for (CellIndex y : b.cells) {
            double d = box.cell_distance(x, y);
            if (nearest < 0.0 || d < nearest) nearest = d;
        }
        if (nearest > worst) worst = nearest;
    }
    for (CellIndex y : b.cells) {
        double nearest = -1.0;
        for (CellIndex x : a.cells) {
            double d = box.cell_distance(y, x);
            if (nearest < 0.0 || d < nearest) nearest = d;
        }
        if (nearest > worst) worst = nearest;
    }
    return worst;
}

namespace {

double dinfty_from(const FuzzyGrid& u, const FuzzyGrid& v, int first_level) {
    double best = 0.0;
    for (int l = first_level; l <= u.levels(); ++l) {
        double h = hausdorff_ref(alpha_cut(u, l), alpha_cut(v, l));
        if (h > best) best = h;
    }
    return best;
}

} // namespace

double dinfty(const FuzzyGrid& u, const FuzzyGrid& v) {
    require_tiny_grid(u.box(), u.levels());
    return dinfty_from(u, v, 0);
}

double dinfty_positive(const FuzzyGrid& u, const FuzzyGrid& v) {
    require_tiny_grid(u.box(), u.levels());
    return dinfty_from(u, v, 1);
}

double dinfty_product(const std::vector<const FuzzyGrid*>& us,
                      const std::vector<const FuzzyGrid*>& vs) {
    if (us.size() != vs.size() || us.empty())
        throw std::invalid_argument("oracle::dinfty_product: tuple mismatch");
    const DomainBox& box = us[0]->box();
    require_tiny_grid(box, us[0]->levels());
    int m = static_cast<int>(us.size());

    // Max-metric distance between product cells; the per-axis distances go
    // through the same cell_distance as every other path.
    auto tuple_distance = [&](const std::vector<CellIndex>& a,
                              const std::vector<CellIndex>& b) {
        double worst = 0.0;
        for (int i = 0; i < m; ++i)
            worst = std::max(worst, box.cell_distance(a[i], b[i]));
        return worst;
    };
    auto product_cells = [&](const std::vector<const FuzzyGrid*>& grids, int level) {
        std::vector<std::vector<CellIndex>> tuples;
        std::vector<std::vector<CellIndex>> cuts;
        for (int i = 0; i < m; ++i) cuts.push_back(alpha_cut(*grids[i], level).cells);
        std::vector<std::size_t> cursor(m, 0);
        while (true) {
            std::vector<CellIndex> t(m);
            for (int i = 0; i < m; ++i) t[i] = cuts[i][cursor[i]];
            tuples.push_back(std::move(t));
            int i = 0;
            for (; i < m; ++i) {
                if (++cursor[i] < cuts[i].size()) break;
                cursor[i] = 0;
            }
            if (i == m) break;
        }
        return tuples;
    };
    auto hausdorff_tuples = [&](const std::vector<std::vector<CellIndex>>& a,
                                const std::vector<std::vector<CellIndex>>& b) {
        double worst = 0.0;
        for (const auto& x : a) {
            double nearest = -1.0;
            for (const auto& y : b) {
                double d = tuple_distance(x, y);
                if (nearest < 0.0 || d < nearest) nearest = d;
            }
            worst = std::max(worst, nearest);
        }
        for (const auto& y : b) {
            double nearest = -1.0;
            for (const auto& x : a) {
                double d = tuple_distance(y, x);
                if (nearest < 0.0 || d < nearest) nearest = d;
            }
            worst = std::max(worst, nearest);
        }
        return worst;
    };

    double best = 0.0;
    for (int l = 0; l <= us[0]->levels(); ++l)
        best = std::max(best, hausdorff_tuples(product_cells(us, l), product_cells(vs, l)));
    return best;
}

Run attractor(const Gifzs& z, std::vector<FuzzyGrid> seeds, int max_iter) {
    require_tiny(z);
    int m = z.degree();
    if (seeds.size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("oracle::attractor: need one seed per degree");

    std::deque<FuzzyGrid> window(seeds.begin(), seeds.end());
    std::vector<std::vector<Level>> history;
    auto snapshot = [&]() {
        std::vector<Level> snap;
        for (const auto& u : window)
            snap.insert(snap.end(), u.values().begin(), u.values().end());
        return snap;
    };
    history.push_back(snapshot());

    Run run{window.back(), 0, false, false};
    for (int it = 0; it < max_iter; ++it) {
        // One operator application assembled from oracle pieces only.
        FuzzyGrid out = FuzzyGrid::constant(z.box(), z.levels, 0);
        std::vector<const FuzzyGrid*> args(m);
        for (int i = 0; i < m; ++i) args[i] = &window[m - 1 - i];
        for (int j = 0; j < z.map_count(); ++j) {
            FuzzyGrid img = zadeh(z.gifs.maps[j], args);
            std::vector<Level> greyed(img.values().size());
            for (std::size_t c = 0; c < greyed.size(); ++c)
                greyed[c] = z.greys.maps[j].at(img.at(c));
            FuzzyGrid gj(z.box(), z.levels, std::move(greyed));
            std::vector<Level> merged(out.values());
            for (std::size_t c = 0; c < merged.size(); ++c)
                merged[c] = std::max(merged[c], gj.at(c));
            out = FuzzyGrid(z.box(), z.levels, std::move(merged));
        }
        ++run.iterations;

        bool stationary = true;
        for (const auto& u : window)
            if (u != out) { stationary = false; break; }
        window.pop_front();
        window.push_back(std::move(out));
        run.attractor = window.back();
        if (stationary) {
            run.converged = true;
            return run;
        }
        auto snap = snapshot();
        if (std::find(history.begin(), history.end(), snap) != history.end()) {
            run.cycle_detected = true;
            return run;
        }
        history.push_back(std::move(snap));
    }
    return run;
}

} // namespace gifzs::oracle
