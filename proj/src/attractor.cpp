#include "gifzs/attractor.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace gifzs {

namespace {

int auto_max_iter(const Gifzs& z, double tol) {
    double lambda = z.lip_bound();
    double diam = std::max(z.box().diameter(), tol);
    int k = static_cast<int>(std::ceil(std::log(diam / tol) / std::log(1.0 / lambda)));
    return std::max(k, 1) + z.degree();
}

FuzzyApply apply_operator(const Gifzs& z, const std::deque<FuzzyGrid>& window,
                          bool use_levelset) {
    int m = z.degree();
    std::vector<const FuzzyGrid*> args(m);
    for (int i = 0; i < m; ++i) args[i] = &window[m - 1 - i]; // newest first
    return use_levelset ? gfhb_levelset(z, args) : gfhb_suppush(z, args);
}

} // namespace

std::vector<FuzzyGrid> default_seeds(const Gifzs& z) {
    CrispCellSet site(z.box(), {z.box().center_cell()});
    FuzzyGrid seed = indicator(site, z.levels);
    return std::vector<FuzzyGrid>(z.degree(), seed);
}

std::vector<FuzzyGrid> universe_seeds(const Gifzs& z) {
    FuzzyGrid one = FuzzyGrid::constant(z.box(), z.levels, static_cast<Level>(z.levels));
    return std::vector<FuzzyGrid>(z.degree(), one);
}

AttractorRun iterate_attractor(const Gifzs& z, std::vector<FuzzyGrid> seeds,
                               const RunParams& params) {
    int m = z.degree();
    if (seeds.size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("iterate_attractor: need one seed per degree");
    for (auto& s : seeds) s.require_normal("iterate_attractor seed");

    double tol = params.tol < 0.0 ? z.box().cell_diagonal() : params.tol;
    int max_iter = params.max_iter > 0
                       ? params.max_iter
                       : auto_max_iter(z, tol > 0.0 ? tol : z.box().cell_diagonal());

    std::deque<FuzzyGrid> window(seeds.begin(), seeds.end());
    std::vector<std::vector<Level>> history;
    auto snapshot = [&]() {
        std::vector<Level> snap;
        for (const auto& u : window)
            snap.insert(snap.end(), u.values().begin(), u.values().end());
        return snap;
    };

    AttractorRun run{window.back(), 0, {}, false, false, false, 0};
    history.push_back(snapshot());
    for (int it = 0; it < max_iter; ++it) {
        FuzzyApply next = apply_operator(z, window, params.use_levelset);
        run.clamped += next.clamped;
        ++run.iterations;
        run.decay.push_back(d_infty(next.grid, window.back()));

        bool stationary = true;
        for (const auto& u : window)
            if (u != next.grid) { stationary = false; break; }

        window.pop_front();
        window.push_back(std::move(next.grid));
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
    return run;
}

CollageReport collage(const Gifzs& z, const FuzzyGrid& u, const FuzzyGrid* attractor) {
    u.require_normal("collage");
    CollageReport report;
    report.lambda = z.lip_bound();
    std::vector<const FuzzyGrid*> diag(z.degree(), &u);
    FuzzyApply zu = gfhb_suppush(z, diag);
    report.residual = d_infty(u, zu.grid);
    report.bound = report.residual / (1.0 - report.lambda);
    if (attractor) report.actual = d_infty(u, *attractor);
    return report;
}

MonotoneRun monotone_iterate(const Gifzs& z, const FuzzyGrid& v, const RunParams& params) {
    v.require_normal("monotone_iterate");
    std::vector<const FuzzyGrid*> diag(z.degree(), &v);
    FuzzyGrid first = gfhb_suppush(z, diag).grid;
    bool down = first.le(v);
    bool up = v.le(first);
    if (!down && !up)
        return MonotoneRun{MonotoneDirection::NotComparable, false, false,
                           iterate_attractor(z, std::vector<FuzzyGrid>(z.degree(), v), params)};
    MonotoneRun out{down ? MonotoneDirection::NonIncreasing : MonotoneDirection::NonDecreasing,
                    false, false, AttractorRun{v, 0, {}, false, false, false, 0}};

    RunParams p = params;
    if (p.tol < 0.0) p.tol = 0.0; // monotone lattice runs always reach exact fixed points
    if (p.max_iter <= 0)
        p.max_iter = 4 * auto_max_iter(z, z.box().cell_diagonal()) + z.levels;

    // Re-run the recurrence by hand to check the ordering of every iterate.
    std::deque<FuzzyGrid> window(static_cast<std::size_t>(z.degree()), v);
    out.ordered = true;
    out.run.attractor = v;
    FuzzyGrid prev = v;
    for (int it = 0; it < p.max_iter; ++it) {
        FuzzyApply next = apply_operator(z, window, p.use_levelset);
        out.run.clamped += next.clamped;
        ++out.run.iterations;
        out.run.decay.push_back(d_infty(next.grid, window.back()));
        bool ok = down ? next.grid.le(prev) : prev.le(next.grid);
        if (!ok) out.ordered = false;

        bool stationary = true;
        for (const auto& u : window)
            if (u != next.grid) { stationary = false; break; }
        prev = next.grid;
        window.pop_front();
        window.push_back(std::move(next.grid));
        out.run.attractor = window.back();
        if (stationary) {
            out.run.converged = true;
            out.run.collapsed_exact = true;
            break;
        }
    }
    out.bound_holds = down ? out.run.attractor.le(v) : v.le(out.run.attractor);
    return out;
}

CutComparison compare_cuts(const Gifzs& z, const AttractorRun& run) {
    if (!run.converged)
        throw std::invalid_argument("compare_cuts: attractor run did not converge");

    std::vector<AffineContraction> full_maps;
    std::vector<AffineContraction> sub_maps;
    bool beta_one_exact = true;
    bool all_full_grey = true;
    for (int j = 0; j < z.map_count(); ++j) {
        full_maps.push_back(z.gifs.maps[j]);
        if (z.greys.maps[j].top() == static_cast<Level>(z.levels)) {
            sub_maps.push_back(z.gifs.maps[j]);
            auto b = beta(z.greys.maps[j], z.levels);
            if (!b || *b != z.levels) beta_one_exact = false;
        } else {
            all_full_grey = false;
        }
    }
    if (sub_maps.empty())
        throw std::logic_error("compare_cuts: no map with rho(1)=1 despite admissibility");

    // Full-box seeds drive a monotone (hence exactly stationary) crisp run.
    auto run_crisp = [&](std::vector<AffineContraction> maps) {
        CrispGifs sys(z.box(), z.degree(), std::move(maps));
        std::vector<CrispCellSet> seeds(static_cast<std::size_t>(z.degree()),
                                        full_cell_set(z.box()));
        CrispRun r = crisp_attractor(sys, std::move(seeds), 8192, 0.0);
        if (!r.converged)
            throw std::runtime_error("compare_cuts: crisp attractor did not stabilize");
        return r.attractor;
    };

    CutComparison cmp{run_crisp(std::move(full_maps)), run_crisp(std::move(sub_maps))};
    cmp.all_full_grey = all_full_grey;
    cmp.beta_one_exact = beta_one_exact;
    cmp.proper = check_proper(z.greys).pass;

    double slack = z.box().cell_diagonal();
    CrispCellSet support = alpha_cut(run.attractor, 0);
    CrispCellSet core = alpha_cut(run.attractor, z.levels);

    cmp.support_contained = directed_hausdorff(support, cmp.crisp_full) <= slack;
    cmp.support_equal = cmp.support_contained &&
                        directed_hausdorff(cmp.crisp_full, support) <= slack;
    cmp.core_contains_sub = directed_hausdorff(cmp.crisp_sub, core) <= slack;
    cmp.core_equal = cmp.core_contains_sub &&
                     directed_hausdorff(core, cmp.crisp_sub) <= slack;

    cmp.crisp = true;
    for (Level x : run.attractor.values())
        if (x != 0 && x != static_cast<Level>(z.levels)) cmp.crisp = false;
    return cmp;
}

double min_feasible_epsilon(const DomainBox& box) {
    return 4.0 * box.cell_diagonal();
}

Approximation approximate_ifzs(const FuzzyGrid& target, double epsilon) {
    target.require_normal("approximate_ifzs");
    const DomainBox& box = target.box();
    if (box.wrap())
        throw std::invalid_argument("approximate_ifzs: periodic domains are not supported");
    double floor_eps = min_feasible_epsilon(box);
    if (!(epsilon > floor_eps)) {
        std::ostringstream msg;
        msg << "approximate_ifzs: epsilon " << epsilon
            << " too small for this grid; minimum feasible epsilon is " << floor_eps;
        throw std::invalid_argument(msg.str());
    }

    int d = box.dim();
    int levels = target.levels();
    std::vector<CellIndex> support;
    for (CellIndex c = 0; c < target.values().size(); ++c)
        if (target.at(c) > 0) support.push_back(c);

    // Greedy (eps/4)-cover of the support, scanning in index order.
    double radius = epsilon / 4.0;
    std::vector<CellIndex> centers;
    std::vector<Level> alphas;
    std::vector<char> covered(support.size(), 0);
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (covered[i]) continue;
        CellIndex site = support[i];
        centers.push_back(site);
        Level alpha = 0;
        for (std::size_t k = 0; k < support.size(); ++k) {
            if (box.cell_distance(site, support[k]) <= radius) {
                covered[k] = 1;
                alpha = std::max(alpha, target.at(support[k]));
            }
        }
        alphas.push_back(alpha);
    }

    // Support centroid and bounding-box diameter fix the common contraction
    // ratio: s * diam <= eps/8 keeps every image inside its eps/4 ball.
    std::vector<double> centroid(d, 0.0);
    std::vector<double> bb_lo(d, 0.0), bb_hi(d, 0.0);
    for (std::size_t i = 0; i < support.size(); ++i) {
        for (int k = 0; k < d; ++k) {
            double x = box.center(support[i], k);
            centroid[k] += x;
            if (i == 0 || x < bb_lo[k]) bb_lo[k] = x;
            if (i == 0 || x > bb_hi[k]) bb_hi[k] = x;
        }
    }
    double diam_sq = 0.0;
    for (int k = 0; k < d; ++k) {
        centroid[k] /= static_cast<double>(support.size());
        diam_sq += (bb_hi[k] - bb_lo[k]) * (bb_hi[k] - bb_lo[k]);
    }
    double diam = std::sqrt(diam_sq);
    double s = 0.49;
    if (diam > 0.0) s = std::min(s, epsilon / (8.0 * diam));

    std::vector<AffineContraction> maps;
    std::vector<GreyLevelMap> greys;
    for (std::size_t j = 0; j < centers.size(); ++j) {
        // f_j(x) = x_j + s (x - centroid)
        std::vector<double> block(static_cast<std::size_t>(d) * d, 0.0);
        for (int k = 0; k < d; ++k) block[static_cast<std::size_t>(k) * d + k] = s;
        std::vector<double> offset(d);
        for (int k = 0; k < d; ++k)
            offset[k] = box.center(centers[j], k) - s * centroid[k];
        maps.emplace_back(1, d, std::move(block), std::move(offset));
        greys.push_back(GreyLevelMap::step(levels,
                                           static_cast<double>(alphas[j]) / levels));
    }

    Approximation out{
        Gifzs(CrispGifs(box, 1, std::move(maps)), GreySystem{std::move(greys)}, levels),
        std::move(centers),
        CollageReport{},
        epsilon};
    out.certificate = collage(out.system, target);
    return out;
}

} // namespace gifzs
