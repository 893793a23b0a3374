#include "gifzs/fuzzification.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace gifzs {

Gifzs::Gifzs(CrispGifs g, GreySystem r, int levels_, bool allow_zero_grey)
    : gifs(std::move(g)), greys(std::move(r)), levels(levels_) {
    if (greys.maps.size() != gifs.maps.size())
        throw std::invalid_argument("Gifzs: need exactly one grey map per map");
    for (std::size_t j = 0; j < greys.maps.size(); ++j) {
        if (greys.maps[j].levels() != levels)
            throw std::invalid_argument("Gifzs: grey map " + std::to_string(j) +
                                        " quantization does not match");
        if (greys.maps[j].is_zero() && !allow_zero_grey)
            throw std::invalid_argument("Gifzs: grey map " + std::to_string(j) +
                                        " is identically zero (nonzero clause)");
    }
    AdmissibilityReport adm = check_admissible(greys);
    if (!adm.pass) {
        std::string msg = "Gifzs: grey system not admissible:";
        for (const auto& v : adm.violations) msg += " " + v + ";";
        throw std::invalid_argument(msg);
    }
}

namespace {

void check_inputs(const DomainBox& box, int degree, int levels,
                  const std::vector<const FuzzyGrid*>& inputs) {
    if (inputs.size() != static_cast<std::size_t>(degree))
        throw std::invalid_argument("expected one fuzzy grid per degree");
    for (const auto* u : inputs) {
        if (u->box() != box)
            throw std::invalid_argument("input grid lives on a different box");
        if (u->levels() != levels)
            throw std::invalid_argument("input grid quantization does not match");
        u->require_normal("fuzzy operator input");
    }
}

} // namespace

FuzzyApply zadeh_extend(const AffineContraction& f,
                        const std::vector<const FuzzyGrid*>& inputs) {
    const DomainBox& box = inputs.at(0)->box();
    check_inputs(box, f.degree(), inputs[0]->levels(), inputs);
    int m = f.degree();
    int levels = inputs[0]->levels();

    // Coordinates behind zero blocks cannot move the image; the sup over
    // them contributes the factor's max level to the min.
    std::vector<int> active;
    Level base = static_cast<Level>(levels);
    for (int i = 0; i < m; ++i) {
        if (f.block_is_zero(i)) {
            base = std::min(base, inputs[i]->max_level());
        } else {
            active.push_back(i);
        }
    }

    std::vector<std::vector<CellIndex>> support(active.size());
    std::vector<std::vector<Level>> support_level(active.size());
    for (std::size_t a = 0; a < active.size(); ++a) {
        const auto& vals = inputs[active[a]]->values();
        for (CellIndex c = 0; c < vals.size(); ++c)
            if (vals[c] > 0) {
                support[a].push_back(c);
                support_level[a].push_back(vals[c]);
            }
    }

    std::vector<Level> out(box.total_cells(), 0);
    std::uint64_t clamped = 0;
    std::vector<std::vector<double>> points(m, std::vector<double>(box.dim(), 0.0));
    std::vector<const double*> point_ptrs(m);
    for (int i = 0; i < m; ++i) point_ptrs[i] = points[i].data();
    std::vector<double> image(box.dim());

    if (active.empty()) {
        f.apply(point_ptrs.data(), image.data());
        CellIndex c = box.locate(image.data(), &clamped);
        out[c] = std::max(out[c], base);
        return {FuzzyGrid(box, levels, std::move(out)), clamped};
    }

    std::vector<std::size_t> cursor(active.size(), 0);
    for (std::size_t a = 0; a < active.size(); ++a)
        box.center_point(support[a][0], points[active[a]].data());
    while (true) {
        Level lvl = base;
        for (std::size_t a = 0; a < active.size(); ++a)
            lvl = std::min(lvl, support_level[a][cursor[a]]);
        f.apply(point_ptrs.data(), image.data());
        CellIndex c = box.locate(image.data(), &clamped);
        if (lvl > out[c]) out[c] = lvl;

        std::size_t a = 0;
        for (; a < active.size(); ++a) {
            if (++cursor[a] < support[a].size()) {
                box.center_point(support[a][cursor[a]], points[active[a]].data());
                break;
            }
            cursor[a] = 0;
            box.center_point(support[a][0], points[active[a]].data());
        }
        if (a == active.size()) break;
    }
    return {FuzzyGrid(box, levels, std::move(out)), clamped};
}

FuzzyApply gfhb_suppush(const Gifzs& z, const std::vector<const FuzzyGrid*>& inputs) {
    check_inputs(z.box(), z.degree(), z.levels, inputs);
    FuzzyGrid out = FuzzyGrid::constant(z.box(), z.levels, 0);
    std::uint64_t clamped = 0;
    for (int j = 0; j < z.map_count(); ++j) {
        FuzzyApply img = zadeh_extend(z.gifs.maps[j], inputs);
        clamped += img.clamped;
        out = join(out, apply_grey(z.greys.maps[j], img.grid));
    }
    if (!out.is_normal())
        throw std::logic_error("gfhb_suppush: output not normal despite admissible greys");
    return {std::move(out), clamped};
}

FuzzyApply gfhb_levelset(const Gifzs& z, const std::vector<const FuzzyGrid*>& inputs) {
    check_inputs(z.box(), z.degree(), z.levels, inputs);
    int m = z.degree();
    int levels = z.levels;
    std::uint64_t clamped = 0;

    // beta_j takes few distinct values over the level range; crisp images are
    // computed once per (map, beta value).
    std::vector<std::map<int, CrispCellSet>> image_memo(z.map_count());
    std::vector<std::map<int, CrispCellSet>> cut_memo(m);
    auto factor_cut = [&](int i, int level) -> const CrispCellSet& {
        auto it = cut_memo[i].find(level);
        if (it == cut_memo[i].end())
            it = cut_memo[i].emplace(level, alpha_cut(*inputs[i], level)).first;
        return it->second;
    };

    std::vector<CrispCellSet> stack;
    stack.reserve(levels);
    for (int l = 1; l <= levels; ++l) {
        CrispCellSet cut(z.box(), {});
        for (int j = 0; j < z.map_count(); ++j) {
            const GreyLevelMap& rho = z.greys.maps[j];
            if (l > rho.top()) continue; // empty-cut branch of the transport law
            auto b = beta(rho, l);
            if (!b || *b == 0)
                throw std::logic_error("gfhb_levelset: beta out of range for admissible greys");
            auto it = image_memo[j].find(*b);
            if (it == image_memo[j].end()) {
                std::vector<const CrispCellSet*> args(m);
                for (int i = 0; i < m; ++i) args[i] = &factor_cut(i, *b);
                MappedCells img = map_cellset(z.box(), z.gifs.maps[j], args);
                clamped += img.clamped;
                it = image_memo[j].emplace(*b, std::move(img.cells)).first;
            }
            cut = union_sets(cut, it->second);
        }
        stack.push_back(std::move(cut));
    }
    FuzzyGrid out = reconstruct_from_cuts(z.box(), levels, stack);
    return {std::move(out), clamped};
}

Gifzs lift_degree(const Gifzs& z) {
    std::vector<AffineContraction> maps;
    maps.reserve(z.gifs.maps.size());
    for (const auto& f : z.gifs.maps) maps.push_back(f.lifted());
    CrispGifs lifted(z.box(), z.degree() + 1, std::move(maps));
    bool has_zero = false;
    for (const auto& rho : z.greys.maps)
        if (rho.is_zero()) has_zero = true;
    return Gifzs(std::move(lifted), z.greys, z.levels, has_zero);
}

} // namespace gifzs
