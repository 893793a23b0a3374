#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gifzs/fuzzy_grid.hpp"

using namespace gifzs;

namespace {

DomainBox unit_line(CellIndex cells) {
    return DomainBox({0.0}, {1.0}, {cells});
}

FuzzyGrid grid_of(const DomainBox& box, int levels, std::vector<Level> values) {
    return FuzzyGrid(box, levels, std::move(values));
}

} // namespace

TEST_CASE("alpha_cut thresholds and support") {
    DomainBox box = unit_line(3);
    FuzzyGrid u = grid_of(box, 255, {51, 255, 153});

    CHECK(alpha_cut(u, 153).cells == std::vector<CellIndex>{1, 2});
    CHECK(alpha_cut(u, 0).cells == std::vector<CellIndex>{0, 1, 2});
    CHECK_FALSE(alpha_cut(u, 255).empty()); // normality forces a top-level cell

    CHECK(level_from_alpha(153.0 / 255.0, 255) == 153);
    CHECK_THROWS(level_from_alpha(0.3, 255)); // off the quantization lattice
    CHECK_THROWS(alpha_cut(u, 256));
    CHECK_THROWS(alpha_cut(u, -1));
}

TEST_CASE("indicator round trips through cuts") {
    DomainBox box = unit_line(8);
    CrispCellSet k(box, {5});
    FuzzyGrid chi = indicator(k, 255);
    CHECK(chi.at(5) == 255);
    CHECK(chi.at(0) == 0);
    CHECK(alpha_cut(chi, 255) == k);
    CHECK(alpha_cut(chi, 1) == k);
    CHECK(alpha_cut(chi, 0) == k);

    CHECK_THROWS(indicator(CrispCellSet(box, {}), 255));
}

TEST_CASE("join is the cellwise max and commutes with cuts") {
    DomainBox box = unit_line(2);
    FuzzyGrid u = grid_of(box, 255, {10, 200});
    FuzzyGrid v = grid_of(box, 255, {30, 100});
    FuzzyGrid w = join(u, v);
    CHECK(w.values() == std::vector<Level>{30, 200});
    CHECK(join(u, u) == u);

    CrispCellSet joined = alpha_cut(w, 100);
    CrispCellSet merged = union_sets(alpha_cut(u, 100), alpha_cut(v, 100));
    CHECK(joined == merged);
    CHECK(joined.cells == std::vector<CellIndex>{0, 1});

    DomainBox other = unit_line(3);
    CHECK_THROWS(join(u, grid_of(other, 255, {0, 0, 255})));
}

TEST_CASE("cut nesting and cut/join commutation on random grids") {
    std::mt19937 rng(7);
    DomainBox box = unit_line(8);
    std::uniform_int_distribution<int> level(0, 16);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Level> a(8), b(8);
        for (int c = 0; c < 8; ++c) {
            a[c] = static_cast<Level>(level(rng));
            b[c] = static_cast<Level>(level(rng));
        }
        a[rng() % 8] = 16;
        b[rng() % 8] = 16;
        FuzzyGrid u = grid_of(box, 16, a), v = grid_of(box, 16, b);
        for (int l = 1; l < 16; ++l)
            CHECK(is_subset(alpha_cut(u, l + 1), alpha_cut(u, l)));
        for (int l = 1; l <= 16; ++l)
            CHECK(alpha_cut(join(u, v), l) == union_sets(alpha_cut(u, l), alpha_cut(v, l)));
    }
}

TEST_CASE("cartesian product: min rule, cut law, normality") {
    DomainBox box = unit_line(2);
    FuzzyGrid u = grid_of(box, 255, {255, 0});
    FuzzyGrid v = grid_of(box, 255, {0, 255});
    FuzzyGridProduct p = cartesian_product({u, v});

    CellIndex t01[] = {0, 1};
    CellIndex t00[] = {0, 0};
    CHECK(p.membership(t01) == 255);
    CHECK(p.membership(t00) == 0);
    CHECK(p.is_normal());

    auto cuts = p.cut_factors(255);
    CHECK(cuts[0] == alpha_cut(u, 255));
    CHECK(cuts[1] == alpha_cut(v, 255));

    DomainBox other = unit_line(3);
    FuzzyGrid w = grid_of(other, 255, {255, 0, 0});
    CHECK_THROWS(cartesian_product({u, w}));
}

TEST_CASE("product cut law holds exhaustively on small m=2 grids") {
    std::mt19937 rng(11);
    DomainBox box = unit_line(8);
    std::uniform_int_distribution<int> level(0, 8);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Level> a(8), b(8);
        for (int c = 0; c < 8; ++c) {
            a[c] = static_cast<Level>(level(rng));
            b[c] = static_cast<Level>(level(rng));
        }
        a[rng() % 8] = 8;
        b[rng() % 8] = 8;
        FuzzyGrid u = grid_of(box, 8, a), v = grid_of(box, 8, b);
        FuzzyGridProduct p = cartesian_product({u, v});
        for (int l = 1; l <= 8; ++l) {
            auto cuts = p.cut_factors(l);
            // every tuple: membership >= l iff tuple in the product of cuts
            for (CellIndex x = 0; x < 8; ++x)
                for (CellIndex y = 0; y < 8; ++y) {
                    CellIndex t[] = {x, y};
                    bool in_product = cuts[0].contains(x) && cuts[1].contains(y);
                    CHECK((p.membership(t) >= l) == in_product);
                }
        }
    }
}

TEST_CASE("reconstruct_from_cuts inverts the cut stack") {
    DomainBox box = unit_line(2);
    int levels = 255;
    std::vector<CrispCellSet> cuts;
    for (int l = 1; l <= levels; ++l) {
        if (l <= 127)
            cuts.push_back(CrispCellSet(box, {0, 1}));
        else
            cuts.push_back(CrispCellSet(box, {0}));
    }
    FuzzyGrid u = reconstruct_from_cuts(box, levels, cuts);
    CHECK(u.values() == std::vector<Level>{255, 127});

    // all cuts equal -> indicator
    std::vector<CrispCellSet> crisp(levels, CrispCellSet(box, {1}));
    CHECK(reconstruct_from_cuts(box, levels, crisp) == indicator(CrispCellSet(box, {1}), levels));

    // non-nested stack rejected
    std::vector<CrispCellSet> bad = cuts;
    bad[200] = CrispCellSet(box, {0, 1});
    CHECK_THROWS(reconstruct_from_cuts(box, levels, bad));
}

TEST_CASE("reconstruct(cut stack) is the identity on random grids") {
    std::mt19937 rng(3);
    DomainBox box = unit_line(8);
    std::uniform_int_distribution<int> level(0, 16);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Level> a(8);
        for (int c = 0; c < 8; ++c) a[c] = static_cast<Level>(level(rng));
        a[rng() % 8] = 16;
        FuzzyGrid u = grid_of(box, 16, a);
        std::vector<CrispCellSet> cuts;
        for (int l = 1; l <= 16; ++l) cuts.push_back(alpha_cut(u, l));
        CHECK(reconstruct_from_cuts(box, 16, cuts) == u);
    }
}

TEST_CASE("domain box geometry") {
    DomainBox box({0.0, 0.0}, {1.0, 2.0}, {4, 8});
    CHECK(box.total_cells() == 32);
    CHECK(box.width(0) == doctest::Approx(0.25));
    CHECK(box.width(1) == doctest::Approx(0.25));
    CellIndex multi[2] = {3, 7};
    CellIndex flat = box.to_flat(multi);
    CellIndex back[2];
    box.to_multi(flat, back);
    CHECK(back[0] == 3);
    CHECK(back[1] == 7);
    CHECK(box.center(0, 0) == doctest::Approx(0.125));

    // boundary points round to the lower cell
    double boundary[2] = {0.25, 0.0};
    CellIndex hit = box.locate(boundary);
    CHECK(box.axis_index(hit, 0) == 0);

    std::uint64_t clamped = 0;
    double outside[2] = {2.0, -1.0};
    box.locate(outside, &clamped);
    CHECK(clamped == 1);

    DomainBox wrapped({0.0}, {1.0}, {4}, true);
    double beyond[1] = {1.3};
    CHECK(wrapped.axis_index(wrapped.locate(beyond), 0) == 1);
    CHECK(wrapped.cell_distance(0, 3) == doctest::Approx(0.25)); // around the seam
}
