// Acceptance suite: analytic-example reproduction plus the property
// batteries, one printed line per criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "gifzs/attractor.hpp"
#include "gifzs/oracle.hpp"
#include "support.hpp"

using namespace gifzs;
using testsupport::random_contraction;
using testsupport::random_normal_grid;
using testsupport::random_system;

namespace {

int failures = 0;

void report(int index, const char* title, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", index, title,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Gifzs doubling_system(CellIndex cells, int levels) {
    DomainBox box({0.0}, {1.0}, {cells}, true);
    std::vector<AffineContraction> maps{AffineContraction(2, 1, {0.5, 0.0}, {0.0}),
                                        AffineContraction(2, 1, {0.5, 0.0}, {0.5})};
    GreySystem greys{{GreyLevelMap::identity(levels), GreyLevelMap::identity(levels)}};
    return Gifzs(CrispGifs(std::move(box), 2, std::move(maps)), std::move(greys), levels);
}

Gifzs quarter_sum_system(CellIndex cells, int levels, GreyLevelMap g0, GreyLevelMap g1) {
    DomainBox box({0.0}, {1.0}, {cells});
    std::vector<AffineContraction> maps{AffineContraction(2, 1, {0.25, 0.25}, {0.0}),
                                        AffineContraction(2, 1, {0.25, 0.25}, {0.5})};
    GreySystem greys{{std::move(g0), std::move(g1)}};
    return Gifzs(CrispGifs(std::move(box), 2, std::move(maps)), std::move(greys), levels);
}

DomainBox random_box(std::mt19937& rng, int dim) {
    if (dim == 1) {
        CellIndex cells = 32 + static_cast<CellIndex>(rng() % 33);
        return DomainBox({0.0}, {1.0}, {cells});
    }
    CellIndex side = 10 + static_cast<CellIndex>(rng() % 5);
    return DomainBox({0.0, 0.0}, {1.0, 1.0}, {side, side});
}

// 1. Doubling-map example: all-max attractor, <= 20 iterations, < 1 s.
void criterion_1() {
    auto start = std::chrono::steady_clock::now();
    Gifzs z = doubling_system(256, 255);
    AttractorRun run = iterate_attractor(z, default_seeds(z), RunParams{64, 0.0, false});
    double elapsed = seconds_since(start);
    bool all_max = run.converged &&
                   run.attractor == FuzzyGrid::constant(z.box(), 255, 255);
    bool pass = all_max && run.iterations <= 20 && elapsed < 1.0;
    char detail[128];
    std::snprintf(detail, sizeof detail, "iterations=%d elapsed=%.3fs all_max=%d",
                  run.iterations, elapsed, all_max ? 1 : 0);
    report(1, "doubling map attractor is the universe", pass, detail);
}

// 2. Quarter-sum with greys scale:1/2, id: u(z) = 2 u(z-1/2) within 2 levels.
void criterion_2() {
    const CellIndex n = 512;
    Gifzs z = quarter_sum_system(n, 255, GreyLevelMap::scale(255, 0.5),
                                 GreyLevelMap::identity(255));
    AttractorRun run = iterate_attractor(z, universe_seeds(z), RunParams{600, 0.0, false});
    int worst = 0;
    for (CellIndex c = n / 2; c < n; ++c) {
        int delta = std::abs(static_cast<int>(run.attractor.at(c)) -
                             2 * static_cast<int>(run.attractor.at(c - n / 2)));
        worst = std::max(worst, delta);
    }
    bool pass = run.converged && worst <= 2;
    char detail[96];
    std::snprintf(detail, sizeof detail, "converged=%d worst_deviation=%d levels",
                  run.converged ? 1 : 0, worst);
    report(2, "quarter-sum halving relation on (1/2, 1)", pass, detail);
}

// 3. Identity greys: u_Z = chi_{A_S} against the independent crisp path.
void criterion_3() {
    std::mt19937 rng(1003);
    int bad = 0;
    for (int trial = 0; trial < 10; ++trial) {
        int m = 1 + static_cast<int>(rng() % 2);
        int d = 1 + static_cast<int>(rng() % 2);
        DomainBox box = random_box(rng, d);
        Gifzs z = random_system(box, 255, m, 2 + static_cast<int>(rng() % 2), rng,
                                /*all_identity_greys=*/true);
        AttractorRun run = iterate_attractor(z, universe_seeds(z), RunParams{2000, 0.0, false});
        if (!run.converged) { ++bad; continue; }
        CutComparison cmp = compare_cuts(z, run);
        bool crisp_equal = cmp.crisp && cmp.support_contained &&
                           directed_hausdorff(cmp.crisp_full, alpha_cut(run.attractor, 0)) <=
                               box.cell_diagonal();
        if (!crisp_equal) ++bad;
    }
    report(3, "crispness: identity greys give chi of the crisp attractor", bad == 0,
           std::to_string(bad) + " failures of 10");
}

// 4. Zero-cut containment on random admissible systems; equality when proper.
void criterion_4() {
    std::mt19937 rng(1004);
    int bad = 0, proper_seen = 0;
    for (int trial = 0; trial < 20; ++trial) {
        int m = 1 + static_cast<int>(rng() % 2);
        int d = 1 + static_cast<int>(rng() % 2);
        DomainBox box = random_box(rng, d);
        Gifzs z = random_system(box, 255, m, 2 + static_cast<int>(rng() % 2), rng);
        AttractorRun run = iterate_attractor(z, universe_seeds(z), RunParams{4000, 0.0, false});
        if (!run.converged) { ++bad; continue; }
        CutComparison cmp = compare_cuts(z, run);
        if (!cmp.support_contained) ++bad;
        if (cmp.proper) {
            ++proper_seen;
            if (!cmp.support_equal) ++bad;
        }
    }
    report(4, "zero-cut containment (equality when proper)", bad == 0,
           std::to_string(bad) + " failures of 20, " + std::to_string(proper_seen) +
               " proper systems");
}

// 5. Operator contraction: 100 random pairs per system, zero violations.
void criterion_5() {
    std::mt19937 rng(1005);
    int violations = 0;
    for (int s = 0; s < 3; ++s) {
        int m = 1 + s % 2;
        DomainBox box({0.0}, {1.0}, {32});
        Gifzs z = random_system(box, 16, m, 2, rng);
        double lambda = z.lip_bound();
        double slack = 2.0 * box.cell_diagonal();
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<FuzzyGrid> us, vs;
            for (int i = 0; i < m; ++i) {
                us.push_back(random_normal_grid(box, 16, rng));
                vs.push_back(random_normal_grid(box, 16, rng));
            }
            std::vector<const FuzzyGrid*> up, vp;
            for (int i = 0; i < m; ++i) {
                up.push_back(&us[i]);
                vp.push_back(&vs[i]);
            }
            double lhs = d_infty(gfhb_suppush(z, up).grid, gfhb_suppush(z, vp).grid);
            if (lhs > lambda * d_infty_m(up, vp) + slack) ++violations;
        }
    }
    report(5, "operator contraction bound over 300 random pairs", violations == 0,
           std::to_string(violations) + " violations");
}

// 6. Collage inequality: 50 random u per system, zero violations.
void criterion_6() {
    std::mt19937 rng(1006);
    int violations = 0;
    for (int s = 0; s < 3; ++s) {
        int m = 1 + s % 2;
        DomainBox box({0.0}, {1.0}, {32});
        Gifzs z = random_system(box, 16, m, 2, rng);
        AttractorRun run = iterate_attractor(z, universe_seeds(z), RunParams{2000, 0.0, false});
        if (!run.converged) { ++violations; continue; }
        double slack = 2.0 * box.cell_diagonal();
        for (int trial = 0; trial < 50; ++trial) {
            FuzzyGrid u = random_normal_grid(box, 16, rng);
            CollageReport r = collage(z, u, &run.attractor);
            if (*r.actual > r.bound + slack) ++violations;
        }
    }
    report(6, "collage inequality over 150 random starting sets", violations == 0,
           std::to_string(violations) + " violations");
}

// 7. Product isometry, exact equality on 100 random quadruples.
void criterion_7() {
    std::mt19937 rng(1007);
    int bad = 0;
    DomainBox box({0.0}, {1.0}, {8});
    for (int trial = 0; trial < 100; ++trial) {
        FuzzyGrid u0 = random_normal_grid(box, 16, rng), u1 = random_normal_grid(box, 16, rng);
        FuzzyGrid v0 = random_normal_grid(box, 16, rng), v1 = random_normal_grid(box, 16, rng);
        std::vector<const FuzzyGrid*> us{&u0, &u1}, vs{&v0, &v1};
        if (oracle::dinfty_product(us, vs) != d_infty_m(us, vs)) ++bad;
    }
    report(7, "product isometry, exact on 100 quadruples", bad == 0,
           std::to_string(bad) + " mismatches");
}

// 8. Cross-algorithm oracles: operator routes and the three references.
void criterion_8() {
    std::mt19937 rng(1008);
    int route_bad = 0;
    DomainBox line32({0.0}, {1.0}, {32});
    for (int trial = 0; trial < 200; ++trial) {
        int m = 1 + static_cast<int>(rng() % 2);
        Gifzs z = random_system(line32, 16, m, 1 + static_cast<int>(rng() % 3), rng);
        std::vector<FuzzyGrid> inputs;
        for (int i = 0; i < m; ++i) inputs.push_back(random_normal_grid(line32, 16, rng));
        std::vector<const FuzzyGrid*> args;
        for (const auto& u : inputs) args.push_back(&u);
        FuzzyGrid a = gfhb_suppush(z, args).grid;
        FuzzyGrid b = gfhb_levelset(z, args).grid;
        for (CellIndex c = 0; c < line32.total_cells(); ++c)
            if (std::abs(static_cast<int>(a.at(c)) - static_cast<int>(b.at(c))) > 1) {
                ++route_bad;
                break;
            }
    }

    auto tiny = [&](std::mt19937& r) {
        CellIndex cells = 4 + static_cast<CellIndex>(r() % 13);
        return DomainBox({0.0}, {1.0}, {cells});
    };
    int zadeh_bad = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        DomainBox box = tiny(rng);
        int m = 1 + static_cast<int>(rng() % 2);
        AffineContraction f = random_contraction(box, m, rng);
        std::vector<FuzzyGrid> inputs;
        for (int i = 0; i < m; ++i) inputs.push_back(random_normal_grid(box, 16, rng));
        std::vector<const FuzzyGrid*> args;
        for (const auto& u : inputs) args.push_back(&u);
        if (!(oracle::zadeh(f, args) == zadeh_extend(f, args).grid)) ++zadeh_bad;
    }
    int dinfty_bad = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        DomainBox box = tiny(rng);
        FuzzyGrid u = random_normal_grid(box, 16, rng);
        FuzzyGrid v = random_normal_grid(box, 16, rng);
        if (oracle::dinfty(u, v) != d_infty(u, v)) ++dinfty_bad;
    }
    int attractor_bad = 0;
    for (int trial = 0; trial < 200; ++trial) {
        DomainBox box = tiny(rng);
        int m = 1 + static_cast<int>(rng() % 2);
        Gifzs z = random_system(box, 16, m, 1 + static_cast<int>(rng() % 3), rng);
        std::vector<FuzzyGrid> seeds = default_seeds(z);
        oracle::Run ref = oracle::attractor(z, seeds);
        AttractorRun main = iterate_attractor(z, seeds, RunParams{4096, 0.0, false});
        if (ref.cycle_detected != main.cycle_detected) { ++attractor_bad; continue; }
        if (ref.cycle_detected) continue;
        if (!ref.converged || !main.converged || !(ref.attractor == main.attractor))
            ++attractor_bad;
    }
    bool pass = route_bad == 0 && zadeh_bad == 0 && dinfty_bad == 0 && attractor_bad == 0;
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "routes=%d/200 zadeh=%d/1000 dinfty=%d/1000 attractor=%d/200 mismatches",
                  route_bad, zadeh_bad, dinfty_bad, attractor_bad);
    report(8, "cross-algorithm and oracle agreement", pass, detail);
}

// 9. Density theorem: approximation within eps, residual within eps/2.
void criterion_9() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(1009);
    DomainBox box({0.0}, {1.0}, {128});
    double eps = 0.1;
    double diag = box.cell_diagonal();
    int bad = 0;
    for (int trial = 0; trial < 10; ++trial) {
        FuzzyGrid target = random_normal_grid(box, 255, rng, 0.7);
        Approximation approx = approximate_ifzs(target, eps);
        if (approx.certificate.residual > eps / 2.0 + diag) { ++bad; continue; }
        AttractorRun run = iterate_attractor(approx.system, universe_seeds(approx.system),
                                             RunParams{600, 0.0, false});
        if (!run.converged || d_infty(target, run.attractor) >= eps + 2.0 * diag) ++bad;
    }
    double elapsed = seconds_since(start);
    bool pass = bad == 0 && elapsed < 30.0;
    char detail[96];
    std::snprintf(detail, sizeof detail, "failures=%d/10 elapsed=%.2fs", bad, elapsed);
    report(9, "density: inverse approximation within epsilon", pass, detail);
}

// 10. Degree lifting preserves the attractor exactly.
void criterion_10() {
    std::mt19937 rng(1010);
    int bad = 0;
    for (int trial = 0; trial < 10; ++trial) {
        int m = 1 + trial % 2; // five m=1->2 lifts, five m=2->3 lifts
        DomainBox box({0.0}, {1.0}, {32});
        Gifzs z = random_system(box, 16, m, 2, rng);
        Gifzs lifted = lift_degree(z);
        AttractorRun a = iterate_attractor(z, default_seeds(z), RunParams{4096, 0.0, false});
        AttractorRun b =
            iterate_attractor(lifted, default_seeds(lifted), RunParams{4096, 0.0, false});
        if (!a.converged || !b.converged || !(a.attractor == b.attractor)) ++bad;
    }
    report(10, "degree lifting leaves the attractor unchanged", bad == 0,
           std::to_string(bad) + " failures of 10");
}

// 11. Monotone iteration in both directions, zero violations.
void criterion_11() {
    std::mt19937 rng(1011);
    int bad = 0;
    for (int trial = 0; trial < 10; ++trial) {
        int m = 1 + static_cast<int>(rng() % 2);
        DomainBox box({0.0}, {1.0}, {32});
        Gifzs z = random_system(box, 16, m, 2, rng);

        // downward from the universe
        MonotoneRun down =
            monotone_iterate(z, FuzzyGrid::constant(box, 16, 16), RunParams{4000, 0.0, false});
        if (down.direction != MonotoneDirection::NonIncreasing || !down.ordered ||
            !down.bound_holds)
            ++bad;

        // upward from chi of the full-grey sub-family's crisp attractor
        std::vector<AffineContraction> sub;
        for (int j = 0; j < z.map_count(); ++j)
            if (z.greys.maps[j].top() == 16) sub.push_back(z.gifs.maps[j]);
        CrispGifs sub_sys(box, m, std::move(sub));
        std::vector<CrispCellSet> seeds(static_cast<std::size_t>(m), full_cell_set(box));
        CrispRun crisp = crisp_attractor(sub_sys, std::move(seeds), 0, 0.0);
        if (!crisp.converged) { ++bad; continue; }
        // With every grey full this seed is already the fixed point, so the
        // run may come back flagged as (constant) nonincreasing instead.
        MonotoneRun up = monotone_iterate(z, indicator(crisp.attractor, 16),
                                          RunParams{4000, 0.0, false});
        if (up.direction == MonotoneDirection::NotComparable || !up.ordered ||
            !up.bound_holds)
            ++bad;
    }
    report(11, "monotone runs stay ordered and bounded (both directions)", bad == 0,
           std::to_string(bad) + " failures of 20 runs");
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures;
}
