#include "gifzs/verify.hpp"

#include <sstream>

namespace gifzs {

FuzzyGrid random_normal_grid(const DomainBox& box, int levels, std::mt19937& rng,
                             double support_density) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> level(1, levels);
    std::vector<Level> values(box.total_cells(), 0);
    for (auto& v : values)
        if (coin(rng) < support_density) v = static_cast<Level>(level(rng));
    std::uniform_int_distribution<std::uint64_t> cell(0, box.total_cells() - 1);
    values[cell(rng)] = static_cast<Level>(levels);
    return FuzzyGrid(box, levels, std::move(values));
}

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "skip";
    }
}

namespace {

VerifyCheck make(const std::string& name, bool pass, const std::string& detail = "") {
    return VerifyCheck{name, pass ? CheckStatus::Pass : CheckStatus::Fail, detail};
}

VerifyCheck skip(const std::string& name, const std::string& why) {
    return VerifyCheck{name, CheckStatus::Skip, why};
}

std::string fmt(double x) {
    std::ostringstream out;
    out << x;
    return out.str();
}

} // namespace

VerifyReport verify_system(const Gifzs& z, const VerifyParams& params) {
    VerifyReport report;
    std::mt19937 rng(params.rng_seed);
    double slack = z.box().cell_diagonal();
    double lambda = z.lip_bound();
    int m = z.degree();

    // Sampled operator contraction: d(Z(u), Z(v)) <= lambda d^m(u, v) + 2 diag.
    {
        int violations = 0;
        double worst = 0.0;
        for (int s = 0; s < params.contraction_samples; ++s) {
            std::vector<FuzzyGrid> us, vs;
            for (int i = 0; i < m; ++i) {
                us.push_back(random_normal_grid(z.box(), z.levels, rng));
                vs.push_back(random_normal_grid(z.box(), z.levels, rng));
            }
            std::vector<const FuzzyGrid*> up, vp;
            for (int i = 0; i < m; ++i) {
                up.push_back(&us[i]);
                vp.push_back(&vs[i]);
            }
            double lhs = d_infty(gfhb_suppush(z, up).grid, gfhb_suppush(z, vp).grid);
            double rhs = lambda * d_infty_m(up, vp) + 2.0 * slack;
            worst = std::max(worst, lhs - rhs);
            if (lhs > rhs) ++violations;
        }
        report.checks.push_back(make("contraction", violations == 0,
                                     violations ? std::to_string(violations) + " violations"
                                                : "margin " + fmt(-worst)));
    }

    RunParams run = params.run;
    AttractorRun star = iterate_attractor(z, universe_seeds(z), run);
    if (!star.converged) {
        report.checks.push_back(make("attractor-converged", false,
                                     star.cycle_detected ? "cycle detected" : "max_iter reached"));
        return report;
    }
    report.checks.push_back(make("attractor-converged", true,
                                 std::to_string(star.iterations) + " iterations" +
                                     (star.collapsed_exact ? ", exact" : "")));

    // Sampled collage bound against the computed attractor.
    {
        int violations = 0;
        for (int s = 0; s < params.collage_samples; ++s) {
            FuzzyGrid u = random_normal_grid(z.box(), z.levels, rng);
            CollageReport c = collage(z, u, &star.attractor);
            if (*c.actual > c.bound + 2.0 * slack) ++violations;
        }
        report.checks.push_back(make("collage", violations == 0,
                                     violations ? std::to_string(violations) + " violations" : ""));
    }

    // Monotone run from the universe; Z(1,...,1) <= 1 always holds.
    {
        MonotoneRun mono = monotone_iterate(z, FuzzyGrid::constant(z.box(), z.levels,
                                                                   static_cast<Level>(z.levels)));
        bool ok = mono.direction == MonotoneDirection::NonIncreasing && mono.ordered &&
                  mono.bound_holds;
        report.checks.push_back(make("monotone", ok));
    }

    CutComparison cmp = compare_cuts(z, star);
    report.checks.push_back(make("zero-cut-containment", cmp.support_contained));
    report.checks.push_back(
        cmp.proper ? make("zero-cut-equality", cmp.support_equal)
                   : skip("zero-cut-equality", "grey system not proper"));
    report.checks.push_back(make("one-cut-containment", cmp.core_contains_sub));
    report.checks.push_back(
        cmp.beta_one_exact ? make("one-cut-equality", cmp.core_equal)
                           : skip("one-cut-equality", "beta(1) < 1 for some full-grey map"));
    report.checks.push_back(
        cmp.all_full_grey ? make("crisp", cmp.crisp && cmp.support_equal)
                          : skip("crisp", "some map has rho(1) < 1"));
    // Partial full-grey families with a strictly smaller sub-attractor force a
    // genuinely fuzzy attractor.
    if (!cmp.all_full_grey && cmp.proper && !(cmp.crisp_sub == cmp.crisp_full))
        report.checks.push_back(make("non-crisp", !cmp.crisp));
    else
        report.checks.push_back(skip("non-crisp", "hypotheses not met"));

    return report;
}

} // namespace gifzs
