#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gifzs/config.hpp"
#include "gifzs/pgm.hpp"
#include "gifzs/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitUnconverged = 3;

void write_trace(const std::string& path, const std::vector<double>& decay) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open trace file '" + path + "'");
    for (std::size_t i = 0; i < decay.size(); ++i)
        out << (i + 1) << "\t" << decay[i] << "\n";
}

int cmd_render(const std::string& config_path, const std::string& out_path,
               const std::string& trace_path, bool use_levelset) {
    gifzs::SystemConfig cfg = gifzs::load_config(config_path);
    gifzs::Gifzs system = gifzs::build_system(cfg);
    gifzs::RunParams params = gifzs::run_params(cfg);
    params.use_levelset = use_levelset;
    gifzs::AttractorRun run =
        gifzs::iterate_attractor(system, gifzs::seeds_from(cfg, system), params);

    gifzs::write_pgm(out_path, run.attractor);
    if (!trace_path.empty()) write_trace(trace_path, run.decay);
    if (run.clamped > 0)
        std::cerr << "warning: " << run.clamped
                  << " image points left the box and were clamped; the system "
                     "should map the box into itself\n";

    std::cout << "iterations=" << run.iterations << " converged=" << run.converged
              << " exact=" << run.collapsed_exact
              << " final_change=" << (run.decay.empty() ? 0.0 : run.decay.back()) << "\n";
    if (!run.converged) {
        std::cerr << "warning: run did not converge ("
                  << (run.cycle_detected ? "lattice cycle detected" : "max_iter reached")
                  << "); partial image written to " << out_path << "\n";
        return kExitUnconverged;
    }
    return kExitOk;
}

int cmd_distance(const std::string& a_path, const std::string& b_path,
                 const std::vector<double>& lo, const std::vector<double>& hi, bool wrap) {
    gifzs::FuzzyGrid a = gifzs::read_pgm(a_path, lo, hi, wrap);
    gifzs::FuzzyGrid b = gifzs::read_pgm(b_path, lo, hi, wrap);
    if (a.box() != b.box() || a.levels() != b.levels())
        throw std::invalid_argument("images must have the same dimensions and maxval");
    if (!a.is_normal())
        throw std::invalid_argument(a_path + ": image is not a normal fuzzy set "
                                             "(no pixel at maxval), so it lies outside "
                                             "the metric's domain");
    if (!b.is_normal())
        throw std::invalid_argument(b_path + ": image is not a normal fuzzy set "
                                             "(no pixel at maxval), so it lies outside "
                                             "the metric's domain");
    std::cout.precision(17);
    std::cout << gifzs::d_infty(a, b) << "\n";
    return kExitOk;
}

int cmd_approximate(const std::string& image_path, double epsilon,
                    const std::string& out_config, const std::vector<double>& lo,
                    const std::vector<double>& hi) {
    gifzs::FuzzyGrid target = gifzs::read_pgm(image_path, lo, hi);
    if (!target.is_normal())
        throw std::invalid_argument(image_path + ": image is not a normal fuzzy set "
                                                 "(no pixel at maxval)");
    gifzs::Approximation approx = gifzs::approximate_ifzs(target, epsilon);

    gifzs::RunConfig run;
    run.tol = 0.0;
    gifzs::SystemConfig cfg = gifzs::config_from(approx.system, run);
    std::ofstream out(out_config);
    if (!out) throw std::runtime_error("cannot open output config '" + out_config + "'");
    out << gifzs::serialize_config(cfg);

    std::cout << "maps=" << approx.centers.size()
              << " lambda=" << approx.certificate.lambda
              << " residual=" << approx.certificate.residual
              << " bound=" << approx.certificate.bound << " epsilon=" << epsilon << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& config_path, int samples, unsigned rng_seed) {
    gifzs::SystemConfig cfg = gifzs::load_config(config_path);
    gifzs::Gifzs system = gifzs::build_system(cfg);
    gifzs::VerifyParams params;
    params.contraction_samples = samples;
    params.collage_samples = samples;
    params.rng_seed = rng_seed;
    params.run = gifzs::run_params(cfg);
    gifzs::VerifyReport report = gifzs::verify_system(system, params);
    for (const auto& check : report.checks) {
        std::cout << check.name << ": " << gifzs::to_string(check.status);
        if (!check.detail.empty()) std::cout << " (" << check.detail << ")";
        std::cout << "\n";
    }
    return report.all_pass() ? kExitOk : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fuzzy fractal attractors of generalized iterated fuzzy function systems"};
    app.require_subcommand(1);

    std::string config_path, out_path, trace_path, image_a, image_b, out_config;
    std::vector<double> lo, hi;
    bool wrap = false, use_levelset = false;
    double epsilon = 0.1;
    int samples = 25;
    unsigned rng_seed = 1234;

    auto* render = app.add_subcommand("render", "iterate a system and write its attractor");
    render->add_option("config", config_path, "system config file")->required();
    render->add_option("-o,--out", out_path, "output PGM path")->required();
    render->add_option("--trace", trace_path, "decay trace TSV path");
    render->add_flag("--levelset", use_levelset, "drive the level-set operator route");

    auto* distance = app.add_subcommand("distance", "d_infty between two PGM images");
    distance->add_option("a", image_a)->required();
    distance->add_option("b", image_b)->required();
    distance->add_option("--lo", lo, "domain lower bounds (default 0)");
    distance->add_option("--hi", hi, "domain upper bounds (default 1)");
    distance->add_flag("--wrap", wrap, "periodic domain");

    auto* approximate =
        app.add_subcommand("approximate", "build a system whose attractor approximates an image");
    approximate->add_option("image", image_a)->required();
    approximate->add_option("-e,--epsilon", epsilon, "target distance")->required();
    approximate->add_option("-o,--out", out_config, "output config path")->required();
    approximate->add_option("--lo", lo, "domain lower bounds (default 0)");
    approximate->add_option("--hi", hi, "domain upper bounds (default 1)");

    auto* verify = app.add_subcommand("verify", "run the theorem battery on a system");
    verify->add_option("config", config_path)->required();
    verify->add_option("--samples", samples, "random samples per check");
    verify->add_option("--rng-seed", rng_seed, "sampling seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (render->parsed()) return cmd_render(config_path, out_path, trace_path, use_levelset);
        if (distance->parsed()) return cmd_distance(image_a, image_b, lo, hi, wrap);
        if (approximate->parsed())
            return cmd_approximate(image_a, epsilon, out_config, lo, hi);
        if (verify->parsed()) return cmd_verify(config_path, samples, rng_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
