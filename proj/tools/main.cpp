#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "hardylab/error.hpp"

using namespace hardylab;
using namespace hardylab::cli;

namespace {

int exit_code(const std::string& kind) {
    static const std::map<std::string, int> codes{{"usage", 2},       {"domain", 2}, {"contract", 3},
                                                  {"convergence", 3}, {"pole", 3},   {"cache", 4},
                                                  {"io", 4}};
    const auto it = codes.find(kind);
    return it == codes.end() ? 1 : it->second;
}

int fail(int code, const std::string& kind, std::string msg) {
    for (auto& c : msg) {
        if (c == '\n' || c == '"') c = c == '"' ? '\'' : ' ';
    }
    std::cerr << "error: code=" << code << " kind=" << kind << " msg=\"" << msg << "\"\n";
    return code;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file " + path);
    return parse_run_config(in);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized Hardy function toolkit: Z_alpha, zeros, Gram points, Lehmer pairs."};
    app.require_subcommand(1);
    app.footer(
        "Gram points follow theta(t_n) = (n-1) pi (first kind) and (n-1) pi / 2 (second kind), so n = 1 is the\n"
        "point with theta = 0 near t = 17.8456. Third-kind points are zeros of Z_0.\n"
        "Exit codes: 0 ok, 2 usage, 3 numeric contract violation, 4 cache or file IO.\n"
        "Config file (key = value; keys mode, step, tol, eps, cache_dir, format, workers) from --config or\n"
        "HARDYLAB_CONFIG; flags override it.");

    std::string config_path;
    std::string mode;
    std::optional<double> step;
    std::optional<double> tol;
    std::optional<double> eps;
    std::optional<std::string> cache_dir;
    std::optional<std::string> format;
    std::optional<unsigned> workers;
    Context ctx;

    app.add_option("--config", config_path, "Config file (default: $HARDYLAB_CONFIG)");
    app.add_option("--mode", mode, "Weights: exact | sigmoid | cutoff (default sigmoid); z and zeros also take rs | oracle");
    app.add_option("--step", step, "Scan step (default 0.01)");
    app.add_option("--tol", tol, "Root refinement tolerance (default 1e-10)");
    app.add_option("--eps", eps, "Even-zero threshold on |f| (default 1e-6)");
    app.add_option("--cache-dir", cache_dir, "Zero cache directory (default .hardylab-cache)");
    app.add_flag("--no-cache", ctx.no_cache, "Neither read nor write the zero cache");
    app.add_option("--format", format, "csv | json (default csv)");
    app.add_option("--workers", workers, "Worker threads (default: all cores)");
    app.add_option("--out", ctx.out, "Output file (reproduce: directory); a .meta.json sidecar is written next to it");

    ThetaArgs theta_a;
    auto* theta_cmd = app.add_subcommand("theta", "theta(t) and theta'(t)");
    theta_cmd->add_option("--t", theta_a.t, "Single point");
    theta_cmd->add_option("--range", theta_a.range, "lo:hi");
    theta_cmd->add_option("--step", theta_a.step, "Grid step for --range")->capture_default_str();

    ZArgs z_a;
    auto* z_cmd = app.add_subcommand("z", "Z_alpha and Y_alpha on a grid (per-point plans unless --freeze-plan)");
    z_cmd->add_option("--alpha", z_a.alpha, "alpha")->capture_default_str();
    z_cmd->add_option("--t", z_a.t, "Single point");
    z_cmd->add_option("--range", z_a.range, "lo:hi");
    z_cmd->add_option("--step", z_a.step, "Grid step (default 0.01)");
    z_cmd->add_option("--perturb", z_a.perturb, "n0,phi: shift the phase of term n0 by phi");
    z_cmd->add_flag("--freeze-plan", z_a.freeze_plan, "One plan from the range midpoint");

    GramArgs gram_a;
    auto* gram_cmd = app.add_subcommand("gram", "Gram points of the first, second or third kind");
    gram_cmd->add_option("--kind", gram_a.kind, "1, 2 or 3")->capture_default_str();
    gram_cmd->add_option("--from", gram_a.from, "First index n")->capture_default_str();
    gram_cmd->add_option("--count", gram_a.count, "Number of points")->capture_default_str();

    ZerosArgs zeros_a;
    auto* zeros_cmd = app.add_subcommand("zeros", "Zeros of a function on a window (cached)");
    zeros_cmd->add_option("--function", zeros_a.function,
                          "z_alpha | y_alpha | q | z_sequence | cos_theta | z_oracle | y_oracle | z_rs")
        ->capture_default_str();
    zeros_cmd->add_option("--alpha", zeros_a.alpha, "alpha")->capture_default_str();
    zeros_cmd->add_option("--index", zeros_a.index, "j for q, k for z_sequence")->capture_default_str();
    zeros_cmd->add_option("--range", zeros_a.range, "lo:hi")->required();
    zeros_cmd->add_option("--perturb", zeros_a.perturb, "n0,phi");
    zeros_cmd->add_flag("--even", zeros_a.even, "Also report even zeros (|f| < eps without sign change)");

    PairsArgs pairs_a;
    auto* pairs_cmd = app.add_subcommand("pairs", "Classify neighbouring zero pairs of Z_alpha against Z_0");
    pairs_cmd->add_option("--zeros-zero", pairs_a.zeros_zero, "Zero list of Z_0 (CSV or JSON)");
    pairs_cmd->add_option("--zeros-alpha", pairs_a.zeros_alpha, "Zero list of Z_alpha (CSV or JSON)");
    pairs_cmd->add_option("--alpha", pairs_a.alpha, "alpha when computing zeros")->capture_default_str();
    pairs_cmd->add_option("--range", pairs_a.range, "lo:hi when computing zeros");

    SpacingArgs spacing_a;
    auto* spacing_cmd = app.add_subcommand("spacing", "Normalized zero spacings, pair correlation, minimal gap");
    spacing_cmd->add_option("--range", spacing_a.range, "lo:hi (zeros of Z_1/2 in the chosen mode)");
    spacing_cmd->add_option("--zeros", spacing_a.zeros, "Zero list file instead of --range");
    spacing_cmd->add_option("--bin-width", spacing_a.bin_width)->capture_default_str();
    spacing_cmd->add_option("--max-u", spacing_a.max_u, "Histogram range")->capture_default_str();
    spacing_cmd->add_option("--min-zeros", spacing_a.min_zeros, "Below this only the minimal gap is reported")
        ->capture_default_str();

    QkArgs qk_a;
    auto* qk_cmd = app.add_subcommand("qk", "Q_j zero drift toward cos theta, or the threshold N");
    qk_cmd->add_option("--range", qk_a.range, "lo:hi")->required();
    qk_cmd->add_option("--j", qk_a.j_list, "Comma-separated j values")->capture_default_str();
    qk_cmd->add_option("--threshold", qk_a.threshold_j_max, "Estimate N, searching j up to this value");

    CandidatesArgs cand_a;
    auto* cand_cmd = app.add_subcommand("candidates", "Z_0 zero intervals passing the Q_j sign test for j < N");
    cand_cmd->add_option("--range", cand_a.range, "lo:hi")->required();
    cand_cmd->add_option("--threshold-n", cand_a.threshold_n, "N (default: estimated, else --j-max)");
    cand_cmd->add_option("--j-max", cand_a.j_max, "Search bound for N")->capture_default_str();

    ReconstructArgs rec_a;
    auto* rec_cmd = app.add_subcommand("reconstruct", "Z_alpha rebuilt from Z_0 and the Q_j series");
    rec_cmd->add_option("--alpha", rec_a.alpha)->capture_default_str();
    rec_cmd->add_option("--t", rec_a.t)->capture_default_str();

    SequenceArgs seq_a;
    auto* seq_cmd = app.add_subcommand("sequence", "Partial sums Z_{alpha,k} with Q_k and P_k");
    seq_cmd->add_option("--alpha", seq_a.alpha)->capture_default_str();
    seq_cmd->add_option("--t", seq_a.t)->capture_default_str();
    seq_cmd->add_option("--k-max", seq_a.k_max)->capture_default_str();

    NestingArgs nest_a;
    auto* nest_cmd = app.add_subcommand("nesting", "Check that zeros of Z_{alpha,k} stay inside the previous pair");
    nest_cmd->add_option("--range", nest_a.range, "lo:hi")->required();
    nest_cmd->add_option("--alpha", nest_a.alpha)->capture_default_str();
    nest_cmd->add_option("--k-max", nest_a.k_max)->capture_default_str();

    SimulateArgs sim_a;
    auto* sim_cmd = app.add_subcommand("simulate", "Phase-perturbed alpha sweep looking for an even zero");
    sim_cmd->add_option("--range", sim_a.range, "t window lo:hi")->capture_default_str();
    sim_cmd->add_option("--n0", sim_a.n0, "Perturbed term")->capture_default_str();
    sim_cmd->add_option("--phi", sim_a.phi, "Phase shift")->capture_default_str();
    sim_cmd->add_option("--alpha-range", sim_a.alpha_range, "lo:hi")->capture_default_str();
    sim_cmd->add_option("--samples", sim_a.samples)->capture_default_str();

    ReproduceArgs rep_a;
    auto* rep_cmd = app.add_subcommand("reproduce", "Write the data behind a figure preset into a directory");
    rep_cmd->add_option("--figure", rep_a.figure,
                        "8: Z_6 vs cos theta; 9: second-kind Gram points; 12: third-kind Gram points;\n"
                        "13: Q_3000 vs A cos theta; 14: |b_j| at alpha < 0; 15: |b_j| at 0 < alpha < 1")
        ->required();

    ProfileArgs prof_a;
    auto* prof_cmd = app.add_subcommand("profile", "Weight profile delta_n of a plan");
    prof_cmd->add_option("--m", prof_a.m);
    prof_cmd->add_option("--r", prof_a.r, "Cesaro order (default m)");
    prof_cmd->add_option("--t", prof_a.t, "Sigmoid anchor, or height for the default plan");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(2, "usage", e.what());
    }

    try {
        if (config_path.empty()) {
            if (const char* env = std::getenv("HARDYLAB_CONFIG")) config_path = env;
        }
        if (!config_path.empty()) ctx.config = load_config(config_path);
        if (!mode.empty() && mode != "rs" && mode != "oracle") ctx.config.mode = parse_weight_mode(mode);
        ctx.mode_text = mode.empty() ? to_string(ctx.config.mode) : mode;
        if (step) ctx.config.step = *step;
        if (tol) ctx.config.tol = *tol;
        if (eps) ctx.config.eps = *eps;
        if (cache_dir) ctx.config.cache_dir = *cache_dir;
        if (format) ctx.config.format = parse_output_format(*format);
        if (workers) ctx.config.workers = *workers;
        if (ctx.config.step < 0.0) throw UsageError("--step must be >= 0");
        if (!(ctx.config.tol > 0.0) || !(ctx.config.eps > 0.0)) throw UsageError("--tol and --eps must be > 0");
        for (int i = 1; i < argc; ++i) ctx.argv.emplace_back(argv[i]);

        auto* sub = app.get_subcommands().front();
        ctx.command = sub->get_name();
        if (sub == theta_cmd) run_theta(ctx, theta_a);
        else if (sub == z_cmd) run_z(ctx, z_a);
        else if (sub == gram_cmd) run_gram(ctx, gram_a);
        else if (sub == zeros_cmd) run_zeros(ctx, zeros_a);
        else if (sub == pairs_cmd) run_pairs(ctx, pairs_a);
        else if (sub == spacing_cmd) run_spacing(ctx, spacing_a);
        else if (sub == qk_cmd) run_qk(ctx, qk_a);
        else if (sub == cand_cmd) run_candidates(ctx, cand_a);
        else if (sub == rec_cmd) run_reconstruct(ctx, rec_a);
        else if (sub == seq_cmd) run_sequence(ctx, seq_a);
        else if (sub == nest_cmd) run_nesting(ctx, nest_a);
        else if (sub == sim_cmd) run_simulate(ctx, sim_a);
        else if (sub == rep_cmd) run_reproduce(ctx, rep_a);
        else if (sub == prof_cmd) run_profile(ctx, prof_a);
    } catch (const Error& e) {
        return fail(exit_code(e.kind()), e.kind(), e.what());
    } catch (const std::exception& e) {
        return fail(1, "internal", e.what());
    }
    return 0;
}
