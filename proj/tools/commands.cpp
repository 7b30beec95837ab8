#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "hardylab/binom.hpp"
#include "hardylab/critical.hpp"
#include "hardylab/io.hpp"
#include "hardylab/pairs.hpp"
#include "hardylab/parallel.hpp"
#include "hardylab/specfun.hpp"

namespace hardylab::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr const char* kVersion = "1.0.0";

double parse_number(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("bad " + what + " '" + text + "'");
}

json meta(const Context& ctx) {
    return json{{"schema", "hardylab.run/1"},
                {"version", kVersion},
                {"command", ctx.command},
                {"argv", ctx.argv},
                {"config",
                 {{"mode", ctx.mode_text},
                  {"step", ctx.config.step},
                  {"tol", ctx.config.tol},
                  {"eps", ctx.config.eps},
                  {"format", to_string(ctx.config.format)},
                  {"cache", ctx.no_cache ? "off" : ctx.config.cache_dir}}}};
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    os << text;
    if (!os) throw Error("io", "cannot write " + path.string());
}

/// Writes one dataset to --out (or stdout) in the configured format, with
/// a metadata sidecar next to a file target.
void emit(const Context& ctx, const std::function<void(std::ostream&)>& csv, const std::function<json()>& js) {
    std::ostringstream buf;
    if (ctx.config.format == OutputFormat::Json) {
        buf << js().dump(2) << '\n';
    } else {
        csv(buf);
    }
    if (ctx.out.empty()) {
        std::cout << buf.str();
        std::cout.flush();
        return;
    }
    write_file(ctx.out, buf.str());
    write_file(ctx.out + ".meta.json", meta(ctx).dump(2) + "\n");
}

WeightMode weight_mode(const Context& ctx) {
    if (ctx.mode_text == "rs" || ctx.mode_text == "oracle") {
        throw UsageError("'" + ctx.command + "' needs a weight mode (exact, sigmoid, cutoff), got '" + ctx.mode_text + "'");
    }
    return ctx.config.mode;
}

double scan_step(const Context& ctx, double hi) {
    return ctx.config.step > 0.0 ? ctx.config.step : default_scan_step(hi);
}

Window window_of(const std::string& range) {
    if (range.empty()) throw UsageError("--range is required");
    const auto [lo, hi] = parse_range(range);
    return {lo, hi};
}

FunctionLabel make_label(const Context& ctx, const std::string& function, double alpha, std::int64_t index,
                         const std::string& perturb) {
    FunctionLabel label;
    label.kind = parse_function_kind(function);
    label.alpha = alpha;
    label.index = index;
    if (ctx.mode_text == "oracle") {
        if (label.kind == FunctionLabel::Kind::ZAlpha) label.kind = FunctionLabel::Kind::ZOracle;
        if (label.kind == FunctionLabel::Kind::YAlpha) label.kind = FunctionLabel::Kind::YOracle;
    } else if (ctx.mode_text == "rs") {
        if (label.kind != FunctionLabel::Kind::ZAlpha || alpha != 0.5) {
            throw UsageError("mode rs only evaluates z_alpha at alpha = 0.5");
        }
        label.kind = FunctionLabel::Kind::ZRiemannSiegel;
    } else {
        label.mode = ctx.config.mode;
    }
    if (!perturb.empty()) label.perturbation = parse_perturbation(perturb);
    return label;
}

ZeroList cached_zeros(const Context& ctx, const FunctionLabel& label, double lo, double hi, double step) {
    const double tol = ctx.config.tol;
    const auto key = ZeroCache::request_key(label.describe(lo, hi), lo, hi, step, tol);
    std::optional<ZeroCache> cache;
    if (!ctx.no_cache) {
        cache.emplace(ctx.config.cache_dir);
        if (auto hit = cache->load(key)) return *hit;
    }
    auto list = zeros_of(label, lo, hi, step, tol, ctx.config.workers);
    if (cache) cache->store(key, list);
    return list;
}

std::vector<double> load_zeros(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw UsageError("cannot open " + path);
    return read_zeros(is);
}

json window_json(double lo, double hi) { return json{{"lo", lo}, {"hi", hi}}; }

std::string signs(const std::vector<int>& s) {
    std::string out;
    for (int v : s) out += v > 0 ? '+' : (v < 0 ? '-' : '0');
    return out;
}

std::vector<double> points(const std::optional<double>& t, const std::string& range, double step) {
    if (t.has_value() == !range.empty()) throw UsageError("give exactly one of --t and --range");
    if (t) return {*t};
    const auto [lo, hi] = parse_range(range);
    if (!(step > 0.0)) throw UsageError("--step must be > 0");
    return scan_grid(lo, hi, step);
}

}  // namespace

std::pair<double, double> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("range must look like lo:hi, got '" + text + "'");
    const double lo = parse_number(text.substr(0, colon), "range start");
    const double hi = parse_number(text.substr(colon + 1), "range end");
    if (!(lo <= hi)) throw UsageError("range start must not exceed its end: '" + text + "'");
    return {lo, hi};
}

PhasePerturbation parse_perturbation(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("--perturb must look like n0,phi");
    const double n0 = parse_number(text.substr(0, comma), "perturbation index");
    if (n0 != std::floor(n0) || n0 < 2) throw UsageError("perturbation index must be an integer >= 2");
    return {static_cast<std::int64_t>(n0), parse_number(text.substr(comma + 1), "perturbation phase")};
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::istringstream is(text);
    for (std::string cell; std::getline(is, cell, ',');) {
        const double v = parse_number(cell, "integer");
        if (v != std::floor(v) || v < 1) throw UsageError("expected positive integers, got '" + cell + "'");
        out.push_back(static_cast<std::int64_t>(v));
    }
    if (out.empty()) throw UsageError("empty integer list");
    return out;
}

void run_theta(const Context& ctx, const ThetaArgs& a) {
    const auto ts = points(a.t, a.range, a.step);
    std::vector<ThetaEval> rows(ts.size());
    std::vector<double> idx(ts.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<double>(i);
    parallel_map(idx, [&](double i) {
        rows[static_cast<std::size_t>(i)] = theta(ts[static_cast<std::size_t>(i)]);
        return 0.0;
    }, ctx.config.workers);
    emit(ctx,
         [&](std::ostream& os) {
             CsvWriter w(os, {"t", "theta", "theta_prime"});
             for (const auto& r : rows) w.row(std::vector<double>{r.t, r.theta, r.theta_prime});
         },
         [&] {
             json arr = json::array();
             for (const auto& r : rows) arr.push_back({{"t", r.t}, {"theta", r.theta}, {"theta_prime", r.theta_prime}});
             return json{{"schema", "hardylab.theta/1"}, {"rows", arr}};
         });
}

void run_z(const Context& ctx, const ZArgs& a) {
    const double step = a.step > 0.0 ? a.step : (ctx.config.step > 0.0 ? ctx.config.step : 0.01);
    const auto ts = points(a.t, a.range, step);
    const std::string& mode = ctx.mode_text;
    std::vector<std::string> header;
    std::function<std::vector<double>(double)> row;

    if (mode == "rs") {
        if (a.alpha != 0.5) throw UsageError("mode rs only evaluates alpha = 0.5");
        header = {"t", "z_rs"};
        row = [](double t) { return std::vector<double>{t, z_riemann_siegel(t)}; };
    } else if (mode == "oracle") {
        header = {"t", "z_alpha", "y_alpha"};
        row = [&](double t) {
            const auto [z, y] = z_alpha_oracle(t, a.alpha);
            return std::vector<double>{t, z, y};
        };
    } else {
        const WeightMode wm = ctx.config.mode;
        std::optional<PhasePerturbation> pert;
        if (!a.perturb.empty()) pert = parse_perturbation(a.perturb);
        TableSource src;
        if (a.freeze_plan) {
            src = make_table_source(wm, ts.front(), ts.back(), PlanPolicy::Frozen, pert);
        } else {
            src = [wm, pert](double t) { return term_table(t, WeightPlan::for_t(wm, t), pert); };
        }
        header = {"t", "z_alpha", "y_alpha", "cos_theta"};
        row = [src, &a](double t) {
            const auto tab = src(t);
            return std::vector<double>{t, z_alpha(tab, a.alpha), y_alpha(tab, a.alpha), std::cos(tab.theta())};
        };
    }

    std::vector<std::vector<double>> rows(ts.size());
    std::vector<double> idx(ts.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<double>(i);
    parallel_map(idx, [&](double i) {
        rows[static_cast<std::size_t>(i)] = row(ts[static_cast<std::size_t>(i)]);
        return 0.0;
    }, ctx.config.workers);

    emit(ctx,
         [&](std::ostream& os) {
             CsvWriter w(os, header);
             for (const auto& r : rows) w.row(r);
         },
         [&] {
             json arr = json::array();
             for (const auto& r : rows) {
                 json o;
                 for (std::size_t k = 0; k < header.size(); ++k) o[header[k]] = r[k];
                 arr.push_back(o);
             }
             return json{{"schema", "hardylab.z/1"}, {"alpha", a.alpha}, {"mode", mode}, {"rows", arr}};
         });
}

void run_gram(const Context& ctx, const GramArgs& a) {
    if (a.kind < 1 || a.kind > 3) throw UsageError("--kind must be 1, 2 or 3");
    const GramKind kind = a.kind == 1 ? GramKind::First : (a.kind == 2 ? GramKind::Second : GramKind::Third);
    ThirdKindOptions third;
    if (kind == GramKind::Third) {
        third.mode = weight_mode(ctx);
        third.step = ctx.config.step > 0.0 ? ctx.config.step : 0.01;
        third.tol = ctx.config.tol;
    }
    const auto pts = gram_points(kind, a.from, a.count, third);
    emit(ctx,
         [&](std::ostream& os) {
             CsvWriter w(os, {"kind", "index", "t", "theta"});
             for (const auto& p : pts) {
                 w.row({std::to_string(a.kind), std::to_string(p.index), format_double(p.t),
                        format_double(theta(p.t).theta)});
             }
         },
         [&] {
             json arr = json::array();
             for (const auto& p : pts) arr.push_back({{"index", p.index}, {"t", p.t}, {"theta", theta(p.t).theta}});
             return json{{"schema", "hardylab.gram/1"}, {"kind", to_string(kind)}, {"points", arr}};
         });
}

void run_zeros(const Context& ctx, const ZerosArgs& a) {
    const auto w = window_of(a.range);
    const auto label = make_label(ctx, a.function, a.alpha, a.index, a.perturb);
    const double step = scan_step(ctx, w.hi);
    auto list = cached_zeros(ctx, label, w.lo, w.hi, step);
    if (a.even) merge_even_zeros(list, detect_even_zero(make_function(label, w.lo, w.hi), w.lo, w.hi, step, ctx.config.eps));
    emit(ctx, [&](std::ostream& os) { write_zero_list_csv(os, list); }, [&] { return to_json(list); });
}

void run_pairs(const Context& ctx, const PairsArgs& a) {
    std::vector<PairRecord> pairs;
    if (!a.zeros_zero.empty() || !a.zeros_alpha.empty()) {
        if (a.zeros_zero.empty() || a.zeros_alpha.empty()) {
            throw UsageError("--zeros-zero and --zeros-alpha go together");
        }
        pairs = classify_pairs(load_zeros(a.zeros_alpha), load_zeros(a.zeros_zero), ctx.config.tol);
    } else {
        const auto w = window_of(a.range);
        const double step = scan_step(ctx, w.hi);
        const auto z0 = cached_zeros(ctx, make_label(ctx, "z_alpha", 0.0, 1, ""), w.lo, w.hi, step);
        const auto za = cached_zeros(ctx, make_label(ctx, "z_alpha", a.alpha, 1, ""), w.lo, w.hi, step);
        pairs = classify_pairs(za, z0);
    }
    emit(ctx, [&](std::ostream& os) { write_pairs_csv(os, pairs); }, [&] { return to_json(pairs); });
}

void run_spacing(const Context& ctx, const SpacingArgs& a) {
    std::vector<double> zeros;
    if (!a.zeros.empty()) {
        zeros = load_zeros(a.zeros);
    } else {
        const auto w = window_of(a.range);
        zeros = cached_zeros(ctx, make_label(ctx, "z_alpha", 0.5, 1, ""), w.lo, w.hi, scan_step(ctx, w.hi)).zeros;
    }
    const auto gap = min_gap(zeros);
    std::cerr << "min gap " << format_double(gap.gap) << " between " << format_double(gap.t_left) << " and "
              << format_double(gap.t_right) << " (" << zeros.size() << " zeros)\n";
    const json gap_json{{"t_left", gap.t_left}, {"t_right", gap.t_right}, {"gap", gap.gap}};

    if (zeros.size() < a.min_zeros) {
        std::cerr << "fewer than " << a.min_zeros << " zeros: histogram skipped\n";
        emit(ctx,
             [&](std::ostream& os) {
                 CsvWriter w(os, {"t_left", "t_right", "gap"});
                 w.row(std::vector<double>{gap.t_left, gap.t_right, gap.gap});
             },
             [&] {
                 return json{{"schema", "hardylab.spacing/1"}, {"zeros", zeros.size()}, {"min_gap", gap_json},
                             {"histogram", nullptr}};
             });
        return;
    }
    SpacingOptions opt;
    opt.bin_width = a.bin_width;
    opt.range = a.max_u;
    opt.min_zeros = a.min_zeros;
    const auto rep = gap_statistics(zeros, theta_density, opt);
    emit(ctx, [&](std::ostream& os) { write_histogram_csv(os, rep); },
         [&] {
             auto j = to_json(rep);
             j["zeros"] = zeros.size();
             return j;
         });
}

void run_qk(const Context& ctx, const QkArgs& a) {
    const auto w = window_of(a.range);
    const auto src = make_table_source(weight_mode(ctx), w.lo, w.hi);
    const double step = ctx.config.step > 0.0 ? ctx.config.step : 0.01;
    if (a.threshold_j_max) {
        const auto n = estimate_threshold_N(w, src, *a.threshold_j_max, step);
        emit(ctx,
             [&](std::ostream& os) {
                 CsvWriter cw(os, {"lo", "hi", "j_max", "N"});
                 cw.row({format_double(w.lo), format_double(w.hi), std::to_string(*a.threshold_j_max),
                         n ? std::to_string(*n) : "none"});
             },
             [&] {
                 return json{{"schema", "hardylab.threshold/1"}, {"window", window_json(w.lo, w.hi)},
                             {"j_max", *a.threshold_j_max}, {"N", n ? json(*n) : json(nullptr)}};
             });
        return;
    }
    auto rep = qk_cos_drift(w, src, parse_int_list(a.j_list), step, ctx.config.tol);
    rep.source = make_label(ctx, "z_alpha", 0.0, 1, "").describe(w.lo, w.hi);
    emit(ctx,
         [&](std::ostream& os) {
             CsvWriter cw(os, {"j", "degenerate", "zeros", "mean_abs_offset", "max_abs_offset", "amplitude"});
             for (const auto& r : rep.rows) {
                 cw.row({std::to_string(r.j), r.degenerate ? "1" : "0", std::to_string(r.q_zeros.size()),
                         format_double(r.mean_abs_offset), format_double(r.max_abs_offset), format_double(r.amplitude)});
             }
         },
         [&] { return to_json(rep); });
}

void run_candidates(const Context& ctx, const CandidatesArgs& a) {
    const auto w = window_of(a.range);
    const auto src = make_table_source(weight_mode(ctx), w.lo, w.hi);
    const double step = scan_step(ctx, w.hi);
    std::int64_t n = a.j_max;
    if (a.threshold_n) {
        n = *a.threshold_n;
    } else if (auto est = estimate_threshold_N(w, src, a.j_max, step)) {
        n = *est;
    }
    const auto rep = lehmer_candidates_z0(w, src, n, step, ctx.config.tol);
    emit(ctx,
         [&](std::ostream& os) {
             CsvWriter cw(os, {"left", "right", "z0_sign", "q_signs_left", "q_signs_right"});
             for (const auto& c : rep.candidates) {
                 cw.row({format_double(c.left), format_double(c.right), std::to_string(c.z0_sign), signs(c.q_sign_left),
                         signs(c.q_sign_right)});
             }
         },
         [&] { return to_json(rep); });
}

void run_reconstruct(const Context& ctx, const ReconstructArgs& a) {
    const auto tab = term_table(a.t, WeightPlan::for_t(weight_mode(ctx), a.t));
    const auto r = reconstruct_z_alpha(tab, a.alpha, 1e-14);
    const double direct = z_alpha(tab, a.alpha);
    const double residual = std::abs(r.value - direct);
    emit(ctx,
         [&](std::ostream& os) {
             CsvWriter w(os, {"t", "alpha", "z_alpha", "reconstructed", "residual", "j_used"});
             w.row({format_double(a.t), format_double(a.alpha), format_double(direct), format_double(r.value),
                    format_double(residual), std::to_string(r.j_used)});
         },
         [&] {
             return json{{"schema", "hardylab.reconstruct/1"}, {"t", a.t}, {"alpha", a.alpha},
                         {"plan", to_json(tab.plan())}, {"z_alpha", direct}, {"reconstructed", r.value},
                         {"residual", residual}, {"j_used", r.j_used}};
         });
}

void run_sequence(const Context& ctx, const SequenceArgs& a) {
    if (a.k_max < 0) throw UsageError("--k-max must be >= 0");
    const auto tab = term_table(a.t, WeightPlan::for_t(weight_mode(ctx), a.t));
    const auto e = z_sequence(tab, a.alpha, a.k_max);
    emit(ctx,
         [&](std::ostream& os) {
             CsvWriter w(os, {"k", "q", "p", "z"});
             for (std::size_t k = 0; k < e.z_seq.size(); ++k) {
                 w.row({std::to_string(k), k ? format_double(e.q[k - 1]) : "", k ? format_double(e.p[k - 1]) : "",
                        format_double(e.z_seq[k])});
             }
         },
         [&] { return to_json(e); });
}

void run_nesting(const Context& ctx, const NestingArgs& a) {
    const auto w = window_of(a.range);
    const auto src = make_table_source(weight_mode(ctx), w.lo, w.hi);
    auto rep = nesting_check(w, src, a.alpha, a.k_max, ctx.config.step > 0.0 ? ctx.config.step : 0.01, ctx.config.tol);
    rep.source = make_label(ctx, "z_alpha", a.alpha, 1, "").describe(w.lo, w.hi);
    std::cerr << "nesting: " << rep.summary.intervals << " intervals, " << rep.summary.nested << " nested, "
              << rep.summary.violated << " violated, " << rep.summary.mismatched << " count mismatches\n";
    emit(ctx,
         [&](std::ostream& os) {
             CsvWriter cw(os, {"z0_left", "z0_right", "k", "status", "left", "right", "dominance_ratio"});
             for (const auto& iv : rep.intervals) {
                 for (const auto& s : iv.steps) {
                     cw.row({format_double(iv.z0_left), format_double(iv.z0_right), std::to_string(s.k),
                             to_string(s.status), format_double(s.left), format_double(s.right),
                             format_double(s.dominance_ratio)});
                 }
             }
         },
         [&] { return to_json(rep); });
}

void run_simulate(const Context& ctx, const SimulateArgs& a) {
    const auto w = window_of(a.range);
    const auto [alpha_lo, alpha_hi] = parse_range(a.alpha_range);
    if (a.samples < 2) throw UsageError("--samples must be >= 2");
    if (a.n0 < 2) throw UsageError("--n0 must be >= 2");
    const auto src = make_table_source(weight_mode(ctx), w.lo, w.hi, PlanPolicy::Auto, PhasePerturbation{a.n0, a.phi});
    const double step = ctx.config.step > 0.0 ? ctx.config.step : 0.002;
    const auto sweep = critical_pair_sweep(src, w.lo, w.hi, alpha_lo, alpha_hi, a.samples, step, ctx.config.eps);
    if (sweep.alpha_star) {
        std::cerr << "tangency at alpha " << format_double(*sweep.alpha_star) << ", " << sweep.hits.size()
                  << " even-zero hit(s)\n";
    } else {
        std::cerr << "no tangency in the alpha range\n";
    }
    emit(ctx,
         [&](std::ostream& os) {
             CsvWriter cw(os, {"kind", "alpha", "t", "value"});
             for (const auto& [alpha, e] : sweep.samples) cw.row({"sample", format_double(alpha), "", format_double(e)});
             for (const auto& h : sweep.hits) {
                 cw.row({"hit", format_double(*sweep.alpha_star), format_double(h.t), format_double(h.value)});
             }
         },
         [&] {
             json samples = json::array();
             for (const auto& [alpha, e] : sweep.samples) samples.push_back({{"alpha", alpha}, {"extremum", e}});
             json hits = json::array();
             for (const auto& h : sweep.hits) hits.push_back({{"t", h.t}, {"value", h.value}});
             return json{{"schema", "hardylab.simulate/1"},
                         {"window", window_json(w.lo, w.hi)},
                         {"perturbation", {{"n0", a.n0}, {"phi", a.phi}}},
                         {"alpha_range", window_json(alpha_lo, alpha_hi)},
                         {"step", step},
                         {"eps", ctx.config.eps},
                         {"samples", samples},
                         {"alpha_star", sweep.alpha_star ? json(*sweep.alpha_star) : json(nullptr)},
                         {"hits", hits}};
         });
}

namespace {

void write_csv(const fs::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    std::ostringstream os;
    CsvWriter w(os, header);
    for (const auto& r : rows) w.row(r);
    write_file(path, os.str());
}

std::vector<std::vector<double>> curve(double lo, double hi, double step,
                                       const std::function<std::vector<double>(double)>& f, unsigned workers) {
    const auto ts = scan_grid(lo, hi, step);
    std::vector<std::vector<double>> rows(ts.size());
    std::vector<double> idx(ts.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<double>(i);
    parallel_map(idx, [&](double i) {
        rows[static_cast<std::size_t>(i)] = f(ts[static_cast<std::size_t>(i)]);
        return 0.0;
    }, workers);
    return rows;
}

std::vector<std::vector<double>> gram_rows(const std::vector<GramPoint>& pts) {
    std::vector<std::vector<double>> rows;
    for (const auto& p : pts) rows.push_back({static_cast<double>(p.index), p.t});
    return rows;
}

std::vector<std::vector<double>> binomial_rows(const std::vector<double>& alphas, std::int64_t j_max) {
    std::vector<std::vector<double>> rows;
    std::vector<BinomialSeries> series;
    for (double a : alphas) series.emplace_back(a);
    for (std::int64_t j = 1; j <= j_max; ++j) {
        std::vector<double> r{static_cast<double>(j)};
        for (auto& s : series) r.push_back(std::abs(s.next()));
        rows.push_back(r);
    }
    return rows;
}

}  // namespace

void run_reproduce(const Context& ctx, const ReproduceArgs& a) {
    const fs::path dir = ctx.out.empty() ? fs::path("figure-" + std::to_string(a.figure)) : fs::path(ctx.out);
    const WeightMode mode = weight_mode(ctx);
    const unsigned workers = ctx.config.workers;
    auto per_point = [mode](double t) { return term_table(t, WeightPlan::for_t(mode, t)); };
    std::vector<std::pair<std::string, std::function<void(const fs::path&)>>> files;

    switch (a.figure) {
        case 8:
            files.emplace_back("curves.csv", [&](const fs::path& p) {
                write_csv(p, {"t", "z_6", "cos_theta"}, curve(50.0, 80.0, 0.05, [&](double t) {
                    const auto tab = per_point(t);
                    return std::vector<double>{t, z_alpha(tab, 6.0), std::cos(tab.theta())};
                }, workers));
            });
            break;
        case 9:
            files.emplace_back("curves.csv", [&](const fs::path& p) {
                write_csv(p, {"t", "z_half", "cos_theta"}, curve(20.0, 50.0, 0.02, [&](double t) {
                    const auto tab = per_point(t);
                    return std::vector<double>{t, z_alpha(tab, 0.5), std::cos(tab.theta())};
                }, workers));
            });
            files.emplace_back("gram_second_kind.csv", [&](const fs::path& p) {
                std::vector<GramPoint> pts;
                for (const auto& g : gram_points(GramKind::Second, 1, 40)) {
                    if (g.t <= 50.0) pts.push_back(g);
                }
                write_csv(p, {"index", "t"}, gram_rows(pts));
            });
            break;
        case 12:
            files.emplace_back("curves.csv", [&](const fs::path& p) {
                write_csv(p, {"t", "z_0", "z_half"}, curve(20.0, 50.0, 0.02, [&](double t) {
                    const auto tab = per_point(t);
                    return std::vector<double>{t, z_alpha(tab, 0.0), z_alpha(tab, 0.5)};
                }, workers));
            });
            files.emplace_back("gram_first_kind.csv", [&](const fs::path& p) {
                write_csv(p, {"index", "t"}, gram_rows(gram_points(GramKind::First, 2, 7)));
            });
            files.emplace_back("gram_third_kind.csv", [&](const fs::path& p) {
                ThirdKindOptions third;
                third.mode = mode;
                third.tol = ctx.config.tol;
                write_csv(p, {"index", "t"}, gram_rows(gram_points(GramKind::Third, 3, 8, third)));
            });
            break;
        case 13:
            files.emplace_back("curves.csv", [&](const fs::path& p) {
                const Window w{7000.0, 7010.0};
                const auto src = make_table_source(mode, w.lo, w.hi);
                const auto drift = qk_cos_drift(w, src, {3000}, 0.005, ctx.config.tol);
                const double amp = drift.rows.front().amplitude;
                write_csv(p, {"t", "q_3000", "a_cos_theta", "z_0"}, curve(w.lo, w.hi, 0.005, [&](double t) {
                    const auto tab = src(t);
                    return std::vector<double>{t, q_k(tab, 3000), amp * std::cos(tab.theta()), z_alpha(tab, 0.0)};
                }, workers));
            });
            break;
        case 14:
            files.emplace_back("coefficients.csv", [&](const fs::path& p) {
                write_csv(p, {"j", "alpha_-0.5", "alpha_-1.5", "alpha_-2.5"}, binomial_rows({-0.5, -1.5, -2.5}, 200));
            });
            break;
        case 15:
            files.emplace_back("coefficients.csv", [&](const fs::path& p) {
                write_csv(p, {"j", "alpha_0.25", "alpha_0.5", "alpha_0.75"}, binomial_rows({0.25, 0.5, 0.75}, 200));
            });
            break;
        default:
            throw UsageError("unknown figure " + std::to_string(a.figure) + " (known: 8, 9, 12, 13, 14, 15)");
    }

    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error("io", "cannot create " + dir.string() + ": " + ec.message());
    json listing = json::array();
    for (const auto& [name, write] : files) {
        write(dir / name);
        listing.push_back(name);
    }
    auto m = meta(ctx);
    m["figure"] = a.figure;
    m["files"] = listing;
    write_file(dir / "meta.json", m.dump(2) + "\n");
    std::cout << dir.string() << '\n';
}

void run_profile(const Context& ctx, const ProfileArgs& a) {
    const WeightMode mode = weight_mode(ctx);
    WeightPlan plan = WeightPlan::sharp_cutoff(1);
    if (mode == WeightMode::Sigmoid) {
        if (!a.t) throw UsageError("sigmoid profile needs --t");
        plan = WeightPlan::sigmoid(*a.t);
    } else if (a.m) {
        plan = mode == WeightMode::ExactCesaro ? WeightPlan::exact_cesaro(*a.m, a.r.value_or(*a.m))
                                               : WeightPlan::sharp_cutoff(*a.m);
    } else if (a.t) {
        plan = WeightPlan::for_t(mode, *a.t);
    } else {
        throw UsageError("profile needs --m or --t");
    }
    const auto d = delta_profile(plan);
    emit(ctx,
         [&](std::ostream& os) {
             CsvWriter w(os, {"n", "delta"});
             for (std::size_t i = 0; i < d.size(); ++i) w.row({std::to_string(i + 1), format_double(d[i])});
         },
         [&] { return json{{"schema", "hardylab.profile/1"}, {"plan", to_json(plan)}, {"delta", d}}; });
}

}  // namespace hardylab::cli
