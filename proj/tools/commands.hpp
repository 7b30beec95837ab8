#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hardylab/config.hpp"
#include "hardylab/error.hpp"
#include "hardylab/hardy.hpp"
#include "hardylab/roots.hpp"

namespace hardylab::cli {

/// Bad flags or flag combinations (exit code 2).
class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error("usage", what) {}
};

struct Context {
    RunConfig config;
    std::string mode_text;  ///< raw --mode: a weight mode, "rs" or "oracle"
    bool no_cache = false;
    std::string out;        ///< empty: stdout
    std::vector<std::string> argv;
    std::string command;
};

std::pair<double, double> parse_range(const std::string& text);
PhasePerturbation parse_perturbation(const std::string& text);
std::vector<std::int64_t> parse_int_list(const std::string& text);

struct ThetaArgs {
    std::optional<double> t;
    std::string range;
    double step = 1.0;
};
struct ZArgs {
    double alpha = 0.5;
    std::optional<double> t;
    std::string range;
    double step = 0.0;
    std::string perturb;
    bool freeze_plan = false;
};
struct GramArgs {
    int kind = 1;
    std::int64_t from = 1;
    std::int64_t count = 10;
};
struct ZerosArgs {
    std::string function = "z_alpha";
    double alpha = 0.5;
    std::int64_t index = 1;
    std::string range;
    std::string perturb;
    bool even = false;
};
struct PairsArgs {
    std::string zeros_zero;
    std::string zeros_alpha;
    double alpha = 0.5;
    std::string range;
};
struct SpacingArgs {
    std::string range;
    std::string zeros;
    double bin_width = 0.1;
    double max_u = 3.0;
    std::size_t min_zeros = 20;
};
struct QkArgs {
    std::string range;
    std::string j_list = "1,10,100,1000,3000";
    std::optional<std::int64_t> threshold_j_max;
};
struct CandidatesArgs {
    std::string range;
    std::optional<std::int64_t> threshold_n;
    std::int64_t j_max = 50;
};
struct ReconstructArgs {
    double alpha = 0.5;
    double t = 100.0;
};
struct SequenceArgs {
    double alpha = 0.5;
    double t = 100.0;
    std::int64_t k_max = 20;
};
struct NestingArgs {
    std::string range;
    double alpha = 0.5;
    std::int64_t k_max = 10;
};
struct SimulateArgs {
    std::string range = "7004.95:7005.2";
    std::int64_t n0 = 1000;
    double phi = 0.5;
    std::string alpha_range = "0.44:0.5";
    int samples = 7;
};
struct ReproduceArgs {
    int figure = 0;
};
struct ProfileArgs {
    std::optional<std::int64_t> m;
    std::optional<std::int64_t> r;
    std::optional<double> t;
};

void run_theta(const Context& ctx, const ThetaArgs& a);
void run_z(const Context& ctx, const ZArgs& a);
void run_gram(const Context& ctx, const GramArgs& a);
void run_zeros(const Context& ctx, const ZerosArgs& a);
void run_pairs(const Context& ctx, const PairsArgs& a);
void run_spacing(const Context& ctx, const SpacingArgs& a);
void run_qk(const Context& ctx, const QkArgs& a);
void run_candidates(const Context& ctx, const CandidatesArgs& a);
void run_reconstruct(const Context& ctx, const ReconstructArgs& a);
void run_sequence(const Context& ctx, const SequenceArgs& a);
void run_nesting(const Context& ctx, const NestingArgs& a);
void run_simulate(const Context& ctx, const SimulateArgs& a);
void run_reproduce(const Context& ctx, const ReproduceArgs& a);
void run_profile(const Context& ctx, const ProfileArgs& a);

}  // namespace hardylab::cli
