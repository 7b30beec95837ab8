#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hardylab/binom.hpp"
#include "hardylab/roots.hpp"

namespace hardylab {

/// Shift pattern of two neighbouring zeros of Z_alpha relative to the
/// matching zeros of Z_0.
enum class PairClass {
    Lehmer,      ///< left moves right, right moves left
    Gordon,      ///< left moves left, right moves right
    RightPair,   ///< both move right
    LeftPair,    ///< both move left
    Degenerate,  ///< a shift is zero within tolerance
};

std::string to_string(PairClass c);

struct PairRecord {
    std::int64_t i = 0;
    double z0_left = 0.0;
    double z0_right = 0.0;
    double za_left = 0.0;
    double za_right = 0.0;
    double shift_left = 0.0;
    double shift_right = 0.0;
    PairClass cls = PairClass::Degenerate;
    double gap = 0.0;  ///< za_right - za_left
};

PairClass classify_shift(double shift_left, double shift_right, double tol);

/// One record per consecutive pair. Both lists must hold the same number
/// of zeros; otherwise ContractError naming the first sub-interval where
/// the two lists disagree.
std::vector<PairRecord> classify_pairs(const std::vector<double>& zeros_alpha, const std::vector<double>& zeros_zero,
                                       double tol);
/// Tolerance defaults to the larger refine tolerance of the two lists.
std::vector<PairRecord> classify_pairs(const ZeroList& zeros_alpha, const ZeroList& zeros_zero);

struct LehmerCandidate {
    double left = 0.0;
    double right = 0.0;
    int z0_sign = 0;
    std::vector<int> q_sign_left;   ///< sign of Q_j(left), j = 1..N-1
    std::vector<int> q_sign_right;  ///< sign of Q_j(right)
};

struct LehmerCandidates {
    Window window;
    std::int64_t threshold_n = 0;  ///< the N used: Q_j is tested for j < N
    std::int64_t intervals_checked = 0;
    std::vector<LehmerCandidate> candidates;
};

/// Consecutive zeros of Z_0 where Q_j at both ends shares the sign Z_0
/// takes between them, for every j < threshold_n.
LehmerCandidates lehmer_candidates_z0(const Window& window, const TableSource& tables, std::int64_t threshold_n,
                                      double step = 0.01, double tol = 1e-10);
LehmerCandidates lehmer_candidates_z0(const Window& window, const WeightPlan& plan, std::int64_t threshold_n,
                                      double step = 0.01, double tol = 1e-10);

struct Histogram {
    double lo = 0.0;
    double bin_width = 0.1;
    std::vector<std::int64_t> counts;
    double center(std::size_t i) const { return lo + (static_cast<double>(i) + 0.5) * bin_width; }
};

struct MinGap {
    double t_left = 0.0;
    double t_right = 0.0;
    double gap = 0.0;
};

struct SpacingReport {
    std::vector<double> normalized_gaps;
    /// Nearest-neighbour normalized gaps; values past the range land in the
    /// last bin so counts always sum to the number of gaps.
    Histogram gap_histogram;
    /// Pairwise normalized distances below the range (all pairs, not just
    /// neighbours).
    Histogram pair_histogram;
    std::vector<double> pair_density;   ///< pair_histogram / (zeros * bin_width)
    std::vector<double> gue_reference;  ///< 1 - (sin(pi u)/(pi u))^2 at bin centers
    MinGap min_gap;
};

/// Local zero density used to normalize gaps: theta'(t) / pi by default.
using DensityFunction = std::function<double(double)>;
double theta_density(double t);

/// 1 - (sin(pi u) / (pi u))^2
double gue_pair_correlation(double u);

struct SpacingOptions {
    std::size_t min_zeros = 20;
    double bin_width = 0.1;
    double range = 3.0;
};

/// Smallest raw gap between consecutive zeros. Needs at least two zeros.
MinGap min_gap(const std::vector<double>& zeros);

SpacingReport gap_statistics(const std::vector<double>& zeros, const DensityFunction& density = theta_density,
                             const SpacingOptions& options = {});

}  // namespace hardylab
