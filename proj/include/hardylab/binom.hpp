#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hardylab/hardy.hpp"

namespace hardylab {

/// alpha (alpha-1) ... (alpha-j+1) / j!, built incrementally.
double general_binomial(double alpha, std::int64_t j);

/// Q_j = sum_{n>=2} ((n-1)/n)^j T_n over the table's cosine terms.
double q_k(const TermTable& table, std::int64_t j);

/// Streams Q_1, Q_2, ... for one table at O(size) per step by carrying
/// the per-term powers ((n-1)/n)^j forward.
class QSeries {
public:
    explicit QSeries(const TermTable& table);
    /// Advances to the next index and returns Q_j.
    double next();
    std::int64_t index() const noexcept { return j_; }

private:
    std::vector<double> ratio_;
    std::vector<double> power_;
    std::vector<double> terms_;
    std::int64_t j_ = 0;
};

/// Incremental general_binomial(alpha, j) for j = 1, 2, ...
class BinomialSeries {
public:
    explicit BinomialSeries(double alpha) : alpha_(alpha) {}
    double next() {
        ++j_;
        value_ *= (alpha_ - static_cast<double>(j_ - 1)) / static_cast<double>(j_);
        return value_;
    }

private:
    double alpha_;
    double value_ = 1.0;
    std::int64_t j_ = 0;
};

struct Reconstruction {
    double value = 0.0;
    /// Number of expansion terms summed, including the trailing run of
    /// sub-tolerance increments that ended the loop.
    std::int64_t j_used = 0;
};

/// Z_alpha rebuilt as Z_0 - sum_j P_j, stopping once ten consecutive
/// increments are each below `tol`. Throws ConvergenceError past 10^6
/// terms. alpha < 0 is accepted but the series may diverge.
Reconstruction reconstruct_z_alpha(const TermTable& table, double alpha, double tol);

/// Trajectory of Z_{alpha,k} = Z_{alpha,k-1} - P_k with
/// P_k = (-1)^{k-1} b_k(alpha) Q_k.
struct ExpansionEval {
    double t = 0.0;
    double alpha = 0.0;
    std::vector<double> q;      ///< q[j-1] = Q_j
    std::vector<double> p;      ///< p[j-1] = P_j
    std::vector<double> z_seq;  ///< z_seq[k] = Z_{alpha,k}, z_seq[0] = Z_0
    std::int64_t depth = 0;
};

ExpansionEval z_sequence(const TermTable& table, double alpha, std::int64_t k_max);

/// Closed interval [lo, hi] in t.
struct Window {
    double lo = 0.0;
    double hi = 0.0;
};

struct DriftRow {
    std::int64_t j = 0;
    bool degenerate = false;
    std::vector<double> q_zeros;
    std::vector<double> offsets;  ///< signed offset to the nearest zero of cos(theta)
    double mean_abs_offset = 0.0;
    double max_abs_offset = 0.0;
    double amplitude = 0.0;       ///< least-squares A in Q_j ~ A cos(theta)
};

struct DriftReport {
    Window window;
    std::string source;
    std::vector<double> cos_zeros;
    std::vector<DriftRow> rows;
};

/// Zeros of each Q_j in the window against the zeros of cos(theta), plus
/// the amplitude fit. Measurement only.
DriftReport qk_cos_drift(const Window& window, const TableSource& tables, const std::vector<std::int64_t>& j_list,
                         double step = 0.01, double tol = 1e-10);
DriftReport qk_cos_drift(const Window& window, const WeightPlan& plan, const std::vector<std::int64_t>& j_list,
                         double step = 0.01, double tol = 1e-10);

/// Smallest j in 1..j_max for which most zeros of Q_j sit at least as close
/// to the matching zero of cos(theta) as the corresponding zero of Z_0 does.
/// Zeros are located on the scan grid by linear interpolation.
std::optional<std::int64_t> estimate_threshold_N(const Window& window, const TableSource& tables,
                                                 std::int64_t j_max, double step = 0.01);
std::optional<std::int64_t> estimate_threshold_N(const Window& window, const WeightPlan& plan,
                                                 std::int64_t j_max, double step = 0.01);

enum class NestingStatus { Nested, Violated, CountMismatch };
std::string to_string(NestingStatus s);

struct NestingStep {
    std::int64_t k = 0;
    NestingStatus status = NestingStatus::Nested;
    double left = 0.0;
    double right = 0.0;
    /// max|Z_{alpha,k-1}| / max|P_k| over the previous iterate's interval.
    double dominance_ratio = 0.0;
};

struct NestingInterval {
    double z0_left = 0.0;
    double z0_right = 0.0;
    std::vector<NestingStep> steps;
};

struct NestingSummary {
    std::int64_t intervals = 0;
    std::int64_t nested = 0;
    std::int64_t violated = 0;
    std::int64_t mismatched = 0;
    std::int64_t fully_nested_intervals = 0;
};

struct NestingReport {
    Window window;
    double alpha = 0.0;
    std::string source;
    std::vector<NestingInterval> intervals;
    NestingSummary summary;
};

/// For each pair of consecutive Z_0 zeros, tracks the two corresponding
/// zeros of Z_{alpha,k} for k = 1..k_max and records whether each iterate's
/// pair lies strictly inside the previous iterate's pair.
NestingReport nesting_check(const Window& window, const TableSource& tables, double alpha, std::int64_t k_max,
                            double step = 0.01, double tol = 1e-10);
NestingReport nesting_check(const Window& window, const WeightPlan& plan, double alpha, std::int64_t k_max,
                            double step = 0.01, double tol = 1e-10);

}  // namespace hardylab
