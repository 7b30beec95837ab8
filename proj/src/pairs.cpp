#include "hardylab/pairs.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hardylab/error.hpp"
#include "hardylab/specfun.hpp"

namespace hardylab {

std::string to_string(PairClass c) {
    switch (c) {
        case PairClass::Lehmer: return "lehmer";
        case PairClass::Gordon: return "gordon";
        case PairClass::RightPair: return "right";
        case PairClass::LeftPair: return "left";
        case PairClass::Degenerate: return "degenerate";
    }
    return "unknown";
}

PairClass classify_shift(double shift_left, double shift_right, double tol) {
    if (std::abs(shift_left) <= tol || std::abs(shift_right) <= tol) return PairClass::Degenerate;
    if (shift_left > 0.0) return shift_right < 0.0 ? PairClass::Lehmer : PairClass::RightPair;
    return shift_right > 0.0 ? PairClass::Gordon : PairClass::LeftPair;
}

namespace {

// First stretch of Z_0 zeros whose nearest alpha-zero is not the one at the
// same index.
std::string mismatch_region(const std::vector<double>& za, const std::vector<double>& z0) {
    std::ostringstream os;
    os.precision(17);
    const std::size_t n = std::min(za.size(), z0.size());
    for (std::size_t i = 0; i < n; ++i) {
        const double here = std::abs(za[i] - z0[i]);
        const bool closer_next = i + 1 < z0.size() && std::abs(za[i] - z0[i + 1]) < here;
        const bool closer_prev = i > 0 && std::abs(za[i] - z0[i - 1]) < here;
        if (closer_next || closer_prev) {
            os << "[" << z0[i > 0 ? i - 1 : 0] << ", " << z0[std::min(i + 1, z0.size() - 1)] << "]";
            return os.str();
        }
    }
    if (z0.empty() || za.empty()) {
        os << "whole interval";
    } else {
        os << "[" << std::min(za[n - 1], z0[n - 1]) << ", end]";
    }
    return os.str();
}

}  // namespace

std::vector<PairRecord> classify_pairs(const std::vector<double>& zeros_alpha, const std::vector<double>& zeros_zero,
                                       double tol) {
    if (zeros_alpha.size() != zeros_zero.size()) {
        throw ContractError("classify_pairs: " + std::to_string(zeros_alpha.size()) + " alpha-zeros vs " +
                            std::to_string(zeros_zero.size()) + " Z_0 zeros; first mismatch near " +
                            mismatch_region(zeros_alpha, zeros_zero));
    }
    std::vector<PairRecord> out;
    for (std::size_t i = 0; i + 1 < zeros_zero.size(); ++i) {
        PairRecord r;
        r.i = static_cast<std::int64_t>(i);
        r.z0_left = zeros_zero[i];
        r.z0_right = zeros_zero[i + 1];
        r.za_left = zeros_alpha[i];
        r.za_right = zeros_alpha[i + 1];
        r.shift_left = r.za_left - r.z0_left;
        r.shift_right = r.za_right - r.z0_right;
        r.cls = classify_shift(r.shift_left, r.shift_right, tol);
        r.gap = r.za_right - r.za_left;
        out.push_back(r);
    }
    return out;
}

std::vector<PairRecord> classify_pairs(const ZeroList& zeros_alpha, const ZeroList& zeros_zero) {
    return classify_pairs(zeros_alpha.zeros, zeros_zero.zeros, std::max(zeros_alpha.refine_tol, zeros_zero.refine_tol));
}

namespace {

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

LehmerCandidates lehmer_candidates_z0(const Window& window, const TableSource& tables, std::int64_t threshold_n,
                                      double step, double tol) {
    if (threshold_n < 1) throw DomainError("lehmer_candidates_z0: threshold N must be >= 1");
    LehmerCandidates out;
    out.window = window;
    out.threshold_n = threshold_n;

    const RealFunction z0 = [&tables](double t) { return z_alpha(tables(t), 0.0); };
    const auto zeros = zeros_of("z0", z0, window.lo, window.hi, step, tol).zeros;
    if (zeros.size() < 2) return out;

    // Q_j signs at every zero, j = 1..N-1.
    std::vector<std::vector<int>> signs(zeros.size());
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        QSeries qs(tables(zeros[i]));
        for (std::int64_t j = 1; j < threshold_n; ++j) signs[i].push_back(sign_of(qs.next()));
    }

    for (std::size_t i = 0; i + 1 < zeros.size(); ++i) {
        ++out.intervals_checked;
        const int s = sign_of(z0(0.5 * (zeros[i] + zeros[i + 1])));
        if (s == 0) continue;
        bool ok = true;
        for (std::size_t j = 0; j < signs[i].size() && ok; ++j) {
            ok = signs[i][j] == s && signs[i + 1][j] == s;
        }
        if (ok) out.candidates.push_back({zeros[i], zeros[i + 1], s, signs[i], signs[i + 1]});
    }
    return out;
}

LehmerCandidates lehmer_candidates_z0(const Window& window, const WeightPlan& plan, std::int64_t threshold_n,
                                      double step, double tol) {
    TableFactory factory(plan);
    return lehmer_candidates_z0(window, TableSource([factory](double t) { return factory(t); }), threshold_n, step,
                                tol);
}

double theta_density(double t) { return theta(t).theta_prime / kPi; }

double gue_pair_correlation(double u) {
    if (u == 0.0) return 0.0;
    const double x = kPi * u;
    const double s = std::sin(x) / x;
    return 1.0 - s * s;
}

MinGap min_gap(const std::vector<double>& zeros) {
    if (zeros.size() < 2) throw ContractError("min_gap: need at least two zeros");
    MinGap best{zeros[0], zeros[1], zeros[1] - zeros[0]};
    for (std::size_t i = 1; i + 1 < zeros.size(); ++i) {
        const double g = zeros[i + 1] - zeros[i];
        if (g < best.gap) best = {zeros[i], zeros[i + 1], g};
    }
    return best;
}

SpacingReport gap_statistics(const std::vector<double>& zeros, const DensityFunction& density,
                             const SpacingOptions& options) {
    if (zeros.size() < std::max<std::size_t>(options.min_zeros, 2)) {
        throw ContractError("gap_statistics: need at least " + std::to_string(options.min_zeros) + " zeros, got " +
                            std::to_string(zeros.size()));
    }
    if (!(options.bin_width > 0.0) || !(options.range > 0.0)) throw DomainError("gap_statistics: bad binning");

    SpacingReport rep;
    rep.min_gap = min_gap(zeros);
    const auto bins = static_cast<std::size_t>(std::ceil(options.range / options.bin_width - 1e-9));

    rep.gap_histogram.bin_width = options.bin_width;
    rep.gap_histogram.counts.assign(bins, 0);
    std::vector<double> position(zeros.size(), 0.0);
    for (std::size_t i = 0; i + 1 < zeros.size(); ++i) {
        const double u = (zeros[i + 1] - zeros[i]) * density(zeros[i]);
        rep.normalized_gaps.push_back(u);
        position[i + 1] = position[i] + u;
        const auto b = std::min(bins - 1, static_cast<std::size_t>(u / options.bin_width));
        ++rep.gap_histogram.counts[b];
    }

    rep.pair_histogram.bin_width = options.bin_width;
    rep.pair_histogram.counts.assign(bins, 0);
    for (std::size_t i = 0; i < position.size(); ++i) {
        for (std::size_t j = i + 1; j < position.size(); ++j) {
            const double d = position[j] - position[i];
            if (d >= options.range) break;
            ++rep.pair_histogram.counts[std::min(bins - 1, static_cast<std::size_t>(d / options.bin_width))];
        }
    }
    const double norm = static_cast<double>(zeros.size()) * options.bin_width;
    for (std::size_t b = 0; b < bins; ++b) {
        rep.pair_density.push_back(static_cast<double>(rep.pair_histogram.counts[b]) / norm);
        rep.gue_reference.push_back(gue_pair_correlation(rep.pair_histogram.center(b)));
    }
    return rep;
}

}  // namespace hardylab
