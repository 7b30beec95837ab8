#include "hardylab/binom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hardylab/error.hpp"
#include "hardylab/roots.hpp"
#include "hardylab/specfun.hpp"

namespace hardylab {

double general_binomial(double alpha, std::int64_t j) {
    if (j < 0) throw DomainError("general_binomial: j must be >= 0");
    double b = 1.0;
    for (std::int64_t i = 1; i <= j; ++i) {
        b *= (alpha - static_cast<double>(i - 1)) / static_cast<double>(i);
        if (b == 0.0) break;
    }
    return b;
}

double q_k(const TermTable& table, std::int64_t j) {
    if (j < 0) throw DomainError("q_k: j must be >= 0");
    const auto c = table.cos_terms();
    double acc = 0.0;
    for (std::size_t i = 1; i < c.size(); ++i) {
        const auto n = static_cast<double>(i + 1);
        acc += std::pow((n - 1.0) / n, static_cast<double>(j)) * c[i];
    }
    return acc;
}

QSeries::QSeries(const TermTable& table) {
    const auto c = table.cos_terms();
    const std::size_t count = c.size() > 1 ? c.size() - 1 : 0;
    ratio_.resize(count);
    power_.assign(count, 1.0);
    terms_.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto n = static_cast<double>(i + 2);
        ratio_[i] = (n - 1.0) / n;
        terms_[i] = c[i + 1];
    }
}

double QSeries::next() {
    ++j_;
    double acc = 0.0;
    for (std::size_t i = 0; i < power_.size(); ++i) {
        power_[i] *= ratio_[i];
        acc += power_[i] * terms_[i];
    }
    return acc;
}

namespace {

constexpr std::int64_t kMaxExpansionTerms = 1'000'000;
constexpr int kQuietRun = 10;

// (-1)^{j-1} b_j(alpha) Q_j
double correction(std::int64_t j, double b, double q) { return (j % 2 == 1 ? b : -b) * q; }

}  // namespace

Reconstruction reconstruct_z_alpha(const TermTable& table, double alpha, double tol) {
    if (!(tol > 0.0)) throw DomainError("reconstruct_z_alpha: tol must be > 0");
    Reconstruction out;
    out.value = z_alpha(table, 0.0);
    QSeries qs(table);
    BinomialSeries bs(alpha);
    int quiet = 0;
    std::int64_t j = 0;
    while (quiet < kQuietRun) {
        if (++j > kMaxExpansionTerms) {
            throw ConvergenceError("reconstruct_z_alpha: no convergence within 10^6 terms (alpha = " +
                                   std::to_string(alpha) + ")");
        }
        const double p = correction(j, bs.next(), qs.next());
        if (!std::isfinite(p)) throw ConvergenceError("reconstruct_z_alpha: expansion overflowed");
        out.value -= p;
        quiet = std::abs(p) < tol ? quiet + 1 : 0;
    }
    out.j_used = j;
    return out;
}

ExpansionEval z_sequence(const TermTable& table, double alpha, std::int64_t k_max) {
    if (k_max < 0) throw DomainError("z_sequence: k_max must be >= 0");
    ExpansionEval out;
    out.t = table.t();
    out.alpha = alpha;
    out.depth = k_max;
    out.q.reserve(static_cast<std::size_t>(k_max));
    out.p.reserve(static_cast<std::size_t>(k_max));
    out.z_seq.reserve(static_cast<std::size_t>(k_max) + 1);
    out.z_seq.push_back(z_alpha(table, 0.0));
    QSeries qs(table);
    BinomialSeries bs(alpha);
    for (std::int64_t j = 1; j <= k_max; ++j) {
        const double b = bs.next();
        const double q = qs.next();
        const double p = correction(j, b, q);
        out.q.push_back(q);
        out.p.push_back(p);
        out.z_seq.push_back(out.z_seq.back() - p);
    }
    return out;
}

namespace {

TableSource plan_source(const WeightPlan& plan) {
    TableFactory factory(plan);
    return [factory](double t) { return factory(t); };
}

std::string source_name(const WeightPlan& plan) { return plan.describe(); }

double nearest(const std::vector<double>& xs, double x) {
    const auto it = std::lower_bound(xs.begin(), xs.end(), x);
    double best = std::numeric_limits<double>::quiet_NaN();
    double dist = std::numeric_limits<double>::infinity();
    if (it != xs.end() && std::abs(*it - x) < dist) {
        best = *it;
        dist = std::abs(*it - x);
    }
    if (it != xs.begin() && std::abs(*(it - 1) - x) < dist) best = *(it - 1);
    return best;
}

// Linear interpolation of sign changes on the grid.
std::vector<double> grid_zeros(const std::vector<double>& grid, const std::vector<double>& values) {
    std::vector<double> out;
    for (const auto& br : sign_changes(grid, values)) {
        if (br.a == br.b) {
            out.push_back(br.a);
            continue;
        }
        const auto i = static_cast<std::size_t>(std::lower_bound(grid.begin(), grid.end(), br.a) - grid.begin());
        const double fa = values[i];
        const double fb = values[i + 1];
        out.push_back(br.a + (br.b - br.a) * fa / (fa - fb));
    }
    return out;
}

std::vector<double> cos_theta_zeros(const Window& w, double step, double tol) {
    return zeros_of("cos_theta", [](double t) { return std::cos(theta(t).theta); }, w.lo, w.hi, step, tol).zeros;
}

}  // namespace

DriftReport qk_cos_drift(const Window& window, const TableSource& tables, const std::vector<std::int64_t>& j_list,
                         double step, double tol) {
    DriftReport report;
    report.window = window;
    report.source = "custom";
    report.cos_zeros = cos_theta_zeros(window, step, tol);

    const auto grid = scan_grid(window.lo, window.hi, step);
    std::vector<TermTable> cached;
    cached.reserve(grid.size());
    std::vector<double> cos_grid(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        cached.push_back(tables(grid[i]));
        cos_grid[i] = std::cos(cached.back().theta());
    }

    for (const std::int64_t j : j_list) {
        DriftRow row;
        row.j = j;
        std::vector<double> q(grid.size());
        double qq = 0.0;
        double qc = 0.0;
        double cc = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            q[i] = q_k(cached[i], j);
            qq = std::max(qq, std::abs(q[i]));
            qc += q[i] * cos_grid[i];
            cc += cos_grid[i] * cos_grid[i];
        }
        row.amplitude = cc > 0.0 ? qc / cc : 0.0;
        if (!(qq > std::numeric_limits<double>::min())) {
            row.degenerate = true;
            report.rows.push_back(std::move(row));
            continue;
        }
        const RealFunction f = [&tables, j](double t) { return q_k(tables(t), j); };
        for (const auto& br : sign_changes(grid, q)) row.q_zeros.push_back(refine_root(f, br, tol));
        double sum = 0.0;
        for (const double z : row.q_zeros) {
            const double c = nearest(report.cos_zeros, z);
            if (std::isnan(c)) continue;
            const double off = z - c;
            row.offsets.push_back(off);
            sum += std::abs(off);
            row.max_abs_offset = std::max(row.max_abs_offset, std::abs(off));
        }
        if (!row.offsets.empty()) row.mean_abs_offset = sum / static_cast<double>(row.offsets.size());
        report.rows.push_back(std::move(row));
    }
    return report;
}

DriftReport qk_cos_drift(const Window& window, const WeightPlan& plan, const std::vector<std::int64_t>& j_list,
                         double step, double tol) {
    auto r = qk_cos_drift(window, plan_source(plan), j_list, step, tol);
    r.source = source_name(plan);
    return r;
}

std::optional<std::int64_t> estimate_threshold_N(const Window& window, const TableSource& tables, std::int64_t j_max,
                                                 double step) {
    if (j_max < 1) return std::nullopt;
    const auto grid = scan_grid(window.lo, window.hi, step);
    std::vector<double> z0(grid.size());
    std::vector<double> cs(grid.size());
    std::vector<QSeries> series;
    series.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto table = tables(grid[i]);
        z0[i] = z_alpha(table, 0.0);
        cs[i] = std::cos(table.theta());
        series.emplace_back(table);
    }
    const auto z0_zeros = grid_zeros(grid, z0);
    const auto cos_zeros = grid_zeros(grid, cs);
    if (z0_zeros.empty() || cos_zeros.empty()) return std::nullopt;

    std::vector<double> q(grid.size());
    for (std::int64_t j = 1; j <= j_max; ++j) {
        for (std::size_t i = 0; i < grid.size(); ++i) q[i] = series[i].next();
        const auto q_zeros = grid_zeros(grid, q);
        if (q_zeros.empty()) continue;
        std::size_t toward = 0;
        for (const double z : z0_zeros) {
            const double c = nearest(cos_zeros, z);
            const double qz = nearest(q_zeros, z);
            if (std::abs(qz - c) <= std::abs(z - c) + 1e-12) ++toward;
        }
        if (2 * toward > z0_zeros.size()) return j;
    }
    return std::nullopt;
}

std::optional<std::int64_t> estimate_threshold_N(const Window& window, const WeightPlan& plan, std::int64_t j_max,
                                                 double step) {
    return estimate_threshold_N(window, plan_source(plan), j_max, step);
}

std::string to_string(NestingStatus s) {
    switch (s) {
        case NestingStatus::Nested: return "nested";
        case NestingStatus::Violated: return "violated";
        case NestingStatus::CountMismatch: return "count_mismatch";
    }
    return "unknown";
}

NestingReport nesting_check(const Window& window, const TableSource& tables, double alpha, std::int64_t k_max,
                            double step, double tol) {
    if (k_max < 0) throw DomainError("nesting_check: k_max must be >= 0");
    NestingReport report;
    report.window = window;
    report.alpha = alpha;
    report.source = "custom";

    const RealFunction z0 = [&tables](double t) { return z_alpha(tables(t), 0.0); };
    const auto z0_zeros = zeros_of("z0", z0, window.lo, window.hi, step, tol).zeros;

    for (std::size_t i = 0; i + 1 < z0_zeros.size(); ++i) {
        NestingInterval iv;
        iv.z0_left = z0_zeros[i];
        iv.z0_right = z0_zeros[i + 1];
        const double width = iv.z0_right - iv.z0_left;
        const double lo = std::max(10.0, iv.z0_left - 0.5 * width);
        const double hi = iv.z0_right + 0.5 * width;
        const double local_step = std::min(step, width / 50.0);
        const auto grid = scan_grid(lo, hi, local_step);

        std::vector<ExpansionEval> evals;
        evals.reserve(grid.size());
        for (const double t : grid) evals.push_back(z_sequence(tables(t), alpha, k_max));

        double prev_left = iv.z0_left;
        double prev_right = iv.z0_right;
        for (std::int64_t k = 1; k <= k_max; ++k) {
            NestingStep st;
            st.k = k;
            const auto ku = static_cast<std::size_t>(k);
            std::vector<double> values(grid.size());
            double z_peak = 0.0;
            double p_peak = 0.0;
            for (std::size_t g = 0; g < grid.size(); ++g) {
                values[g] = evals[g].z_seq[ku];
                if (grid[g] >= prev_left && grid[g] <= prev_right) {
                    z_peak = std::max(z_peak, std::abs(evals[g].z_seq[ku - 1]));
                    p_peak = std::max(p_peak, std::abs(evals[g].p[ku - 1]));
                }
            }
            st.dominance_ratio = p_peak > 0.0 ? z_peak / p_peak : std::numeric_limits<double>::infinity();

            const RealFunction fk = [&tables, alpha, k](double t) {
                return z_sequence(tables(t), alpha, k).z_seq.back();
            };
            std::vector<double> zeros;
            for (const auto& br : sign_changes(grid, values)) zeros.push_back(refine_root(fk, br, tol));

            const double left = nearest(zeros, prev_left);
            const double right = nearest(zeros, prev_right);
            const auto between = std::count_if(zeros.begin(), zeros.end(),
                                               [&](double z) { return z > left && z < right; });
            if (zeros.size() < 2 || !(left < right) || between != 0) {
                st.status = NestingStatus::CountMismatch;
                st.left = left;
                st.right = right;
                ++report.summary.mismatched;
                iv.steps.push_back(st);
                continue;
            }
            st.left = left;
            st.right = right;
            const bool nested = left >= prev_left - tol && right <= prev_right + tol;
            st.status = nested ? NestingStatus::Nested : NestingStatus::Violated;
            if (nested) ++report.summary.nested;
            else ++report.summary.violated;
            prev_left = left;
            prev_right = right;
            iv.steps.push_back(st);
        }
        const bool all_nested = std::all_of(iv.steps.begin(), iv.steps.end(),
                                            [](const NestingStep& s) { return s.status == NestingStatus::Nested; });
        if (all_nested) ++report.summary.fully_nested_intervals;
        report.intervals.push_back(std::move(iv));
    }
    report.summary.intervals = static_cast<std::int64_t>(report.intervals.size());
    return report;
}

NestingReport nesting_check(const Window& window, const WeightPlan& plan, double alpha, std::int64_t k_max,
                            double step, double tol) {
    auto r = nesting_check(window, plan_source(plan), alpha, k_max, step, tol);
    r.source = source_name(plan);
    return r;
}

}  // namespace hardylab
