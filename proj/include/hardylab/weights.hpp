#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hardylab {

enum class WeightMode { ExactCesaro, Sigmoid, SharpCutoff };

std::string to_string(WeightMode mode);
/// Accepts "exact", "sigmoid", "cutoff" (and the enum spellings).
WeightMode parse_weight_mode(const std::string& name);

/// How a divergent Dirichlet series is regularized into a finite weighted
/// sum. Immutable once built; use the named constructors.
class WeightPlan {
public:
    /// Cesaro (C, r) weights over the first m terms.
    static WeightPlan exact_cesaro(std::int64_t m, std::int64_t r);
    /// Logistic cutoff centered at n = t_anchor / pi, truncated at the first
    /// n whose weight drops below 1e-16.
    static WeightPlan sigmoid(double t_anchor);
    /// Plain partial sum of the first m terms.
    static WeightPlan sharp_cutoff(std::int64_t m);
    /// Default plan for evaluating near height t: m = r = floor(t/pi) for
    /// Cesaro and cutoff, anchor t for the sigmoid.
    static WeightPlan for_t(WeightMode mode, double t);

    WeightMode mode() const noexcept { return mode_; }
    std::int64_t m() const noexcept { return m_; }
    std::int64_t r() const noexcept { return r_; }
    double t_anchor() const noexcept { return t_anchor_; }

    /// Canonical text form, stable across runs (used in cache keys and JSON).
    std::string describe() const;

    bool operator==(const WeightPlan&) const = default;

private:
    WeightPlan(WeightMode mode, std::int64_t m, std::int64_t r, double t_anchor)
        : mode_(mode), m_(m), r_(r), t_anchor_(t_anchor) {}

    WeightMode mode_;
    std::int64_t m_;
    std::int64_t r_;
    double t_anchor_;
};

/// log C(a, b) through lgamma. Throws DomainError when b > a or a < 0.
double log_binomial(std::int64_t a, std::int64_t b);

/// Weight of term n (1-based). ExactCesaro: C(m-n+r, r) / C(m-1+r, r) for
/// n <= m and 0 beyond. Sigmoid: 1 / (1 + exp(n - t_anchor/pi)).
/// SharpCutoff: 1 for n <= m else 0.
double delta(const WeightPlan& plan, std::int64_t n);

/// [delta(plan, 1), ..., delta(plan, m)].
std::vector<double> delta_profile(const WeightPlan& plan);

/// Generalized sum sum_n terms[n-1] * delta(plan, n) over n = 1..m.
/// Requires terms.size() >= m; throws ContractError otherwise.
///
/// For Cesaro plans whose normalizer C(m-1+r, r) is an exactly
/// representable integer the unnormalized integer weights are used and the
/// division happens once, so integer inputs give correctly rounded results.
double cesaro_sum(std::span<const double> terms, const WeightPlan& plan);

}  // namespace hardylab
