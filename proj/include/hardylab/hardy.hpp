#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <span>
#include <utility>
#include <vector>

#include "hardylab/specfun.hpp"
#include "hardylab/weights.hpp"

namespace hardylab {

/// Phase shift applied to a single Dirichlet term, used to fabricate
/// artificial even zeros.
struct PhasePerturbation {
    std::int64_t n0 = 2;
    double phi = 0.0;

    bool operator==(const PhasePerturbation&) const = default;
};

/// Weighted cosine and sine terms at one height t. Every quantity derived
/// from a table (Z_alpha, Y_alpha, Q_j, the Z_{alpha,k} sequence) reads the
/// same numbers, so algebraic identities between them hold to rounding.
///
/// Index n is 1-based in the accessors; the spans are 0-based.
class TermTable {
public:
    /// Synthetic table with caller-supplied terms (tests, drift calibration).
    /// `sin_terms` may be empty, in which case it is zero-filled.
    static TermTable from_terms(double t, double theta_value, WeightPlan plan,
                                std::vector<double> cos_terms, std::vector<double> sin_terms = {});

    double t() const noexcept { return t_; }
    double theta() const noexcept { return theta_; }
    const WeightPlan& plan() const noexcept { return plan_; }
    const std::optional<PhasePerturbation>& perturbation() const noexcept { return perturbation_; }
    std::size_t size() const noexcept { return cos_terms_.size(); }

    std::span<const double> cos_terms() const noexcept { return cos_terms_; }
    std::span<const double> sin_terms() const noexcept { return sin_terms_; }
    std::span<const double> weights() const noexcept { return *weights_; }

    double cos_term(std::int64_t n) const { return cos_terms_.at(static_cast<std::size_t>(n - 1)); }
    double sin_term(std::int64_t n) const { return sin_terms_.at(static_cast<std::size_t>(n - 1)); }

private:
    friend class TableFactory;
    TermTable(double t, double theta_value, WeightPlan plan, std::optional<PhasePerturbation> p,
              std::shared_ptr<const std::vector<double>> weights, std::vector<double> cos_terms,
              std::vector<double> sin_terms);

    double t_;
    double theta_;
    WeightPlan plan_;
    std::optional<PhasePerturbation> perturbation_;
    std::shared_ptr<const std::vector<double>> weights_;
    std::vector<double> cos_terms_;
    std::vector<double> sin_terms_;
};

/// Builds tables at arbitrary t with one frozen plan. The weight vector is
/// computed once and shared, which is what makes window scans cheap.
class TableFactory {
public:
    explicit TableFactory(WeightPlan plan, std::optional<PhasePerturbation> perturbation = std::nullopt);

    /// Requires t >= 10; throws ContractError if the plan has fewer than 3 terms.
    TermTable operator()(double t) const;

    const WeightPlan& plan() const noexcept { return plan_; }
    const std::optional<PhasePerturbation>& perturbation() const noexcept { return perturbation_; }

private:
    WeightPlan plan_;
    std::optional<PhasePerturbation> perturbation_;
    std::shared_ptr<const std::vector<double>> weights_;
};

/// Anything that yields a table for a given t. Window scans take one of
/// these so synthetic tables can be injected.
using TableSource = std::function<TermTable(double)>;

/// Plan frozen at the midpoint of [t_lo, t_hi].
WeightPlan frozen_plan(WeightMode mode, double t_lo, double t_hi);

/// How a window scan picks its plan. Frozen: one plan from the window
/// midpoint. Tracking: WeightPlan::for_t(mode, t) at every t, which is
/// continuous in t only for the sigmoid (its anchor moves smoothly; the
/// truncation drops weights below 1e-16). Auto: Tracking for the sigmoid,
/// Frozen otherwise.
enum class PlanPolicy { Auto, Frozen, Tracking };

std::string to_string(PlanPolicy p);
PlanPolicy resolve_policy(PlanPolicy p, WeightMode mode);

/// Table source for scanning [t_lo, t_hi] under the given policy.
TableSource make_table_source(WeightMode mode, double t_lo, double t_hi, PlanPolicy policy = PlanPolicy::Auto,
                              std::optional<PhasePerturbation> perturbation = std::nullopt);

TermTable term_table(double t, const WeightPlan& plan,
                     std::optional<PhasePerturbation> perturbation = std::nullopt);

struct GeneralizedHardyEval {
    double t = 0.0;
    double alpha = 0.0;
    double z = 0.0;
    double y = 0.0;
};

/// sum_n n^-alpha * cos_terms[n]
double z_alpha(const TermTable& table, double alpha);
/// -sum_n n^-alpha * sin_terms[n]
double y_alpha(const TermTable& table, double alpha);
GeneralizedHardyEval evaluate(const TermTable& table, double alpha);

/// Riemann-Siegel main sum plus the first correction term. t >= 20.
double z_riemann_siegel(double t);
/// First correction coefficient cos(2pi(p^2 - p - 1/16)) / cos(2pi p),
/// continuous through the removable points p = 1/4, 3/4.
double riemann_siegel_psi(double p);

/// zeta(s) by Euler-Maclaurin summation with `terms` direct terms and
/// `bernoulli_order` (<= 10) correction terms. Needs Re(s) > -1.
Complex zeta_euler_maclaurin(Complex s, std::int64_t terms, int bernoulli_order = 10);
/// Whether `terms` is large enough for the documented accuracy at s.
bool euler_maclaurin_terms_sufficient(Complex s, std::int64_t terms);
/// Default term count for the oracle at height t: max(64, 2|t|).
std::int64_t default_oracle_terms(double t);

/// (Re, -Im) of zeta(alpha + it) e^{i theta(t)}, matching the sign
/// conventions of z_alpha / y_alpha.
std::pair<double, double> z_alpha_oracle(double t, double alpha, std::int64_t terms = 0);

}  // namespace hardylab
