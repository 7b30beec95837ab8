#include "hardylab/hardy.hpp"

#include <array>
#include <cmath>
#include <string>

#include "hardylab/error.hpp"

namespace hardylab {

TermTable::TermTable(double t, double theta_value, WeightPlan plan, std::optional<PhasePerturbation> p,
                     std::shared_ptr<const std::vector<double>> weights, std::vector<double> cos_terms,
                     std::vector<double> sin_terms)
    : t_(t),
      theta_(theta_value),
      plan_(std::move(plan)),
      perturbation_(p),
      weights_(std::move(weights)),
      cos_terms_(std::move(cos_terms)),
      sin_terms_(std::move(sin_terms)) {}

TermTable TermTable::from_terms(double t, double theta_value, WeightPlan plan, std::vector<double> cos_terms,
                                std::vector<double> sin_terms) {
    if (sin_terms.empty()) sin_terms.assign(cos_terms.size(), 0.0);
    if (sin_terms.size() != cos_terms.size()) {
        throw ContractError("TermTable::from_terms: cos/sin length mismatch");
    }
    auto weights = std::make_shared<const std::vector<double>>(cos_terms.size(), 1.0);
    return TermTable(t, theta_value, std::move(plan), std::nullopt, std::move(weights), std::move(cos_terms),
                     std::move(sin_terms));
}

TableFactory::TableFactory(WeightPlan plan, std::optional<PhasePerturbation> perturbation)
    : plan_(std::move(plan)), perturbation_(perturbation) {
    if (plan_.m() < 3) {
        throw ContractError("degenerate plan: m = " + std::to_string(plan_.m()) + " < 3");
    }
    if (perturbation_ && perturbation_->n0 < 2) {
        throw DomainError("perturbation index n0 must be >= 2");
    }
    weights_ = std::make_shared<const std::vector<double>>(delta_profile(plan_));
}

TermTable TableFactory::operator()(double t) const {
    if (!(t >= 10.0)) throw DomainError("term_table: t must be >= 10, got " + std::to_string(t));
    const double th = theta(t).theta;
    const auto& w = *weights_;
    std::vector<double> c(w.size());
    std::vector<double> s(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto n = static_cast<std::int64_t>(i) + 1;
        double phase = th - t * std::log(static_cast<double>(n));
        if (perturbation_ && perturbation_->n0 == n) phase += perturbation_->phi;
        c[i] = std::cos(phase) * w[i];
        s[i] = std::sin(phase) * w[i];
    }
    return TermTable(t, th, plan_, perturbation_, weights_, std::move(c), std::move(s));
}

WeightPlan frozen_plan(WeightMode mode, double t_lo, double t_hi) {
    return WeightPlan::for_t(mode, 0.5 * (t_lo + t_hi));
}

std::string to_string(PlanPolicy p) {
    switch (p) {
        case PlanPolicy::Auto: return "auto";
        case PlanPolicy::Frozen: return "frozen";
        case PlanPolicy::Tracking: return "tracking";
    }
    return "unknown";
}

PlanPolicy resolve_policy(PlanPolicy p, WeightMode mode) {
    if (p != PlanPolicy::Auto) return p;
    return mode == WeightMode::Sigmoid ? PlanPolicy::Tracking : PlanPolicy::Frozen;
}

TableSource make_table_source(WeightMode mode, double t_lo, double t_hi, PlanPolicy policy,
                              std::optional<PhasePerturbation> perturbation) {
    if (resolve_policy(policy, mode) == PlanPolicy::Frozen) {
        TableFactory factory(frozen_plan(mode, t_lo, t_hi), perturbation);
        return [factory](double t) { return factory(t); };
    }
    return [mode, perturbation](double t) { return term_table(t, WeightPlan::for_t(mode, t), perturbation); };
}

TermTable term_table(double t, const WeightPlan& plan, std::optional<PhasePerturbation> perturbation) {
    return TableFactory(plan, perturbation)(t);
}

double z_alpha(const TermTable& table, double alpha) {
    const auto c = table.cos_terms();
    double acc = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        acc += std::pow(static_cast<double>(i + 1), -alpha) * c[i];
    }
    return acc;
}

double y_alpha(const TermTable& table, double alpha) {
    const auto s = table.sin_terms();
    double acc = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        acc += std::pow(static_cast<double>(i + 1), -alpha) * s[i];
    }
    return -acc;
}

GeneralizedHardyEval evaluate(const TermTable& table, double alpha) {
    return {table.t(), alpha, z_alpha(table, alpha), y_alpha(table, alpha)};
}

double riemann_siegel_psi(double p) {
    constexpr double kTwoPi = 2.0 * kPi;
    auto raw = [](double x) {
        return std::cos(kTwoPi * (x * x - x - 1.0 / 16.0)) / std::cos(kTwoPi * x);
    };
    if (std::abs(std::cos(kTwoPi * p)) > 1e-6) return raw(p);
    // Removable singularity: symmetric average, error O(h^2).
    constexpr double h = 1e-4;
    return 0.5 * (raw(p - h) + raw(p + h));
}

double z_riemann_siegel(double t) {
    if (!(t >= 20.0)) throw DomainError("z_riemann_siegel: t must be >= 20, got " + std::to_string(t));
    const double th = theta(t).theta;
    const double a = std::sqrt(t / (2.0 * kPi));
    const auto n_max = static_cast<std::int64_t>(std::floor(a));
    double main = 0.0;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const double x = static_cast<double>(n);
        main += std::cos(th - t * std::log(x)) / std::sqrt(x);
    }
    const double p = a - static_cast<double>(n_max);
    const double sign = (n_max % 2 == 1) ? 1.0 : -1.0;  // (-1)^{N-1}
    return 2.0 * main + sign * std::pow(t / (2.0 * kPi), -0.25) * riemann_siegel_psi(p);
}

namespace {

// B_2k / (2k)!, k = 1..10
constexpr std::array<double, 10> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
};

}  // namespace

Complex zeta_euler_maclaurin(Complex s, std::int64_t terms, int bernoulli_order) {
    if (s == Complex{1.0, 0.0}) throw PoleError("zeta_euler_maclaurin: pole at s = 1");
    if (!(s.real() > -1.0)) throw DomainError("zeta_euler_maclaurin: need Re(s) > -1");
    if (terms < 2) throw DomainError("zeta_euler_maclaurin: need at least 2 terms");
    if (bernoulli_order < 0 || bernoulli_order > static_cast<int>(kBernoulliOverFactorial.size())) {
        throw DomainError("zeta_euler_maclaurin: bernoulli_order must be in [0, 10]");
    }

    const double sigma = s.real();
    const double tau = s.imag();
    auto power = [&](double n) {  // n^{-s}
        const double ln = std::log(n);
        return std::exp(-sigma * ln) * Complex{std::cos(tau * ln), -std::sin(tau * ln)};
    };

    Complex sum{0.0, 0.0};
    for (std::int64_t n = 1; n < terms; ++n) sum += power(static_cast<double>(n));

    const auto N = static_cast<double>(terms);
    const Complex n_pow = power(N);
    sum += N * n_pow / (s - 1.0) + 0.5 * n_pow;

    // sum_k B_2k/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    Complex rising = s;
    Complex np = n_pow / N;
    const double inv_n2 = 1.0 / (N * N);
    for (int k = 1; k <= bernoulli_order; ++k) {
        sum += kBernoulliOverFactorial[static_cast<std::size_t>(k - 1)] * rising * np;
        const double base = 2.0 * k - 1.0;
        rising *= (s + base) * (s + base + 1.0);
        np *= inv_n2;
    }
    return sum;
}

bool euler_maclaurin_terms_sufficient(Complex s, std::int64_t terms) {
    return static_cast<double>(terms) > std::abs(s.imag()) / 2.0 && terms >= 16;
}

std::int64_t default_oracle_terms(double t) {
    return std::max<std::int64_t>(64, static_cast<std::int64_t>(std::ceil(2.0 * std::abs(t))));
}

std::pair<double, double> z_alpha_oracle(double t, double alpha, std::int64_t terms) {
    if (!(t >= 0.0)) throw DomainError("z_alpha_oracle: t must be >= 0");
    if (!(alpha > -1.0)) throw DomainError("z_alpha_oracle: alpha must be > -1");
    if (terms <= 0) terms = default_oracle_terms(t);
    const Complex zeta = zeta_euler_maclaurin({alpha, t}, terms);
    const double th = theta(t).theta;
    const Complex rotated = zeta * Complex{std::cos(th), std::sin(th)};
    return {rotated.real(), -rotated.imag()};
}

}  // namespace hardylab
