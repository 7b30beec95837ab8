#include "hardylab/weights.hpp"

#include <cmath>
#include <sstream>

#include "hardylab/error.hpp"
#include "hardylab/specfun.hpp"

namespace hardylab {
namespace {

// ln(1e16): a sigmoid weight is below 1e-16 once n - t/pi exceeds this.
const double kSigmoidCut = std::log(1e16);

// Exact C(a, b) as an integer when it stays below 2^53, otherwise -1.
std::int64_t exact_binomial(std::int64_t a, std::int64_t b) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    unsigned __int128 c = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        c = c * static_cast<unsigned __int128>(a - b + i) / static_cast<unsigned __int128>(i);
        if (c > (static_cast<unsigned __int128>(1) << 53)) return -1;
    }
    return static_cast<std::int64_t>(c);
}

}  // namespace

std::string to_string(WeightMode mode) {
    switch (mode) {
        case WeightMode::ExactCesaro: return "exact";
        case WeightMode::Sigmoid: return "sigmoid";
        case WeightMode::SharpCutoff: return "cutoff";
    }
    return "unknown";
}

WeightMode parse_weight_mode(const std::string& name) {
    if (name == "exact" || name == "ExactCesaro") return WeightMode::ExactCesaro;
    if (name == "sigmoid" || name == "Sigmoid") return WeightMode::Sigmoid;
    if (name == "cutoff" || name == "SharpCutoff") return WeightMode::SharpCutoff;
    throw DomainError("unknown weight mode '" + name + "'");
}

WeightPlan WeightPlan::exact_cesaro(std::int64_t m, std::int64_t r) {
    if (m < 1) throw DomainError("WeightPlan: m must be >= 1");
    if (r < 0) throw DomainError("WeightPlan: r must be >= 0");
    return WeightPlan(WeightMode::ExactCesaro, m, r, 0.0);
}

WeightPlan WeightPlan::sigmoid(double t_anchor) {
    if (!(t_anchor >= 0.0)) throw DomainError("WeightPlan: sigmoid anchor must be >= 0");
    const auto m = static_cast<std::int64_t>(std::floor(t_anchor / kPi + kSigmoidCut)) + 1;
    return WeightPlan(WeightMode::Sigmoid, m, 0, t_anchor);
}

WeightPlan WeightPlan::sharp_cutoff(std::int64_t m) {
    if (m < 1) throw DomainError("WeightPlan: m must be >= 1");
    return WeightPlan(WeightMode::SharpCutoff, m, 0, 0.0);
}

WeightPlan WeightPlan::for_t(WeightMode mode, double t) {
    if (!(t >= 0.0)) throw DomainError("WeightPlan: t must be >= 0");
    const auto k = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(t / kPi)));
    switch (mode) {
        case WeightMode::ExactCesaro: return exact_cesaro(k, k);
        case WeightMode::Sigmoid: return sigmoid(t);
        case WeightMode::SharpCutoff: return sharp_cutoff(k);
    }
    throw DomainError("WeightPlan: bad mode");
}

std::string WeightPlan::describe() const {
    std::ostringstream os;
    os.precision(17);
    os << to_string(mode_) << ":m=" << m_;
    if (mode_ == WeightMode::ExactCesaro) os << ",r=" << r_;
    if (mode_ == WeightMode::Sigmoid) os << ",t_anchor=" << t_anchor_;
    return os.str();
}

double log_binomial(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0 || b > a) {
        throw DomainError("log_binomial: need 0 <= b <= a, got a=" + std::to_string(a) +
                          " b=" + std::to_string(b));
    }
    if (b == 0 || b == a) return 0.0;
    const auto x = static_cast<double>(a);
    const auto y = static_cast<double>(b);
    return std::lgamma(x + 1.0) - std::lgamma(y + 1.0) - std::lgamma(x - y + 1.0);
}

double delta(const WeightPlan& plan, std::int64_t n) {
    if (n < 1) throw DomainError("delta: n must be >= 1");
    switch (plan.mode()) {
        case WeightMode::ExactCesaro: {
            if (n > plan.m()) return 0.0;
            const std::int64_t m = plan.m();
            const std::int64_t r = plan.r();
            return std::exp(log_binomial(m - n + r, r) - log_binomial(m - 1 + r, r));
        }
        case WeightMode::Sigmoid:
            return 1.0 / (1.0 + std::exp(static_cast<double>(n) - plan.t_anchor() / kPi));
        case WeightMode::SharpCutoff:
            return n <= plan.m() ? 1.0 : 0.0;
    }
    return 0.0;
}

std::vector<double> delta_profile(const WeightPlan& plan) {
    std::vector<double> out(static_cast<std::size_t>(plan.m()));
    for (std::int64_t n = 1; n <= plan.m(); ++n) out[static_cast<std::size_t>(n - 1)] = delta(plan, n);
    return out;
}

double cesaro_sum(std::span<const double> terms, const WeightPlan& plan) {
    const auto m = static_cast<std::size_t>(plan.m());
    if (terms.size() < m) {
        throw ContractError("cesaro_sum: need at least " + std::to_string(m) + " terms, got " +
                            std::to_string(terms.size()));
    }

    if (plan.mode() == WeightMode::ExactCesaro) {
        const std::int64_t r = plan.r();
        const std::int64_t denom = exact_binomial(plan.m() - 1 + r, r);
        if (denom > 0) {
            double acc = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                const auto n = static_cast<std::int64_t>(i) + 1;
                acc += terms[i] * static_cast<double>(exact_binomial(plan.m() - n + r, r));
            }
            return acc / static_cast<double>(denom);
        }
    }

    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i) acc += terms[i] * delta(plan, static_cast<std::int64_t>(i) + 1);
    return acc;
}

}  // namespace hardylab
