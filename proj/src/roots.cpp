#include "hardylab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/special_functions/lambert_w.hpp>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "hardylab/binom.hpp"
#include "hardylab/error.hpp"
#include "hardylab/parallel.hpp"
#include "hardylab/specfun.hpp"

namespace hardylab {

std::vector<double> scan_grid(double lo, double hi, double step) {
    if (!(step > 0.0)) throw DomainError("scan: step must be > 0");
    std::vector<double> grid;
    if (!(lo < hi)) return grid;
    const auto n = static_cast<std::int64_t>(std::floor((hi - lo) / step + 1e-9));
    grid.reserve(static_cast<std::size_t>(n) + 2);
    for (std::int64_t i = 0; i <= n; ++i) grid.push_back(lo + static_cast<double>(i) * step);
    if (hi - grid.back() > 1e-9 * step) grid.push_back(hi);
    return grid;
}

double default_scan_step(double t_hi) { return t_hi < 1000.0 ? 0.01 : 0.005; }

std::vector<Bracket> sign_changes(const std::vector<double>& grid, const std::vector<double>& values) {
    std::vector<Bracket> out;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double fa = values[i];
        const double fb = values[i + 1];
        if (fa * fb < 0.0) {
            out.push_back({grid[i], grid[i + 1]});
        } else if (fb == 0.0 && fa != 0.0 && i + 2 < grid.size() && fa * values[i + 2] < 0.0) {
            out.push_back({grid[i + 1], grid[i + 1]});
        }
    }
    return out;
}

std::vector<Bracket> scan_sign_changes(const RealFunction& f, double lo, double hi, double step, unsigned workers) {
    const auto grid = scan_grid(lo, hi, step);
    const auto values = parallel_map(grid, f, workers);
    return sign_changes(grid, values);
}

double refine_root(const RealFunction& f, Bracket bracket, double tol) {
    double a = std::min(bracket.a, bracket.b);
    double b = std::max(bracket.a, bracket.b);
    const double fa = f(a);
    if (fa == 0.0) return a;
    const double fb = f(b);
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) {
        std::ostringstream os;
        os.precision(17);
        os << "refine_root: no sign change on [" << a << ", " << b << "]";
        throw ContractError(os.str());
    }
    const double floor_width = 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b));
    const double width = std::max(2.0 * tol, floor_width);
    auto done = [width](double x, double y) { return std::abs(y - x) <= width; };
    std::uintmax_t iters = 200;
    const auto [lo, hi] = boost::math::tools::toms748_solve(f, a, b, fa, fb, done, iters);
    if (!done(lo, hi)) throw ConvergenceError("refine_root: no convergence in 200 iterations");
    return 0.5 * (lo + hi);
}

std::string to_string(GramKind kind) {
    switch (kind) {
        case GramKind::First: return "first";
        case GramKind::Second: return "second";
        case GramKind::Third: return "third";
    }
    return "unknown";
}

double solve_theta(double target) {
    static const double theta_floor = theta(10.0).theta;
    if (!(target >= theta_floor)) {
        throw DomainError("solve_theta: target lies below theta(10); Gram points are restricted to t >= 10");
    }
    const double y = (target + kPi / 8.0) / (kPi * std::exp(1.0));
    double t = 2.0 * kPi * std::exp(1.0) * std::exp(boost::math::lambert_w0(std::max(y, -1.0 / std::exp(1.0))));
    t = std::max(t, 10.0);
    for (int iter = 0; iter < 100; ++iter) {
        const auto e = theta(t);
        const double dt = (e.theta - target) / e.theta_prime;
        t = std::max(10.0, t - dt);
        if (std::abs(dt) <= 1e-13 * std::max(1.0, t)) return t;
    }
    throw ConvergenceError("solve_theta: Newton did not converge");
}

std::vector<GramPoint> gram_points(GramKind kind, std::int64_t n_from, std::int64_t count,
                                   const ThirdKindOptions& third) {
    if (count < 0) throw DomainError("gram_points: count must be >= 0");
    if (n_from < 0) throw DomainError("gram_points: index must be >= 0");
    std::vector<GramPoint> out;
    if (count == 0) return out;

    if (kind != GramKind::Third) {
        const double unit = kind == GramKind::First ? kPi : kPi / 2.0;
        for (std::int64_t n = n_from; n < n_from + count; ++n) {
            out.push_back({kind, n, solve_theta(static_cast<double>(n - 1) * unit)});
        }
        return out;
    }

    if (n_from < 1) throw DomainError("gram_points: third-kind indices start at 1");
    // Window anchored on first-kind points with two intervals of slack each side.
    const double lo = solve_theta(static_cast<double>(std::max<std::int64_t>(n_from - 3, 1) - 1) * kPi);
    const double hi = solve_theta(static_cast<double>(n_from + count + 1) * kPi);
    FunctionLabel label;
    label.kind = FunctionLabel::Kind::ZAlpha;
    label.alpha = 0.0;
    label.mode = third.mode;
    label.policy = third.policy;
    label.plan = third.plan;
    const auto zeros = zeros_of(label, lo, hi, third.step, third.tol);
    if (zeros.zeros.empty()) return out;

    const std::int64_t first_index =
        static_cast<std::int64_t>(std::ceil(theta(zeros.zeros.front()).theta / kPi)) + 1;
    for (std::size_t i = 0; i < zeros.zeros.size(); ++i) {
        const std::int64_t n = first_index + static_cast<std::int64_t>(i);
        if (n >= n_from && n < n_from + count) out.push_back({GramKind::Third, n, zeros.zeros[i]});
    }
    return out;
}

std::string to_string(FunctionLabel::Kind kind) {
    using K = FunctionLabel::Kind;
    switch (kind) {
        case K::ZAlpha: return "z_alpha";
        case K::YAlpha: return "y_alpha";
        case K::Q: return "q";
        case K::ZSequence: return "z_sequence";
        case K::CosTheta: return "cos_theta";
        case K::ZOracle: return "z_oracle";
        case K::YOracle: return "y_oracle";
        case K::ZRiemannSiegel: return "z_rs";
    }
    return "unknown";
}

FunctionLabel::Kind parse_function_kind(const std::string& name) {
    using K = FunctionLabel::Kind;
    for (K k : {K::ZAlpha, K::YAlpha, K::Q, K::ZSequence, K::CosTheta, K::ZOracle, K::YOracle, K::ZRiemannSiegel}) {
        if (to_string(k) == name) return k;
    }
    throw DomainError("unknown function '" + name + "'");
}

namespace {

bool uses_table(FunctionLabel::Kind k) {
    using K = FunctionLabel::Kind;
    return k == K::ZAlpha || k == K::YAlpha || k == K::Q || k == K::ZSequence;
}

std::string plan_text(const FunctionLabel& label, double lo, double hi) {
    if (label.plan) return label.plan->describe();
    if (resolve_policy(label.policy, label.mode) == PlanPolicy::Tracking) return to_string(label.mode) + ":tracking";
    return frozen_plan(label.mode, lo, hi).describe();
}

TableSource label_source(const FunctionLabel& label, double lo, double hi) {
    if (label.plan) {
        TableFactory factory(*label.plan, label.perturbation);
        return [factory](double t) { return factory(t); };
    }
    return make_table_source(label.mode, lo, hi, label.policy, label.perturbation);
}

}  // namespace

std::string FunctionLabel::describe(double lo, double hi) const {
    std::ostringstream os;
    os.precision(17);
    os << to_string(kind);
    if (kind != Kind::CosTheta && kind != Kind::ZRiemannSiegel) os << "(alpha=" << alpha;
    else os << "(";
    if (kind == Kind::Q || kind == Kind::ZSequence) os << ",index=" << index;
    if (uses_table(kind)) {
        os << ",plan=" << plan_text(*this, lo, hi);
        if (perturbation) os << ",perturb=" << perturbation->n0 << ":" << perturbation->phi;
    }
    os << ")";
    return os.str();
}

RealFunction make_function(const FunctionLabel& label, double lo, double hi) {
    using K = FunctionLabel::Kind;
    const double alpha = label.alpha;
    const std::int64_t index = label.index;
    switch (label.kind) {
        case K::CosTheta:
            return [](double t) { return std::cos(theta(t).theta); };
        case K::ZOracle:
            return [alpha](double t) { return z_alpha_oracle(t, alpha).first; };
        case K::YOracle:
            return [alpha](double t) { return z_alpha_oracle(t, alpha).second; };
        case K::ZRiemannSiegel:
            return [](double t) { return z_riemann_siegel(t); };
        default:
            break;
    }
    const TableSource tables = label_source(label, lo, hi);
    switch (label.kind) {
        case K::ZAlpha:
            return [tables, alpha](double t) { return z_alpha(tables(t), alpha); };
        case K::YAlpha:
            return [tables, alpha](double t) { return y_alpha(tables(t), alpha); };
        case K::Q:
            return [tables, index](double t) { return q_k(tables(t), index); };
        case K::ZSequence:
            return [tables, alpha, index](double t) { return z_sequence(tables(t), alpha, index).z_seq.back(); };
        default:
            break;
    }
    throw DomainError("make_function: unsupported label");
}

ZeroList zeros_of(const std::string& label, const RealFunction& f, double lo, double hi, double step, double tol,
                  unsigned workers) {
    ZeroList out;
    out.label = label;
    out.lo = lo;
    out.hi = hi;
    out.step = step;
    out.refine_tol = tol;
    for (const auto& br : scan_sign_changes(f, lo, hi, step, workers)) {
        out.zeros.push_back(refine_root(f, br, tol));
    }
    out.tangent.assign(out.zeros.size(), false);
    return out;
}

ZeroList zeros_of(const FunctionLabel& label, double lo, double hi, double step, double tol, unsigned workers) {
    if (!(lo < hi)) {
        ZeroList empty;
        empty.label = label.describe(lo, hi);
        empty.lo = lo;
        empty.hi = hi;
        empty.step = step;
        empty.refine_tol = tol;
        return empty;
    }
    return zeros_of(label.describe(lo, hi), make_function(label, lo, hi), lo, hi, step, tol, workers);
}

std::vector<EvenZero> detect_even_zero(const RealFunction& f, double lo, double hi, double step, double eps) {
    if (!(eps > 0.0)) throw DomainError("detect_even_zero: eps must be > 0");
    std::vector<EvenZero> out;
    const auto grid = scan_grid(lo, hi, step);
    if (grid.size() < 3) return out;
    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) v[i] = f(grid[i]);

    auto same_side = [](double a, double b) { return (a > 0.0 && b > 0.0) || (a < 0.0 && b < 0.0); };

    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        const double left = v[i - 1];
        const double mid = v[i];
        const double right = v[i + 1];
        if (!(std::abs(mid) <= std::abs(left) && std::abs(mid) <= std::abs(right))) continue;
        if (!same_side(left, right)) continue;
        if (mid != 0.0 && !same_side(left, mid)) continue;

        const double s = left > 0.0 ? 1.0 : -1.0;
        auto g = [&](double x) { return s * f(x); };
        std::uintmax_t iters = 200;
        const auto [tmin, gmin] =
            boost::math::tools::brent_find_minima(g, grid[i - 1], grid[i + 1], std::numeric_limits<double>::digits / 2, iters);
        const double value = s * gmin;
        if (!(std::abs(value) < eps)) continue;
        // Opposite sign at the extremum means a close simple pair, not a tangency.
        if (value != 0.0 && !same_side(value, left)) continue;
        if (!out.empty() && std::abs(out.back().t - tmin) < step) {
            if (std::abs(value) < std::abs(out.back().value)) out.back() = {tmin, value};
            continue;
        }
        out.push_back({tmin, value});
    }
    return out;
}

void merge_even_zeros(ZeroList& list, const std::vector<EvenZero>& even) {
    for (const auto& e : even) {
        const auto it = std::lower_bound(list.zeros.begin(), list.zeros.end(), e.t);
        const auto pos = static_cast<std::size_t>(it - list.zeros.begin());
        list.zeros.insert(it, e.t);
        list.tangent.insert(list.tangent.begin() + static_cast<std::ptrdiff_t>(pos), true);
    }
}

}  // namespace hardylab
