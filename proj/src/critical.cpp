#include "hardylab/critical.hpp"

#include <cmath>
#include <limits>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "hardylab/error.hpp"

namespace hardylab {

double window_extremum(const TableSource& tables, double alpha, double t_lo, double t_hi, double step) {
    auto f = [&](double t) { return z_alpha(tables(t), alpha); };
    const double edge = f(t_lo);
    if (edge == 0.0 || (edge > 0.0) != (f(t_hi) > 0.0)) {
        throw ContractError("window_extremum: window ends must share a nonzero sign");
    }
    const double s = edge > 0.0 ? 1.0 : -1.0;
    const auto grid = scan_grid(t_lo, t_hi, step);
    std::size_t best = 0;
    double best_val = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = s * f(grid[i]);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    const double a = grid[best > 0 ? best - 1 : 0];
    const double b = grid[std::min(best + 1, grid.size() - 1)];
    std::uintmax_t iters = 200;
    const auto g = [&](double t) { return s * f(t); };
    const auto res = boost::math::tools::brent_find_minima(g, a, b, std::numeric_limits<double>::digits / 2, iters);
    return s * std::min(res.second, best_val);
}

CriticalSweep critical_pair_sweep(const TableSource& tables, double t_lo, double t_hi, double alpha_lo,
                                  double alpha_hi, int samples, double step, double eps) {
    if (samples < 2) throw DomainError("critical_pair_sweep: need at least 2 samples");
    CriticalSweep out;
    const double s = z_alpha(tables(t_lo), alpha_lo) > 0.0 ? 1.0 : -1.0;
    // Crossing function: negative while a pair exists, positive once it is gone.
    auto crossing = [&](double alpha) { return s * window_extremum(tables, alpha, t_lo, t_hi, step); };

    for (int i = 0; i < samples; ++i) {
        const double alpha = alpha_lo + (alpha_hi - alpha_lo) * i / (samples - 1);
        out.samples.emplace_back(alpha, s * crossing(alpha));
    }
    for (std::size_t i = 0; i + 1 < out.samples.size(); ++i) {
        const double ca = s * out.samples[i].second;
        const double cb = s * out.samples[i + 1].second;
        if (ca * cb > 0.0) continue;
        double a = out.samples[i].first;
        double b = out.samples[i + 1].first;
        if (ca != 0.0 && cb != 0.0) {
            std::uintmax_t iters = 200;
            auto done = [](double x, double y) { return std::abs(y - x) <= 1e-14; };
            std::tie(a, b) = boost::math::tools::toms748_solve(crossing, a, b, ca, cb, done, iters);
        }
        // Prefer the endpoint on the no-crossing side.
        double star = crossing(a) >= 0.0 ? a : b;
        if (ca == 0.0) star = out.samples[i].first;
        else if (cb == 0.0) star = out.samples[i + 1].first;
        out.alpha_star = star;
        const double pad = 2.0 * step;
        out.hits = detect_even_zero([&](double t) { return z_alpha(tables(t), star); }, t_lo + pad, t_hi - pad, step,
                                    eps);
        break;
    }
    return out;
}

}  // namespace hardylab
