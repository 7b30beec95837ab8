#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hardylab/hardy.hpp"
#include "hardylab/roots.hpp"

namespace hardylab {

/// Signed extremum of Z_alpha on a window whose ends share a sign s:
/// s * min_t (s * Z_alpha(t)). Negative means Z_alpha dips through zero
/// (a simple pair exists), positive means it stays clear, zero is a
/// tangency.
double window_extremum(const TableSource& tables, double alpha, double t_lo, double t_hi, double step);

struct CriticalSweep {
    std::vector<std::pair<double, double>> samples;  ///< (alpha, extremum)
    std::optional<double> alpha_star;                ///< extremum == 0 here
    std::vector<EvenZero> hits;                      ///< detect_even_zero at alpha_star
};

/// Sweeps alpha over [alpha_lo, alpha_hi] in `samples` steps, brackets the
/// first sign change of the window extremum and bisects it down to a
/// tangency. alpha_star is taken on the side where Z_alpha does not cross
/// zero, so the hit is an even zero rather than a very close pair.
CriticalSweep critical_pair_sweep(const TableSource& tables, double t_lo, double t_hi, double alpha_lo,
                                  double alpha_hi, int samples, double step, double eps);

}  // namespace hardylab
