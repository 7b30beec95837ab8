#pragma once

#include <complex>

namespace hardylab {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Principal branch of log Gamma(z) for Re(z) > 0 (and general z off the
/// non-positive integers). Stirling series after shifting |z| above 15.
/// Throws PoleError at z = 0, -1, -2, ...
Complex log_gamma_complex(Complex z);

/// Digamma psi(z) = d/dz log Gamma(z), same shifting scheme.
Complex digamma_complex(Complex z);

/// Riemann-Siegel theta and its derivative at a single point.
struct ThetaEval {
    double t = 0.0;
    double theta = 0.0;        ///< radians, continuous branch
    double theta_prime = 0.0;  ///< d theta / dt
};

/// theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log(pi), for t >= 0.
ThetaEval theta(double t);

/// Large-t expansion (t/2) log(t/2pi) - t/2 - pi/8 + 1/(48t). Used as a
/// consistency reference and as the starting guess for Gram solves.
double theta_asymptotic(double t);

}  // namespace hardylab
