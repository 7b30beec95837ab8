#include "hardylab/specfun.hpp"

#include <array>
#include <cmath>
#include <string>

#include "hardylab/error.hpp"

namespace hardylab {
namespace {

// B_2 .. B_20
constexpr std::array<double, 10> kBernoulli = {
    1.0 / 6.0,       -1.0 / 30.0,        1.0 / 42.0,        -1.0 / 30.0,
    5.0 / 66.0,      -691.0 / 2730.0,    7.0 / 6.0,         -3617.0 / 510.0,
    43867.0 / 798.0, -174611.0 / 330.0,
};

// Below this modulus the Stirling tail B_20 / (380 z^19) is no longer
// under 1e-20, so we shift upward first.
constexpr double kShiftModulus = 15.0;

const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);

void check_pole(Complex z, const char* who) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
        throw PoleError(std::string(who) + ": pole at non-positive integer z = " +
                        std::to_string(z.real()));
    }
}

}  // namespace

Complex log_gamma_complex(Complex z) {
    check_pole(z, "log_gamma_complex");

    // log Gamma(z) = log Gamma(z + k) - sum log(z + i), principal logs.
    Complex shift{0.0, 0.0};
    while (std::abs(z) < kShiftModulus) {
        shift += std::log(z);
        z += 1.0;
    }

    const Complex inv = 1.0 / z;
    const Complex inv2 = inv * inv;
    Complex series{0.0, 0.0};
    Complex power = inv;  // z^{-(2k-1)}
    for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
        const double twok = 2.0 * static_cast<double>(k);
        series += kBernoulli[k - 1] / (twok * (twok - 1.0)) * power;
        power *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + series - shift;
}

Complex digamma_complex(Complex z) {
    check_pole(z, "digamma_complex");

    Complex shift{0.0, 0.0};
    while (std::abs(z) < kShiftModulus) {
        shift += 1.0 / z;
        z += 1.0;
    }

    const Complex inv = 1.0 / z;
    const Complex inv2 = inv * inv;
    Complex series{0.0, 0.0};
    Complex power = inv2;  // z^{-2k}
    for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
        series += kBernoulli[k - 1] / (2.0 * static_cast<double>(k)) * power;
        power *= inv2;
    }
    return std::log(z) - 0.5 * inv - series - shift;
}

ThetaEval theta(double t) {
    if (!(t >= 0.0)) throw DomainError("theta: t must be >= 0, got " + std::to_string(t));
    static const double half_log_pi = 0.5 * std::log(kPi);
    const Complex z{0.25, 0.5 * t};
    ThetaEval out;
    out.t = t;
    out.theta = log_gamma_complex(z).imag() - t * half_log_pi;
    // d/dt Im logGamma(1/4 + it/2) = Re psi(1/4 + it/2) / 2
    out.theta_prime = 0.5 * digamma_complex(z).real() - half_log_pi;
    return out;
}

double theta_asymptotic(double t) {
    return 0.5 * t * std::log(t / (2.0 * kPi)) - 0.5 * t - kPi / 8.0 + 1.0 / (48.0 * t);
}

}  // namespace hardylab
