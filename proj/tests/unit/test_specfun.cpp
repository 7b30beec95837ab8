#include <doctest.h>

#include <cmath>

#include "hardylab/error.hpp"
#include "hardylab/specfun.hpp"
#include "reference_values.hpp"

using namespace hardylab;
namespace fx = hardylab::fixtures;

TEST_CASE("log gamma against multiprecision references") {
    const auto a = log_gamma_complex({0.25, 10.0});
    CHECK(std::abs(a.real() - fx::kLogGammaQuarterTenIRe) <= 1e-13 * std::abs(fx::kLogGammaQuarterTenIRe));
    CHECK(std::abs(a.imag() - fx::kLogGammaQuarterTenIIm) <= 1e-13 * std::abs(fx::kLogGammaQuarterTenIIm));

    const auto b = log_gamma_complex({0.25, 2500.0});
    CHECK(std::abs(b.real() - fx::kLogGammaQuarter2500IRe) <= 1e-13 * std::abs(fx::kLogGammaQuarter2500IRe));
    CHECK(std::abs(b.imag() - fx::kLogGammaQuarter2500IIm) <= 1e-13 * std::abs(fx::kLogGammaQuarter2500IIm));

    const auto c = log_gamma_complex({3.5, -0.75});
    CHECK(std::abs(c.real() - fx::kLogGamma35Re) <= 1e-13);
    CHECK(std::abs(c.imag() - fx::kLogGamma35Im) <= 1e-13);
}

TEST_CASE("log gamma on the real axis matches lgamma") {
    for (double x : {0.1, 0.5, 1.0, 2.5, 7.0, 33.3, 150.0}) {
        CHECK(log_gamma_complex({x, 0.0}).real() == doctest::Approx(std::lgamma(x)).epsilon(1e-14));
    }
}

TEST_CASE("log gamma rejects poles") {
    CHECK_THROWS_AS(log_gamma_complex({0.0, 0.0}), PoleError);
    CHECK_THROWS_AS(log_gamma_complex({-3.0, 0.0}), PoleError);
    CHECK_NOTHROW(log_gamma_complex({-2.5, 0.0}));
}

TEST_CASE("digamma") {
    const double euler_gamma = 0.57721566490153286061;
    CHECK(digamma_complex({1.0, 0.0}).real() == doctest::Approx(-euler_gamma).epsilon(1e-14));
    // psi(z+1) = psi(z) + 1/z
    const Complex z{0.25, 7.5};
    const Complex lhs = digamma_complex(z + 1.0);
    const Complex rhs = digamma_complex(z) + 1.0 / z;
    CHECK(std::abs(lhs - rhs) < 1e-13);
}

TEST_CASE("theta basics") {
    CHECK(theta(0.0).theta == 0.0);
    CHECK_THROWS_AS(theta(-1.0), DomainError);
    CHECK(std::abs(theta(fx::kGramThetaZero).theta) < 1e-12);
}

TEST_CASE("theta agrees with its asymptotic series on [10, 1e4]") {
    double worst = 0.0;
    for (double t = 10.0; t <= 1e4; t += 0.5) {
        worst = std::max(worst, std::abs(theta(t).theta - theta_asymptotic(t)));
    }
    CHECK(worst <= 1e-4);
}

TEST_CASE("theta branch is continuous on [0, 1000]") {
    double prev = theta(0.0).theta;
    double worst = 0.0;
    for (int i = 1; i <= 100000; ++i) {
        const double cur = theta(i * 0.01).theta;
        worst = std::max(worst, std::abs(cur - prev));
        prev = cur;
    }
    CHECK(worst < 0.1);
}

TEST_CASE("theta prime matches central differences") {
    const double h = 1e-3;
    double worst = 0.0;
    for (double t = 10.0; t <= 1e4; t *= 1.01) {
        const double fd = (theta(t + h).theta - theta(t - h).theta) / (2 * h);
        worst = std::max(worst, std::abs(fd - theta(t).theta_prime));
    }
    CHECK(worst <= 1e-6);
}
