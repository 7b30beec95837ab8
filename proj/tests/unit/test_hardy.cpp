#include <doctest.h>

#include <cmath>
#include <vector>

#include "hardylab/error.hpp"
#include "hardylab/hardy.hpp"
#include "hardylab/roots.hpp"
#include "reference_values.hpp"

using namespace hardylab;
namespace fx = hardylab::fixtures;

TEST_CASE("table construction") {
    const auto t100 = term_table(100.0, WeightPlan::sigmoid(100.0));
    CHECK(std::abs(static_cast<double>(t100.size()) - (std::floor(100.0 / kPi) + 40.0)) <= 3.0);

    for (auto mode : {WeightMode::ExactCesaro, WeightMode::Sigmoid, WeightMode::SharpCutoff}) {
        const auto tab = term_table(73.2, WeightPlan::for_t(mode, 73.2));
        const double w1 = tab.weights()[0];
        CHECK(tab.cos_term(1) == doctest::Approx(std::cos(theta(73.2).theta) * w1).epsilon(1e-15));
        CHECK(tab.sin_term(1) == doctest::Approx(std::sin(theta(73.2).theta) * w1).epsilon(1e-15));
        if (mode == WeightMode::Sigmoid) {
            CHECK(std::abs(w1 - 1.0) <= 1.001 * std::exp(1.0 - 73.2 / kPi));
        } else {
            CHECK(w1 == 1.0);
        }
    }

    CHECK_THROWS_AS(TableFactory(WeightPlan::exact_cesaro(2, 2)), ContractError);
    CHECK_THROWS_AS(TableFactory(WeightPlan::sharp_cutoff(10), PhasePerturbation{1, 0.1}), DomainError);
    CHECK_THROWS_AS(TableFactory(WeightPlan::sharp_cutoff(10))(5.0), DomainError);
}

TEST_CASE("phase perturbation") {
    const auto plan = WeightPlan::sigmoid(200.0);
    const auto plain = term_table(200.0, plan);
    const auto zero = term_table(200.0, plan, PhasePerturbation{7, 0.0});
    REQUIRE(plain.size() == zero.size());
    for (std::size_t n = 1; n <= plain.size(); ++n) {
        CHECK(plain.cos_term(n) == zero.cos_term(n));
        CHECK(plain.sin_term(n) == zero.sin_term(n));
    }
    CHECK(z_alpha(plain, 0.5) == z_alpha(zero, 0.5));
    CHECK(y_alpha(plain, 0.5) == y_alpha(zero, 0.5));

    const auto shifted = term_table(200.0, plan, PhasePerturbation{7, 0.3});
    for (std::size_t n = 1; n <= plain.size(); ++n) {
        if (n == 7) {
            CHECK(plain.cos_term(n) != shifted.cos_term(n));
        } else {
            CHECK(plain.cos_term(n) == shifted.cos_term(n));
            CHECK(plain.sin_term(n) == shifted.sin_term(n));
        }
    }
}

TEST_CASE("z_alpha and y_alpha on synthetic tables") {
    const auto plan = WeightPlan::sharp_cutoff(4);
    const auto zero = TermTable::from_terms(50.0, 1.0, plan, {0, 0, 0, 0}, {0, 0, 0, 0});
    CHECK(z_alpha(zero, 0.7) == 0.0);
    CHECK(y_alpha(zero, 0.7) == 0.0);

    const auto tab = TermTable::from_terms(50.0, 1.0, plan, {1, 2, 3, 4}, {1, 1, 1, 1});
    CHECK(z_alpha(tab, 1.0) == doctest::Approx(1 + 1 + 1 + 1));
    CHECK(y_alpha(tab, 2.0) == doctest::Approx(-(1 + 0.25 + 1.0 / 9 + 1.0 / 16)));
}

TEST_CASE("Z_6 tracks cos theta within the tail bound") {
    for (double t = 50.0; t <= 80.0; t += 0.05) {
        const auto tab = term_table(t, WeightPlan::sigmoid(t));
        double tail = 0.0;
        const auto w = tab.weights();
        for (std::size_t n = 2; n <= tab.size(); ++n) tail += std::pow(static_cast<double>(n), -6.0) * w[n - 1];
        CHECK(std::abs(z_alpha(tab, 6.0) - std::cos(tab.theta())) <= tail + 1e-15);
    }
}

TEST_CASE("Y_6 at the theta = 0 Gram point is a direct finite sum") {
    const double t = fx::kGramThetaZero;
    const auto tab = term_table(t, WeightPlan::sigmoid(t));
    double ref = 0.0;
    const auto w = tab.weights();
    for (std::size_t n = 1; n <= tab.size(); ++n) {
        const double x = static_cast<double>(n);
        ref -= std::pow(x, -6.0) * std::sin(-t * std::log(x)) * w[n - 1];
    }
    CHECK(y_alpha(tab, 6.0) == doctest::Approx(ref).epsilon(1e-9));
    const double n2 = -std::pow(2.0, -6.0) * std::sin(-t * std::log(2.0));
    CHECK(std::abs(y_alpha(tab, 6.0) - n2) < 2.0 * std::pow(3.0, -6.0) * 1.5);
}

TEST_CASE("sigmoid Z_1/2 near the first zero and Y_1/2 at t = 30") {
    const double z1 = fx::kFirstZeros[0];
    CHECK(std::abs(z_alpha(term_table(z1, WeightPlan::sigmoid(z1)), 0.5)) <= 0.05);

    const auto tab = term_table(30.0, WeightPlan::sigmoid(30.0));
    const auto [zo, yo] = z_alpha_oracle(30.0, 0.5);
    CHECK(std::abs(y_alpha(tab, 0.5) - yo) <= 0.05);
    CHECK(std::abs(z_alpha(tab, 0.5) - zo) <= 0.05);
}

TEST_CASE("sigmoid and oracle Z_1/2 signs agree on [30, 100]") {
    int total = 0;
    int bad = 0;
    for (double t = 30.0; t <= 100.0; t += 0.05) {
        ++total;
        const double z = z_alpha(term_table(t, WeightPlan::sigmoid(t)), 0.5);
        const double o = z_alpha_oracle(t, 0.5).first;
        if ((z > 0) != (o > 0)) {
            ++bad;
            double nearest = 1e9;
            for (double zz : fx::kFirstZeros) nearest = std::min(nearest, std::abs(zz - t));
            CHECK(nearest <= 1e-2);
        }
    }
    CHECK(bad <= total / 100);
}

TEST_CASE("Riemann-Siegel") {
    const double p = 0.5;
    CHECK(riemann_siegel_psi(p) == doctest::Approx(-std::cos(5.0 * kPi / 8.0)).epsilon(1e-14));
    // continuous through the removable points
    for (double q : {0.25, 0.75}) {
        CHECK(riemann_siegel_psi(q) == doctest::Approx(0.5 * (riemann_siegel_psi(q - 1e-6) + riemann_siegel_psi(q + 1e-6))).epsilon(1e-6));
    }
    CHECK(std::abs(z_riemann_siegel(fx::kFirstZeros[1])) <= 0.02);
    const double t = 7005.1;
    CHECK(std::abs(z_riemann_siegel(t) - z_alpha_oracle(t, 0.5).first) <= 3.0 * std::pow(t, -0.75));
    CHECK_THROWS_AS(z_riemann_siegel(19.0), DomainError);
}

TEST_CASE("Euler-Maclaurin zeta") {
    CHECK(std::abs(zeta_euler_maclaurin({2.0, 0.0}, 64) - Complex(kPi * kPi / 6.0, 0.0)) <= 1e-12);
    CHECK(std::abs(zeta_euler_maclaurin({0.0, 0.0}, 64) - Complex(-0.5, 0.0)) <= 1e-12);
    const Complex a = zeta_euler_maclaurin({0.5, 25.0}, default_oracle_terms(25.0));
    CHECK(std::abs(a - Complex(fx::kZetaHalf25Re, fx::kZetaHalf25Im)) <= 1e-12);
    const Complex b = zeta_euler_maclaurin({0.75, 1000.0}, default_oracle_terms(1000.0));
    CHECK(std::abs(b - Complex(fx::kZeta075_1000Re, fx::kZeta075_1000Im)) <= 1e-11);
    CHECK_THROWS_AS(zeta_euler_maclaurin({1.0, 0.0}, 64), PoleError);
    CHECK_THROWS_AS(zeta_euler_maclaurin({-1.5, 0.0}, 64), DomainError);
    CHECK(euler_maclaurin_terms_sufficient({0.5, 100.0}, 200));
    CHECK_FALSE(euler_maclaurin_terms_sufficient({0.5, 100.0}, 40));
}

TEST_CASE("oracle pair") {
    const auto [z, y] = z_alpha_oracle(0.0, 2.0);
    CHECK(z == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-13));
    CHECK(std::abs(y) < 1e-15);

    const auto at_zero = z_alpha_oracle(fx::kFirstZeros[0], 0.5);
    CHECK(std::abs(at_zero.first) < 1e-12);
    CHECK(std::abs(at_zero.second) < 1e-12);

    double worst = 0.0;
    for (double t = 10.0; t <= 1000.0; t += 3.7) worst = std::max(worst, std::abs(z_alpha_oracle(t, 0.5).second));
    CHECK(worst <= 1e-9);
}

TEST_CASE("plan policies") {
    CHECK(resolve_policy(PlanPolicy::Auto, WeightMode::Sigmoid) == PlanPolicy::Tracking);
    CHECK(resolve_policy(PlanPolicy::Auto, WeightMode::ExactCesaro) == PlanPolicy::Frozen);
    CHECK(resolve_policy(PlanPolicy::Frozen, WeightMode::Sigmoid) == PlanPolicy::Frozen);

    const auto frozen = make_table_source(WeightMode::ExactCesaro, 100.0, 200.0);
    CHECK(frozen(120.0).plan() == frozen_plan(WeightMode::ExactCesaro, 100.0, 200.0));
    CHECK(frozen(180.0).plan() == frozen_plan(WeightMode::ExactCesaro, 100.0, 200.0));
    const auto tracking = make_table_source(WeightMode::Sigmoid, 100.0, 200.0);
    CHECK(tracking(120.0).plan() == WeightPlan::sigmoid(120.0));
}
