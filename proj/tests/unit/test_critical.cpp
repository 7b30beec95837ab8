#include <doctest.h>

#include <cmath>

#include "hardylab/critical.hpp"
#include "hardylab/error.hpp"

using namespace hardylab;

namespace {

TableSource parabola_source() {
    return [](double t) {
        const double base = (t - 15.0) * (t - 15.0);
        return TermTable::from_terms(t, 0.0, WeightPlan::sharp_cutoff(2), {base - 1.0, 2.0});
    };
}

}  // namespace

TEST_CASE("window extremum and tangency sweep on a synthetic family") {
    // Z_alpha(t) = (t-15)^2 - 1 + 2^(1-alpha): minimum 2^(1-alpha) - 1, zero at alpha = 1
    const auto src = parabola_source();
    CHECK(window_extremum(src, 0.0, 13.0, 17.0, 0.01) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(window_extremum(src, 2.0, 13.0, 17.0, 0.01) == doctest::Approx(-0.5).epsilon(1e-9));

    const auto sweep = critical_pair_sweep(src, 13.0, 17.0, 0.0, 2.0, 5, 0.01, 1e-6);
    REQUIRE(sweep.alpha_star.has_value());
    CHECK(*sweep.alpha_star == doctest::Approx(1.0).epsilon(1e-9));
    REQUIRE(sweep.hits.size() == 1);
    CHECK(std::abs(sweep.hits[0].t - 15.0) < 1e-3);
    CHECK(sweep.hits[0].value >= 0.0);
    CHECK(sweep.hits[0].value < 1e-6);

    const auto none = critical_pair_sweep(src, 13.0, 17.0, 0.0, 0.5, 5, 0.01, 1e-6);
    CHECK_FALSE(none.alpha_star.has_value());
    CHECK(none.hits.empty());
}

TEST_CASE("window extremum requires matching end signs") {
    const TableSource lin = [](double t) {
        return TermTable::from_terms(t, 0.0, WeightPlan::sharp_cutoff(2), {t - 15.0, 0.0});
    };
    CHECK_THROWS_AS(window_extremum(lin, 0.5, 13.0, 17.0, 0.01), ContractError);
}
