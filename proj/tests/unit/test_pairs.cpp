#include <doctest.h>

#include <cmath>
#include <vector>

#include "hardylab/error.hpp"
#include "hardylab/pairs.hpp"

using namespace hardylab;

namespace {

// Z_0 = sin t and Q_j = 2^-j h(t): the n = 2 term alone carries Q.
TableSource sine_source(double (*h)(double)) {
    return [h](double t) {
        const double v = h(t);
        return TermTable::from_terms(t, theta(t).theta, WeightPlan::sharp_cutoff(2), {std::sin(t) - v, v});
    };
}

}  // namespace

TEST_CASE("classify_shift covers every sign pattern") {
    CHECK(classify_shift(0.3, -0.4, 1e-9) == PairClass::Lehmer);
    CHECK(classify_shift(-0.3, 0.4, 1e-9) == PairClass::Gordon);
    CHECK(classify_shift(0.3, 0.4, 1e-9) == PairClass::RightPair);
    CHECK(classify_shift(-0.3, -0.4, 1e-9) == PairClass::LeftPair);
    CHECK(classify_shift(0.0, 0.4, 1e-9) == PairClass::Degenerate);
    CHECK(classify_shift(0.3, 5e-10, 1e-9) == PairClass::Degenerate);
    CHECK(classify_shift(-1e-9, -1e-9, 1e-9) == PairClass::Degenerate);
}

TEST_CASE("classify_pairs examples") {
    const std::vector<double> z0{10.0, 20.0};
    const auto lehmer = classify_pairs(std::vector<double>{10.3, 19.6}, z0, 1e-10);
    REQUIRE(lehmer.size() == 1);
    CHECK(lehmer[0].cls == PairClass::Lehmer);
    CHECK(lehmer[0].gap == doctest::Approx(9.3));
    CHECK(lehmer[0].za_left > lehmer[0].z0_left);
    CHECK(lehmer[0].za_right < lehmer[0].z0_right);

    CHECK(classify_pairs(std::vector<double>{9.7, 20.4}, z0, 1e-10)[0].cls == PairClass::Gordon);

    const std::vector<double> same{1.0, 2.0, 3.5, 7.0};
    for (const auto& r : classify_pairs(same, same, 1e-10)) CHECK(r.cls == PairClass::Degenerate);

    CHECK_THROWS_AS(classify_pairs(std::vector<double>{1.0, 2.0, 3.0}, std::vector<double>{1.0, 2.0}, 1e-10),
                    ContractError);
}

TEST_CASE("classify_pairs on ZeroLists uses their refine tolerance") {
    ZeroList a;
    a.refine_tol = 1e-6;
    a.zeros = {10.0000005, 20.1};
    ZeroList z;
    z.refine_tol = 1e-10;
    z.zeros = {10.0, 20.0};
    const auto r = classify_pairs(a, z);
    REQUIRE(r.size() == 1);
    CHECK(r[0].cls == PairClass::Degenerate);
}

TEST_CASE("lehmer_candidates_z0 on synthetic tables") {
    const Window w{10.0, 30.0};
    const auto pos = lehmer_candidates_z0(w, sine_source([](double) { return 1.0; }), 4);
    // sin t > 0 on (4pi, 5pi), (6pi, 7pi), (8pi, 9pi)
    REQUIRE(pos.candidates.size() == 3);
    CHECK(pos.intervals_checked == 5);
    for (const auto& c : pos.candidates) {
        CHECK(c.z0_sign == 1);
        CHECK(c.q_sign_left.size() == 3);
        CHECK(std::abs(std::sin(0.5 * (c.left + c.right)) - 1.0) < 1e-6);
    }

    const auto alt = lehmer_candidates_z0(w, sine_source([](double t) { return std::cos(t); }), 4);
    CHECK(alt.candidates.empty());
    CHECK_THROWS_AS(lehmer_candidates_z0(w, sine_source([](double) { return 1.0; }), 0), DomainError);
}

TEST_CASE("GUE reference") {
    CHECK(gue_pair_correlation(0.0) == 0.0);
    CHECK(gue_pair_correlation(1e6 + 0.5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(gue_pair_correlation(1.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("gap statistics on synthetic zeros") {
    const double t0 = 1000.0;
    const double dens = theta_density(t0);
    const DensityFunction flat = [dens](double) { return dens; };
    std::vector<double> z;
    for (int i = 0; i < 40; ++i) z.push_back(t0 + i / dens);
    auto rep = gap_statistics(z, flat);
    REQUIRE(rep.normalized_gaps.size() == 39);
    for (double g : rep.normalized_gaps) CHECK(g == doctest::Approx(1.0).epsilon(1e-9));
    long total = 0;
    for (auto c : rep.gap_histogram.counts) total += c;
    CHECK(total == 39);
    CHECK(rep.gue_reference.size() == rep.pair_histogram.counts.size());

    // off the bin edges, so rounding cannot move a count
    z.clear();
    for (int i = 0; i < 40; ++i) z.push_back(t0 + 1.037 * i / dens);
    rep = gap_statistics(z, flat);
    std::vector<double> shifted;
    for (double x : z) shifted.push_back(x + 123.0);
    const auto rep2 = gap_statistics(shifted, flat);
    for (std::size_t i = 0; i < z.size() - 1; ++i) {
        CHECK(rep2.normalized_gaps[i] == doctest::Approx(rep.normalized_gaps[i]).epsilon(1e-9));
    }
    CHECK(rep2.gap_histogram.counts == rep.gap_histogram.counts);
    CHECK(rep2.pair_histogram.counts == rep.pair_histogram.counts);

    std::vector<double> wide{0.0, 1.0, 2.0, 100.0};
    for (int i = 0; i < 20; ++i) wide.push_back(200.0 + i);
    long wide_total = 0;
    for (auto c : gap_statistics(wide, [](double) { return 1.0; }).gap_histogram.counts) wide_total += c;
    CHECK(wide_total == static_cast<long>(wide.size()) - 1);

    CHECK_THROWS_AS(gap_statistics(std::vector<double>(5, 1.0)), ContractError);
}

TEST_CASE("min_gap") {
    const auto g = min_gap({1.0, 2.0, 2.25, 4.0});
    CHECK(g.t_left == 2.0);
    CHECK(g.t_right == 2.25);
    CHECK(g.gap == 0.25);
    CHECK_THROWS_AS(min_gap({1.0}), ContractError);
}
