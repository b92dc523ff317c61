#include "chebtrot/chebgrid.hpp"
#include "chebtrot/errors.hpp"
#include "frozen_values.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace chebtrot;

TEST_CASE("grid nodes") {
    auto g = make_grid(4, 1.0);
    CHECK(g.node(0) == doctest::Approx(std::cos(std::numbers::pi / 8)));
    CHECK(g.node(3) == -g.node(0));
    CHECK(g.node(2) == -g.node(1));
    auto h = make_grid(6, 0.3);
    for (int i = 0; i < 6; ++i) CHECK(std::abs(h.node(i)) <= 0.3);
    CHECK_THROWS_AS(make_grid(3, 1.0), InputError);
    CHECK_THROWS_AS(make_grid(0, 1.0), InputError);
    CHECK_THROWS_AS(make_grid(4, 0.0), InputError);
}

TEST_CASE("weights at zero, n=4") {
    auto d = weights_at_zero(make_grid(4, 1.0));
    CHECK(d(0) == doctest::Approx(frozen::kWeightN4_0).epsilon(1e-14));
    CHECK(d(1) == doctest::Approx(frozen::kWeightN4_1).epsilon(1e-14));
    CHECK(d(2) == doctest::Approx(frozen::kWeightN4_2).epsilon(1e-14));
    CHECK(d(3) == doctest::Approx(frozen::kWeightN4_3).epsilon(1e-14));
    CHECK(d.cwiseAbs().sum() == doctest::Approx(frozen::kWeightN4L1).epsilon(1e-14));
    CHECK(d.sum() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("lebesgue factor") {
    CHECK(lebesgue_factor(1) == doctest::Approx(frozen::kLebesgue1).epsilon(1e-15));
    CHECK(lebesgue_factor(2) == doctest::Approx(frozen::kLebesgue2).epsilon(1e-15));
}

TEST_CASE("fit reproduces polynomials and extrapolation flag") {
    auto g = make_grid(6, 0.5);
    std::vector<double> y;
    auto poly = [](double s) { return 1.5 - 2 * s * s + 0.25 * std::pow(s, 4) + 3 * std::pow(s, 5); };
    for (int i = 0; i < 6; ++i) y.push_back(poly(g.node(i)));
    auto f = fit(g, y);
    CHECK(f.estimate_at_zero == doctest::Approx(1.5).epsilon(1e-13));
    for (double s : {-0.4, 0.0, 0.1, 0.33}) CHECK(f.evaluate(s) == doctest::Approx(poly(s)).epsilon(1e-12));
    CHECK(f.extrapolates(0.6));
    CHECK_FALSE(f.extrapolates(0.5));
    std::vector<double> short_y(5, 0.0);
    CHECK_THROWS_AS(fit(g, short_y), InputError);
    y[2] = std::nan("");
    CHECK_THROWS_AS(fit(g, y), InputError);
}

TEST_CASE("variance propagation") {
    auto g = make_grid(4, 1.0);
    std::vector<double> sig{0.1, 0.2, 0.2, 0.1};
    auto v = propagate_variance(sig, g);
    const double want = std::sqrt(2 * std::pow(0.1 * frozen::kWeightN4_0, 2) + 2 * std::pow(0.2 * frozen::kWeightN4_1, 2));
    CHECK(v.exact == doctest::Approx(want).epsilon(1e-13));
    CHECK(v.bound == doctest::Approx(std::sqrt(2.0) * 0.2));
    sig[0] = -1;
    CHECK_THROWS_AS(propagate_variance(sig, g), InputError);
}
