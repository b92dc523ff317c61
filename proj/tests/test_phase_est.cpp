#include "chebtrot/chebgrid.hpp"
#include "chebtrot/errors.hpp"
#include "chebtrot/phase_est.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace chebtrot;

namespace {

Matrix phase_unitary(double cycles_a, double cycles_b) {
    Matrix U = Matrix::Zero(2, 2);
    U(0, 0) = std::polar(1.0, 2 * std::numbers::pi * cycles_a);
    U(1, 1) = std::polar(1.0, 2 * std::numbers::pi * cycles_b);
    return U;
}

}  // namespace

TEST_CASE("window spec") {
    auto s = default_window_spec(6, 8);
    CHECK(s.sigma_over_T() == doctest::Approx(8.0));
    CHECK(s.in_regime());
    CHECK(s.F() == doctest::Approx(1.0 / 256));
    CHECK_FALSE(make_window_spec(6, 8, 1000.0, 1.0).in_regime());
    CHECK_THROWS_AS(make_window_spec(6, 5, 8.0, 1.0), InputError);
    CHECK(s.to_json().find("\"m\":6") != std::string::npos);
}

TEST_CASE("window state is normalized and symmetric") {
    auto w = make_window(5, 4.0, 1.0);
    CHECK(w.amplitudes.squaredNorm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(w.half_width() == 15);
    for (long x = 0; x <= 15; ++x) CHECK(w.amplitude(x) == w.amplitude(-x));
    CHECK(w.amplitude(16) == 0.0);
}

TEST_CASE("upsampling preserves the norm") {
    auto spec = default_window_spec(5, 8);
    auto w = make_window(spec.m, spec.sigma, spec.T);
    Vector up = upsample(w, spec.q);
    CHECK(up.squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(analytic_window_samples(spec).squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(upsample(w, 4), InputError);
}

TEST_CASE("budget components are positive and shrink with m") {
    auto b4 = window_error_budget(default_window_spec(4, 8));
    auto b8 = window_error_budget(default_window_spec(8, 12));
    CHECK(b4.eps_total > 0);
    CHECK(b4.eps_total == doctest::Approx(b4.eps_trunc + b4.eps_alias + b4.eps_renorm));
    CHECK(b8.eps_trunc < b4.eps_trunc);
}

TEST_CASE("phase distribution on an eigenstate") {
    const double phi = 0.1234;
    Matrix U = phase_unitary(phi, -0.3);
    Vector psi = Vector::Zero(2);
    psi(0) = 1.0;
    auto spec = default_window_spec(6, 9);
    auto dist = gqpe_distribution(U, psi, spec);
    CHECK(dist.probs.sum() == doctest::Approx(1.0));
    CHECK(std::abs(dist.circular_mean() - phi) <= 1.0 / 512);
    CHECK(dist.stddev() > 0);
    CHECK(dist.stddev() < 0.05);

    auto shots = sample_phases(dist, 4000, 42);
    auto stats = phase_statistics(shots);
    CHECK(std::abs(stats.mean - phi) <= 3.0 / 512);
    CHECK(stats.stddev == doctest::Approx(dist.stddev()).epsilon(0.1));
    CHECK(sample_phases(dist, 100, 42) == sample_phases(dist, 100, 42));
    CHECK(sample_phases(dist, 100, 42) != sample_phases(dist, 100, 42, 1));
}

TEST_CASE("phase distribution near the wrap point") {
    Matrix U = phase_unitary(0.49, 0.0);
    Vector psi = Vector::Zero(2);
    psi(0) = 1.0;
    auto dist = gqpe_distribution(U, psi, default_window_spec(6, 8));
    const double err = std::abs(dist.circular_mean() - 0.49);
    CHECK(std::min(err, 1 - err) <= 1.0 / 256);
}

TEST_CASE("gqpe input validation") {
    Vector psi = Vector::Zero(2);
    psi(0) = 2.0;
    CHECK_THROWS_AS(gqpe_distribution(phase_unitary(0, 0), psi, default_window_spec(4, 5)), InputError);
    Matrix bad = Matrix::Identity(2, 2) * 2.0;
    psi(0) = 1.0;
    CHECK_THROWS_AS(gqpe_distribution(bad, psi, default_window_spec(4, 5)), InputError);
}

TEST_CASE("variance allocation meets the target exactly") {
    for (int n : {2, 4, 6, 8}) {
        auto g = make_grid(n, 0.5);
        RealVector d = weights_at_zero(g);
        std::vector<double> dv(d.data(), d.data() + n), nv(g.nodes().data(), g.nodes().data() + n);
        auto alloc = allocate_node_variances(dv, nv, 0.01);
        std::vector<double> sig(alloc.sigmas.data(), alloc.sigmas.data() + n);
        CHECK(propagate_variance(sig, g).exact == doctest::Approx(0.01).epsilon(1e-12));
        for (int k = 0; k < n / 2; ++k) CHECK(sig[k] == sig[n - 1 - k]);
    }
    std::vector<double> d2{0.5, 0.5}, s2{0.5, -0.5};
    CHECK(allocate_node_variances(d2, s2, 0.1).sigmas(0) == doctest::Approx(std::sqrt(2.0) * 0.1));
}

TEST_CASE("distribution csv") {
    Matrix U = phase_unitary(0.1, 0.2);
    Vector psi = Vector::Zero(2);
    psi(0) = 1.0;
    auto spec = default_window_spec(4, 5);
    auto csv = distribution_csv(gqpe_distribution(U, psi, spec), spec);
    CHECK(csv.rfind("# {", 0) == 0);
    CHECK(csv.find("bin,phase_cycles,prob\r\n") != std::string::npos);
}
