#include "chebtrot/errors.hpp"
#include "chebtrot/estimators.hpp"
#include "chebtrot/experiments.hpp"
#include "chebtrot/operators.hpp"
#include "chebtrot/trotter.hpp"
#include "frozen_values.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace chebtrot;

TEST_CASE("ground energy matches the independent oracle") {
    auto model = build_tfim(2, 1, 1);
    const double want[] = {frozen::kEnergyEstimateN2, frozen::kEnergyEstimateN4, frozen::kEnergyEstimateN6,
                           frozen::kEnergyEstimateN8};
    for (int i = 0; i < 4; ++i) {
        const int n = 2 * (i + 1);
        auto r = extrapolate_ground_energy(model, 2, 0.1, n, 1.0);
        CHECK(std::abs(r.estimate - want[i]) <= 1e-12);
        CHECK(r.exact_reference == doctest::Approx(-std::sqrt(5.0)).epsilon(1e-14));
        CHECK(r.per_node.size() == static_cast<std::size_t>(n / 2));
    }
}

TEST_CASE("ground energy errors fall with n") {
    auto model = build_tfim(2, 1, 1);
    double prev = INFINITY;
    for (int n : {2, 4, 6}) {
        auto r = extrapolate_ground_energy(model, 2, 0.1, n, 1.0);
        CHECK(r.systematic_error < prev);
        prev = r.systematic_error;
    }
}

TEST_CASE("window guard and crossing") {
    auto model = build_tfim(2, 1, 1);
    CHECK_THROWS_AS(extrapolate_ground_energy(model, 2, 3.0, 4, 1.0), DomainError);
}

TEST_CASE("phase-estimation estimator is seeded and close") {
    auto model = build_tfim(2, 1, 1);
    GqpeEstimator est{6, 10, 2000, 5};
    auto a = extrapolate_ground_energy(model, 2, 0.1, 4, 1.0, est);
    auto b = extrapolate_ground_energy(model, 2, 0.1, 4, 1.0, est);
    CHECK(a.estimate == b.estimate);
    CHECK(std::abs(a.estimate + std::sqrt(5.0)) < 0.1);
    CHECK(a.per_node.front().sigma > 0);
}

TEST_CASE("expectation pipeline") {
    auto model = build_tfim(2, 1, 1);
    Vector psi = basis_state("00");
    Matrix rho = psi * psi.adjoint();
    Matrix obs = pauli_matrix("ZI");
    auto r2 = extrapolate_expectation(model, rho, obs, 2, 0.1, 2, 1.0);
    auto r6 = extrapolate_expectation(model, rho, obs, 2, 0.1, 6, 1.0);
    CHECK(r6.systematic_error < r2.systematic_error);
    CHECK(r6.systematic_error < 1e-8);
    for (auto& node : r6.per_node) CHECK(node.e_prime == integer_step_count(node.s, 1.0));

    auto g1 = extrapolate_expectation(model, rho, obs, 2, 0.1, 4, 1.0, GaussianNoise{1e-3, 9});
    auto g2 = extrapolate_expectation(model, rho, obs, 2, 0.1, 4, 1.0, GaussianNoise{1e-3, 9});
    CHECK(g1.estimate == g2.estimate);
    auto s1 = extrapolate_expectation(model, rho, obs, 2, 0.1, 4, 1.0, ShotNoise{500, 3});
    CHECK(std::abs(s1.estimate - s1.exact_reference) < 0.3);
}

TEST_CASE("Frobenius probability circuit identity") {
    std::mt19937_64 gen(1);
    for (int q = 1; q <= 2; ++q)
        for (int trial = 0; trial < 5; ++trial) {
            Matrix U = testing_util::random_unitary(1 << q, gen), V = testing_util::random_unitary(1 << q, gen);
            CHECK(std::abs(frobenius_probability_circuit(U, V) - frobenius_probability(U, V)) <= 1e-12);
        }
    Matrix I = Matrix::Identity(2, 2);
    CHECK(frobenius_probability(I, I) == 0.0);
    CHECK(frobenius_probability(I, -I) == doctest::Approx(1.0));
    CHECK(frobenius_distance(I, -I) == doctest::Approx(1.0));
}

TEST_CASE("Trotter-error estimate") {
    auto model = build_tfim(2, 1, 1);
    auto r = estimate_trotter_error(model, 2, 0.5, 6, 0.5);
    CHECK(r.exact_reference == doctest::Approx(frozen::kFrobDistanceT05).epsilon(1e-10));
    CHECK(std::abs(r.estimate - r.exact_reference) <= 1e-3 * r.exact_reference);
}

TEST_CASE("cost ledger") {
    std::vector<long> reps{1};
    auto led = cost_ledger(4, 1.0, 2, 3, reps);
    CHECK(led.stages_per_step == 6);
    CHECK(led.merged_stages_per_step == 5);
    REQUIRE(led.per_node.size() == 2);
    long long total = 0;
    for (auto& n : led.per_node) {
        CHECK(n.exponentials == 6LL * n.e_prime);
        total += n.exponentials;
    }
    CHECK(led.exponentials_total == total);
    std::vector<long> bad{1, 2, 3};
    CHECK_THROWS_AS(cost_ledger(4, 1.0, 2, 3, bad), InputError);
}

TEST_CASE("single formula cost") {
    auto model = build_tfim(2, 1, 1);
    auto c = single_formula_cost(model, 2, 0.1, 1e-6);
    CHECK(c.error <= 1e-6);
    CHECK(single_formula_error(model, 2, 0.1, c.steps - 1) > 1e-6);
    CHECK(c.exponentials == 6LL * c.steps);
}

TEST_CASE("experiment tables") {
    auto model = build_tfim(2, 1, 1);
    std::vector<int> ns{2, 4};
    auto a = run_energy(model, 2, 0.1, 1.0, ns, ExactEstimator{}, 1);
    auto b = run_energy(model, 2, 0.1, 1.0, ns, ExactEstimator{}, 2);
    REQUIRE(a.size() == 2);
    CHECK(a[1].result.estimate == b[1].result.estimate);
    auto grid = log_grid(-2, -8, 7);
    REQUIRE(grid.size() == 7);
    CHECK(grid.front() == doctest::Approx(1e-2));
    CHECK(grid.back() == doctest::Approx(1e-8));
    std::vector<int> ms{4};
    auto w = window_table(ms, 1, 1.0, 1);
    REQUIRE(w.size() == 2);
    CHECK(w[0].measured <= w[0].budget.eps_total);
}
