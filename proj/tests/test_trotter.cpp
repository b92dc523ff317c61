#include "chebtrot/errors.hpp"
#include "chebtrot/operators.hpp"
#include "chebtrot/trotter.hpp"
#include "frozen_values.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace chebtrot;

TEST_CASE("suzuki coefficient") {
    CHECK(suzuki_coefficient(2) == doctest::Approx(frozen::kSuzukiU2).epsilon(1e-15));
    CHECK(1 - 4 * suzuki_coefficient(2) == doctest::Approx(frozen::kSuzukiMiddle2).epsilon(1e-15));
    for (int k = 2; k <= 5; ++k) {
        const double u = suzuki_coefficient(k);
        CHECK(4 * std::pow(u, 2 * k - 1) + std::pow(1 - 4 * u, 2 * k - 1) == doctest::Approx(0.0).epsilon(1e-14));
    }
}

TEST_CASE("second-order stage list") {
    auto s = st_scheme(2, 3, false);
    REQUIRE(s.stages.size() == 6);
    CHECK(s.stages[0] == Stage{0, 0.5});
    CHECK(s.stages[2] == Stage{2, 0.5});
    CHECK(s.stages[3] == Stage{2, 0.5});
    CHECK(s.stages[5] == Stage{0, 0.5});
    auto merged = st_scheme(2, 3);
    REQUIRE(merged.stages.size() == 5);
    CHECK(merged.stages[2] == Stage{2, 1.0});
    CHECK(merged.unmerged_stage_count() == 6);
}

TEST_CASE("stage counts and fraction sums") {
    for (int order : {2, 4, 6})
        for (int m : {1, 2, 3, 5}) {
            auto un = st_scheme(order, m, false);
            CHECK(static_cast<long long>(un.stages.size()) == un.unmerged_stage_count());
            CHECK(un.unmerged_stage_count() == 2LL * m * static_cast<long long>(std::pow(5, order / 2 - 1)));
            auto merged = st_scheme(order, m);
            std::vector<double> per_term(m, 0.0);
            for (auto& st : merged.stages) per_term[st.term] += st.fraction;
            for (double f : per_term) CHECK(f == doctest::Approx(1.0).epsilon(1e-13));
            for (std::size_t i = 1; i < merged.stages.size(); ++i)
                CHECK(merged.stages[i].term != merged.stages[i - 1].term);
        }
    CHECK_THROWS_AS(st_scheme(3, 2), InputError);
    CHECK_THROWS_AS(st_scheme(2, 0), InputError);
}

TEST_CASE("merged and unmerged schemes agree") {
    auto model = build_tfim(3, 1.0, 0.7);
    for (int order : {2, 4}) {
        Matrix a = apply_scheme(model, st_scheme(order, model.size(), false), 0.3);
        Matrix b = apply_scheme(model, st_scheme(order, model.size(), true), 0.3);
        CHECK((a - b).norm() <= 1e-12);
    }
}

TEST_CASE("scheme is unitary and symmetric") {
    auto model = build_tfim(2, 1, 1);
    for (int order : {2, 4}) {
        auto sch = st_scheme(order, model.size());
        Matrix U = apply_scheme(model, sch, 0.2);
        CHECK((U.adjoint() * U - Matrix::Identity(4, 4)).norm() <= 1e-12);
        CHECK((apply_scheme(model, sch, -0.2) * U - Matrix::Identity(4, 4)).norm() <= 1e-12);
    }
}

TEST_CASE("commuting terms are exact") {
    auto model = HamiltonianModel({build_pauli_term(-1.0, "ZZ"), build_pauli_term(0.4, "ZI")});
    Matrix exact = expm_hermitian(sum_matrix(model), 0.7);
    CHECK((apply_scheme(model, st_scheme(2, 2), 0.7) - exact).norm() <= 1e-12);
}

TEST_CASE("unitary eigendecomposition and powers") {
    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix U = testing_util::random_unitary(4, gen);
        auto sp = unitary_eig(U);
        CHECK((unitary_power(sp, 1.0) - U).norm() <= 1e-10);
        Matrix half = unitary_power(sp, 0.5);
        CHECK((half * half - U).norm() <= 1e-10);
        for (int i = 0; i < sp.phases.size(); ++i) {
            CHECK(sp.phases(i) > -std::numbers::pi);
            CHECK(sp.phases(i) <= std::numbers::pi);
        }
    }
}

TEST_CASE("fractional evolution matches integer steps") {
    auto model = build_tfim(2, 1, 1);
    auto sch = st_scheme(2, 3);
    const double t = 0.1;
    Matrix step = apply_scheme(model, sch, t / 4);
    Matrix four = step * step * step * step;
    auto fe = evolve_fractional(model, sch, t, 0.25);
    CHECK((fe.unitary - four).norm() <= 1e-10);
    CHECK(fe.in_convergence_domain);
    auto big = evolve_fractional(model, sch, 5.0, 1.0);
    CHECK_FALSE(big.in_convergence_domain);
}

TEST_CASE("integer step count") {
    CHECK(integer_step_count(0.25, 1.0) == 4);
    CHECK(integer_step_count(0.3, 1.0) == 4);
    CHECK(integer_step_count(1.0 / 3.0, 1.0) == 3);
    CHECK(integer_step_count(-0.5, 1.0) == -2);
}

TEST_CASE("effective Hamiltonian") {
    auto model = build_tfim(2, 1, 1);
    auto sch = st_scheme(2, 3);
    auto heff = effective_hamiltonian(model, sch, 0.1, 0.5);
    CHECK((heff.matrix - heff.matrix.adjoint()).norm() <= 1e-12);
    CHECK((expm_hermitian(heff.matrix, 0.05) - apply_scheme(model, sch, 0.05)).norm() <= 1e-10);
    // Even in s.
    auto neg = effective_hamiltonian(model, sch, 0.1, -0.5);
    CHECK((neg.matrix - heff.matrix).norm() <= 1e-10);
    CHECK_THROWS_AS(effective_hamiltonian(model, sch, 0.1, 0.0), InputError);
    auto wrap = HamiltonianModel({build_pauli_term(std::numbers::pi, "ZZ")});
    CHECK_THROWS_AS(effective_hamiltonian(wrap, st_scheme(2, 1), 1.0, 1.0), BranchError);
}

TEST_CASE("frozen Frobenius distance at t=0.5") {
    auto model = build_tfim(2, 1, 1);
    Matrix U = apply_scheme(model, st_scheme(2, 3), 0.5);
    Matrix V = expm_hermitian(sum_matrix(model), 0.5);
    CHECK((U - V).norm() / 4.0 == doctest::Approx(frozen::kFrobDistanceT05).epsilon(1e-10));
}
