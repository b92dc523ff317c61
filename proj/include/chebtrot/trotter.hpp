#pragma once

#include "chebtrot/operators.hpp"

#include <vector>

namespace chebtrot {

// One factor exp(-i H_term * fraction * t).
struct Stage {
    int term = 0;
    double fraction = 0.0;
    bool operator==(const Stage&) const = default;
};

struct TrotterScheme {
    int order = 2;
    int num_terms = 1;
    std::vector<Stage> stages;  // stages[0] acts first

    int k() const { return order / 2; }
    // 2m * 5^(k-1): exponentials per step before merging neighbours.
    long long unmerged_stage_count() const;
};

double suzuki_coefficient(int k);
TrotterScheme st_scheme(int order, int m, bool merge = true);

Matrix apply_scheme(const HamiltonianModel& model, const TrotterScheme& scheme, double t);

// Eigen-decomposition of a unitary; phases in (-pi, pi].
struct UnitarySpectrum {
    RealVector phases;
    Matrix vectors;
};
UnitarySpectrum unitary_eig(const Matrix& U);
Matrix unitary_power(const UnitarySpectrum& spec, double power);

// k (5/3)^k m hmax |s| t <= pi/20; margin is the slack (negative when violated).
double convergence_margin(const HamiltonianModel& model, int order, double t, double s);

struct FractionalEvolution {
    Matrix unitary;
    bool in_convergence_domain = true;
    double domain_margin = 0.0;
};
FractionalEvolution evolve_fractional(const HamiltonianModel& model, const TrotterScheme& scheme, double t,
                                      double s);

long integer_step_count(double s_k, double s_1);

struct EffectiveHamiltonian {
    Matrix matrix;
    double s = 1.0;
    double t = 0.0;
    int order = 2;
};
inline constexpr double kBranchMargin = 1e-6;
EffectiveHamiltonian effective_hamiltonian(const HamiltonianModel& model, const TrotterScheme& scheme, double t,
                                           double s);

}  // namespace chebtrot
