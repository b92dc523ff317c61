#pragma once

#include "chebtrot/operators.hpp"
#include "chebtrot/trotter.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chebtrot {

struct Assumption {
    std::string name;
    bool satisfied = true;
    double margin = 0.0;  // positive means slack
};

struct BoundReport {
    double value = 0.0;
    double log10_value = 0.0;
    bool domain_ok = true;
    std::vector<Assumption> assumptions;
};

double log_factorial(int n);

BoundReport heff_derivative_bound(int n_deriv, int k, int m, double hmax, double t);
BoundReport cheb_error_bound(int n, double a, double deriv_sup);
double total_steps_bound(int n, double a);
double bernstein_bound(double C, double rho, int n);

struct AnalyticityRadius {
    double r_max = 0.0;
    double rho_max = 0.0;
    bool covers_interval = false;  // false: no Bernstein ellipse around [-1, 1]
};
AnalyticityRadius analyticity_radius(double alpha, double beta, int p, double gamma0);

enum class CommutatorMode { exact_nested, crude_norm };

struct CommutatorBudget {
    double alpha_comm = 0.0;
    int p = 1;
    CommutatorMode mode = CommutatorMode::crude_norm;
};

// Nested-commutator weight of B against A_1 (innermost) .. A_s.
CommutatorBudget alpha_comm(std::span<const Matrix> later, const Matrix& B, int p, CommutatorMode mode);
// Summed over every stage position of the scheme; stage fractions scale the terms.
CommutatorBudget alpha_comm(const HamiltonianModel& model, const TrotterScheme& scheme, int p,
                            CommutatorMode mode);

BoundReport heff_distance_bound(const HamiltonianModel& model, const TrotterScheme& scheme, double t, double s,
                                int p, CommutatorMode mode);

struct ExpvalDerivBound {
    int applicable_regime = 1;  // 1 when c > n
    double deriv_regime1 = 0.0;
    double interp_regime1 = 0.0;
    double deriv_regime2 = 0.0;
    double interp_regime2 = 0.0;
    double deriv_min = 0.0;
    double interp_min = 0.0;
};
ExpvalDerivBound expval_deriv_bound(int n, double c, double a);

struct PeInterpParams {
    int n_star = 2;
    double n_real = 0.0;
    double a = 0.0;
};
PeInterpParams pe_interp_params(int m, int k, double hmax, double Gamma, double eps);

double iqae_oracle_count(double eps_data, double gamma_ratio, int n, double delta);

// (Chebyshev tail probability, Markov tail probability).
std::pair<double, double> tail_bounds(double d_hat, double xi, double kk, int n_qubits);

bool bauer_fike_check(std::span<const double> eigs_a, double lambda_b, double norm_diff);

// Node count for the expectation-value pipeline.
int expval_n_star(double c, double eps);

// Truncation bound for the extrapolated ground energy: Bernstein ellipse from the
// analyticity radius of the effective Hamiltonian, crude commutator budget.
struct EnergyTruncationBound {
    double bound = 0.0;
    bool available = false;
    AnalyticityRadius radius;
    double C = 0.0;
    double alpha_comm = 0.0;
    std::vector<Assumption> assumptions;
};
EnergyTruncationBound energy_truncation_bound(const HamiltonianModel& model, const TrotterScheme& scheme,
                                              double t, double a, int n);

}  // namespace chebtrot
