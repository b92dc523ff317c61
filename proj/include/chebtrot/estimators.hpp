#pragma once

#include "chebtrot/chebgrid.hpp"
#include "chebtrot/operators.hpp"
#include "chebtrot/trotter.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace chebtrot {

struct NodeRecord {
    double s = 0.0;
    double value = 0.0;
    double sigma = 0.0;  // zero for exact data
    long e_prime = 1;
    long long exponentials = 0;
};

struct CostLedger {
    long long exponentials_total = 0;
    long long stages_per_step = 0;         // 2m 5^(k-1)
    long long merged_stages_per_step = 0;  // what the merged scheme actually runs
    std::string repetitions_model = "exact";
    std::vector<NodeRecord> per_node;
};

struct ExtrapolationResult {
    double estimate = 0.0;
    InterpolationFit fit;
    std::vector<NodeRecord> per_node;  // positive nodes only; mirrors reuse them
    double exact_reference = 0.0;
    double systematic_error = 0.0;
    CostLedger cost;
    std::vector<std::string> flags;
};

struct ExactEstimator {};
struct GqpeEstimator {
    int m = 6;
    int q = 8;
    long shots = 1000;
    std::uint64_t seed = 0;
};
using EnergyEstimator = std::variant<ExactEstimator, GqpeEstimator>;

inline constexpr double kDefaultWindowPad = 0.2;

ExtrapolationResult extrapolate_ground_energy(const HamiltonianModel& model, int order, double t, int n, double a,
                                              const EnergyEstimator& estimator = ExactEstimator{},
                                              double pad = kDefaultWindowPad);

struct ExactData {};
struct GaussianNoise {
    double sigma = 0.0;
    std::uint64_t seed = 0;
};
struct ShotNoise {
    long shots = 1000;
    std::uint64_t seed = 0;
};
using DataModel = std::variant<ExactData, GaussianNoise, ShotNoise>;

ExtrapolationResult extrapolate_expectation(const HamiltonianModel& model, const Matrix& rho,
                                            const Matrix& observable, int order, double t, int n, double a,
                                            const DataModel& data = ExactData{});

// ||U - V||_F^2 / 2^(n+2)
double frobenius_probability(const Matrix& U, const Matrix& V);
// Same quantity from an explicit simulation of the controlled-U / controlled-V
// interference circuit acting on a purified maximally mixed input.
double frobenius_probability_circuit(const Matrix& U, const Matrix& V);
// ||(U - V)/2||_F / sqrt(2^n)
double frobenius_distance(const Matrix& U, const Matrix& V);

ExtrapolationResult estimate_trotter_error(const HamiltonianModel& model, int order, double t, int n, double a,
                                           std::optional<GaussianNoise> phase_noise = std::nullopt);

CostLedger cost_ledger(int n, double a, int order, int m, std::span<const long> repetitions_per_node);

// Single-formula cost: smallest r with ground-energy error of S(t/r)^r at most eps.
struct SingleFormulaCost {
    long steps = 0;
    long long exponentials = 0;
    double error = 0.0;
};
double single_formula_error(const HamiltonianModel& model, int order, double t, long steps);
SingleFormulaCost single_formula_cost(const HamiltonianModel& model, int order, double t, double eps,
                                      long max_steps = 1L << 24);

}  // namespace chebtrot
