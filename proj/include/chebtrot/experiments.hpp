#pragma once

#include "chebtrot/bounds.hpp"
#include "chebtrot/estimators.hpp"
#include "chebtrot/phase_est.hpp"

#include <optional>
#include <span>
#include <vector>

namespace chebtrot {

struct EnergyRun {
    int n = 2;
    ExtrapolationResult result;
    EnergyTruncationBound bound;
};
std::vector<EnergyRun> run_energy(const HamiltonianModel& model, int order, double t, double a,
                                  std::span<const int> n_values, const EnergyEstimator& estimator, int threads);

struct TruncationRow {
    int n = 2;
    double exact_error = 0.0;
    double bound = 0.0;
    bool bound_available = false;
};
std::vector<TruncationRow> truncation_table(const HamiltonianModel& model, int order, double t, double a,
                                            std::span<const int> n_values, int threads);

struct CostRow {
    double epsilon = 0.0;
    long long cost_single = 0;
    std::optional<long long> cost_extrap;
    int n_used = 0;
};
struct CostScan {
    std::vector<CostRow> rows;  // epsilon decreasing
    std::optional<double> eps_star;
};
// Decreasing logarithmic grid from 10^hi_exp down to 10^lo_exp.
std::vector<double> log_grid(double hi_exp, double lo_exp, int points);
CostScan crossover_scan(const HamiltonianModel& model, int order, double t, double a, int n_min, int n_max,
                        std::span<const double> epsilons, int threads);

struct WindowRow {
    GaussianWindowSpec spec;
    double measured = 0.0;
    WindowBudget budget;
};
double window_distance(const GaussianWindowSpec& spec);
std::vector<WindowRow> window_table(std::span<const int> m_values, int extra_q_max, double T, int threads);

}  // namespace chebtrot
