#pragma once

#include "chebtrot/operators.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace chebtrot {

struct GaussianWindowSpec {
    int m = 1;           // window qubits
    int q = 1;           // register qubits after padding
    double sigma = 1.0;  // time-domain width
    double T = 1.0;      // sample spacing

    double F() const { return 1.0 / (std::ldexp(1.0, q) * T); }
    double sigma_f() const;
    double sigma_over_T() const { return sigma / T; }
    // 0.1 sqrt(2^m) <= sigma/T <= 10 sqrt(2^m)
    bool in_regime() const;
    std::string to_json() const;
};

GaussianWindowSpec make_window_spec(int m, int q, double sigma, double T);
// sigma / T = sqrt(2^m).
GaussianWindowSpec default_window_spec(int m, int q, double T = 1.0);

double gaussian_density(double w, double sigma);
// Sum of p(xT; sigma) over |x| <= half_width.
double gaussian_normalization(double sigma, double T, long half_width);

struct WindowState {
    int m = 1;
    double normalization = 1.0;
    RealVector amplitudes;  // x = -(2^(m-1)-1) .. 2^(m-1)-1

    long half_width() const { return (amplitudes.size() - 1) / 2; }
    double amplitude(long x) const;
};

WindowState make_window(int m, double sigma, double T);

// Frequency amplitudes ordered k = -2^(q-1) .. 2^(q-1)-1.
Vector upsample(const WindowState& window, int q);
RealVector analytic_window_samples(const GaussianWindowSpec& spec);

struct WindowBudget {
    double eps_trunc = 0.0;
    double eps_alias = 0.0;
    double eps_renorm = 0.0;
    double eps_total = 0.0;
};
WindowBudget window_error_budget(const GaussianWindowSpec& spec);

struct PhaseDistribution {
    int q = 1;
    RealVector probs;  // bin b has phase (b - 2^(q-1)) / 2^q cycles

    double bin_phase(Eigen::Index bin) const;
    double circular_mean() const;
    double stddev() const;  // about the circular mean, wrapped
};

PhaseDistribution gqpe_distribution(const Matrix& U, const Vector& psi, const GaussianWindowSpec& spec);
std::vector<double> sample_phases(const PhaseDistribution& dist, long shots, std::uint64_t seed,
                                  std::uint64_t stream = 0);

// Circular mean of phases in cycles and the wrapped spread about it.
struct PhaseStats {
    double mean = 0.0;
    double stddev = 0.0;
};
PhaseStats phase_statistics(std::span<const double> phases);

struct VarianceAllocation {
    RealVector sigmas;           // one per node, mirrored halves equal
    std::vector<bool> excluded;  // zero weight: left out of the allocation
};
VarianceAllocation allocate_node_variances(std::span<const double> d0, std::span<const double> nodes,
                                           double sigma_P);

// CSV (bin, phase_cycles, prob) with a leading "# {spec json}" line.
std::string distribution_csv(const PhaseDistribution& dist, const GaussianWindowSpec& spec);

}  // namespace chebtrot
