#include "chebtrot/experiments.hpp"

#include "chebtrot/errors.hpp"
#include "chebtrot/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace chebtrot {

std::vector<EnergyRun> run_energy(const HamiltonianModel& model, int order, double t, double a,
                                  std::span<const int> n_values, const EnergyEstimator& estimator, int threads) {
    const auto scheme = st_scheme(order, static_cast<int>(model.size()));
    std::vector<std::optional<EnergyRun>> slots(n_values.size());
    parallel_for(n_values.size(), threads, [&](std::size_t i) {
        const int n = n_values[i];
        slots[i].emplace(EnergyRun{n, extrapolate_ground_energy(model, order, t, n, a, estimator),
                                   energy_truncation_bound(model, scheme, t, a, n)});
    });
    std::vector<EnergyRun> runs;
    for (auto& s : slots) runs.push_back(std::move(*s));
    return runs;
}

std::vector<TruncationRow> truncation_table(const HamiltonianModel& model, int order, double t, double a,
                                            std::span<const int> n_values, int threads) {
    const auto runs = run_energy(model, order, t, a, n_values, ExactEstimator{}, threads);
    std::vector<TruncationRow> rows;
    for (const auto& r : runs)
        rows.push_back({r.n, r.result.systematic_error, r.bound.bound, r.bound.available});
    return rows;
}

std::vector<double> log_grid(double hi_exp, double lo_exp, int points) {
    if (points < 2) throw InputError("log grid needs at least two points");
    std::vector<double> out;
    for (int i = 0; i < points; ++i) out.push_back(std::pow(10.0, hi_exp + (lo_exp - hi_exp) * i / (points - 1.0)));
    return out;
}

CostScan crossover_scan(const HamiltonianModel& model, int order, double t, double a, int n_min, int n_max,
                        std::span<const double> epsilons, int threads) {
    if (n_min < 2 || n_min % 2 || n_max < n_min) throw InputError("bad node-count range");
    std::vector<int> ns;
    for (int n = n_min; n <= n_max; n += 2) ns.push_back(n);
    const auto runs = run_energy(model, order, t, a, ns, ExactEstimator{}, threads);

    CostScan scan;
    scan.rows.resize(epsilons.size());
    parallel_for(epsilons.size(), threads, [&](std::size_t i) {
        CostRow row;
        row.epsilon = epsilons[i];
        row.cost_single = single_formula_cost(model, order, t, row.epsilon).exponentials;
        for (const auto& r : runs) {
            if (r.result.systematic_error > row.epsilon) continue;
            const auto c = r.result.cost.exponentials_total;
            if (!row.cost_extrap || c < *row.cost_extrap) {
                row.cost_extrap = c;
                row.n_used = r.n;
            }
        }
        scan.rows[i] = row;
    });
    // Largest epsilon below which extrapolation wins at every scanned tolerance.
    std::vector<std::size_t> order_idx(scan.rows.size());
    for (std::size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
    std::sort(order_idx.begin(), order_idx.end(),
              [&](std::size_t l, std::size_t r) { return scan.rows[l].epsilon < scan.rows[r].epsilon; });
    for (auto i : order_idx) {
        const auto& row = scan.rows[i];
        if (!row.cost_extrap || *row.cost_extrap >= row.cost_single) break;
        scan.eps_star = row.epsilon;
    }
    return scan;
}

double window_distance(const GaussianWindowSpec& spec) {
    const auto window = make_window(spec.m, spec.sigma, spec.T);
    const Vector up = upsample(window, spec.q);
    return (up - analytic_window_samples(spec).cast<cplx>()).norm();
}

std::vector<WindowRow> window_table(std::span<const int> m_values, int extra_q_max, double T, int threads) {
    std::vector<GaussianWindowSpec> specs;
    for (int m : m_values)
        for (int dq = 0; dq <= extra_q_max; ++dq) specs.push_back(default_window_spec(m, m + dq, T));
    std::vector<WindowRow> rows(specs.size());
    parallel_for(specs.size(), threads, [&](std::size_t i) {
        rows[i] = WindowRow{specs[i], window_distance(specs[i]), window_error_budget(specs[i])};
    });
    return rows;
}

}  // namespace chebtrot
