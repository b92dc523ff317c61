#include "chebtrot/estimators.hpp"

#include "chebtrot/errors.hpp"
#include "chebtrot/phase_est.hpp"
#include "chebtrot/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace chebtrot {

using std::numbers::pi;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

std::vector<double> mirrored(const std::vector<NodeRecord>& half, int n) {
    std::vector<double> y(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < half.size(); ++k) {
        y[k] = half[k].value;
        y[static_cast<std::size_t>(n) - 1 - k] = half[k].value;
    }
    return y;
}

CostLedger ledger_from(const std::vector<NodeRecord>& nodes, const TrotterScheme& scheme, std::string model) {
    CostLedger ledger;
    ledger.stages_per_step = scheme.unmerged_stage_count();
    ledger.merged_stages_per_step = static_cast<long long>(scheme.stages.size());
    ledger.repetitions_model = std::move(model);
    ledger.per_node = nodes;
    for (const auto& r : nodes) ledger.exponentials_total += r.exponentials;
    return ledger;
}

void finish(ExtrapolationResult& res, const ChebyshevGrid& grid, int n) {
    const auto y = mirrored(res.per_node, n);
    res.fit = fit(grid, y);
    res.estimate = res.fit.estimate_at_zero;
    res.systematic_error = std::abs(res.estimate - res.exact_reference);
}

void check_convergence_domain(ExtrapolationResult& res, const HamiltonianModel& model, int order, double t,
                              double s) {
    if (convergence_margin(model, order, t, s) < 0.0 && res.flags.empty())
        res.flags.push_back("node outside the product-formula convergence domain");
}

}  // namespace

ExtrapolationResult extrapolate_ground_energy(const HamiltonianModel& model, int order, double t, int n, double a,
                                              const EnergyEstimator& estimator, double pad) {
    if (!(t > 0)) throw InputError("evolution time must be positive");
    if (!(pad >= 0 && pad < 1)) throw InputError("window pad must lie in [0, 1)");
    const auto grid = make_grid(n, a);
    const auto scheme = st_scheme(order, static_cast<int>(model.size()));
    const auto h_spec = eig_herm(sum_matrix(model));
    const Vector ground = h_spec.eigenvectors.col(0);

    ExtrapolationResult res{0.0, fit(grid, std::vector<double>(static_cast<std::size_t>(n), 0.0)), {},
                            h_spec.eigenvalues(0), 0.0, {}, {}};
    const double s1 = grid.node(0);
    const double limit = (1.0 - pad) / 2.0;
    std::string reps_model = "exact";

    for (int k = 0; k < n / 2; ++k) {
        const double s = grid.node(k);
        check_convergence_domain(res, model, order, t, s);
        const long ep = integer_step_count(s, s1);
        const auto spec = unitary_eig(apply_scheme(model, scheme, t * s));
        // Dimensionless effective Hamiltonian of U' = S(ts)^e' must fit inside the window.
        const double h_norm = static_cast<double>(ep) * spec.phases.cwiseAbs().maxCoeff() / (2 * pi);
        if (h_norm > limit)
            throw DomainError("effective spectrum leaves the Fourier window at s = " + std::to_string(s) +
                              "; reduce t or a");
        const RealVector energies = -spec.phases / (t * s);
        Eigen::Index tracked = 0;
        (spec.vectors.adjoint() * ground).cwiseAbs().maxCoeff(&tracked);
        if (energies(tracked) > energies.minCoeff() + 1e-12 * std::max(1.0, std::abs(energies.minCoeff())))
            throw CrossingError("tracked ground state is no longer the lowest level at s = " + std::to_string(s));

        NodeRecord rec{s, energies(tracked), 0.0, ep, 0};
        long long reps = 1;
        std::visit(overloaded{[](const ExactEstimator&) {},
                              [&](const GqpeEstimator& g) {
                                  const auto wspec = default_window_spec(g.m, g.q);
                                  const Matrix Up = unitary_power(spec, static_cast<double>(ep));
                                  const auto dist = gqpe_distribution(Up, spec.vectors.col(tracked), wspec);
                                  const auto draws = sample_phases(dist, g.shots, g.seed, static_cast<std::uint64_t>(k));
                                  const auto stats = phase_statistics(draws);
                                  const double scale = 2 * pi / (t * s * static_cast<double>(ep));
                                  rec.value = -stats.mean * scale;
                                  rec.sigma = stats.stddev / std::sqrt(static_cast<double>(g.shots)) * scale;
                                  reps = g.shots * ((1LL << g.m) - 1);
                                  reps_model = "shots";
                              }},
                   estimator);
        rec.exponentials = scheme.unmerged_stage_count() * ep * reps;
        res.per_node.push_back(rec);
    }
    finish(res, grid, n);
    res.cost = ledger_from(res.per_node, scheme, reps_model);
    return res;
}

ExtrapolationResult extrapolate_expectation(const HamiltonianModel& model, const Matrix& rho,
                                            const Matrix& observable, int order, double t, int n, double a,
                                            const DataModel& data) {
    const auto dim = model.dim();
    if (rho.rows() != dim || rho.cols() != dim || observable.rows() != dim || observable.cols() != dim)
        throw InputError("state and observable must match the model dimension");
    if (std::abs(rho.trace() - cplx(1.0)) > 1e-10) throw InputError("density matrix must have unit trace");
    const double o_norm = spectral_norm(observable);
    if (!(o_norm > 0)) throw InputError("observable must be nonzero");

    const auto grid = make_grid(n, a);
    const auto scheme = st_scheme(order, static_cast<int>(model.size()));
    const Matrix H = sum_matrix(model);
    const Matrix Uex = expm_hermitian(H, t);

    ExtrapolationResult res{0.0, fit(grid, std::vector<double>(static_cast<std::size_t>(n), 0.0)), {},
                            (rho * Uex.adjoint() * observable * Uex).trace().real() / o_norm, 0.0, {}, {}};
    std::string reps_model = "exact";
    for (int k = 0; k < n / 2; ++k) {
        const double s = grid.node(k);
        const auto evo = evolve_fractional(model, scheme, t, s);
        if (!evo.in_convergence_domain) check_convergence_domain(res, model, order, t, s);
        const Matrix& U = evo.unitary;
        const double f = (rho * U.adjoint() * observable * U).trace().real() / o_norm;
        NodeRecord rec{s, f, 0.0, integer_step_count(s, 1.0), 0};
        long long reps = 1;
        std::visit(overloaded{[](const ExactData&) {},
                              [&](const GaussianNoise& g) {
                                  const CounterRng rng(g.seed, static_cast<std::uint64_t>(k));
                                  rec.value = f + g.sigma * rng.normal(0);
                                  rec.sigma = g.sigma;
                                  reps_model = "gaussian";
                              },
                              [&](const ShotNoise& sh) {
                                  if (sh.shots < 1) throw InputError("shots must be positive");
                                  const CounterRng rng(sh.seed, static_cast<std::uint64_t>(k));
                                  const double p = std::clamp((1.0 + f) / 2.0, 0.0, 1.0);
                                  long hits = 0;
                                  for (long i = 0; i < sh.shots; ++i)
                                      hits += rng.uniform(static_cast<std::uint64_t>(i)) < p ? 1 : 0;
                                  const double est = 2.0 * static_cast<double>(hits) / static_cast<double>(sh.shots) - 1.0;
                                  rec.value = est;
                                  rec.sigma = std::sqrt(std::max(0.0, 1.0 - est * est) / static_cast<double>(sh.shots));
                                  reps = sh.shots;
                                  reps_model = "shots";
                              }},
                   data);
        rec.exponentials = scheme.unmerged_stage_count() * rec.e_prime * reps;
        res.per_node.push_back(rec);
    }
    finish(res, grid, n);
    res.cost = ledger_from(res.per_node, scheme, reps_model);
    return res;
}

double frobenius_probability(const Matrix& U, const Matrix& V) {
    if (U.rows() != V.rows() || U.cols() != V.cols() || U.rows() != U.cols())
        throw InputError("unitaries must be square with equal dimensions");
    return (U - V).squaredNorm() / (4.0 * static_cast<double>(U.rows()));
}

double frobenius_probability_circuit(const Matrix& U, const Matrix& V) {
    if (U.rows() != V.rows() || U.cols() != V.cols() || U.rows() != U.cols())
        throw InputError("unitaries must be square with equal dimensions");
    const auto D = U.rows();
    const auto full = 2 * D * D;
    // Register order: control qubit, system, purifying copy of the system.
    Vector state = Vector::Zero(full);
    for (Eigen::Index i = 0; i < D; ++i) state(i * D + i) = 1.0 / std::sqrt(static_cast<double>(D));

    const Matrix I_env = Matrix::Identity(D, D);
    auto kron = [](const Matrix& A, const Matrix& B) {
        Matrix out(A.rows() * B.rows(), A.cols() * B.cols());
        for (Eigen::Index i = 0; i < A.rows(); ++i)
            for (Eigen::Index j = 0; j < A.cols(); ++j)
                out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
        return out;
    };
    Matrix had(2, 2);
    had << 1, 1, 1, -1;
    had /= std::sqrt(2.0);
    Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
    p0(0, 0) = 1;
    p1(1, 1) = 1;
    const Matrix H_full = kron(had, Matrix::Identity(D * D, D * D));
    const Matrix select = kron(p0, kron(U, I_env)) + kron(p1, kron(V, I_env));
    state = H_full * (select * (H_full * state));
    return state.tail(D * D).squaredNorm();
}

double frobenius_distance(const Matrix& U, const Matrix& V) { return std::sqrt(frobenius_probability(U, V)); }

ExtrapolationResult estimate_trotter_error(const HamiltonianModel& model, int order, double t, int n, double a,
                                           std::optional<GaussianNoise> phase_noise) {
    const auto grid = make_grid(n, a);
    const auto scheme = st_scheme(order, static_cast<int>(model.size()));
    const Matrix U1 = apply_scheme(model, scheme, t);
    const Matrix Uex = expm_hermitian(sum_matrix(model), t);

    ExtrapolationResult res{0.0, fit(grid, std::vector<double>(static_cast<std::size_t>(n), 0.0)), {},
                            frobenius_distance(U1, Uex), 0.0, {}, {}};
    for (int k = 0; k < n / 2; ++k) {
        const double s = grid.node(k);
        const auto evo = evolve_fractional(model, scheme, t, s);
        if (!evo.in_convergence_domain) check_convergence_domain(res, model, order, t, s);
        double p = frobenius_probability(evo.unitary, U1);
        if (p > 1.0) {
            p = 1.0;
            res.flags.push_back("probability above one clamped");
        }
        double phi = std::asin(std::sqrt(p));
        double sigma = 0.0;
        if (phase_noise) {
            const CounterRng rng(phase_noise->seed, static_cast<std::uint64_t>(k));
            phi += phase_noise->sigma * rng.normal(0);
            sigma = phase_noise->sigma;
        }
        NodeRecord rec{s, phi, sigma, integer_step_count(s, 1.0), 0};
        rec.exponentials = scheme.unmerged_stage_count() * rec.e_prime;
        res.per_node.push_back(rec);
    }
    const auto y = mirrored(res.per_node, n);
    res.fit = fit(grid, y);
    res.estimate = std::sin(res.fit.estimate_at_zero);
    res.systematic_error = std::abs(res.estimate - res.exact_reference);
    res.cost = ledger_from(res.per_node, scheme, phase_noise ? "gaussian" : "exact");
    return res;
}

CostLedger cost_ledger(int n, double a, int order, int m, std::span<const long> repetitions_per_node) {
    const auto grid = make_grid(n, a);
    const auto scheme = st_scheme(order, m);
    const auto half = static_cast<std::size_t>(n / 2);
    if (repetitions_per_node.size() != 1 && repetitions_per_node.size() != half)
        throw InputError("repetitions must be a single value or one per positive node");
    std::vector<NodeRecord> nodes;
    for (std::size_t k = 0; k < half; ++k) {
        const double s = grid.node(static_cast<int>(k));
        const long reps = repetitions_per_node.size() == 1 ? repetitions_per_node[0] : repetitions_per_node[k];
        NodeRecord rec{s, 0.0, 0.0, integer_step_count(s, grid.node(0)), 0};
        rec.exponentials = scheme.unmerged_stage_count() * rec.e_prime * reps;
        nodes.push_back(rec);
    }
    return ledger_from(nodes, scheme, "exact");
}

double single_formula_error(const HamiltonianModel& model, int order, double t, long steps) {
    if (steps < 1) throw InputError("step count must be positive");
    const auto scheme = st_scheme(order, static_cast<int>(model.size()));
    const double e0 = eig_herm(sum_matrix(model)).eigenvalues(0);
    const double tau = t / static_cast<double>(steps);
    const auto spec = unitary_eig(apply_scheme(model, scheme, tau));
    return std::abs((-spec.phases / tau).minCoeff() - e0);
}

SingleFormulaCost single_formula_cost(const HamiltonianModel& model, int order, double t, double eps,
                                      long max_steps) {
    const auto per_step = st_scheme(order, static_cast<int>(model.size())).unmerged_stage_count();
    long hi = 1;
    double err_hi = single_formula_error(model, order, t, hi);
    while (err_hi > eps) {
        if (hi >= max_steps) throw DomainError("single-formula step search exceeded its limit");
        hi = std::min(hi * 2, max_steps);
        err_hi = single_formula_error(model, order, t, hi);
    }
    long lo = hi / 2;  // lo fails (or is zero)
    while (hi - lo > 1) {
        const long mid = lo + (hi - lo) / 2;
        const double e = single_formula_error(model, order, t, mid);
        if (e <= eps)
            hi = mid, err_hi = e;
        else
            lo = mid;
    }
    return SingleFormulaCost{hi, hi * per_step, err_hi};
}

}  // namespace chebtrot
