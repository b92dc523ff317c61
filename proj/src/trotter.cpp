#include "chebtrot/trotter.hpp"

#include "chebtrot/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

namespace chebtrot {

namespace {

void append_merged(std::vector<Stage>& out, const Stage& s, bool merge) {
    if (merge && !out.empty() && out.back().term == s.term)
        out.back().fraction += s.fraction;
    else
        out.push_back(s);
}

std::vector<Stage> scaled(const std::vector<Stage>& base, double f) {
    std::vector<Stage> out = base;
    for (auto& s : out) s.fraction *= f;
    return out;
}

}  // namespace

long long TrotterScheme::unmerged_stage_count() const {
    long long c = 2LL * num_terms;
    for (int i = 1; i < k(); ++i) c *= 5;
    return c;
}

double suzuki_coefficient(int k) {
    if (k < 2) throw InputError("Suzuki coefficient defined for k >= 2");
    return 1.0 / (4.0 - std::pow(4.0, 1.0 / (2.0 * k - 1.0)));
}

TrotterScheme st_scheme(int order, int m, bool merge) {
    if (order < 2 || order % 2 != 0) throw InputError("Trotter order must be an even integer >= 2");
    if (m < 1) throw InputError("scheme needs at least one term");

    // Second order: forward half sweep then backward half sweep.
    std::vector<Stage> stages;
    for (int j = 0; j < m; ++j) append_merged(stages, {j, 0.5}, merge);
    for (int j = m - 1; j >= 0; --j) append_merged(stages, {j, 0.5}, merge);

    for (int k = 2; 2 * k <= order; ++k) {
        const double u = suzuki_coefficient(k);
        const auto outer = scaled(stages, u);
        const auto inner = scaled(stages, 1.0 - 4.0 * u);
        std::vector<Stage> next;
        for (const auto* part : {&outer, &outer, &inner, &outer, &outer})
            for (const auto& s : *part) append_merged(next, s, merge);
        stages = std::move(next);
    }
    return TrotterScheme{order, m, std::move(stages)};
}

Matrix apply_scheme(const HamiltonianModel& model, const TrotterScheme& scheme, double t) {
    if (static_cast<std::size_t>(scheme.num_terms) != model.size())
        throw InputError("scheme and model disagree on the number of terms");
    std::vector<Eigen::SelfAdjointEigenSolver<Matrix>> eig;
    eig.reserve(model.size());
    for (const auto& term : model.terms()) eig.emplace_back(term.matrix);

    const auto dim = model.dim();
    Matrix U = Matrix::Identity(dim, dim);
    for (const auto& st : scheme.stages) {
        const auto& es = eig[static_cast<std::size_t>(st.term)];
        Vector ph = (es.eigenvalues().cast<cplx>() * cplx(0, -st.fraction * t)).array().exp();
        U = (es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint()) * U;
    }
    return U;
}

UnitarySpectrum unitary_eig(const Matrix& U) {
    // Normal matrix: the Schur factor is diagonal and Q stays unitary under degeneracy.
    Eigen::ComplexSchur<Matrix> schur(U);
    const Matrix& T = schur.matrixT();
    RealVector phases(T.rows());
    for (Eigen::Index i = 0; i < T.rows(); ++i) {
        double th = std::arg(T(i, i));
        if (th <= -std::numbers::pi) th += 2 * std::numbers::pi;
        phases(i) = th;
    }
    return UnitarySpectrum{std::move(phases), schur.matrixU()};
}

Matrix unitary_power(const UnitarySpectrum& spec, double power) {
    Vector d = (spec.phases.cast<cplx>() * cplx(0, power)).array().exp();
    return spec.vectors * d.asDiagonal() * spec.vectors.adjoint();
}

double convergence_margin(const HamiltonianModel& model, int order, double t, double s) {
    const int k = order / 2;
    const double lhs = k * std::pow(5.0 / 3.0, k) * static_cast<double>(model.size()) * model.hmax() *
                       std::abs(s) * std::abs(t);
    return std::numbers::pi / 20.0 - lhs;
}

FractionalEvolution evolve_fractional(const HamiltonianModel& model, const TrotterScheme& scheme, double t,
                                      double s) {
    if (!(s > 0.0) || s > 1.0) throw InputError("step parameter s must lie in (0, 1]");
    FractionalEvolution out;
    out.domain_margin = convergence_margin(model, scheme.order, t, s);
    out.in_convergence_domain = out.domain_margin >= 0.0;
    Matrix step = apply_scheme(model, scheme, s * t);
    if (s == 1.0)
        out.unitary = std::move(step);
    else
        out.unitary = unitary_power(unitary_eig(step), 1.0 / s);
    return out;
}

long integer_step_count(double s_k, double s_1) {
    if (s_k == 0.0) throw InputError("node value must be nonzero");
    if (!(s_1 > 0.0)) throw InputError("reference node must be positive");
    const double r = s_1 / std::abs(s_k);
    // Guard against ratios that are integers up to rounding.
    long c = static_cast<long>(std::ceil(r - 1e-12));
    return s_k > 0 ? c : -c;
}

EffectiveHamiltonian effective_hamiltonian(const HamiltonianModel& model, const TrotterScheme& scheme, double t,
                                           double s) {
    const double tau = s * t;
    if (tau == 0.0) throw InputError("effective Hamiltonian needs s*t != 0");
    const auto spec = unitary_eig(apply_scheme(model, scheme, tau));
    if (spec.phases.cwiseAbs().maxCoeff() >= std::numbers::pi - kBranchMargin)
        throw BranchError("eigenphase at the principal-log branch cut; use a smaller s*t");
    Matrix h = -(1.0 / tau) * (spec.vectors * spec.phases.cast<cplx>().asDiagonal() * spec.vectors.adjoint());
    return EffectiveHamiltonian{std::move(h), s, t, scheme.order};
}

}  // namespace chebtrot
