#include "chebtrot/bounds.hpp"

#include "chebtrot/chebgrid.hpp"
#include "chebtrot/errors.hpp"
#include "chebtrot/lambert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace chebtrot {

using std::numbers::e;
using std::numbers::pi;

namespace {

constexpr double kEulerGamma = 0.57721566490153286;
constexpr double kLn10 = std::numbers::ln10;

BoundReport from_log(double log_value, std::vector<Assumption> assumptions = {}) {
    BoundReport r;
    r.value = std::exp(log_value);
    r.log10_value = log_value / kLn10;
    r.assumptions = std::move(assumptions);
    r.domain_ok = std::all_of(r.assumptions.begin(), r.assumptions.end(),
                              [](const Assumption& a) { return a.satisfied; });
    return r;
}

BoundReport from_value(double value, std::vector<Assumption> assumptions = {}) {
    return from_log(value > 0 ? std::log(value) : -std::numeric_limits<double>::infinity(), std::move(assumptions));
}

double xlogx(double x) { return x == 0.0 ? 0.0 : x * std::log(x); }

Matrix ad(const Matrix& A, const Matrix& X) { return A * X - X * A; }

// Sum over compositions q_1 + .. + q_s = p of multinomial * ||ad^{q_s}_{A_s} .. ad^{q_1}_{A_1} B||.
double nested_sum(std::span<const Matrix> A, std::size_t j, const Matrix& X, int remaining, double log_coeff,
                  int p) {
    if (remaining == 0) return std::exp(log_factorial(p) + log_coeff) * spectral_norm(X);
    if (j == A.size()) return 0.0;
    double total = 0.0;
    Matrix cur = X;
    for (int q = 0; q <= remaining; ++q) {
        if (q > 0) cur = ad(A[j], cur);
        if (cur.cwiseAbs().maxCoeff() == 0.0) break;
        total += nested_sum(A, j + 1, cur, remaining - q, log_coeff - log_factorial(q), p);
    }
    return total;
}

}  // namespace

double log_factorial(int n) {
    if (n < 0) throw InputError("factorial of a negative number");
    if (n <= 20) {
        double f = 1.0;
        for (int i = 2; i <= n; ++i) f *= i;
        return std::log(f);
    }
    return std::lgamma(n + 1.0);
}

BoundReport heff_derivative_bound(int n_deriv, int k, int m, double hmax, double t) {
    if (!(t > 0.0)) throw InputError("t must be positive");
    if (n_deriv < 0 || k < 1 || m < 1 || hmax < 0) throw InputError("bad derivative-bound arguments");
    const double base = e * e * k * std::pow(5.0 / 3.0, k) * m * hmax * t;
    const double lhs = k * std::pow(5.0 / 3.0, k) * m * hmax * t;
    const double margin = pi / 20.0 - lhs;
    const double logv = std::log(2.0) - std::log(t) + xlogx(n_deriv) + (n_deriv + 1) * std::log(base);
    return from_log(logv, {{"k(5/3)^k m hmax t <= pi/20 at s=1", margin >= 0, margin}});
}

BoundReport cheb_error_bound(int n, double a, double deriv_sup) {
    if (n < 1 || !(a > 0)) throw InputError("bad Chebyshev error-bound arguments");
    if (n % 2 != 0) {
        BoundReport r = from_value(0.0, {{"even n (odd n puts a node at zero)", false, 0.0}});
        r.domain_ok = true;
        return r;
    }
    return from_value(deriv_sup * std::pow(a / (2.0 * n), n));
}

double total_steps_bound(int n, double a) {
    if (n < 1 || !(a > 0)) throw InputError("bad step-bound arguments");
    return 4.0 * n / (pi * a) * (kEulerGamma + std::log(2.0 * n + 2.0));
}

double bernstein_bound(double C, double rho, int n) {
    if (!(rho > 1.0)) throw DomainError("Bernstein bound needs rho > 1");
    if (C < 0) throw InputError("C must be nonnegative");
    return 4.0 * C * std::pow(rho, -n) / (rho - 1.0);
}

AnalyticityRadius analyticity_radius(double alpha, double beta, int p, double gamma0) {
    if (!(alpha > 0) || !(beta > 0) || p < 1 || !(gamma0 > 0)) throw InputError("analyticity radius needs positive inputs");
    const double log_inner = (std::log(gamma0) + log_factorial(p + 1) - std::log(2.0 * alpha)) / p;
    AnalyticityRadius r;
    r.r_max = (p / beta) * lambert_w0((beta / p) * std::exp(log_inner));
    r.covers_interval = r.r_max > 1.0;
    r.rho_max = r.covers_interval ? r.r_max + std::sqrt(r.r_max * r.r_max - 1.0) : 1.0;
    return r;
}

CommutatorBudget alpha_comm(std::span<const Matrix> later, const Matrix& B, int p, CommutatorMode mode) {
    if (p < 1) throw InputError("commutator order must be >= 1");
    CommutatorBudget out{0.0, p, mode};
    if (mode == CommutatorMode::crude_norm) {
        double sum_a = 0.0;
        for (const auto& A : later) sum_a += spectral_norm(A);
        out.alpha_comm = spectral_norm(B) * std::pow(2.0, p) * std::pow(sum_a, p);
        return out;
    }
    if (p > 4) throw CapabilityError("exact nested commutators are limited to p <= 4; use crude mode");
    out.alpha_comm = nested_sum(later, 0, B, p, 0.0, p);
    return out;
}

CommutatorBudget alpha_comm(const HamiltonianModel& model, const TrotterScheme& scheme, int p,
                            CommutatorMode mode) {
    if (mode == CommutatorMode::exact_nested && (p > 4 || model.size() > 3))
        throw CapabilityError("exact nested commutators are limited to p <= 4 and m <= 3; use crude mode");
    std::vector<Matrix> scaled;
    scaled.reserve(scheme.stages.size());
    for (const auto& st : scheme.stages)
        scaled.push_back(st.fraction * model.term(static_cast<std::size_t>(st.term)).matrix);
    CommutatorBudget out{0.0, p, mode};
    for (std::size_t l = 0; l < scaled.size(); ++l) {
        std::span<const Matrix> later(scaled.data() + l + 1, scaled.size() - l - 1);
        out.alpha_comm += alpha_comm(later, scaled[l], p, mode).alpha_comm;
    }
    return out;
}

BoundReport heff_distance_bound(const HamiltonianModel& model, const TrotterScheme& scheme, double t, double s,
                                int p, CommutatorMode mode) {
    const double tau = std::abs(s * t);
    const double alpha = alpha_comm(model, scheme, p, mode).alpha_comm;
    const double budget = alpha * std::pow(tau, p) * std::exp(2.0 * tau * model.norm_sum() - log_factorial(p + 1));
    return from_value(2.5 * budget, {{"|tau| <= 1/8", tau <= 0.125, 0.125 - tau},
                                     {"commutator budget <= 1/20", budget <= 0.05, 0.05 - budget}});
}

ExpvalDerivBound expval_deriv_bound(int n, double c, double a) {
    if (n < 1 || c < 0 || !(a > 0)) throw InputError("bad expectation-bound arguments");
    ExpvalDerivBound b;
    b.applicable_regime = c > n ? 1 : 2;
    if (c == 0.0) {
        // Everything carries a positive power of c.
        return b;
    }
    const double k1 = std::sqrt(std::pow(e, 3) * (1.0 + std::sqrt(8.0 / pi) * e * e));
    b.deriv_regime1 = std::exp(2.0 * n * std::log(c * k1));
    b.interp_regime1 = std::exp(n * std::log(129.0 * c * c * a / n));
    b.deriv_regime2 = std::exp(0.5 * std::log(2.0 * n / pi) + n * std::log(std::pow(e, 4) * c / 2.0) +
                               log_factorial(n) + 4.0 * c * e * e * std::sqrt(2.0 / pi));
    b.interp_regime2 = std::exp(std::log(2.0 * std::sqrt(2.0) * n) + n * std::log(6.0 * c * a) + 24.0 * c);
    b.deriv_min = std::min(b.deriv_regime1, b.deriv_regime2);
    b.interp_min = std::min(b.interp_regime1, b.interp_regime2);
    return b;
}

PeInterpParams pe_interp_params(int m, int k, double hmax, double Gamma, double eps) {
    if (!(eps > 0) || Gamma < 0 || m < 1 || k < 1 || !(hmax > 0)) throw InputError("bad interpolation-parameter arguments");
    const double X = m * k * std::pow(5.0 / 3.0, k) * hmax * (1.0 + Gamma) / eps;
    const double L = std::log(X);
    PeInterpParams out;
    out.n_real = L > 0 ? L / (2.0 * lambert_w0(L / 2.0)) : 1.0;
    out.n_star = std::max(2, 2 * static_cast<int>(std::ceil(out.n_real / 2.0 - 1e-12)));
    const int n = out.n_star;
    const double inv = 1.0 / (32.0 * k * e * e * std::pow(5.0 / 3.0, k - 1) * m * hmax * (1.0 + Gamma));
    out.a = 2.0 * std::exp((std::log(64.0 * eps) - log_factorial(n)) / n) * std::pow(inv, 1.0 + 1.0 / n);
    return out;
}

double iqae_oracle_count(double eps_data, double gamma_ratio, int n, double delta) {
    if (!(eps_data > 0) || !(gamma_ratio > 0) || n < 1 || !(delta > 0 && delta < 1))
        throw InputError("bad amplitude-estimation arguments");
    const double L = lebesgue_factor(n);
    const double inner = gamma_ratio * L * pi / eps_data;
    if (inner <= 1.0) throw DomainError("log2 argument must exceed 1");
    return 200.0 * gamma_ratio * L / eps_data * std::log(2.0 * n / delta * std::log2(inner));
}

std::pair<double, double> tail_bounds(double, double, double kk, int) {
    if (!(kk > 0)) throw InputError("tail multiplier must be positive");
    return {1.0 / (kk * kk), 1.0 / kk};
}

bool bauer_fike_check(std::span<const double> eigs_a, double lambda_b, double norm_diff) {
    double best = INFINITY;
    for (double l : eigs_a) best = std::min(best, std::abs(l - lambda_b));
    return best <= norm_diff;
}

int expval_n_star(double c, double eps) {
    if (!(eps > 0) || c < 0) throw InputError("bad node-count arguments");
    const double x = -eps * std::log(2.0) / (4.0 * std::sqrt(2.0));
    const double tail = -lambert_wm1(x) / std::log(2.0);
    return std::max(static_cast<int>(std::ceil(c)), static_cast<int>(std::ceil(tail)));
}

EnergyTruncationBound energy_truncation_bound(const HamiltonianModel& model, const TrotterScheme& scheme,
                                              double t, double a, int n) {
    EnergyTruncationBound out;
    const int p = scheme.order;
    const auto spec = eig_herm(sum_matrix(model));
    const double gap = spec.eigenvalues.size() > 1 ? spec.eigenvalues(1) - spec.eigenvalues(0) : 0.0;
    out.alpha_comm = alpha_comm(model, scheme, p, CommutatorMode::crude_norm).alpha_comm;
    out.C = gap / 2.0;
    if (!(gap > 0) || !(out.alpha_comm > 0)) {
        out.assumptions.push_back({"ground-state gap and noncommuting terms", false, gap});
        return out;
    }
    // Rescale to u = s / a so the interval is [-1, 1].
    const double at = std::abs(a * t);
    const double alpha = 2.5 * out.alpha_comm * std::pow(at, p);
    const double beta = 2.0 * model.norm_sum() * at;
    out.radius = analyticity_radius(alpha, beta, p, gap);
    const double tau = out.radius.r_max * at;
    out.assumptions.push_back({"|tau| <= 1/8 on the ellipse", tau <= 0.125, 0.125 - tau});
    out.assumptions.push_back({"ellipse encloses [-1, 1]", out.radius.covers_interval, out.radius.r_max - 1.0});
    if (!out.radius.covers_interval) return out;
    out.available = true;
    out.bound = bernstein_bound(out.C, out.radius.rho_max, n - 1);
    return out;
}

}  // namespace chebtrot
