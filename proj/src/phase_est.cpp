#include "chebtrot/phase_est.hpp"

#include "chebtrot/errors.hpp"
#include "chebtrot/io.hpp"
#include "chebtrot/rng.hpp"

#include <nlohmann/json.hpp>
#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace chebtrot {

using std::numbers::pi;

namespace {

constexpr int kMaxRegisterQubits = 20;

double wrap_cycles(double x) { return x - std::floor(x + 0.5); }  // into [-1/2, 1/2)

std::vector<cplx> dft(const std::vector<cplx>& in) {
    Eigen::FFT<double> fft;
    std::vector<cplx> out;
    fft.fwd(out, in);
    const double scale = 1.0 / std::sqrt(static_cast<double>(in.size()));
    for (auto& v : out) v *= scale;
    return out;
}

}  // namespace

double GaussianWindowSpec::sigma_f() const { return 1.0 / (4.0 * pi * sigma); }

bool GaussianWindowSpec::in_regime() const {
    const double ref = std::sqrt(std::ldexp(1.0, m));
    return sigma_over_T() >= 0.1 * ref && sigma_over_T() <= 10.0 * ref;
}

std::string GaussianWindowSpec::to_json() const {
    nlohmann::ordered_json j;
    j["m"] = m;
    j["q"] = q;
    j["sigma"] = sigma;
    j["T"] = T;
    j["F"] = F();
    j["sigma_f"] = sigma_f();
    j["sigma_over_T"] = sigma_over_T();
    j["in_regime"] = in_regime();
    return j.dump();
}

GaussianWindowSpec make_window_spec(int m, int q, double sigma, double T) {
    if (m < 1 || q < m) throw InputError("window needs 1 <= m <= q");
    if (q > kMaxRegisterQubits) throw CapabilityError("register above 20 qubits is not supported");
    if (!(sigma > 0) || !(T > 0)) throw InputError("sigma and T must be positive");
    return GaussianWindowSpec{m, q, sigma, T};
}

GaussianWindowSpec default_window_spec(int m, int q, double T) {
    return make_window_spec(m, q, std::sqrt(std::ldexp(1.0, m)) * T, T);
}

double gaussian_density(double w, double sigma) {
    return std::exp(-w * w / (2.0 * sigma * sigma)) / (sigma * std::sqrt(2.0 * pi));
}

double gaussian_normalization(double sigma, double T, long half_width) {
    double s = 0.0;
    for (long x = -half_width; x <= half_width; ++x) s += gaussian_density(x * T, sigma);
    return s;
}

double WindowState::amplitude(long x) const {
    const long h = half_width();
    if (x < -h || x > h) return 0.0;
    return amplitudes(x + h);
}

WindowState make_window(int m, double sigma, double T) {
    if (m < 1 || m > kMaxRegisterQubits) throw InputError("window qubits out of range");
    if (!(sigma > 0) || !(T > 0)) throw InputError("sigma and T must be positive");
    const long h = (1L << (m - 1)) - 1;
    WindowState w;
    w.m = m;
    w.normalization = gaussian_normalization(sigma, T, h);
    w.amplitudes.resize(2 * h + 1);
    for (long x = 0; x <= h; ++x) {
        const double a = std::sqrt(gaussian_density(x * T, sigma) / w.normalization);
        w.amplitudes(h + x) = a;
        w.amplitudes(h - x) = a;
    }
    return w;
}

Vector upsample(const WindowState& window, int q) {
    if (q < window.m) throw InputError("upsample needs q >= m");
    if (q > kMaxRegisterQubits) throw CapabilityError("register above 20 qubits is not supported");
    const long Q = 1L << q;
    std::vector<cplx> buf(static_cast<std::size_t>(Q), 0.0);
    const long h = window.half_width();
    for (long x = -h; x <= h; ++x) buf[static_cast<std::size_t>((x + Q) % Q)] = window.amplitude(x);
    const auto spec = dft(buf);
    Vector out(Q);
    for (long k = -Q / 2; k < Q / 2; ++k) out(k + Q / 2) = spec[static_cast<std::size_t>((k + Q) % Q)];
    return out;
}

RealVector analytic_window_samples(const GaussianWindowSpec& spec) {
    const long Q = 1L << spec.q;
    const double F = spec.F(), sf = spec.sigma_f();
    RealVector p(Q);
    for (long k = -Q / 2; k < Q / 2; ++k) p(k + Q / 2) = gaussian_density(k * F, sf);
    return (p / p.sum()).cwiseSqrt();
}

WindowBudget window_error_budget(const GaussianWindowSpec& spec) {
    const double ratio = spec.sigma_over_T();
    const double T = spec.T;
    const double h = std::ldexp(1.0, spec.m - 1) - 1.0;
    const double Q = std::ldexp(1.0, spec.q);
    const double N = gaussian_normalization(spec.sigma, T, static_cast<long>(h));
    const double Nf = RealVector::NullaryExpr(static_cast<Eigen::Index>(Q), [&](Eigen::Index i) {
                          return gaussian_density((static_cast<double>(i) - Q / 2) * spec.F(), spec.sigma_f());
                      }).sum();
    const double root_sigma_over_T = std::sqrt(spec.sigma) / T;
    const double denom = std::sqrt(Q) * std::sqrt(N);
    const double trunc_decay = std::exp(-std::pow(T * h / (2.0 * spec.sigma), 2));
    const double alias_decay = std::exp(-pi * pi * ratio * ratio);

    WindowBudget b;
    b.eps_trunc = std::pow(2.0, 0.75) * std::pow(pi, 0.25) * root_sigma_over_T * trunc_decay / denom;
    b.eps_alias = 4.0 * std::pow(pi, 0.25) * std::pow(2.0, 0.75) * root_sigma_over_T * alias_decay / denom;
    b.eps_renorm = 4.0 * ratio * std::sqrt(2.0 * pi / (Q * T * N * spec.F() * Nf)) *
                   std::max(4.0 * alias_decay, std::exp(-std::pow(h / (2.0 * ratio), 2)));
    b.eps_total = b.eps_trunc + b.eps_alias + b.eps_renorm;
    return b;
}

double PhaseDistribution::bin_phase(Eigen::Index bin) const {
    const double Q = std::ldexp(1.0, q);
    return (static_cast<double>(bin) - Q / 2) / Q;
}

double PhaseDistribution::circular_mean() const {
    cplx acc = 0.0;
    for (Eigen::Index b = 0; b < probs.size(); ++b) acc += probs(b) * std::polar(1.0, 2 * pi * bin_phase(b));
    return wrap_cycles(std::arg(acc) / (2 * pi));
}

double PhaseDistribution::stddev() const {
    const double mu = circular_mean();
    double var = 0.0;
    for (Eigen::Index b = 0; b < probs.size(); ++b) {
        const double d = wrap_cycles(bin_phase(b) - mu);
        var += probs(b) * d * d;
    }
    return std::sqrt(var);
}

PhaseDistribution gqpe_distribution(const Matrix& U, const Vector& psi, const GaussianWindowSpec& spec) {
    if (U.rows() != U.cols() || U.rows() != psi.size()) throw InputError("unitary and state dimensions disagree");
    const auto dim = U.rows();
    if ((U.adjoint() * U - Matrix::Identity(dim, dim)).norm() > 1e-9) throw InputError("U is not unitary");
    if (std::abs(psi.norm() - 1.0) > 1e-9) throw InputError("state is not normalized");

    const auto window = make_window(spec.m, spec.sigma, spec.T);
    const long Q = 1L << spec.q;
    const long h = window.half_width();

    // Ancilla-major statevector: row x holds window(x) * U^x |psi> for signed x.
    Matrix state = Matrix::Zero(Q, dim);
    Vector fwd = psi, bwd = psi;
    const Matrix Ud = U.adjoint();
    state.row(0) = window.amplitude(0) * psi.transpose();
    for (long x = 1; x <= h; ++x) {
        fwd = U * fwd;
        bwd = Ud * bwd;
        state.row(x) = window.amplitude(x) * fwd.transpose();
        state.row(Q - x) = window.amplitude(-x) * bwd.transpose();
    }

    PhaseDistribution out{spec.q, RealVector::Zero(Q)};
    std::vector<cplx> col(static_cast<std::size_t>(Q));
    for (Eigen::Index c = 0; c < dim; ++c) {
        for (long x = 0; x < Q; ++x) col[static_cast<std::size_t>(x)] = state(x, c);
        const auto spec_col = dft(col);
        for (long k = -Q / 2; k < Q / 2; ++k) out.probs(k + Q / 2) += std::norm(spec_col[static_cast<std::size_t>((k + Q) % Q)]);
    }
    out.probs /= out.probs.sum();
    return out;
}

std::vector<double> sample_phases(const PhaseDistribution& dist, long shots, std::uint64_t seed,
                                  std::uint64_t stream) {
    if (shots < 1) throw InputError("shots must be positive");
    std::vector<double> cdf(static_cast<std::size_t>(dist.probs.size()));
    double acc = 0.0;
    for (Eigen::Index b = 0; b < dist.probs.size(); ++b) cdf[static_cast<std::size_t>(b)] = acc += dist.probs(b);
    const CounterRng rng(seed, stream);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(shots));
    for (long i = 0; i < shots; ++i) {
        const double u = rng.uniform(static_cast<std::uint64_t>(i)) * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.end()) --it;
        out.push_back(dist.bin_phase(it - cdf.begin()));
    }
    return out;
}

PhaseStats phase_statistics(std::span<const double> phases) {
    if (phases.empty()) return {};
    cplx acc = 0.0;
    for (double p : phases) acc += std::polar(1.0, 2 * pi * p);
    const double centre = std::arg(acc) / (2 * pi);
    // Mean of wrapped offsets refines the circular centre without its bias.
    double mean_off = 0.0;
    for (double p : phases) mean_off += wrap_cycles(p - centre);
    mean_off /= static_cast<double>(phases.size());
    double var = 0.0;
    for (double p : phases) {
        const double d = wrap_cycles(p - centre) - mean_off;
        var += d * d;
    }
    const double n = static_cast<double>(phases.size());
    return PhaseStats{wrap_cycles(centre + mean_off), n > 1 ? std::sqrt(var / (n - 1)) : 0.0};
}

VarianceAllocation allocate_node_variances(std::span<const double> d0, std::span<const double> nodes,
                                           double sigma_P) {
    if (!(sigma_P > 0)) throw InputError("sigma_P must be positive");
    if (d0.size() != nodes.size() || d0.size() % 2 != 0 || d0.empty())
        throw InputError("weights and nodes must have the same even length");
    const std::size_t n = d0.size(), half = n / 2;
    VarianceAllocation out{RealVector::Constant(static_cast<Eigen::Index>(n), INFINITY), std::vector<bool>(n, false)};
    double S = 0.0;
    for (std::size_t k = 0; k < half; ++k) {
        if (d0[k] == 0.0 || nodes[k] == 0.0) {
            out.excluded[k] = out.excluded[n - 1 - k] = true;
            continue;
        }
        S += std::pow(std::abs(d0[k]), 2.0 / 3.0) / std::pow(std::abs(nodes[k]), 2.0 / 3.0);
    }
    for (std::size_t k = 0; k < half; ++k) {
        if (out.excluded[k]) continue;
        const double s = sigma_P / (std::sqrt(2.0) * std::pow(std::abs(d0[k]), 2.0 / 3.0) *
                                    std::cbrt(std::abs(nodes[k])) * std::sqrt(S));
        out.sigmas(static_cast<Eigen::Index>(k)) = s;
        out.sigmas(static_cast<Eigen::Index>(n - 1 - k)) = s;
    }
    return out;
}

std::string distribution_csv(const PhaseDistribution& dist, const GaussianWindowSpec& spec) {
    CsvTable table({"bin", "phase_cycles", "prob"});
    table.comment(spec.to_json());
    for (Eigen::Index b = 0; b < dist.probs.size(); ++b)
        table.add_row({std::to_string(b), format_double(dist.bin_phase(b)), format_double(dist.probs(b))});
    return table.str();
}

}  // namespace chebtrot
