#include "chebtrot/chebgrid.hpp"

#include "chebtrot/errors.hpp"

#include <cmath>
#include <numbers>

namespace chebtrot {

using std::numbers::pi;

ChebyshevGrid::ChebyshevGrid(int n, double a) : n_(n), a_(a) {
    if (n < 2 || n % 2 != 0) throw InputError("Chebyshev grid needs an even n >= 2");
    if (!(a > 0.0) || !std::isfinite(a)) throw InputError("grid half-width must be positive");
    nodes_.resize(n);
    for (int i = 1; i <= n; ++i) nodes_(i - 1) = a * std::cos((2.0 * i - 1.0) * pi / (2.0 * n));
    // Exact antisymmetry so mirrored data lines up bit for bit.
    for (int i = 0; i < n / 2; ++i) nodes_(n - 1 - i) = -nodes_(i);
    basis_.resize(n, n);
    for (int k = 0; k < n; ++k) basis_.row(k) = basis_at(nodes_(k)).transpose();
}

RealVector ChebyshevGrid::basis_at(double s) const {
    const double x = s / a_;
    RealVector p(n_);
    double tm1 = 1.0, t = x;
    p(0) = std::sqrt(1.0 / n_);
    const double c = std::sqrt(2.0 / n_);
    if (n_ > 1) p(1) = c * x;
    for (int j = 2; j < n_; ++j) {
        const double next = 2.0 * x * t - tm1;
        tm1 = t;
        t = next;
        p(j) = c * t;
    }
    return p;
}

ChebyshevGrid make_grid(int n, double a) { return ChebyshevGrid(n, a); }

double InterpolationFit::evaluate(double s) const {
    const int n = grid.n();
    const double x = s / grid.a();
    const double c0 = std::sqrt(1.0 / n), c = std::sqrt(2.0 / n);
    double b1 = 0.0, b2 = 0.0;
    for (int j = n - 1; j >= 1; --j) {
        const double b0 = c * coeffs(j) + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return c0 * coeffs(0) + x * b1 - b2;
}

InterpolationFit fit(const ChebyshevGrid& grid, std::span<const double> y) {
    if (static_cast<int>(y.size()) != grid.n()) throw InputError("data length does not match grid size");
    Eigen::Map<const RealVector> yv(y.data(), static_cast<Eigen::Index>(y.size()));
    if (!yv.allFinite()) throw InputError("data must be finite");
    RealVector c = grid.basis().transpose() * yv;
    RealVector d0 = weights_at_zero(grid);
    const double est = d0.dot(yv);
    return InterpolationFit{grid, std::move(c), std::move(d0), est};
}

RealVector weights_at_zero(const ChebyshevGrid& grid) {
    const int n = grid.n();
    RealVector d(n);
    for (int k = 1; k <= n; ++k) {
        const double sign = ((k + n / 2) % 2 == 0) ? 1.0 : -1.0;
        d(k - 1) = sign * std::tan((2.0 * k - 1.0) * pi / (2.0 * n)) / n;
    }
    return d;
}

double lebesgue_factor(int n) {
    if (n < 1) throw InputError("lebesgue_factor needs n >= 1");
    return 2.0 / pi * std::log(n + 1.0) + 1.0;
}

VariancePropagation propagate_variance(std::span<const double> sigmas, const ChebyshevGrid& grid) {
    if (static_cast<int>(sigmas.size()) != grid.n()) throw InputError("sigma length does not match grid size");
    const RealVector d = weights_at_zero(grid);
    double acc = 0.0, smax = 0.0;
    for (int k = 0; k < grid.n(); ++k) {
        const double s = sigmas[static_cast<std::size_t>(k)];
        if (!(s >= 0.0)) throw InputError("standard deviations must be nonnegative");
        acc += s * s * d(k) * d(k);
        smax = std::max(smax, s);
    }
    return VariancePropagation{std::sqrt(acc), std::sqrt(2.0) * smax};
}

}  // namespace chebtrot
