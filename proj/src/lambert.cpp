#include "chebtrot/lambert.hpp"

#include "chebtrot/errors.hpp"

#include <cmath>
#include <numbers>

namespace chebtrot {

namespace {

constexpr double kInvE = 1.0 / std::numbers::e;
constexpr double kTol = 1e-13;

double halley(double x, double w) {
    for (int it = 0; it < 64; ++it) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        const double wp1 = w + 1.0;
        if (wp1 == 0.0) break;
        const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= step;
        if (std::abs(step) <= kTol * (1.0 + std::abs(w))) break;
    }
    return w;
}

// Series about the branch point in p = sqrt(2(e x + 1)); sign picks the branch.
double branch_point_guess(double x, double sign) {
    const double p = sign * std::sqrt(std::max(0.0, 2.0 * (std::numbers::e * x + 1.0)));
    return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
}

}  // namespace

double lambert_w0(double x) {
    if (std::isnan(x) || x < -kInvE - 1e-15) throw DomainError("W0 needs x >= -1/e");
    if (x <= -kInvE) return -1.0;
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return x;
    double w;
    if (x < -0.25)
        w = branch_point_guess(x, 1.0);
    else if (x < 3.0)
        w = std::log1p(x) * (1.0 - std::log1p(std::log1p(x)) / (2.0 + std::log1p(x)));
    else {
        const double l1 = std::log(x), l2 = std::log(l1);
        w = l1 - l2 + l2 / l1;
    }
    return halley(x, w);
}

double lambert_wm1(double x) {
    if (std::isnan(x) || x < -kInvE - 1e-15 || x >= 0.0) throw DomainError("W-1 needs -1/e <= x < 0");
    if (x <= -kInvE) return -1.0;
    double w;
    if (x < -0.25)
        w = branch_point_guess(x, -1.0);
    else {
        const double l1 = std::log(-x), l2 = std::log(-l1);
        w = l1 - l2 + l2 / l1;
    }
    return halley(x, w);
}

}  // namespace chebtrot
