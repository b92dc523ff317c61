#pragma once

#include "chebtrot/operators.hpp"

#include <Eigen/QR>

#include <cmath>
#include <random>
#include <vector>

namespace testing_util {

using chebtrot::cplx;
using chebtrot::Matrix;

inline Matrix random_unitary(int dim, std::mt19937_64& gen) {
    std::normal_distribution<double> nd;
    Matrix z(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) z(i, j) = cplx(nd(gen), nd(gen));
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
    return q;
}

inline Matrix random_hermitian(int dim, std::mt19937_64& gen) {
    std::normal_distribution<double> nd;
    Matrix z(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) z(i, j) = cplx(nd(gen), nd(gen));
    return (z + z.adjoint()) / 2.0;
}

// Least-squares slope of log(y) against log(x).
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx, sy += ly, sxx += lx * lx, sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * i / (n - 1.0));
    return v;
}

}  // namespace testing_util
