#pragma once

#include "chebtrot/operators.hpp"

#include <span>

namespace chebtrot {

class ChebyshevGrid {
public:
    ChebyshevGrid(int n, double a);

    int n() const { return n_; }
    double a() const { return a_; }
    const RealVector& nodes() const { return nodes_; }
    double node(int i) const { return nodes_(i); }  // zero based
    // V(k, j) = p_j(s_k); orthogonal.
    const RealMatrix& basis() const { return basis_; }
    // (p_0(s), ..., p_{n-1}(s)).
    RealVector basis_at(double s) const;

private:
    int n_;
    double a_;
    RealVector nodes_;
    RealMatrix basis_;
};

ChebyshevGrid make_grid(int n, double a);

struct InterpolationFit {
    ChebyshevGrid grid;
    RealVector coeffs;
    RealVector weights_d0;
    double estimate_at_zero = 0.0;

    // Clenshaw on the orthonormal series.
    double evaluate(double s) const;
    bool extrapolates(double s) const { return std::abs(s) > grid.a(); }
};

InterpolationFit fit(const ChebyshevGrid& grid, std::span<const double> y);

// d_k(0) in closed form.
RealVector weights_at_zero(const ChebyshevGrid& grid);
double lebesgue_factor(int n);

struct VariancePropagation {
    double exact = 0.0;  // || diag(sigma) d(0) ||_2
    double bound = 0.0;  // sqrt(2) max sigma
};
VariancePropagation propagate_variance(std::span<const double> sigmas, const ChebyshevGrid& grid);

}  // namespace chebtrot
