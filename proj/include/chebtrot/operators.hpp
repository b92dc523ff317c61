#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace chebtrot {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr int kMaxQubits = 12;
inline constexpr double kHermitianTol = 1e-12;

struct HermitianTerm {
    std::string label;
    Matrix matrix;
    double norm = 0.0;
};

// Validates Hermiticity (rejects, never symmetrizes) and caches the spectral norm.
HermitianTerm make_term(std::string label, Matrix matrix);

class HamiltonianModel {
public:
    explicit HamiltonianModel(std::vector<HermitianTerm> terms);

    const std::vector<HermitianTerm>& terms() const { return terms_; }
    const HermitianTerm& term(std::size_t j) const { return terms_.at(j); }
    std::size_t size() const { return terms_.size(); }
    int num_qubits() const { return num_qubits_; }
    Eigen::Index dim() const { return terms_.front().matrix.rows(); }
    double hmax() const { return hmax_; }
    double norm_sum() const;

private:
    std::vector<HermitianTerm> terms_;
    int num_qubits_ = 0;
    double hmax_ = 0.0;
};

struct SpectralDecomposition {
    RealVector eigenvalues;  // ascending
    Matrix eigenvectors;     // columns
    double gap = 0.0;        // smallest adjacent difference
};

HermitianTerm build_pauli_term(double coeff, std::string_view pauli);
HamiltonianModel build_tfim(int num_spins, double J, double g);
Matrix sum_matrix(const HamiltonianModel& model);
SpectralDecomposition eig_herm(const Matrix& matrix);

double max_hermitian_defect(const Matrix& m);
double spectral_norm(const Matrix& m);

// exp(-i H t) for Hermitian H.
Matrix expm_hermitian(const Matrix& H, double t);

// {"num_qubits": int, "terms": [{"coeff": float, "pauli": "ZZ"}]}
HamiltonianModel model_from_json(std::string_view text);
HamiltonianModel load_model(const std::string& path);

// Computational basis state from a bit string such as "01"; leftmost is qubit 0.
Vector basis_state(std::string_view bits);
Matrix pauli_matrix(std::string_view pauli);

}  // namespace chebtrot
