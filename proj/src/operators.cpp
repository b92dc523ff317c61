#include "chebtrot/operators.hpp"

#include "chebtrot/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace chebtrot {

namespace {

Matrix single_pauli(char c) {
    Matrix p(2, 2);
    switch (c) {
    case 'I': p << 1, 0, 0, 1; break;
    case 'X': p << 0, 1, 1, 0; break;
    case 'Y': p << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case 'Z': p << 1, 0, 0, -1; break;
    default: throw InputError(std::string("invalid Pauli character '") + c + "'");
    }
    return p;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

int qubits_for_dim(Eigen::Index dim) {
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) ++n;
    if ((Eigen::Index{1} << n) != dim) throw InputError("term dimension is not a power of two");
    return n;
}

}  // namespace

double max_hermitian_defect(const Matrix& m) {
    if (m.rows() != m.cols()) return INFINITY;
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double spectral_norm(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

HermitianTerm make_term(std::string label, Matrix matrix) {
    if (matrix.rows() == 0 || matrix.rows() != matrix.cols())
        throw InputError("term '" + label + "' is not a nonempty square matrix");
    if (max_hermitian_defect(matrix) > kHermitianTol)
        throw InputError("term '" + label + "' is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(matrix, Eigen::EigenvaluesOnly);
    double norm = es.eigenvalues().cwiseAbs().maxCoeff();
    return HermitianTerm{std::move(label), std::move(matrix), norm};
}

HamiltonianModel::HamiltonianModel(std::vector<HermitianTerm> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw InputError("a model needs at least one term");
    const auto dim = terms_.front().matrix.rows();
    num_qubits_ = qubits_for_dim(dim);
    if (num_qubits_ > kMaxQubits)
        throw CapabilityError("models above " + std::to_string(kMaxQubits) + " qubits are not supported");
    for (const auto& t : terms_) {
        if (t.matrix.rows() != dim || t.matrix.cols() != dim)
            throw InputError("term '" + t.label + "' has mismatched dimension");
        hmax_ = std::max(hmax_, t.norm);
    }
}

double HamiltonianModel::norm_sum() const {
    double s = 0.0;
    for (const auto& t : terms_) s += t.norm;
    return s;
}

Matrix pauli_matrix(std::string_view pauli) {
    if (pauli.empty()) throw InputError("empty Pauli string");
    if (static_cast<int>(pauli.size()) > kMaxQubits)
        throw CapabilityError("Pauli strings above " + std::to_string(kMaxQubits) + " qubits are not supported");
    Matrix out = single_pauli(pauli[0]);
    for (std::size_t i = 1; i < pauli.size(); ++i) out = kron(out, single_pauli(pauli[i]));
    return out;
}

HermitianTerm build_pauli_term(double coeff, std::string_view pauli) {
    if (!std::isfinite(coeff)) throw InputError("coefficient must be finite");
    Matrix m = coeff * pauli_matrix(pauli);
    std::ostringstream label;
    label << coeff << '*' << pauli;
    return HermitianTerm{label.str(), std::move(m), std::abs(coeff)};
}

HamiltonianModel build_tfim(int num_spins, double J, double g) {
    if (num_spins < 2) throw InputError("TFIM needs at least two spins");
    if (num_spins > kMaxQubits)
        throw CapabilityError("models above " + std::to_string(kMaxQubits) + " qubits are not supported");
    std::vector<HermitianTerm> terms;
    const auto n = static_cast<std::size_t>(num_spins);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::string s(n, 'I');
        s[i] = s[i + 1] = 'Z';
        terms.push_back(build_pauli_term(-J, s));
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::string s(n, 'I');
        s[i] = 'X';
        terms.push_back(build_pauli_term(-J * g, s));
    }
    return HamiltonianModel(std::move(terms));
}

Matrix sum_matrix(const HamiltonianModel& model) {
    Matrix h = Matrix::Zero(model.dim(), model.dim());
    for (const auto& t : model.terms()) h += t.matrix;
    return h;
}

SpectralDecomposition eig_herm(const Matrix& matrix) {
    if (matrix.rows() != matrix.cols()) throw InputError("eig_herm needs a square matrix");
    const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
    if (max_hermitian_defect(matrix) > 1e-10 * scale) throw InputError("eig_herm input is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(matrix);
    SpectralDecomposition out{es.eigenvalues(), es.eigenvectors(), 0.0};
    const auto& ev = out.eigenvalues;
    if (ev.size() > 1) {
        out.gap = INFINITY;
        for (Eigen::Index i = 1; i < ev.size(); ++i) out.gap = std::min(out.gap, ev(i) - ev(i - 1));
    }
    return out;
}

Matrix expm_hermitian(const Matrix& H, double t) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(H);
    Vector phases = (es.eigenvalues().cast<cplx>() * cplx(0, -t)).array().exp();
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

HamiltonianModel model_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("model JSON: ") + e.what());
    }
    if (!j.contains("num_qubits") || !j.contains("terms") || !j["terms"].is_array())
        throw InputError("model JSON needs num_qubits and a terms array");
    const int nq = j["num_qubits"].get<int>();
    if (nq < 1) throw InputError("num_qubits must be positive");
    if (nq > kMaxQubits)
        throw CapabilityError("models above " + std::to_string(kMaxQubits) + " qubits are not supported");
    std::vector<HermitianTerm> terms;
    for (const auto& t : j["terms"]) {
        const auto pauli = t.at("pauli").get<std::string>();
        if (static_cast<int>(pauli.size()) != nq)
            throw InputError("Pauli string '" + pauli + "' does not match num_qubits");
        terms.push_back(build_pauli_term(t.at("coeff").get<double>(), pauli));
    }
    return HamiltonianModel(std::move(terms));
}

HamiltonianModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open model file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return model_from_json(ss.str());
}

Vector basis_state(std::string_view bits) {
    if (bits.empty() || static_cast<int>(bits.size()) > kMaxQubits) throw InputError("bad basis-state length");
    Eigen::Index idx = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw InputError("basis state must be a 0/1 string");
        idx = 2 * idx + (c - '0');
    }
    Vector v = Vector::Zero(Eigen::Index{1} << bits.size());
    v(idx) = 1.0;
    return v;
}

}  // namespace chebtrot
