#include "chebtrot/bounds.hpp"
#include "chebtrot/chebgrid.hpp"
#include "chebtrot/errors.hpp"
#include "chebtrot/estimators.hpp"
#include "chebtrot/lambert.hpp"
#include "chebtrot/operators.hpp"
#include "chebtrot/phase_est.hpp"
#include "chebtrot/trotter.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace chebtrot;

namespace {

py::dict result_dict(const ExtrapolationResult& r) {
    py::list nodes;
    for (const auto& rec : r.per_node) {
        py::dict d;
        d["s"] = rec.s;
        d["value"] = rec.value;
        d["sigma"] = rec.sigma;
        d["e_prime"] = rec.e_prime;
        d["exponentials"] = rec.exponentials;
        nodes.append(d);
    }
    py::dict out;
    out["estimate"] = r.estimate;
    out["exact_reference"] = r.exact_reference;
    out["systematic_error"] = r.systematic_error;
    out["exponentials"] = r.cost.exponentials_total;
    out["nodes"] = nodes;
    out["flags"] = r.flags;
    return out;
}

}  // namespace

PYBIND11_MODULE(_chebtrot, m) {
    m.doc() = "Chebyshev extrapolation of Trotterized dynamics";

    auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
    py::register_exception<BranchError>(m, "BranchError", domain.ptr());
    py::register_exception<CrossingError>(m, "CrossingError", domain.ptr());
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<CapabilityError>(m, "CapabilityError", PyExc_NotImplementedError);

    py::class_<HamiltonianModel>(m, "HamiltonianModel")
        .def_property_readonly("num_terms", &HamiltonianModel::size)
        .def_property_readonly("num_qubits", &HamiltonianModel::num_qubits)
        .def_property_readonly("hmax", &HamiltonianModel::hmax)
        .def("matrix", [](const HamiltonianModel& h) { return sum_matrix(h); })
        .def("term", [](const HamiltonianModel& h, std::size_t i) { return h.term(i).matrix; });

    m.def("build_tfim", &build_tfim, py::arg("num_spins"), py::arg("J") = 1.0, py::arg("g") = 1.0);
    m.def("model_from_json", &model_from_json, py::arg("text"));
    m.def("expm_hermitian", &expm_hermitian, py::arg("H"), py::arg("t"));

    m.def(
        "trotter_step",
        [](const HamiltonianModel& h, int order, double t) {
            return apply_scheme(h, st_scheme(order, static_cast<int>(h.size())), t);
        },
        py::arg("model"), py::arg("order"), py::arg("t"));
    m.def(
        "effective_hamiltonian",
        [](const HamiltonianModel& h, int order, double t, double s) {
            return effective_hamiltonian(h, st_scheme(order, static_cast<int>(h.size())), t, s).matrix;
        },
        py::arg("model"), py::arg("order"), py::arg("t"), py::arg("s"));

    m.def("chebyshev_nodes", [](int n, double a) { return make_grid(n, a).nodes(); }, py::arg("n"), py::arg("a"));
    m.def("weights_at_zero", [](int n, double a) { return weights_at_zero(make_grid(n, a)); }, py::arg("n"),
          py::arg("a"));
    m.def(
        "extrapolate_at_zero",
        [](std::vector<double> y, double a) { return fit(make_grid(static_cast<int>(y.size()), a), y).estimate_at_zero; },
        py::arg("values"), py::arg("a"));
    m.def("lebesgue_factor", &lebesgue_factor, py::arg("n"));

    m.def(
        "ground_energy",
        [](const HamiltonianModel& h, int order, double t, int n, double a) {
            return result_dict(extrapolate_ground_energy(h, order, t, n, a));
        },
        py::arg("model"), py::arg("order"), py::arg("t"), py::arg("n"), py::arg("a"));
    m.def(
        "trotter_error",
        [](const HamiltonianModel& h, int order, double t, int n, double a) {
            return result_dict(estimate_trotter_error(h, order, t, n, a));
        },
        py::arg("model"), py::arg("order"), py::arg("t"), py::arg("n"), py::arg("a"));
    m.def("frobenius_distance", &frobenius_distance, py::arg("U"), py::arg("V"));

    m.def(
        "window_budget",
        [](int m_bits, int q) {
            const auto b = window_error_budget(default_window_spec(m_bits, q));
            py::dict d;
            d["eps_trunc"] = b.eps_trunc;
            d["eps_alias"] = b.eps_alias;
            d["eps_renorm"] = b.eps_renorm;
            d["eps_total"] = b.eps_total;
            return d;
        },
        py::arg("m"), py::arg("q"));
    m.def(
        "phase_distribution",
        [](const Matrix& U, const Vector& psi, int m_bits, int q) {
            return gqpe_distribution(U, psi, default_window_spec(m_bits, q)).probs;
        },
        py::arg("U"), py::arg("psi"), py::arg("m"), py::arg("q"));

    m.def("lambert_w0", &lambert_w0, py::arg("x"));
    m.def("lambert_wm1", &lambert_wm1, py::arg("x"));
}
