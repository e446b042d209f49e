#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "freefid/errors.hpp"
#include "freefid/fidelity.hpp"
#include "freefid/fock.hpp"
#include "freefid/groundstate.hpp"
#include "freefid/models.hpp"
#include "freefid/orthogonal.hpp"
#include "freefid/polar.hpp"
#include "freefid/records.hpp"
#include "freefid/sweep.hpp"

namespace py = pybind11;
using namespace freefid;

namespace {

GridRange to_range(const py::tuple& t) {
  if (t.size() != 3) throw py::value_error("grid range must be (lo, hi, steps)");
  return {t[0].cast<double>(), t[1].cast<double>(), t[2].cast<int>()};
}

py::tuple from_range(const GridRange& r) { return py::make_tuple(r.lo, r.hi, r.steps); }

py::dict record_dict(const SweepRecord& r) {
  py::dict d;
  d["mu"] = r.mu;
  d["gamma"] = r.gamma;
  d["F_dmu"] = r.f_dmu;
  d["F_dgamma"] = r.f_dgamma;
  d["F_min"] = r.f_min;
  d["det_sign"] = r.det_sign;
  d["min_singular"] = r.min_singular;
  d["singular_flag"] = r.singular_flag;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "freefid native core";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<QuadraticCoupling>(m, "QuadraticCoupling")
      .def_property_readonly("size", &QuadraticCoupling::size)
      .def_property_readonly("z", &QuadraticCoupling::z)
      .def_property_readonly("hopping", &QuadraticCoupling::hopping)
      .def_property_readonly("pairing", &QuadraticCoupling::pairing);
  m.def("make_coupling", &make_coupling, py::arg("a"), py::arg("b"));
  m.def("coupling_from_matrix", &coupling_from_matrix, py::arg("z"));

  py::class_<PolarForm>(m, "PolarForm")
      .def_readonly("positive", &PolarForm::positive)
      .def_readonly("orthogonal", &PolarForm::orthogonal)
      .def_readonly("singular_values", &PolarForm::singular_values)
      .def_readonly("det_sign", &PolarForm::det_sign)
      .def_readonly("min_singular", &PolarForm::min_singular)
      .def_readonly("is_singular", &PolarForm::is_singular);
  m.def("polar_decompose",
        [](const QuadraticCoupling& z, std::optional<double> tol) { return polar_decompose(z, tol); },
        py::arg("coupling"), py::arg("tol_sing") = std::nullopt);

  m.def(
      "orthogonal_angles",
      [](const Matrix& q) {
        const auto s = orthogonal_angles(q);
        return py::make_tuple(s.angles, s.det_sign);
      },
      py::arg("q"), "(angles, det_sign) of an orthogonal matrix");

  m.def("parity_of", [](const Matrix& t) { return parity_of(t).parity_sign; }, py::arg("t"));
  m.def(
      "pairing_matrix", [](const Matrix& t) { return pairing_matrix(t).g; }, py::arg("t"));
  m.def(
      "canonical_ground_state",
      [](const QuadraticCoupling& z) {
        const auto gs = canonical_ground_state(z);
        py::dict d;
        d["angles"] = gs.angles;
        d["mode_frame"] = gs.mode_frame;
        d["parity"] = gs.parity.parity_sign;
        d["amplitudes"] = gs.amplitudes;
        d["odd_sector"] = gs.odd_sector;
        return d;
      },
      py::arg("coupling"));

  py::class_<FidelityResult>(m, "FidelityResult")
      .def_readonly("value", &FidelityResult::value)
      .def_readonly("log_value", &FidelityResult::log_value)
      .def_readonly("relative_det_sign", &FidelityResult::relative_det_sign)
      .def_property_readonly("method", [](const FidelityResult& r) { return std::string(to_string(r.method)); });
  m.def("fidelity_det", &fidelity_det, py::arg("t"), py::arg("t_tilde"));
  m.def("fidelity_angles", &fidelity_angles, py::arg("t"), py::arg("t_tilde"));
  m.def(
      "fidelity_perelomov",
      [](const Matrix& t, const Matrix& t_tilde) { return fidelity_perelomov(pairing_matrix(t), pairing_matrix(t_tilde)); },
      py::arg("t"), py::arg("t_tilde"), "Gaussian-state overlap evaluated from the pairing matrices of t and t_tilde");
  m.def(
      "fidelity_commuting",
      [](const std::vector<double>& a, const std::vector<double>& b) { return fidelity_commuting(a, b); },
      py::arg("theta"), py::arg("theta_tilde"));
  m.def(
      "perturbative_s2",
      [](const std::function<Matrix(double)>& family, double lambda, double step) {
        return perturbative_S(family, lambda, step).s2;
      },
      py::arg("family"), py::arg("lam"), py::arg("step") = 1e-5);
  m.def(
      "s2_example2",
      [](const std::vector<double>& e, const std::vector<double>& de, const std::vector<double>& d,
         const std::vector<double>& dd) { return s2_example2(e, de, d, dd); },
      py::arg("eps"), py::arg("deps"), py::arg("delta"), py::arg("ddelta"));

  m.def(
      "complete_graph", [](double mu, double gamma, int size) { return complete_graph({mu, gamma, size}); },
      py::arg("mu"), py::arg("gamma"), py::arg("size"));
  m.def("two_mode_ex1", &two_mode_ex1, py::arg("eps"), py::arg("delta"));
  m.def("two_mode_ex2", &two_mode_ex2, py::arg("eps"), py::arg("delta"));
  m.def(
      "multimode_ex2",
      [](const std::vector<double>& e, const std::vector<double>& d) { return multimode_ex2(e, d); },
      py::arg("eps"), py::arg("delta"));

  m.def("fock_hamiltonian", &fock::build_fock_hamiltonian, py::arg("coupling"));
  m.def(
      "fock_ground_state",
      [](const QuadraticCoupling& z) {
        const auto gs = fock::fock_ground_state(fock::build_fock_hamiltonian(z));
        return py::make_tuple(gs.energy, gs.vector.amplitudes, gs.parity_sector);
      },
      py::arg("coupling"), "(energy, amplitudes, parity) from exact diagonalization");
  m.def(
      "state_from_angles",
      [](const QuadraticCoupling& z) { return fock::state_from_angles(canonical_ground_state(z)).amplitudes; },
      py::arg("coupling"));

  py::class_<SweepConfig>(m, "SweepConfig")
      .def(py::init<>())
      .def_readwrite("model", &SweepConfig::model)
      .def_readwrite("size", &SweepConfig::size)
      .def_property(
          "mu", [](const SweepConfig& c) { return from_range(c.mu); },
          [](SweepConfig& c, const py::tuple& t) { c.mu = to_range(t); })
      .def_property(
          "gamma", [](const SweepConfig& c) { return from_range(c.gamma); },
          [](SweepConfig& c, const py::tuple& t) { c.gamma = to_range(t); })
      .def_readwrite("delta_mu", &SweepConfig::delta_mu)
      .def_readwrite("delta_gamma", &SweepConfig::delta_gamma)
      .def_readwrite("tol_sing", &SweepConfig::tol_sing)
      .def_readwrite("workers", &SweepConfig::workers);

  m.def(
      "run_sweep",
      [](const SweepConfig& cfg) {
        std::vector<SweepRecord> rows;
        {
          py::gil_scoped_release release;
          rows = run_sweep(cfg);
        }
        py::list out;
        for (const auto& r : rows) out.append(record_dict(r));
        return out;
      },
      py::arg("config"), "List of per-point records in gamma-major order");
  m.def(
      "format_records",
      [](const SweepConfig& cfg, const std::string& format) {
        if (format != "csv" && format != "json") throw py::value_error("format must be 'csv' or 'json'");
        std::vector<SweepRecord> rows;
        {
          py::gil_scoped_release release;
          rows = run_sweep(cfg);
        }
        return format_records(rows, format == "csv" ? OutputFormat::Csv : OutputFormat::Json);
      },
      py::arg("config"), py::arg("format") = "csv", "Runs a sweep and returns its CSV or JSON text");
  m.def(
      "first_order_boundary",
      [](int size, const py::tuple& mu, const py::tuple& gamma, int workers) {
        std::vector<py::tuple> out;
        for (const auto& p : first_order_boundary(size, to_range(mu), to_range(gamma), workers))
          out.push_back(py::make_tuple(p.mu, p.gamma));
        return out;
      },
      py::arg("size"), py::arg("mu"), py::arg("gamma"), py::arg("workers") = 1);
}
