#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "slecft/geom/builders.hpp"
#include "slecft/geom/checks.hpp"
#include "slecft/geom/operator_table.hpp"
#include "slecft/loewner/loewner.hpp"
#include "slecft/report/report.hpp"
#include "slecft/report/suites.hpp"
#include "slecft/spectral/spectral.hpp"
#include "slecft/symbolic/coeff_poly.hpp"
#include "slecft/verma/verma.hpp"

namespace py = pybind11;
using namespace slecft;

namespace {

sym::Partition partition(const std::vector<int>& parts) { return sym::Partition::from_parts(parts); }

geom::Family family(const std::string& f) {
  if (f == "L") return geom::Family::L;
  if (f == "Lbar") return geom::Family::Lbar;
  throw py::value_error("family must be 'L' or 'Lbar'");
}

py::dict check_dict(const geom::CheckResult& r) {
  py::dict d;
  d["ok"] = r.ok;
  d["cases"] = r.cases;
  d["witness"] = r.witness;
  return d;
}

// One table per interpreter, so repeated calls reuse built operators.
geom::OperatorTable& shared_table() {
  static geom::OperatorTable table;
  return table;
}

}  // namespace

PYBIND11_MODULE(_slecft, m) {
  m.doc() = "Exact Virasoro operators on univalent-function coefficients, Verma modules and SLE numerics";

  py::register_exception<report::ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<spectral::PoleProximity>(m, "PoleProximity", PyExc_ArithmeticError);
  py::register_exception<loewner::Swallowed>(m, "Swallowed", PyExc_RuntimeError);

  // symbolic / verma
  m.def("central_charge", [](const std::string& kappa) { return sym::to_short(sym::central_charge(sym::parse_rational(kappa))); },
        py::arg("kappa"));
  m.def("kac_lambda",
        [](int r, int s, const std::string& kappa) { return sym::to_short(verma::kac_lambda(r, s, sym::parse_rational(kappa))); },
        py::arg("r"), py::arg("s"), py::arg("kappa"));
  m.def(
      "gram",
      [](int N) {
        auto g = verma::gram(N);
        std::vector<std::vector<std::string>> out;
        for (auto& row : g.entries) {
          out.emplace_back();
          for (auto& e : row) out.back().push_back(e.to_string());
        }
        std::vector<std::string> basis;
        for (auto& k : g.basis) basis.push_back(k.to_string());
        return py::make_tuple(basis, out);
      },
      py::arg("level"), "Symbolic Gram matrix at a level: (basis labels, entries as polynomial strings).");
  m.def("kac_det", [](int N) { return verma::kac_det(N, std::max(N, verma::kDefaultMaxKacLevel)).to_string(); }, py::arg("level"));

  // geometric operators
  m.def(
      "apply",
      [](const std::string& fam, int mode, const std::string& poly, int level) {
        geom::StatePoly s{level, sym::CoeffPoly::parse(poly)};
        auto out = shared_table().apply(family(fam), mode, s);
        return py::make_tuple(out.level, out.poly.to_string());
      },
      py::arg("family"), py::arg("mode"), py::arg("state"), py::arg("level"),
      "Applies L_n or Lbar_n to a state; returns (level, polynomial).");
  m.def(
      "psi",
      [](const std::vector<int>& k, const std::vector<int>& kbar) {
        auto s = geom::psi(shared_table(), partition(k), partition(kbar));
        return py::make_tuple(s.level, s.poly.to_string());
      },
      py::arg("k"), py::arg("kbar") = std::vector<int>{});
  m.def(
      "commutator_check",
      [](int n, int mm, int max_degree) { return check_dict(geom::commutator_check(shared_table(), n, mm, max_degree)); },
      py::arg("n"), py::arg("m"), py::arg("max_degree"));
  m.def("gram_consistency", [](int N) { return check_dict(geom::gram_consistency(shared_table(), N)); }, py::arg("level"));
  m.def("singular_vector_identity", [] { return check_dict(geom::singular_vector_identity(shared_table())); });
  m.def("describe_operator", [](int mode, int max_index) { return geom::build_L(mode, max_index).describe(); },
        py::arg("mode"), py::arg("max_index"));

  // spectral
  m.def("reflection_R", [](std::complex<double> lambda, double kappa) { return spectral::reflection_R(lambda, kappa); },
        py::arg("lam"), py::arg("kappa"));
  m.def("smallest_real_pole", &spectral::smallest_real_pole, py::arg("kappa"));
  m.def("U_of_q", &spectral::U_of_q, py::arg("q"));
  m.def("poisson_disc", &spectral::poisson_disc, py::arg("z"), py::arg("w"));
  m.def("poisson_annulus", &spectral::poisson_annulus, py::arg("q"), py::arg("theta"), py::arg("theta_p"));
  py::class_<spectral::AnnulusMap>(m, "AnnulusMap")
      .def_readonly("alpha", &spectral::AnnulusMap::alpha)
      .def_readonly("q", &spectral::AnnulusMap::q)
      .def_readonly("x0", &spectral::AnnulusMap::x0)
      .def_readonly("r", &spectral::AnnulusMap::r)
      .def("psi", &spectral::AnnulusMap::psi)
      .def("dpsi", &spectral::AnnulusMap::dpsi);
  m.def("mobius_annulus", &spectral::mobius_annulus, py::arg("x0"), py::arg("r"));
  m.def("bubble_mass", &spectral::bubble_mass, py::arg("map"), py::arg("theta"));
  m.def("bubble_limit_estimate", &spectral::bubble_limit_estimate, py::arg("map"), py::arg("theta"), py::arg("dtheta"));
  m.def(
      "spectral_rhs",
      [](std::complex<double> lambda, double kappa, const std::vector<int>& k, const std::vector<int>& kp,
         const std::vector<int>& kt, const std::vector<int>& ktp) {
        return spectral::spectral_rhs({lambda, kappa, partition(k), partition(kp), partition(kt), partition(ktp)});
      },
      py::arg("lam"), py::arg("kappa"), py::arg("k") = std::vector<int>{}, py::arg("kp") = std::vector<int>{},
      py::arg("kt") = std::vector<int>{}, py::arg("ktp") = std::vector<int>{});
  m.def(
      "gram_inverse_check",
      [](int N, const std::string& lambda, const std::string& kappa) {
        auto r = spectral::gram_inverse_check(N, sym::parse_rational(lambda), sym::parse_rational(kappa));
        py::dict d;
        d["singular"] = r.singular;
        d["identity"] = r.identity;
        d["witness"] = r.witness;
        return d;
      },
      py::arg("level"), py::arg("lam"), py::arg("kappa"));

  // loewner
  m.def(
      "forward_map",
      [](const std::vector<double>& samples, double dt, std::complex<double> z, double T) {
        return loewner::forward_map(loewner::DrivingFunction(dt, samples), z, T);
      },
      py::arg("samples"), py::arg("dt"), py::arg("z"), py::arg("T"));
  m.def(
      "trace",
      [](const std::vector<double>& samples, double dt) { return loewner::trace(loewner::DrivingFunction(dt, samples)).points; },
      py::arg("samples"), py::arg("dt"));
  m.def(
      "sample_sle_driving",
      [](double kappa, double T, double dt, std::uint64_t seed) {
        return loewner::sample_sle_driving(kappa, T, dt, seed).samples();
      },
      py::arg("kappa"), py::arg("T"), py::arg("dt"), py::arg("seed"));

  // reports
  m.def(
      "run_command_json",
      [](const std::string& command, const std::string& config_json) {
        report::RunConfig cfg;
        report::RunConfig::merge(cfg, nlohmann::json::parse(config_json));
        cfg.validate();
        try {
          return report::run_command(command, cfg, shared_table()).to_json().dump();
        } catch (const report::UnknownCommand& e) {
          throw py::value_error(e.what());
        }
      },
      py::arg("command"), py::arg("config_json") = "{}");
  m.attr("commands") = report::command_names();
}
