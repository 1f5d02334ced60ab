#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "ideq/csv.hpp"
#include "ideq/presets.hpp"
#include "ideq/sim.hpp"
#include "ideq/version.hpp"

namespace py = pybind11;
using namespace ideq;

namespace {

ProbVec to_pmf(const std::vector<double>& v) { return ProbVec(v, 1e-9); }

}  // namespace

PYBIND11_MODULE(_ideq, m) {
  m.doc() = "rate vs detection-error tradeoff regions for "
            "identity-depolarizing-erasure channel pairs";
  m.attr("__version__") = kVersion;

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  py::class_<IdeParams>(m, "IdeParams")
      .def(py::init([](int d, std::pair<double, double> alpha,
                       std::pair<double, double> beta,
                       std::pair<double, double> gamma,
                       double theta1, double pi1) {
             IdeParams p;
             p.d = d;
             p.alpha = {alpha.first, alpha.second};
             p.beta = {beta.first, beta.second};
             p.gamma = {gamma.first, gamma.second};
             p.theta = {theta1, 1.0 - theta1};
             p.pi = {pi1, 1.0 - pi1};
             p.validate();
             return p;
           }),
           py::arg("d"), py::arg("alpha"), py::arg("beta"), py::arg("gamma"),
           py::arg("theta1") = 0.5, py::arg("pi1") = 0.5)
      .def_readonly("d", &IdeParams::d)
      .def_property_readonly(
          "alpha", [](const IdeParams& p) { return std::pair(p.alpha[0], p.alpha[1]); })
      .def_property_readonly(
          "beta", [](const IdeParams& p) { return std::pair(p.beta[0], p.beta[1]); })
      .def_property_readonly(
          "gamma", [](const IdeParams& p) { return std::pair(p.gamma[0], p.gamma[1]); })
      .def_property_readonly(
          "theta", [](const IdeParams& p) { return std::pair(p.theta[0], p.theta[1]); })
      .def_property_readonly(
          "pi", [](const IdeParams& p) { return std::pair(p.pi[0], p.pi[1]); })
      .def("to_config_text", &IdeParams::to_config_text)
      .def_static("from_config_text", &IdeParams::from_config_text)
      .def("__repr__", [](const IdeParams& p) {
        return "IdeParams(d=" + std::to_string(p.d) + ", alpha=(" +
               fmt_g12(p.alpha[0]) + ", " + fmt_g12(p.alpha[1]) + "), ...)";
      });

  py::class_<ClosedForms>(m, "ClosedForms")
      .def_readonly("r_max", &ClosedForms::r_max)
      .def_readonly("pe_min", &ClosedForms::pe_min)
      .def_readonly("pe_star", &ClosedForms::pe_star)
      .def_readonly("p_th", &ClosedForms::p_th)
      .def_readonly("no_tradeoff", &ClosedForms::no_tradeoff);

  py::class_<TwoValueDist>(m, "TwoValueDist")
      .def(py::init<int, double, double>(), py::arg("n"), py::arg("p1"),
           py::arg("p2"))
      .def_readonly("n", &TwoValueDist::n)
      .def_readonly("p1", &TwoValueDist::p1)
      .def_readonly("p2", &TwoValueDist::p2)
      .def("expand",
           [](const TwoValueDist& t, int D) { return t.expand(D).values(); });

  py::class_<FrontierPoint>(m, "FrontierPoint")
      .def_readonly("pe", &FrontierPoint::pe)
      .def_readonly("rate", &FrontierPoint::rate)
      .def_property_readonly("witness", [](const FrontierPoint& p) {
        return p.witness ? py::cast(*p.witness) : py::none().cast<py::object>();
      });

  py::class_<Frontier>(m, "Frontier")
      .def_property_readonly("points", &Frontier::points)
      .def_property_readonly("pe_min", &Frontier::pe_min)
      .def_property_readonly("pe_star", &Frontier::pe_star)
      .def_property_readonly("r_max", &Frontier::r_max)
      .def("rate_at", &Frontier::rate_at, py::arg("pe"))
      .def("to_csv", [](const Frontier& f) { return frontier_csv(f); });

  py::class_<DetectionReport>(m, "DetectionReport")
      .def_readonly("seed", &DetectionReport::seed)
      .def_readonly("trials", &DetectionReport::trials)
      .def_readonly("D", &DetectionReport::D)
      .def_readonly("empirical_p1", &DetectionReport::empirical_p1)
      .def_readonly("empirical_p2", &DetectionReport::empirical_p2)
      .def_readonly("empirical_pd", &DetectionReport::empirical_pd)
      .def_readonly("analytic_pd", &DetectionReport::analytic_pd)
      .def_readonly("std_err", &DetectionReport::std_err)
      .def("to_csv",
           [](const DetectionReport& r) { return detection_report_csv(r); });

  m.def(
      "rate_bound",
      [](int D, const IdeParams& p, const std::vector<double>& px) {
        return rate_bound(D, average_params(p), to_pmf(px));
      },
      py::arg("D"), py::arg("params"), py::arg("px"));
  m.def(
      "detection_bound",
      [](int D, const IdeParams& p, const std::vector<double>& px) {
        return detection_bound(D, p, to_pmf(px));
      },
      py::arg("D"), py::arg("params"), py::arg("px"));
  m.def("closed_forms", &closed_forms, py::arg("D"), py::arg("params"));
  m.def(
      "frontier",
      [](int D, const IdeParams& p, int grid) {
        GridConfig g;
        g.p1_samples = grid;
        return frontier_two_value(D, p, g);
      },
      py::arg("D"), py::arg("params"), py::arg("grid") = 512);
  m.def(
      "frontier_bruteforce",
      [](int D, const IdeParams& p, long samples, uint64_t seed) {
        return frontier_bruteforce(D, p, samples, seed);
      },
      py::arg("D"), py::arg("params"), py::arg("samples") = 100000,
      py::arg("seed") = 0);
  m.def(
      "unreliable_frontier",
      [](const IdeParams& p, double alpha_tilde, int grid) {
        GridConfig g;
        g.p1_samples = grid;
        return unreliable_frontier(p, alpha_tilde, g);
      },
      py::arg("params"), py::arg("alpha_tilde"), py::arg("grid") = 512);
  m.def("compose_unreliable", &compose_unreliable, py::arg("params"),
        py::arg("alpha_tilde"));
  m.def(
      "run_detection_trials",
      [](const IdeParams& p, int D, const std::vector<double>& px, long trials,
         uint64_t seed, int threads) {
        SimConfig cfg;
        cfg.params = p;
        cfg.D = D;
        cfg.px = to_pmf(px);
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.threads = threads;
        return run_detection_trials(cfg);
      },
      py::arg("params"), py::arg("D"), py::arg("px"), py::arg("trials"),
      py::arg("seed") = 0, py::arg("threads") = 0);
  m.def(
      "empirical_mutual_information",
      [](const IdeParams& p, int D, const std::vector<double>& px, long trials,
         uint64_t seed, int threads) {
        return empirical_mutual_information(p, D, to_pmf(px), trials, seed,
                                            threads);
      },
      py::arg("params"), py::arg("D"), py::arg("px"), py::arg("trials"),
      py::arg("seed") = 0, py::arg("threads") = 0);
  m.def("example1_params", &example1_params, py::arg("theta1"));
  m.def("example2_params", &example2_params, py::arg("alpha2"));
  m.def("uniform_pmf",
        [](int D) { return ProbVec::uniform(D).values(); }, py::arg("D"));
}
