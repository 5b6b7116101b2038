#include "facilidyn/localform.hpp"
#include "facilidyn/model.hpp"
#include "facilidyn/regions.hpp"
#include "facilidyn/simulate.hpp"
#include "facilidyn/verify.hpp"

#include <json.hpp>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

namespace py = pybind11;
using namespace facilidyn;

// Results cross the boundary as JSON text; the Python package decodes them.
namespace {

Params checked(double h, double k, double sigma, double alpha) {
    Params p{h, k, sigma, alpha};
    p.validate();
    return p;
}

std::string classify_json(double h, double k, double sigma, double alpha, double tol) {
    const Params p = checked(h, k, sigma, alpha);
    const RegionLabel l = classify(p, tol);
    nlohmann::json j{{"params", p.to_json()}, {"label", l.name()}, {"boundary", l.boundary}};
    if (h < 1.0) j["thresholds"] = thresholds(h, k, sigma, alpha).to_json();
    return j.dump();
}

std::string equilibria_json(double h, double k, double sigma, double alpha, double tol) {
    return verify_census(checked(h, k, sigma, alpha), tol).to_json().dump();
}

std::string simulate_json(double h, double k, double sigma, double alpha, double x0, double y0, double t_end,
                          double rtol, double atol, bool backward) {
    const Params p = checked(h, k, sigma, alpha);
    IntegrateOptions opt;
    opt.rtol = rtol;
    opt.atol = atol;
    opt.backward = backward;
    Orbit o = integrate(p, {x0, y0}, t_end, opt);
    o.classification = classify_orbit(o, equilibria(p));
    return o.to_json().dump();
}

std::optional<std::string> limit_cycle_json(double h, double k, double sigma, double alpha) {
    const auto c = find_limit_cycle(checked(h, k, sigma, alpha));
    if (!c) return std::nullopt;
    return c->to_json().dump();
}

std::string sweep_json(double h, double k, double sigma_min, double sigma_max, int n_sigma, double alpha_min,
                       double alpha_max, int n_alpha, unsigned threads) {
    SweepGrid g{h, k, sigma_min, sigma_max, n_sigma, alpha_min, alpha_max, n_alpha};
    nlohmann::json a = nlohmann::json::array();
    for (const auto& sp : sweep(g, {}, threads)) a.push_back(sp.to_json());
    return a.dump();
}

std::string acceptance_json(bool quick, std::uint64_t seed) {
    VerifyOptions opt;
    opt.quick = quick;
    opt.seed = seed;
    return acceptance_report(run_acceptance(opt)).dump();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.attr("DEFAULT_TOL") = kDefaultBand;
    m.def("classify", &classify_json, py::arg("h"), py::arg("k"), py::arg("sigma"), py::arg("alpha"),
          py::arg("tol") = kDefaultBand);
    m.def("equilibria", &equilibria_json, py::arg("h"), py::arg("k"), py::arg("sigma"), py::arg("alpha"),
          py::arg("tol") = kDefaultBand);
    m.def("simulate", &simulate_json, py::arg("h"), py::arg("k"), py::arg("sigma"), py::arg("alpha"), py::arg("x0"),
          py::arg("y0"), py::arg("t") = 100.0, py::arg("rtol") = 1e-10, py::arg("atol") = 1e-12,
          py::arg("backward") = false, py::call_guard<py::gil_scoped_release>());
    m.def("limit_cycle", &limit_cycle_json, py::arg("h"), py::arg("k"), py::arg("sigma"), py::arg("alpha"),
          py::call_guard<py::gil_scoped_release>());
    m.def("sweep", &sweep_json, py::arg("h"), py::arg("k"), py::arg("sigma_min"), py::arg("sigma_max"),
          py::arg("n_sigma"), py::arg("alpha_min"), py::arg("alpha_max"), py::arg("n_alpha"), py::arg("threads") = 0,
          py::call_guard<py::gil_scoped_release>());
    m.def("hopf", [](double h, double k, double sigma) { return hopf(h, k, sigma).to_json().dump(); });
    m.def("cusp", [](double h, double k) { return bt_cusp(h, k).to_json().dump(); });
    m.def("curves", [](double h, double k, double sigma_min, double sigma_max, int n) {
        return bt_curves(h, k, sigma_min, sigma_max, n).to_json().dump();
    });
    m.def("ek_reduction", [](double h, double sigma, double alpha) { return ek_reduction(h, sigma, alpha).to_json().dump(); });
    m.def("sn_reduction", [](double h, double k, double sigma) { return estar_sn_reduction(h, k, sigma).to_json().dump(); });
    m.def("acceptance", &acceptance_json, py::arg("quick") = true, py::arg("seed") = 20240601,
          py::call_guard<py::gil_scoped_release>());
    m.def("k1", &k1_of);
    m.def("k2", &k2_of);
    m.def("k3", &k3_of);
    m.def("alpha1", &alpha1_of);
    m.def("alpha2", &alpha2_of);
    m.def("sigma2", &sigma2_of);
}
