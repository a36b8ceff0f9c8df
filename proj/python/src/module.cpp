// Python bindings. Models and reports cross the boundary as JSON strings so
// the Python side sees exactly the documented file formats.

#include "rocopula/analysis.hpp"
#include "rocopula/cli.hpp"
#include "rocopula/dependence.hpp"
#include "rocopula/error.hpp"
#include "rocopula/fitting.hpp"
#include "rocopula/io.hpp"
#include "rocopula/jointroc.hpp"
#include "rocopula/simulate.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace rocopula;

namespace {

py::dict curve_dict(const RocCurve& c)
{
    std::vector<double> fpf;
    std::vector<double> tpf;
    for (const auto& p : c.points) {
        fpf.push_back(p.fpf);
        tpf.push_back(p.tpf);
    }
    py::dict d;
    d["kind"] = std::string(to_string(c.kind));
    d["fpf"] = fpf;
    d["tpf"] = tpf;
    d["fpf_range"] = py::make_tuple(c.fpf_lo, c.fpf_hi);
    return d;
}

RocCurve curve_from_dict(const py::dict& d)
{
    RocCurve c;
    const auto fpf = d["fpf"].cast<std::vector<double>>();
    const auto tpf = d["tpf"].cast<std::vector<double>>();
    if (fpf.size() != tpf.size()) {
        throw DomainError("fpf and tpf lengths differ");
    }
    for (std::size_t i = 0; i < fpf.size(); ++i) {
        c.points.push_back({fpf[i], tpf[i]});
    }
    const auto range = d["fpf_range"].cast<std::pair<double, double>>();
    c.fpf_lo = range.first;
    c.fpf_hi = range.second;
    return c;
}

JointModel model_from(const std::string& spec_json)
{
    return io::model_spec_from_json(io::json::parse(spec_json)).resolved();
}

std::optional<ThresholdSpec> threshold(std::optional<double> fpf)
{
    return fpf ? std::optional(ThresholdSpec::fpf(*fpf)) : std::nullopt;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Joint ROC curves for two-test reading under copula dependence";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const io::json::exception& e) {
            py::set_error(PyExc_ValueError, e.what());
        }
    });
    py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

    py::enum_<CopulaFamily>(m, "CopulaFamily")
        .value("Independence", CopulaFamily::Independence)
        .value("Gaussian", CopulaFamily::Gaussian)
        .value("Gumbel", CopulaFamily::Gumbel)
        .value("Clayton", CopulaFamily::Clayton)
        .value("Frank", CopulaFamily::Frank);

    py::class_<Marginal>(m, "Marginal")
        .def_static("normal", &Marginal::normal, py::arg("mu"), py::arg("sigma"))
        .def_static("exponential", &Marginal::exponential, py::arg("rate"))
        .def("cdf", &Marginal::cdf)
        .def("survival", &Marginal::survival)
        .def("quantile", &Marginal::quantile)
        .def("__repr__", [](const Marginal& x) { return io::to_json(x).dump(); });

    py::class_<Copula>(m, "Copula")
        .def(py::init(&Copula::make), py::arg("family"), py::arg("param") = 0.0)
        .def_static("from_tau", &copula_from_tau, py::arg("family"), py::arg("tau"))
        .def_property_readonly("family", &Copula::family)
        .def_property_readonly("param", &Copula::param)
        .def("cdf", &Copula::cdf)
        .def("joint_survival", &Copula::joint_survival)
        .def("kendall_tau", [](const Copula& c) { return kendall_tau(c); })
        .def("spearman_rho", [](const Copula& c) { return spearman_from_copula(c); })
        .def("__repr__", [](const Copula& c) { return io::to_json(c).dump(); });

    m.def("tau_from_theta", &tau_from_theta, py::arg("family"), py::arg("theta"));
    m.def("theta_from_tau", &theta_from_tau, py::arg("family"), py::arg("tau"));

    py::class_<JointModel>(m, "JointModel")
        .def_static("from_json", &model_from, py::arg("model_spec"),
                    "Build a model from ModelSpec JSON text, thresholds resolved.")
        .def("to_json", [](const JointModel& x) { return io::to_json(x).dump(2); })
        .def_readwrite("copula_n", &JointModel::copula_n)
        .def_readwrite("copula_d", &JointModel::copula_d)
        .def_readwrite("t_a_ro", &JointModel::t_a_ro)
        .def_readwrite("t_a_ri", &JointModel::t_a_ri)
        .def("ruleout_point", [](const JointModel& x, double b) { auto p = ruleout_point(x, b); return py::make_tuple(p.fpf, p.tpf); })
        .def("rulein_point", [](const JointModel& x, double b) { auto p = rulein_point(x, b); return py::make_tuple(p.fpf, p.tpf); })
        .def("combined_point", [](const JointModel& x, double b) { auto p = combined_point(x, b); return py::make_tuple(p.fpf, p.tpf); })
        .def(
            "curve",
            [](const JointModel& x, const std::string& kind, std::size_t points, unsigned threads) {
                py::gil_scoped_release release;
                auto c = curve(x, roc_kind_from_string(kind), points, threads);
                py::gil_scoped_acquire acquire;
                return curve_dict(c);
            },
            py::arg("kind"), py::arg("points") = kDefaultCurvePoints, py::arg("threads") = 1);

    m.def("auc", [](const py::dict& c) { return auc(curve_from_dict(c)); });
    m.def("pauc", [](const py::dict& c) { return pauc(curve_from_dict(c)); });
    m.def("workload_ruled_out", &workload_ruled_out, py::arg("prevalence"), py::arg("fpf_a"), py::arg("tpf_a"));

    m.def(
        "fit_binormal_deming",
        [](const std::vector<std::pair<double, double>>& pts, double delta) {
            std::vector<OperatingPoint> ops;
            for (auto [f, t] : pts) {
                ops.push_back({f, t});
            }
            const auto fit = fit_binormal_deming(ops, delta);
            return py::make_tuple(fit.mu, fit.sigma);
        },
        py::arg("points"), py::arg("delta") = 1.0, "Returns (mu, sigma).");
    m.def(
        "fit_from_point_and_ratio",
        [](std::pair<double, double> op, double ratio) {
            const auto fit = fit_from_point_and_ratio({op.first, op.second}, ratio);
            return py::make_tuple(fit.mu, fit.sigma);
        },
        py::arg("point"), py::arg("ratio"), "Returns (mu, sigma).");

    m.def(
        "simulate_csv",
        [](const JointModel& x, std::size_t n_per_class, std::uint64_t seed, std::optional<double> prevalence,
           unsigned threads) {
            std::ostringstream os;
            {
                py::gil_scoped_release release;
                io::write_dataset_csv(os, synth_dataset({x, n_per_class, seed, prevalence}, threads));
            }
            return os.str();
        },
        py::arg("model"), py::arg("n_per_class"), py::arg("seed") = 0, py::arg("prevalence") = std::nullopt,
        py::arg("threads") = 1, "Synthetic dataset as CSV text.");

    m.def(
        "analyze_csv",
        [](const std::string& csv, std::optional<double> rule_out_fpf, std::optional<double> rule_in_fpf,
           std::optional<double> b_threshold, std::size_t points, unsigned threads) {
            std::string out;
            {
                py::gil_scoped_release release;
                std::istringstream is(csv);
                AnalysisConfig cfg;
                cfg.rule_out = threshold(rule_out_fpf);
                cfg.rule_in = threshold(rule_in_fpf);
                cfg.b_threshold = b_threshold;
                cfg.n_points = points;
                cfg.threads = threads;
                cfg.input_hash = io::fnv1a_hex(csv);
                out = io::to_json(analyze(io::read_dataset_csv(is), cfg)).dump(2);
            }
            return out;
        },
        py::arg("csv"), py::arg("rule_out_fpf") = std::nullopt, py::arg("rule_in_fpf") = std::nullopt,
        py::arg("b_threshold") = std::nullopt, py::arg("points") = kDefaultCurvePoints, py::arg("threads") = 1,
        "AnalysisReport JSON text for a dataset given as CSV text.");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            int code = 0;
            {
                py::gil_scoped_release release;
                code = cli::run(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Returns (exit_code, stdout, stderr).");
}
