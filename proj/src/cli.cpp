#include "rocopula/cli.hpp"

#include "rocopula/analysis.hpp"
#include "rocopula/dependence.hpp"
#include "rocopula/error.hpp"
#include "rocopula/io.hpp"
#include "rocopula/numeric.hpp"
#include "rocopula/simulate.hpp"
#include "rocopula/svg.hpp"
#include "rocopula/sweep.hpp"
#include "rocopula/version.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

namespace rocopula::cli {

namespace fs = std::filesystem;
using io::format_double;

namespace {

struct Globals {
    std::string out_dir = ".";
    std::vector<std::string> formats;
    std::uint64_t seed = 0;
    bool quiet = false;
    int threads = -1;

    bool wants(const std::string& f) const
    {
        return std::find(formats.begin(), formats.end(), f) != formats.end();
    }

    unsigned thread_count() const
    {
        if (threads < 0) {
            return numeric::default_threads();
        }
        if (threads == 0) {
            return std::max(1u, std::thread::hardware_concurrency());
        }
        return static_cast<unsigned>(threads);
    }
};

fs::path output_path(const Globals& g, const std::string& name)
{
    fs::create_directories(g.out_dir);
    return fs::path(g.out_dir) / name;
}

void write_text(const fs::path& path, const std::string& body)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw DataError("cannot write '" + path.string() + "'");
    }
    f << body;
}

void announce(const Globals& g, std::ostream& out, const fs::path& p)
{
    if (!g.quiet) {
        out << "wrote " << p.string() << '\n';
    }
}

std::string dump(const io::json& j) { return j.dump(2) + "\n"; }

// ---- curve ---------------------------------------------------------------

struct CurveOptions {
    std::string spec;
    std::string kind = "ruleout";
    std::size_t points = kDefaultCurvePoints;
    std::string name;
};

int cmd_curve(const Globals& g, const CurveOptions& o, std::ostream& out)
{
    const io::ModelSpec spec = io::load_model_spec(o.spec);
    const JointModel model = spec.resolved();
    const unsigned threads = g.thread_count();

    const RocCurve a = univariate_curve(model.a_n, model.a_d, o.points);
    const RocCurve b = univariate_curve(model.b_n, model.b_d, o.points);
    RocCurve c;
    if (o.kind == "a" || o.kind == "b") {
        c = o.kind == "a" ? a : b;
        c.model = model;
    } else {
        c = curve(model, roc_kind_from_string(o.kind), o.points, threads);
    }

    const std::string base = o.name.empty() ? "curve_" + o.kind : o.name;
    std::vector<std::string> formats = g.formats.empty() ? std::vector<std::string>{"csv"} : g.formats;
    for (const auto& f : formats) {
        const fs::path p = output_path(g, base + "." + f);
        if (f == "csv") {
            std::ostringstream os;
            io::write_curve_csv(os, c);
            write_text(p, os.str());
        } else if (f == "json") {
            write_text(p, dump(io::to_json(c)));
        } else {
            svg::Plot plot;
            plot.title = std::string(to_string(c.kind)) + " ROC";
            plot.series.push_back({"Test A alone", a.points, "#555555", true});
            plot.series.push_back({"Test B alone", b.points, "#999999", true});
            if (o.kind != "a" && o.kind != "b") {
                plot.series.push_back({std::string(to_string(c.kind)) + " (" +
                                           std::string(to_string(model.copula_d.family())) + ")",
                                       c.points, svg::palette(0), false});
            }
            if (model.t_a_ro) {
                plot.markers.push_back({"A at rule-out threshold",
                                        {model.fpf_a(*model.t_a_ro), model.tpf_a(*model.t_a_ro)}, "#2ca02c"});
            }
            if (model.t_a_ri) {
                plot.markers.push_back({"A at rule-in threshold",
                                        {model.fpf_a(*model.t_a_ri), model.tpf_a(*model.t_a_ri)}, "#d62728"});
            }
            write_text(p, svg::render(plot));
        }
        announce(g, out, p);
    }
    if (!g.quiet) {
        out << "kind " << to_string(c.kind) << ", fpf range [" << format_double(c.fpf_lo) << ", "
            << format_double(c.fpf_hi) << "], pAUC " << format_double(pauc(c)) << '\n';
    }
    return kOk;
}

// ---- theorem-check -------------------------------------------------------

struct TheoremOptions {
    std::string spec;
    std::string which = "ruleout";
    std::string parameter;
    std::vector<double> values;
    std::size_t points = kDefaultCurvePoints;
    double margin = 1e-4;
};

int cmd_theorem_check(const Globals& g, const TheoremOptions& o, std::ostream& out)
{
    const io::ModelSpec spec = io::load_model_spec(o.spec);
    std::string parameter = o.parameter;
    std::vector<double> values = o.values;
    if (parameter.empty() && spec.sweep) {
        parameter = spec.sweep->parameter;
    }
    if (values.empty() && spec.sweep) {
        values = spec.sweep->values;
    }
    if (parameter.empty() || values.empty()) {
        throw DomainError("no sweep: give --parameter/--values or a 'sweep' block in the model spec");
    }
    const RocKind kind = roc_kind_from_string(o.which);
    if (kind != RocKind::RuleOut && kind != RocKind::RuleIn) {
        throw DomainError("--which must be ruleout or rulein");
    }
    const SweepResult r = theorem_sweep(spec.resolved(), kind, parameter, values, o.margin, o.points,
                                        g.thread_count());

    if (!g.quiet) {
        out << "sweep " << parameter << " (" << o.which << "), pAUC over [" << format_double(r.fpf_lo) << ", "
            << format_double(r.fpf_hi) << "], expected " << (r.expect_increasing ? "increasing" : "decreasing")
            << '\n';
        out << std::left << std::setw(24) << parameter << std::setw(26) << "pauc" << "step\n";
        for (std::size_t i = 0; i < r.rows.size(); ++i) {
            out << std::setw(24) << format_double(r.rows[i].value) << std::setw(26)
                << format_double(r.rows[i].pauc);
            if (i > 0) {
                out << format_double(r.rows[i].pauc - r.rows[i - 1].pauc);
            }
            out << '\n';
        }
    }
    out << (r.pass ? "PASS" : "FAIL") << " (min step " << format_double(r.min_step) << ", margin "
        << format_double(o.margin) << ")\n";

    const std::string base = "theorem_" + o.which + "_" + parameter;
    for (const auto& f : g.formats) {
        const fs::path p = output_path(g, base + "." + f);
        if (f == "svg") {
            const JointModel model = spec.resolved();
            svg::Plot plot;
            plot.title = "pAUC sweep over " + parameter + " (" + o.which + ")";
            plot.series.push_back({"Test A alone", univariate_curve(model.a_n, model.a_d, o.points).points,
                                   "#555555", true});
            plot.series.push_back({"Test B alone", univariate_curve(model.b_n, model.b_d, o.points).points,
                                   "#999999", true});
            for (std::size_t i = 0; i < values.size(); ++i) {
                const JointModel m = io::apply_sweep_value(model, parameter, values[i]);
                plot.series.push_back({parameter + " = " + format_double(values[i]),
                                       curve(m, kind, o.points, g.thread_count()).points, svg::palette(i),
                                       false});
            }
            write_text(p, svg::render(plot));
        } else if (f == "csv") {
            std::ostringstream os;
            os << "value,pauc\n";
            for (const auto& row : r.rows) {
                os << format_double(row.value) << ',' << format_double(row.pauc) << '\n';
            }
            write_text(p, os.str());
        } else {
            io::json rows = io::json::array();
            for (const auto& row : r.rows) {
                rows.push_back({{"value", row.value}, {"pauc", row.pauc}});
            }
            write_text(p, dump({{"parameter", parameter},
                                {"which", o.which},
                                {"fpf_range", {r.fpf_lo, r.fpf_hi}},
                                {"expect_increasing", r.expect_increasing},
                                {"margin", o.margin},
                                {"min_step", r.min_step},
                                {"verdict", r.pass ? "PASS" : "FAIL"},
                                {"rows", rows},
                                {"model", io::to_json(spec.resolved())}}));
        }
        announce(g, out, p);
    }
    return r.pass ? kOk : kTheoremFail;
}

// ---- analyze -------------------------------------------------------------

struct AnalyzeOptions {
    std::string data;
    std::vector<std::string> families{"gaussian", "frank", "clayton"};
    std::optional<double> rule_out_fpf, rule_out_score, rule_in_fpf, rule_in_score;
    std::optional<double> prevalence, b_threshold;
    std::string calibration = "kendall";
    std::size_t points = kDefaultCurvePoints;
    std::string name = "analysis";
};

std::optional<ThresholdSpec> pick_threshold(std::optional<double> fpf, std::optional<double> score)
{
    if (fpf) {
        return ThresholdSpec::fpf(*fpf);
    }
    if (score) {
        return ThresholdSpec::score(*score);
    }
    return std::nullopt;
}

int cmd_analyze(const Globals& g, const AnalyzeOptions& o, std::ostream& out)
{
    const std::string raw = io::read_file(o.data);
    std::istringstream in(raw);
    const ScoreDataset data = io::read_dataset_csv(in);

    AnalysisConfig cfg;
    cfg.families.clear();
    for (const auto& f : o.families) {
        const CopulaFamily fam = copula_family_from_string(f);
        if (std::find(cfg.families.begin(), cfg.families.end(), fam) == cfg.families.end()) {
            cfg.families.push_back(fam);
        }
    }
    cfg.rule_out = pick_threshold(o.rule_out_fpf, o.rule_out_score);
    cfg.rule_in = pick_threshold(o.rule_in_fpf, o.rule_in_score);
    cfg.prevalence = o.prevalence;
    cfg.b_threshold = o.b_threshold;
    cfg.gaussian_calibration =
        o.calibration == "pearson" ? GaussianCalibration::Pearson : GaussianCalibration::Kendall;
    cfg.n_points = o.points;
    cfg.threads = g.thread_count();
    cfg.seed = g.seed;
    cfg.input_hash = io::fnv1a_hex(raw);

    const AnalysisReport rep = analyze(data, cfg);

    std::vector<std::string> formats = g.formats.empty() ? std::vector<std::string>{"json", "csv"} : g.formats;
    for (const auto& f : formats) {
        if (f == "json") {
            const fs::path p = output_path(g, o.name + ".json");
            write_text(p, dump(io::to_json(rep)));
            announce(g, out, p);
        } else if (f == "csv") {
            const fs::path p = output_path(g, o.name + "_metrics.csv");
            std::ostringstream os;
            io::write_metrics_csv(os, rep);
            write_text(p, os.str());
            announce(g, out, p);
        } else {
            svg::Plot plot;
            plot.title = "Empirical and model ROC curves";
            plot.prevalence = rep.workload ? std::optional<double>(rep.workload->prevalence) : o.prevalence;
            if (!plot.prevalence) {
                plot.prevalence = static_cast<double>(rep.provenance.n_diseased) /
                                  static_cast<double>(data.records.size());
            }
            plot.series.push_back({"Test A empirical", rep.empirical_a.points, "#555555", true});
            plot.series.push_back({"Test B empirical", rep.empirical_b.points, "#999999", true});
            plot.series.push_back({"Test A binormal", rep.fitted_a.points, "#000000", false});
            std::size_t color = 0;
            for (std::size_t s = 0; s < rep.scenarios.size(); ++s) {
                const std::string kind(to_string(rep.scenarios[s]));
                for (const auto& fam : rep.families) {
                    plot.series.push_back({kind + " " + std::string(to_string(fam.family)), fam.curves[s].points,
                                           svg::palette(color++), false});
                }
                plot.series.push_back({kind + " projected", rep.projected[s].curve.points,
                                       svg::palette(color++), true});
                if (rep.projected[s].point) {
                    plot.markers.push_back({kind + " projected point", *rep.projected[s].point,
                                            svg::palette(color++)});
                }
            }
            const fs::path p = output_path(g, o.name + ".svg");
            write_text(p, svg::render(plot));
            announce(g, out, p);
        }
    }
    if (!g.quiet) {
        out << "test A: empirical AUC " << format_double(rep.auc_empirical_a) << ", binormal mu "
            << format_double(rep.fit_a.mu) << " sigma " << format_double(rep.fit_a.sigma) << '\n';
        out << "test B: empirical AUC " << format_double(rep.auc_empirical_b) << ", binormal mu "
            << format_double(rep.fit_b.mu) << " sigma " << format_double(rep.fit_b.sigma) << " ("
            << to_string(rep.fit_b.source) << ")\n";
        for (const auto& fam : rep.families) {
            out << to_string(fam.family);
            for (std::size_t s = 0; s < rep.scenarios.size(); ++s) {
                out << "  " << to_string(rep.scenarios[s]) << " pAUC " << format_double(fam.pauc[s]);
            }
            out << '\n';
        }
    }
    return kOk;
}

// ---- simulate ------------------------------------------------------------

struct SimulateOptions {
    std::string spec;
    std::size_t n = 1000;
    std::optional<double> prevalence;
    std::string name = "dataset";
};

int cmd_simulate(const Globals& g, const SimulateOptions& o, std::ostream& out)
{
    const io::ModelSpec spec = io::load_model_spec(o.spec);
    SimulationConfig cfg;
    cfg.model = spec.resolved();
    cfg.n_per_class = o.n;
    cfg.seed = g.seed;
    cfg.prevalence = o.prevalence;
    const ScoreDataset data = synth_dataset(cfg, g.thread_count());
    std::ostringstream os;
    io::write_dataset_csv(os, data);
    const fs::path p = output_path(g, o.name + ".csv");
    write_text(p, os.str());
    announce(g, out, p);
    if (!g.quiet) {
        out << data.count(false) << " non-diseased, " << data.count(true) << " diseased\n";
    }
    return kOk;
}

// ---- dependence ----------------------------------------------------------

struct DependenceOptions {
    std::string family;
    std::optional<double> param;
    std::optional<double> tau;
    std::string data;
};

int cmd_dependence(const Globals& g, const DependenceOptions& o, std::ostream& out)
{
    const bool as_json = g.wants("json");
    if (!o.data.empty()) {
        const ScoreDataset data = io::read_dataset_csv(o.data);
        data.validate();
        io::json j = io::json::object();
        for (bool d : {false, true}) {
            std::vector<double> a, b;
            for (const auto& r : data.records) {
                if (r.diseased == d && r.score_a && r.score_b) {
                    a.push_back(*r.score_a);
                    b.push_back(*r.score_b);
                }
            }
            const std::string cls = d ? "diseased" : "nondiseased";
            if (a.size() < 2) {
                throw DataError("class '" + cls + "' has fewer than two complete cases");
            }
            const double p = sample_pearson(a, b), k = sample_kendall(a, b), s = sample_spearman(a, b);
            j[cls] = {{"n", a.size()}, {"pearson", p}, {"kendall", k}, {"spearman", s}};
            if (!as_json) {
                out << cls << ": n " << a.size() << ", pearson " << format_double(p) << ", kendall "
                    << format_double(k) << ", spearman " << format_double(s) << '\n';
            }
        }
        if (as_json) {
            out << dump(j);
        }
        return kOk;
    }
    if (o.family.empty()) {
        throw DomainError("dependence needs --family with --param or --tau, or --data");
    }
    const CopulaFamily fam = copula_family_from_string(o.family);
    Copula c;
    if (o.param && o.tau) {
        throw DomainError("give only one of --param and --tau");
    } else if (o.param) {
        c = Copula::make(fam, *o.param);
    } else if (o.tau) {
        c = fam == CopulaFamily::Independence ? Copula::independence() : copula_from_tau(fam, *o.tau);
        if (c.family() == CopulaFamily::Independence && fam != CopulaFamily::Independence && *o.tau != 0.0) {
            throw DomainError("tau could not be mapped");
        }
    } else if (fam == CopulaFamily::Independence) {
        c = Copula::independence();
    } else {
        throw DomainError("give --param or --tau");
    }
    const double tau = kendall_tau(c);
    const double rho_s = spearman_from_copula(c);
    if (as_json) {
        io::json j = io::to_json(c);
        j["kendall_tau"] = tau;
        j["spearman_rho"] = rho_s;
        out << dump(j);
    } else {
        out << "family " << to_string(c.family());
        if (c.family() != CopulaFamily::Independence) {
            out << ", " << (c.family() == CopulaFamily::Gaussian ? "rho " : "theta ") << format_double(c.param());
        }
        out << ", kendall tau " << format_double(tau) << ", spearman rho " << format_double(rho_s) << '\n';
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Joint ROC analysis of two correlated tests under copula models", "rocopula"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--out-dir", g.out_dir, "Directory for output files")->capture_default_str();
    app.add_option("--format", g.formats, "Output formats")
        ->delimiter(',')
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
    app.add_flag("--quiet", g.quiet, "Suppress progress output");
    app.add_option("--threads", g.threads,
                   "Worker threads (0 = all cores); defaults to ROC_COPULA_THREADS or 1")
        ->check(CLI::NonNegativeNumber);

    CurveOptions co;
    auto* curve_cmd = app.add_subcommand("curve", "Model ROC curve from a model spec");
    curve_cmd->add_option("--spec", co.spec, "Model spec JSON")->required()->check(CLI::ExistingFile);
    curve_cmd->add_option("--kind", co.kind, "a, b, ruleout, rulein or combined")
        ->check(CLI::IsMember({"a", "b", "ruleout", "rulein", "combined"}))
        ->capture_default_str();
    curve_cmd->add_option("--points", co.points, "Test-B grid size")->check(CLI::Range(2, 1000000));
    curve_cmd->add_option("--name", co.name, "Output file stem");

    TheoremOptions to;
    auto* thm_cmd = app.add_subcommand("theorem-check", "pAUC monotonicity sweep");
    thm_cmd->add_option("--spec", to.spec, "Model spec JSON")->required()->check(CLI::ExistingFile);
    thm_cmd->add_option("--which", to.which, "ruleout or rulein")
        ->check(CLI::IsMember({"ruleout", "rulein"}))
        ->capture_default_str();
    thm_cmd->add_option("--parameter", to.parameter, "rho_n, rho_d, tau_n, tau_d, theta_n or theta_d");
    thm_cmd->add_option("--values", to.values, "Sweep grid")->delimiter(',');
    thm_cmd->add_option("--points", to.points, "Test-B grid size")->check(CLI::Range(2, 1000000));
    thm_cmd->add_option("--margin", to.margin, "Required pAUC step")->capture_default_str();

    AnalyzeOptions ao;
    auto* an_cmd = app.add_subcommand("analyze", "Fit and project joint curves from a dataset");
    an_cmd->add_option("--data", ao.data, "Dataset CSV")->required()->check(CLI::ExistingFile);
    an_cmd->add_option("--families", ao.families, "Copula families")
        ->delimiter(',')
        ->check(CLI::IsMember({"independence", "gaussian", "gumbel", "clayton", "frank"}));
    auto* ro_fpf = an_cmd->add_option("--rule-out-fpf", ao.rule_out_fpf, "Rule-out threshold as Test-A FPF");
    auto* ro_score = an_cmd->add_option("--rule-out-score", ao.rule_out_score, "Rule-out threshold as score");
    auto* ri_fpf = an_cmd->add_option("--rule-in-fpf", ao.rule_in_fpf, "Rule-in threshold as Test-A FPF");
    auto* ri_score = an_cmd->add_option("--rule-in-score", ao.rule_in_score, "Rule-in threshold as score");
    ro_fpf->excludes(ro_score);
    ri_fpf->excludes(ri_score);
    an_cmd->add_option("--prevalence", ao.prevalence, "Prevalence for workload and PPV/NPV lines")
        ->check(CLI::Range(0.0, 1.0));
    an_cmd->add_option("--b-threshold", ao.b_threshold, "Test-B threshold for the projected point");
    an_cmd->add_option("--gaussian-calibration", ao.calibration, "kendall or pearson")
        ->check(CLI::IsMember({"kendall", "pearson"}));
    an_cmd->add_option("--points", ao.points, "Model curve grid size")->check(CLI::Range(2, 1000000));
    an_cmd->add_option("--name", ao.name, "Output file stem");

    SimulateOptions so;
    auto* sim_cmd = app.add_subcommand("simulate", "Synthetic dataset from a model spec");
    sim_cmd->add_option("--spec", so.spec, "Model spec JSON")->required()->check(CLI::ExistingFile);
    sim_cmd->add_option("--n", so.n, "Cases per class, or cohort size with --prevalence")
        ->check(CLI::Range(std::size_t{1}, std::size_t{100000000}));
    sim_cmd->add_option("--prevalence", so.prevalence, "Draw labels at this prevalence")
        ->check(CLI::Range(0.0, 1.0));
    sim_cmd->add_option("--name", so.name, "Output file stem");

    DependenceOptions dopt;
    auto* dep_cmd = app.add_subcommand("dependence", "Copula dependence measures or sample correlations");
    dep_cmd->add_option("--family", dopt.family, "Copula family")
        ->check(CLI::IsMember({"independence", "gaussian", "gumbel", "clayton", "frank"}));
    auto* param_opt = dep_cmd->add_option("--param", dopt.param, "rho (gaussian) or theta");
    auto* tau_opt = dep_cmd->add_option("--tau", dopt.tau, "Kendall tau");
    param_opt->excludes(tau_opt);
    dep_cmd->add_option("--data", dopt.data, "Dataset CSV")->check(CLI::ExistingFile);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (curve_cmd->parsed()) {
            return cmd_curve(g, co, out);
        }
        if (thm_cmd->parsed()) {
            return cmd_theorem_check(g, to, out);
        }
        if (an_cmd->parsed()) {
            return cmd_analyze(g, ao, out);
        }
        if (sim_cmd->parsed()) {
            return cmd_simulate(g, so, out);
        }
        return cmd_dependence(g, dopt, out);
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << '\n';
        return kNumericError;
    } catch (const DomainError& e) {
        err << "invalid input: " << e.what() << '\n';
        return kInputError;
    } catch (const DataError& e) {
        err << "invalid input: " << e.what() << '\n';
        return kInputError;
    } catch (const fs::filesystem_error& e) {
        err << "file error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kNumericError;
    }
}

}  // namespace rocopula::cli
