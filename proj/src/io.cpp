#include "rocopula/io.hpp"

#include "rocopula/dependence.hpp"
#include "rocopula/error.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <ostream>
#include <set>
#include <sstream>

namespace rocopula::io {

namespace {

void check_keys(const json& j, std::initializer_list<std::string_view> allowed, const std::string& where)
{
    if (!j.is_object()) {
        throw DataError(where + ": expected a JSON object");
    }
    for (const auto& item : j.items()) {
        bool ok = false;
        for (auto a : allowed) {
            ok = ok || item.key() == a;
        }
        if (!ok) {
            throw DataError(where + ": unknown field '" + item.key() + "'");
        }
    }
}

const json& require(const json& j, const char* key, const std::string& where)
{
    auto it = j.find(key);
    if (it == j.end()) {
        throw DataError(where + ": missing field '" + key + "'");
    }
    return *it;
}

double number(const json& j, const char* key, const std::string& where)
{
    const json& v = require(j, key, where);
    if (!v.is_number()) {
        throw DataError(where + "." + key + ": expected a number");
    }
    return v.get<double>();
}

std::string text(const json& j, const char* key, const std::string& where)
{
    const json& v = require(j, key, where);
    if (!v.is_string()) {
        throw DataError(where + "." + key + ": expected a string");
    }
    return v.get<std::string>();
}

json opt(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

std::optional<double> opt_number(const json& j, const char* key)
{
    const json& v = j.at(key);
    if (v.is_null()) {
        return std::nullopt;
    }
    return v.get<double>();
}

json point_json(const OperatingPoint& p) { return json::array({p.fpf, p.tpf}); }

OperatingPoint point_from_json(const json& j)
{
    if (!j.is_array() || j.size() != 2) {
        throw DataError("curve point must be [fpf, tpf]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json threshold_json(const ThresholdSpec& t)
{
    return json{{t.kind == ThresholdSpec::Kind::Score ? "score" : "fpf", t.value}};
}

ThresholdSpec threshold_from_json(const json& j, const std::string& where)
{
    check_keys(j, {"score", "fpf"}, where);
    if (j.size() != 1) {
        throw DataError(where + ": give exactly one of 'score' or 'fpf'");
    }
    if (j.contains("score")) {
        return ThresholdSpec::score(number(j, "score", where));
    }
    const double f = number(j, "fpf", where);
    if (!(f > 0.0 && f < 1.0)) {
        throw DomainError(where + ".fpf must lie in (0,1)");
    }
    return ThresholdSpec::fpf(f);
}

json test_json(const Marginal& n, const Marginal& d)
{
    return json{{"nondiseased", to_json(n)}, {"diseased", to_json(d)}};
}

std::pair<Marginal, Marginal> test_from_json(const json& j, const std::string& where)
{
    check_keys(j, {"nondiseased", "diseased"}, where);
    return {marginal_from_json(require(j, "nondiseased", where)),
            marginal_from_json(require(j, "diseased", where))};
}

json fit_json(const BinormalFit& f)
{
    return json{{"mu", f.mu},
                {"sigma", f.sigma},
                {"source", std::string(to_string(f.source))},
                {"degenerate", f.degenerate},
                {"auc", f.auc()}};
}

BinormalFit fit_from_json(const json& j)
{
    BinormalFit f;
    f.mu = j.at("mu").get<double>();
    f.sigma = j.at("sigma").get<double>();
    f.source = fit_source_from_string(j.at("source").get<std::string>());
    f.degenerate = j.at("degenerate").get<bool>();
    return f;
}

json corr_json(const CorrelationSummary& c)
{
    return json{{"n", c.n}, {"pearson", opt(c.pearson)}, {"kendall", opt(c.kendall)},
                {"spearman", opt(c.spearman)}};
}

CorrelationSummary corr_from_json(const json& j)
{
    CorrelationSummary c;
    c.n = j.at("n").get<std::size_t>();
    c.pearson = opt_number(j, "pearson");
    c.kendall = opt_number(j, "kendall");
    c.spearman = opt_number(j, "spearman");
    return c;
}

std::vector<std::string> split_csv_line(const std::string& line, std::size_t row)
{
    std::vector<std::string> out;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += ch;
            }
        } else if (ch == '"' && field.empty()) {
            quoted = true;
        } else if (ch == ',') {
            out.push_back(std::move(field));
            field.clear();
        } else {
            field += ch;
        }
    }
    if (quoted) {
        throw DataError("row " + std::to_string(row) + ": unterminated quoted field");
    }
    out.push_back(std::move(field));
    return out;
}

std::string trim(std::string s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        out += ch;
        if (ch == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

}  // namespace

std::string format_double(double x)
{
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

json to_json(const Marginal& m)
{
    if (m.family() == MarginalFamily::Normal) {
        return json{{"family", "normal"}, {"mu", m.mu()}, {"sigma", m.sigma()}};
    }
    return json{{"family", "exponential"}, {"lambda", m.lambda()}};
}

Marginal marginal_from_json(const json& j)
{
    const std::string where = "marginal";
    if (!j.is_object()) {
        throw DataError(where + ": expected a JSON object");
    }
    const std::string family = text(j, "family", where);
    if (family == "normal") {
        check_keys(j, {"family", "mu", "sigma"}, where);
        return Marginal::normal(number(j, "mu", where), number(j, "sigma", where));
    }
    if (family == "exponential") {
        check_keys(j, {"family", "lambda"}, where);
        return Marginal::exponential(number(j, "lambda", where));
    }
    throw DataError(where + ": unknown family '" + family + "'");
}

json to_json(const Copula& c)
{
    json j{{"family", std::string(to_string(c.family()))}};
    if (c.family() == CopulaFamily::Gaussian) {
        j["rho"] = c.param();
    } else if (c.family() != CopulaFamily::Independence) {
        j["theta"] = c.param();
    }
    return j;
}

Copula copula_from_json(const json& j)
{
    const std::string where = "copula";
    if (!j.is_object()) {
        throw DataError(where + ": expected a JSON object");
    }
    const CopulaFamily family = copula_family_from_string(text(j, "family", where));
    switch (family) {
    case CopulaFamily::Independence:
        check_keys(j, {"family"}, where);
        return Copula::independence();
    case CopulaFamily::Gaussian:
        check_keys(j, {"family", "rho"}, where);
        return Copula::gaussian(number(j, "rho", where));
    default:
        check_keys(j, {"family", "theta"}, where);
        return Copula::make(family, number(j, "theta", where));
    }
}

JointModel ModelSpec::resolved() const
{
    JointModel m = model;
    auto resolve = [&](const std::optional<ThresholdSpec>& t) -> std::optional<double> {
        if (!t) {
            return std::nullopt;
        }
        return t->kind == ThresholdSpec::Kind::Score ? t->value : threshold_for_fpf(m.a_n, t->value);
    };
    m.t_a_ro = resolve(rule_out);
    m.t_a_ri = resolve(rule_in);
    m.validate();
    return m;
}

json to_json(const JointModel& model)
{
    ModelSpec spec;
    spec.model = model;
    if (model.t_a_ro) {
        spec.rule_out = ThresholdSpec::score(*model.t_a_ro);
    }
    if (model.t_a_ri) {
        spec.rule_in = ThresholdSpec::score(*model.t_a_ri);
    }
    return to_json(spec);
}

json to_json(const ModelSpec& spec)
{
    json j{{"test_a", test_json(spec.model.a_n, spec.model.a_d)},
           {"test_b", test_json(spec.model.b_n, spec.model.b_d)},
           {"copula_nondiseased", to_json(spec.model.copula_n)},
           {"copula_diseased", to_json(spec.model.copula_d)}};
    json th = json::object();
    if (spec.rule_out) {
        th["rule_out"] = threshold_json(*spec.rule_out);
    }
    if (spec.rule_in) {
        th["rule_in"] = threshold_json(*spec.rule_in);
    }
    if (!th.empty()) {
        j["thresholds"] = th;
    }
    if (spec.sweep) {
        j["sweep"] = json{{"parameter", spec.sweep->parameter}, {"values", spec.sweep->values}};
    }
    return j;
}

ModelSpec model_spec_from_json(const json& j)
{
    const std::string where = "model spec";
    check_keys(j, {"test_a", "test_b", "copula_nondiseased", "copula_diseased", "thresholds", "sweep"}, where);
    ModelSpec spec;
    std::tie(spec.model.a_n, spec.model.a_d) = test_from_json(require(j, "test_a", where), "test_a");
    std::tie(spec.model.b_n, spec.model.b_d) = test_from_json(require(j, "test_b", where), "test_b");
    spec.model.copula_n = copula_from_json(require(j, "copula_nondiseased", where));
    spec.model.copula_d = copula_from_json(require(j, "copula_diseased", where));
    if (auto it = j.find("thresholds"); it != j.end()) {
        check_keys(*it, {"rule_out", "rule_in"}, "thresholds");
        if (it->contains("rule_out")) {
            spec.rule_out = threshold_from_json(it->at("rule_out"), "thresholds.rule_out");
        }
        if (it->contains("rule_in")) {
            spec.rule_in = threshold_from_json(it->at("rule_in"), "thresholds.rule_in");
        }
    }
    if (auto it = j.find("sweep"); it != j.end()) {
        check_keys(*it, {"parameter", "values"}, "sweep");
        Sweep s;
        s.parameter = text(*it, "parameter", "sweep");
        const json& values = require(*it, "values", "sweep");
        if (!values.is_array() || values.empty()) {
            throw DataError("sweep.values: expected a non-empty array of numbers");
        }
        for (const auto& v : values) {
            if (!v.is_number()) {
                throw DataError("sweep.values: expected a non-empty array of numbers");
            }
            s.values.push_back(v.get<double>());
        }
        for (double v : s.values) {
            (void)apply_sweep_value(spec.model, s.parameter, v);  // domain check
        }
        spec.sweep = std::move(s);
    }
    (void)spec.resolved();  // threshold ordering
    return spec;
}

ModelSpec load_model_spec(const std::filesystem::path& path)
{
    const std::string body = read_file(path);
    json j;
    try {
        j = json::parse(body);
    } catch (const json::parse_error& e) {
        throw DataError(path.string() + ": invalid JSON: " + e.what());
    }
    return model_spec_from_json(j);
}

JointModel apply_sweep_value(const JointModel& model, std::string_view parameter, double value)
{
    JointModel m = model;
    if (parameter.size() < 3 || (!parameter.ends_with("_n") && !parameter.ends_with("_d"))) {
        throw DomainError("unknown sweep parameter '" + std::string(parameter) + "'");
    }
    Copula& target = parameter.ends_with("_n") ? m.copula_n : m.copula_d;
    const std::string_view kind = parameter.substr(0, parameter.size() - 2);
    if (kind == "rho") {
        target = Copula::gaussian(value);
    } else if (kind == "tau") {
        if (target.family() == CopulaFamily::Independence) {
            throw DomainError("tau sweep needs a parametric copula family to recalibrate");
        }
        target = copula_from_tau(target.family(), value);
    } else if (kind == "theta") {
        target = Copula::make(target.family(), value);
    } else {
        throw DomainError("unknown sweep parameter '" + std::string(parameter) + "'");
    }
    return m;
}

json to_json(const RocCurve& c)
{
    json pts = json::array();
    for (const auto& p : c.points) {
        pts.push_back(point_json(p));
    }
    json j{{"kind", std::string(to_string(c.kind))},
           {"fpf_range", json::array({c.fpf_lo, c.fpf_hi})},
           {"points", std::move(pts)}};
    if (c.model) {
        j["model"] = to_json(*c.model);
    }
    return j;
}

RocCurve curve_from_json(const json& j)
{
    check_keys(j, {"kind", "fpf_range", "points", "model"}, "curve");
    RocCurve c;
    c.kind = roc_kind_from_string(j.at("kind").get<std::string>());
    c.fpf_lo = j.at("fpf_range").at(0).get<double>();
    c.fpf_hi = j.at("fpf_range").at(1).get<double>();
    for (const auto& p : j.at("points")) {
        c.points.push_back(point_from_json(p));
    }
    if (j.contains("model")) {
        c.model = model_spec_from_json(j.at("model")).resolved();
    }
    return c;
}

void write_curve_csv(std::ostream& os, const RocCurve& c)
{
    os << "fpf,tpf\n";
    for (const auto& p : c.points) {
        os << format_double(p.fpf) << ',' << format_double(p.tpf) << '\n';
    }
}

ScoreDataset read_dataset_csv(std::istream& is)
{
    static const char* kColumns[] = {"case_id", "label", "score_a", "score_b"};
    ScoreDataset data;
    std::string line;
    std::size_t row = 1;
    if (!std::getline(is, line)) {
        throw DataError("row 1: empty input; expected header case_id,label,score_a,score_b");
    }
    if (line.starts_with("\xEF\xBB\xBF")) {
        line.erase(0, 3);
    }
    const auto header = split_csv_line(line, row);
    if (header.size() != 4) {
        throw DataError("row 1: header must be case_id,label,score_a,score_b");
    }
    for (std::size_t c = 0; c < 4; ++c) {
        if (trim(header[c]) != kColumns[c]) {
            throw DataError("row 1, column " + std::to_string(c + 1) + ": expected header '" + kColumns[c] +
                            "', found '" + trim(header[c]) + "'");
        }
    }
    std::set<std::string> seen;
    while (std::getline(is, line)) {
        ++row;
        if (trim(line).empty()) {
            continue;
        }
        const auto fields = split_csv_line(line, row);
        const std::string r = "row " + std::to_string(row);
        if (fields.size() != 4) {
            throw DataError(r + ": expected 4 fields, found " + std::to_string(fields.size()));
        }
        ScoreRecord rec;
        rec.case_id = trim(fields[0]);
        if (rec.case_id.empty()) {
            throw DataError(r + ", column 1 (case_id): empty case id");
        }
        if (!seen.insert(rec.case_id).second) {
            throw DataError(r + ", column 1 (case_id): duplicate case id '" + rec.case_id + "'");
        }
        const std::string label = trim(fields[1]);
        if (label == "0" || label == "1") {
            rec.diseased = label == "1";
        } else {
            throw DataError(r + ", column 2 (label): expected 0 or 1, found '" + label + "'");
        }
        for (std::size_t c = 2; c < 4; ++c) {
            const std::string f = trim(fields[c]);
            if (f.empty()) {
                continue;
            }
            double v = 0.0;
            const char* first = f.data();
            const char* last = f.data() + f.size();
            if (*first == '+') {
                ++first;
            }
            auto res = std::from_chars(first, last, v);
            if (res.ec != std::errc() || res.ptr != last || !std::isfinite(v)) {
                throw DataError(r + ", column " + std::to_string(c + 1) + " (" + kColumns[c] +
                                "): not a finite number: '" + f + "'");
            }
            (c == 2 ? rec.score_a : rec.score_b) = v;
        }
        data.records.push_back(std::move(rec));
    }
    return data;
}

ScoreDataset read_dataset_csv(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot open dataset '" + path.string() + "'");
    }
    return read_dataset_csv(in);
}

void write_dataset_csv(std::ostream& os, const ScoreDataset& data)
{
    os << "case_id,label,score_a,score_b\n";
    for (const auto& r : data.records) {
        os << csv_field(r.case_id) << ',' << (r.diseased ? '1' : '0') << ','
           << (r.score_a ? format_double(*r.score_a) : "") << ','
           << (r.score_b ? format_double(*r.score_b) : "") << '\n';
    }
}

json to_json(const AnalysisReport& r)
{
    json j;
    j["provenance"] = json{{"tool_version", r.provenance.tool_version},
                           {"input_hash", r.provenance.input_hash},
                           {"seed", r.provenance.seed},
                           {"n_nondiseased", r.provenance.n_nondiseased},
                           {"n_diseased", r.provenance.n_diseased}};
    j["empirical"] = json{{"a", to_json(r.empirical_a)},
                          {"b", to_json(r.empirical_b)},
                          {"auc_a", r.auc_empirical_a},
                          {"auc_b", r.auc_empirical_b}};
    j["fits"] = json{{"a", fit_json(r.fit_a)}, {"b", fit_json(r.fit_b)}};
    j["fitted_curves"] = json{{"a", to_json(r.fitted_a)}, {"b", to_json(r.fitted_b)}};
    j["correlations"] = json{{"nondiseased", corr_json(r.correlation_n)},
                             {"diseased", corr_json(r.correlation_d)}};
    j["thresholds"] = json{{"rule_out_score", opt(r.t_a_ro_score)},
                           {"rule_in_score", opt(r.t_a_ri_score)},
                           {"b_threshold", opt(r.b_threshold)}};
    j["model"] = to_json(r.model);
    json scen = json::array();
    for (auto k : r.scenarios) {
        scen.push_back(std::string(to_string(k)));
    }
    j["scenarios"] = scen;
    json fams = json::array();
    for (const auto& f : r.families) {
        json curves = json::array();
        for (const auto& c : f.curves) {
            curves.push_back(to_json(c));
        }
        fams.push_back(json{{"family", std::string(to_string(f.family))},
                            {"copula_nondiseased", to_json(f.copula_n)},
                            {"copula_diseased", to_json(f.copula_d)},
                            {"calibration_note", f.calibration_note},
                            {"curves", curves},
                            {"pauc", f.pauc}});
    }
    j["families"] = fams;
    json proj = json::array();
    for (const auto& p : r.projected) {
        json tpfs = json::array();
        for (const auto& t : p.model_tpf_at_point) {
            tpfs.push_back(opt(t));
        }
        proj.push_back(json{{"kind", std::string(to_string(p.kind))},
                            {"curve", to_json(p.curve)},
                            {"pauc", p.pauc},
                            {"point", p.point ? point_json(*p.point) : json(nullptr)},
                            {"model_tpf_at_point", tpfs}});
    }
    j["projected"] = proj;
    if (r.workload) {
        const auto& w = *r.workload;
        j["workload"] = json{{"prevalence", w.prevalence},
                             {"fpf_a", w.fpf_a},
                             {"tpf_a_empirical", w.tpf_a_empirical},
                             {"tpf_a_model", w.tpf_a_model},
                             {"ruled_out_empirical", w.ruled_out_empirical},
                             {"ruled_out_model", w.ruled_out_model}};
    } else {
        j["workload"] = nullptr;
    }
    return j;
}

AnalysisReport report_from_json(const json& j)
{
    try {
        AnalysisReport r;
        const json& pv = j.at("provenance");
        r.provenance.tool_version = pv.at("tool_version").get<std::string>();
        r.provenance.input_hash = pv.at("input_hash").get<std::string>();
        r.provenance.seed = pv.at("seed").get<std::uint64_t>();
        r.provenance.n_nondiseased = pv.at("n_nondiseased").get<std::size_t>();
        r.provenance.n_diseased = pv.at("n_diseased").get<std::size_t>();
        r.empirical_a = curve_from_json(j.at("empirical").at("a"));
        r.empirical_b = curve_from_json(j.at("empirical").at("b"));
        r.auc_empirical_a = j.at("empirical").at("auc_a").get<double>();
        r.auc_empirical_b = j.at("empirical").at("auc_b").get<double>();
        r.fit_a = fit_from_json(j.at("fits").at("a"));
        r.fit_b = fit_from_json(j.at("fits").at("b"));
        r.fitted_a = curve_from_json(j.at("fitted_curves").at("a"));
        r.fitted_b = curve_from_json(j.at("fitted_curves").at("b"));
        r.correlation_n = corr_from_json(j.at("correlations").at("nondiseased"));
        r.correlation_d = corr_from_json(j.at("correlations").at("diseased"));
        r.t_a_ro_score = opt_number(j.at("thresholds"), "rule_out_score");
        r.t_a_ri_score = opt_number(j.at("thresholds"), "rule_in_score");
        r.b_threshold = opt_number(j.at("thresholds"), "b_threshold");
        r.model = model_spec_from_json(j.at("model")).resolved();
        for (const auto& k : j.at("scenarios")) {
            r.scenarios.push_back(roc_kind_from_string(k.get<std::string>()));
        }
        for (const auto& f : j.at("families")) {
            ModelCurveSet s;
            s.family = copula_family_from_string(f.at("family").get<std::string>());
            s.copula_n = copula_from_json(f.at("copula_nondiseased"));
            s.copula_d = copula_from_json(f.at("copula_diseased"));
            s.calibration_note = f.at("calibration_note").get<std::string>();
            for (const auto& c : f.at("curves")) {
                s.curves.push_back(curve_from_json(c));
            }
            s.pauc = f.at("pauc").get<std::vector<double>>();
            r.families.push_back(std::move(s));
        }
        for (const auto& p : j.at("projected")) {
            ProjectedScenario s;
            s.kind = roc_kind_from_string(p.at("kind").get<std::string>());
            s.curve = curve_from_json(p.at("curve"));
            s.pauc = p.at("pauc").get<double>();
            if (!p.at("point").is_null()) {
                s.point = point_from_json(p.at("point"));
            }
            for (const auto& t : p.at("model_tpf_at_point")) {
                s.model_tpf_at_point.push_back(t.is_null() ? std::nullopt : std::optional<double>(t.get<double>()));
            }
            r.projected.push_back(std::move(s));
        }
        if (!j.at("workload").is_null()) {
            const json& w = j.at("workload");
            r.workload = WorkloadRow{w.at("prevalence").get<double>(),      w.at("fpf_a").get<double>(),
                                     w.at("tpf_a_empirical").get<double>(), w.at("tpf_a_model").get<double>(),
                                     w.at("ruled_out_empirical").get<double>(),
                                     w.at("ruled_out_model").get<double>()};
        }
        return r;
    } catch (const json::exception& e) {
        throw DataError(std::string("malformed analysis report: ") + e.what());
    }
}

void write_metrics_csv(std::ostream& os, const AnalysisReport& r)
{
    auto row = [&os](const std::string& name, std::optional<double> v) {
        os << name << ',' << (v ? format_double(*v) : "") << '\n';
    };
    os << "metric,value\n";
    row("n_nondiseased", static_cast<double>(r.provenance.n_nondiseased));
    row("n_diseased", static_cast<double>(r.provenance.n_diseased));
    row("auc_empirical_a", r.auc_empirical_a);
    row("auc_empirical_b", r.auc_empirical_b);
    for (auto [tag, fit] : {std::pair{"a", &r.fit_a}, std::pair{"b", &r.fit_b}}) {
        const std::string p = std::string("fit_") + tag;
        row(p + "_mu", fit->mu);
        row(p + "_sigma", fit->sigma);
        row(p + "_auc", fit->auc());
    }
    for (auto [tag, c] : {std::pair{"n", &r.correlation_n}, std::pair{"d", &r.correlation_d}}) {
        const std::string p = std::string("corr_") + tag;
        row(p + "_pearson", c->pearson);
        row(p + "_kendall", c->kendall);
        row(p + "_spearman", c->spearman);
    }
    row("t_a_ro_score", r.t_a_ro_score);
    row("t_a_ri_score", r.t_a_ri_score);
    row("b_threshold", r.b_threshold);
    for (const auto& f : r.families) {
        const std::string fam(to_string(f.family));
        if (f.copula_n.family() != CopulaFamily::Independence) {
            row("param_" + fam + "_n", f.copula_n.param());
        }
        if (f.copula_d.family() != CopulaFamily::Independence) {
            row("param_" + fam + "_d", f.copula_d.param());
        }
        for (std::size_t s = 0; s < r.scenarios.size(); ++s) {
            row("pauc_" + fam + "_" + std::string(to_string(r.scenarios[s])), f.pauc[s]);
        }
    }
    for (const auto& p : r.projected) {
        const std::string kind(to_string(p.kind));
        row("pauc_projected_" + kind, p.pauc);
        if (p.point) {
            row("projected_" + kind + "_fpf", p.point->fpf);
            row("projected_" + kind + "_tpf", p.point->tpf);
            for (std::size_t f = 0; f < p.model_tpf_at_point.size() && f < r.families.size(); ++f) {
                row("model_tpf_" + std::string(to_string(r.families[f].family)) + "_" + kind,
                    p.model_tpf_at_point[f]);
            }
        }
    }
    if (r.workload) {
        row("workload_prevalence", r.workload->prevalence);
        row("workload_fpf_a", r.workload->fpf_a);
        row("workload_tpf_a_empirical", r.workload->tpf_a_empirical);
        row("workload_tpf_a_model", r.workload->tpf_a_model);
        row("workload_ruled_out_empirical", r.workload->ruled_out_empirical);
        row("workload_ruled_out_model", r.workload->ruled_out_model);
    }
}

std::string fnv1a_hex(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot open '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace rocopula::io
