#include "rocopula/analysis.hpp"

#include "rocopula/dependence.hpp"
#include "rocopula/error.hpp"
#include "rocopula/numeric.hpp"
#include "rocopula/version.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace rocopula {

namespace {

double empirical_fpf(const std::vector<double>& scores, double t)
{
    const auto above = std::count_if(scores.begin(), scores.end(), [t](double s) { return s > t; });
    return static_cast<double>(above) / static_cast<double>(scores.size());
}

CorrelationSummary correlations(const std::vector<double>& a, const std::vector<double>& b)
{
    CorrelationSummary out;
    out.n = a.size();
    if (a.size() < 2) {
        return out;
    }
    try {
        out.pearson = sample_pearson(a, b);
        out.kendall = sample_kendall(a, b);
        out.spearman = sample_spearman(a, b);
    } catch (const UndefinedCorrelationError&) {
        out = CorrelationSummary{};
        out.n = a.size();
    }
    return out;
}

struct Calibrated {
    Copula copula;
    std::string note;
};

Calibrated calibrate(CopulaFamily family, const CorrelationSummary& corr, GaussianCalibration mode)
{
    if (family == CopulaFamily::Independence) {
        return {Copula::independence(), ""};
    }
    if (!corr.kendall) {
        return {Copula::independence(), "correlation undefined; independence used"};
    }
    const double tau = *corr.kendall;
    if (family == CopulaFamily::Gaussian) {
        if (mode == GaussianCalibration::Pearson && corr.pearson) {
            const double rho = std::clamp(*corr.pearson, -0.999999, 0.999999);
            return {Copula::gaussian(rho), "rho = sample pearson"};
        }
        const double rho = std::sin(std::numbers::pi * tau / 2.0);
        return {Copula::gaussian(std::clamp(rho, -0.999999, 0.999999)), "rho = sin(pi*tau/2)"};
    }
    if (tau == 0.0) {
        return {Copula::independence(), "tau = 0; independence used"};
    }
    if (tau < 0.0) {
        if (family == CopulaFamily::Frank) {
            return {Copula::frank(-theta_from_tau(CopulaFamily::Frank, -tau)), "theta from tau"};
        }
        return {Copula::independence(),
                std::string(to_string(family)) + " needs tau > 0; independence used"};
    }
    try {
        return {copula_from_tau(family, tau), "theta from tau"};
    } catch (const DomainError& e) {
        return {Copula::independence(), std::string("calibration failed (") + e.what() +
                                            "); independence used"};
    }
}

std::size_t interior_count(const RocCurve& c)
{
    return static_cast<std::size_t>(std::count_if(c.points.begin(), c.points.end(), [](const OperatingPoint& p) {
        return p.fpf > 0.0 && p.fpf < 1.0 && p.tpf > 0.0 && p.tpf < 1.0;
    }));
}

std::optional<OperatingPoint> single_interior(const RocCurve& c)
{
    for (const auto& p : c.points) {
        if (p.fpf > 0.0 && p.fpf < 1.0 && p.tpf > 0.0 && p.tpf < 1.0) {
            return p;
        }
    }
    return std::nullopt;
}

double latent_threshold(double fpf_emp, const char* which)
{
    if (!(fpf_emp > 0.0 && fpf_emp < 1.0)) {
        throw DataError(std::string(which) +
                        " threshold leaves an empirical Test-A FPF of 0 or 1; no latent threshold");
    }
    return standard_normal_quantile(1.0 - fpf_emp);
}

}  // namespace

double empirical_threshold_for_fpf(const ScoreDataset& data, double fpf)
{
    if (!(fpf > 0.0 && fpf < 1.0)) {
        throw DomainError("target FPF must lie in (0,1)");
    }
    const ClassScores a = class_scores(data, TestSide::A);
    const std::vector<double> cands = midpoint_thresholds(a.nondiseased);
    double best = cands.front();
    double best_err = std::numeric_limits<double>::infinity();
    for (double t : cands) {
        const double err = std::abs(empirical_fpf(a.nondiseased, t) - fpf);
        if (err < best_err) {
            best_err = err;
            best = t;
        }
    }
    return best;
}

AnalysisReport analyze(const ScoreDataset& data, const AnalysisConfig& config)
{
    data.validate();
    AnalysisReport rep;
    rep.provenance.tool_version = std::string(kVersion);
    rep.provenance.input_hash = config.input_hash;
    rep.provenance.seed = config.seed;
    rep.provenance.n_nondiseased = data.count(false);
    rep.provenance.n_diseased = data.count(true);

    const ClassScores a = class_scores(data, TestSide::A);
    const ClassScores b = class_scores(data, TestSide::B);

    rep.empirical_a = empirical_roc(data, TestSide::A);
    rep.empirical_b = empirical_roc(data, TestSide::B);
    rep.auc_empirical_a = auc(rep.empirical_a);
    rep.auc_empirical_b = auc(rep.empirical_b);

    rep.fit_a = fit_binormal_deming(rep.empirical_a.points, config.deming_delta);
    if (interior_count(rep.empirical_b) >= 2) {
        rep.fit_b = fit_binormal_deming(rep.empirical_b.points, config.deming_delta);
    } else {
        const auto op = single_interior(rep.empirical_b);
        if (!op) {
            throw FitError("Test B has no interior ROC point; cannot fit a binormal curve");
        }
        rep.fit_b = fit_from_point_and_ratio(*op, mean_to_sigma_ratio(rep.fit_a));
    }
    rep.fitted_a = univariate_curve(rep.fit_a.nondiseased(), rep.fit_a.diseased(), config.n_points);
    rep.fitted_b = univariate_curve(rep.fit_b.nondiseased(), rep.fit_b.diseased(), config.n_points);

    rep.correlation_n = correlations(
        [&] {
            std::vector<double> v;
            for (const auto& r : data.records)
                if (!r.diseased) v.push_back(*r.score_a);
            return v;
        }(),
        b.nondiseased);
    rep.correlation_d = correlations(
        [&] {
            std::vector<double> v;
            for (const auto& r : data.records)
                if (r.diseased) v.push_back(*r.score_a);
            return v;
        }(),
        b.diseased);

    auto resolve = [&](const std::optional<ThresholdSpec>& spec) -> std::optional<double> {
        if (!spec) {
            return std::nullopt;
        }
        return spec->kind == ThresholdSpec::Kind::Score ? spec->value
                                                        : empirical_threshold_for_fpf(data, spec->value);
    };
    rep.t_a_ro_score = resolve(config.rule_out);
    rep.t_a_ri_score = resolve(config.rule_in);
    if (rep.t_a_ro_score && rep.t_a_ri_score && !(*rep.t_a_ro_score < *rep.t_a_ri_score)) {
        throw DomainError("rule-out threshold must be below the rule-in threshold");
    }

    rep.model.a_n = rep.fit_a.nondiseased();
    rep.model.a_d = rep.fit_a.diseased();
    rep.model.b_n = rep.fit_b.nondiseased();
    rep.model.b_d = rep.fit_b.diseased();
    if (rep.t_a_ro_score) {
        rep.model.t_a_ro = latent_threshold(empirical_fpf(a.nondiseased, *rep.t_a_ro_score), "rule-out");
    }
    if (rep.t_a_ri_score) {
        rep.model.t_a_ri = latent_threshold(empirical_fpf(a.nondiseased, *rep.t_a_ri_score), "rule-in");
    }
    rep.model.validate();

    if (rep.t_a_ro_score) {
        rep.scenarios.push_back(RocKind::RuleOut);
    }
    if (rep.t_a_ri_score) {
        rep.scenarios.push_back(RocKind::RuleIn);
    }
    if (rep.t_a_ro_score && rep.t_a_ri_score) {
        rep.scenarios.push_back(RocKind::Combined);
    }

    std::vector<CopulaFamily> families = config.families;
    if (std::find(families.begin(), families.end(), CopulaFamily::Independence) == families.end()) {
        families.push_back(CopulaFamily::Independence);
    }
    for (CopulaFamily fam : families) {
        ModelCurveSet set;
        set.family = fam;
        const Calibrated cn = calibrate(fam, rep.correlation_n, config.gaussian_calibration);
        const Calibrated cd = calibrate(fam, rep.correlation_d, config.gaussian_calibration);
        set.copula_n = cn.copula;
        set.copula_d = cd.copula;
        if (!cn.note.empty() || !cd.note.empty()) {
            set.calibration_note = "N: " + cn.note + "; D: " + cd.note;
        }
        JointModel m = rep.model;
        m.copula_n = set.copula_n;
        m.copula_d = set.copula_d;
        for (RocKind kind : rep.scenarios) {
            set.curves.push_back(curve(m, kind, config.n_points, config.threads));
            set.pauc.push_back(pauc(set.curves.back()));
        }
        rep.families.push_back(std::move(set));
    }

    rep.b_threshold = config.b_threshold;
    if (!rep.b_threshold) {
        std::vector<double> distinct = b.nondiseased;
        distinct.insert(distinct.end(), b.diseased.begin(), b.diseased.end());
        const auto mids = midpoint_thresholds(distinct);
        if (mids.size() == 3) {  // binary Test B
            rep.b_threshold = mids[1];
        }
    }

    for (std::size_t s = 0; s < rep.scenarios.size(); ++s) {
        const RocKind kind = rep.scenarios[s];
        const std::optional<double> ro =
            kind == RocKind::RuleIn ? std::nullopt : rep.t_a_ro_score;
        const std::optional<double> ri =
            kind == RocKind::RuleOut ? std::nullopt : rep.t_a_ri_score;
        ProjectedScenario ps;
        ps.kind = kind;
        ps.curve = project_operating_points(data, ro, ri);
        ps.pauc = ps.curve.points.size() >= 2 && ps.curve.fpf_hi > ps.curve.fpf_lo ? pauc(ps.curve) : 0.0;
        if (rep.b_threshold) {
            ps.point = projected_point(data, ro, ri, *rep.b_threshold);
            for (const auto& set : rep.families) {
                const RocCurve& mc = set.curves[s];
                if (ps.point->fpf >= mc.points.front().fpf && ps.point->fpf <= mc.points.back().fpf) {
                    ps.model_tpf_at_point.push_back(tpf_at(mc, ps.point->fpf));
                } else {
                    ps.model_tpf_at_point.push_back(std::nullopt);
                }
            }
        }
        rep.projected.push_back(std::move(ps));
    }

    if (rep.t_a_ro_score) {
        WorkloadRow w;
        w.prevalence = config.prevalence.value_or(static_cast<double>(rep.provenance.n_diseased) /
                                                  static_cast<double>(data.records.size()));
        w.fpf_a = empirical_fpf(a.nondiseased, *rep.t_a_ro_score);
        w.tpf_a_empirical = empirical_fpf(a.diseased, *rep.t_a_ro_score);
        w.tpf_a_model = rep.model.tpf_a(*rep.model.t_a_ro);
        w.ruled_out_empirical = workload_ruled_out(w.prevalence, w.fpf_a, w.tpf_a_empirical);
        w.ruled_out_model = workload_ruled_out(w.prevalence, rep.model.fpf_a(*rep.model.t_a_ro), w.tpf_a_model);
        rep.workload = w;
    }
    return rep;
}

}  // namespace rocopula
