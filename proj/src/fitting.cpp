#include "rocopula/fitting.hpp"

#include "rocopula/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace rocopula {

namespace {

constexpr double kSigmaLo = 0.05;
constexpr double kSigmaHi = 20.0;

const char* side_name(TestSide s) { return s == TestSide::A ? "score_a" : "score_b"; }

void require_both_classes(std::size_t n_n, std::size_t n_d)
{
    if (n_n == 0) {
        throw DataError("no non-diseased (label 0) records: ROC undefined");
    }
    if (n_d == 0) {
        throw DataError("no diseased (label 1) records: ROC undefined");
    }
}

}  // namespace

void ScoreDataset::validate() const
{
    std::unordered_set<std::string> seen;
    seen.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        if (!seen.insert(r.case_id).second) {
            throw DataError("duplicate case_id '" + r.case_id + "'");
        }
        if ((r.score_a && !std::isfinite(*r.score_a)) || (r.score_b && !std::isfinite(*r.score_b))) {
            throw DataError("non-finite score for case '" + r.case_id + "'");
        }
    }
}

std::size_t ScoreDataset::count(bool diseased) const
{
    return static_cast<std::size_t>(std::count_if(
        records.begin(), records.end(), [&](const ScoreRecord& r) { return r.diseased == diseased; }));
}

std::string_view to_string(FitSource source)
{
    return source == FitSource::DemingFit ? "deming" : "point_plus_ratio";
}

FitSource fit_source_from_string(std::string_view name)
{
    if (name == "deming") {
        return FitSource::DemingFit;
    }
    if (name == "point_plus_ratio") {
        return FitSource::PointPlusRatio;
    }
    throw DomainError("unknown fit source '" + std::string(name) + "'");
}

double BinormalFit::auc() const
{
    return standard_normal_cdf(mu / std::sqrt(1.0 + sigma * sigma));
}

ClassScores class_scores(const ScoreDataset& data, TestSide which)
{
    ClassScores out;
    for (const auto& r : data.records) {
        const auto& s = which == TestSide::A ? r.score_a : r.score_b;
        if (!s) {
            throw DataError(std::string("missing ") + side_name(which) + " for case '" + r.case_id +
                            "' (missing scores are not imputed)");
        }
        (r.diseased ? out.diseased : out.nondiseased).push_back(*s);
    }
    require_both_classes(out.nondiseased.size(), out.diseased.size());
    return out;
}

RocCurve empirical_roc(const ScoreDataset& data, TestSide which)
{
    const ClassScores cs = class_scores(data, which);
    struct Scored {
        double score;
        bool diseased;
    };
    std::vector<Scored> all;
    all.reserve(cs.nondiseased.size() + cs.diseased.size());
    for (double s : cs.nondiseased) {
        all.push_back({s, false});
    }
    for (double s : cs.diseased) {
        all.push_back({s, true});
    }
    std::sort(all.begin(), all.end(), [](const Scored& a, const Scored& b) { return a.score > b.score; });

    const double n_n = static_cast<double>(cs.nondiseased.size());
    const double n_d = static_cast<double>(cs.diseased.size());
    RocCurve out;
    out.kind = RocKind::Empirical;
    out.points.push_back({0.0, 0.0});
    std::size_t fp = 0;
    std::size_t tp = 0;
    std::size_t i = 0;
    while (i < all.size()) {
        std::size_t j = i;
        while (j < all.size() && all[j].score == all[i].score) {
            (all[j].diseased ? tp : fp) += 1;
            ++j;
        }
        out.points.push_back({static_cast<double>(fp) / n_n, static_cast<double>(tp) / n_d});
        i = j;
    }
    out.fpf_lo = 0.0;
    out.fpf_hi = 1.0;
    return out;
}

BinormalFit fit_binormal_deming(std::span<const OperatingPoint> points, double delta)
{
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw DomainError("deming: error-variance ratio must be positive");
    }
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& p : points) {
        if (p.fpf > 0.0 && p.fpf < 1.0 && p.tpf > 0.0 && p.tpf < 1.0) {
            xs.push_back(standard_normal_quantile(p.fpf));
            ys.push_back(standard_normal_quantile(p.tpf));
        }
    }
    if (xs.size() < 2) {
        throw FitError("deming: fewer than 2 interior operating points");
    }
    const double n = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxx = 0.0;
    double syy = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    sxx /= n;
    syy /= n;
    sxy /= n;
    if (sxx == 0.0) {
        throw FitError("deming: all points share one FPF; slope undefined");
    }
    if (!(sxy > 0.0)) {
        throw FitError("deming: probit points are not positively associated; no binormal fit");
    }
    const double diff = syy - delta * sxx;
    const double slope = (diff + std::sqrt(diff * diff + 4.0 * delta * sxy * sxy)) / (2.0 * sxy);
    const double intercept = my - slope * mx;
    if (!(slope > 0.0) || !std::isfinite(slope)) {
        throw FitError("deming: non-positive slope");
    }
    BinormalFit fit;
    fit.sigma = 1.0 / slope;
    fit.mu = intercept * fit.sigma;
    fit.source = FitSource::DemingFit;
    // Chance line: mu = 0, slope 1. The chance diagonal is produced by any sigma
    // once the classes coincide, so flag it rather than trust sigma.
    if (std::abs(intercept) < 1e-9 && std::abs(slope - 1.0) < 1e-9) {
        fit.mu = 0.0;
        fit.sigma = 1.0;
        fit.degenerate = true;
    }
    return fit;
}

BinormalFit fit_from_point_and_ratio(OperatingPoint op, double ratio)
{
    if (!(op.fpf > 0.0 && op.fpf < 1.0 && op.tpf > 0.0 && op.tpf < 1.0)) {
        throw DomainError("fit_from_point_and_ratio: operating point must be strictly interior");
    }
    if (!std::isfinite(ratio) || ratio == 0.0) {
        throw DomainError("fit_from_point_and_ratio: ratio must be finite and nonzero");
    }
    const double zn = standard_normal_quantile(op.fpf);
    const double zd = standard_normal_quantile(op.tpf);
    // Through the point: zd·sigma = mu + zn. Constraint: mu = ratio·(sigma − 1).
    // ⇒ sigma (zd − ratio) = zn − ratio.
    const double denom = zd - ratio;
    if (denom == 0.0) {
        throw FitError("fit_from_point_and_ratio: constraint is parallel to the point's line");
    }
    const double sigma = (zn - ratio) / denom;
    if (!(sigma > kSigmaLo && sigma < kSigmaHi)) {
        throw FitError("fit_from_point_and_ratio: no admissible sigma in (0.05, 20); root at " +
                       std::to_string(sigma));
    }
    BinormalFit fit;
    fit.sigma = sigma;
    fit.mu = ratio * (zn - zd) / denom;  // = ratio·(sigma − 1), stable for large ratio
    fit.source = FitSource::PointPlusRatio;
    return fit;
}

double mean_to_sigma_ratio(const BinormalFit& fit)
{
    if (std::abs(fit.sigma - 1.0) <= 1e-9) {
        throw DomainError("mean-to-sigma ratio undefined for sigma = 1");
    }
    return fit.mu / (fit.sigma - 1.0);
}

std::vector<double> midpoint_thresholds(std::vector<double> values)
{
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<double> out;
    if (values.empty()) {
        return out;
    }
    out.reserve(values.size() + 1);
    out.push_back(values.front() - 1.0);
    for (std::size_t i = 1; i < values.size(); ++i) {
        out.push_back(0.5 * (values[i - 1] + values[i]));
    }
    out.push_back(values.back() + 1.0);
    return out;
}

namespace {

struct Cases {
    std::vector<double> a;
    std::vector<double> b;
    std::vector<bool> d;
    std::size_t n_n = 0;
    std::size_t n_d = 0;
};

Cases paired_cases(const ScoreDataset& data, std::optional<double> t_ro, std::optional<double> t_ri)
{
    if (t_ro && t_ri && !(*t_ro < *t_ri)) {
        throw DomainError("rule-out threshold must be below the rule-in threshold");
    }
    Cases c;
    for (const auto& r : data.records) {
        if (!r.score_a || !r.score_b) {
            throw DataError("projection needs both scores; case '" + r.case_id + "' is missing one");
        }
        c.a.push_back(*r.score_a);
        c.b.push_back(*r.score_b);
        c.d.push_back(r.diseased);
        (r.diseased ? c.n_d : c.n_n) += 1;
    }
    require_both_classes(c.n_n, c.n_d);
    return c;
}

}  // namespace

OperatingPoint projected_point(const ScoreDataset& data, std::optional<double> t_a_ro,
                               std::optional<double> t_a_ri, double t_b)
{
    const Cases c = paired_cases(data, t_a_ro, t_a_ri);
    const double ro = t_a_ro.value_or(-std::numeric_limits<double>::infinity());
    const double ri = t_a_ri.value_or(std::numeric_limits<double>::infinity());
    std::size_t fp = 0;
    std::size_t tp = 0;
    for (std::size_t i = 0; i < c.a.size(); ++i) {
        const bool positive = c.a[i] > ri || (c.a[i] > ro && c.b[i] > t_b);
        if (positive) {
            (c.d[i] ? tp : fp) += 1;
        }
    }
    return {static_cast<double>(fp) / static_cast<double>(c.n_n),
            static_cast<double>(tp) / static_cast<double>(c.n_d)};
}

RocCurve project_operating_points(const ScoreDataset& data, std::optional<double> t_a_ro,
                                  std::optional<double> t_a_ri)
{
    const Cases c = paired_cases(data, t_a_ro, t_a_ri);
    const double ro = t_a_ro.value_or(-std::numeric_limits<double>::infinity());
    const double ri = t_a_ri.value_or(std::numeric_limits<double>::infinity());

    // Cases above t_ri are positive at every B threshold; cases in (t_ro, t_ri]
    // turn positive once t_b drops below their B score.
    std::size_t fp = 0;
    std::size_t tp = 0;
    std::vector<std::size_t> band;
    for (std::size_t i = 0; i < c.a.size(); ++i) {
        if (c.a[i] > ri) {
            (c.d[i] ? tp : fp) += 1;
        } else if (c.a[i] > ro) {
            band.push_back(i);
        }
    }
    std::sort(band.begin(), band.end(), [&](std::size_t x, std::size_t y) { return c.b[x] > c.b[y]; });

    const double n_n = static_cast<double>(c.n_n);
    const double n_d = static_cast<double>(c.n_d);
    RocCurve out;
    out.kind = RocKind::Empirical;
    out.points.push_back({static_cast<double>(fp) / n_n, static_cast<double>(tp) / n_d});
    std::size_t i = 0;
    while (i < band.size()) {
        std::size_t j = i;
        while (j < band.size() && c.b[band[j]] == c.b[band[i]]) {
            (c.d[band[j]] ? tp : fp) += 1;
            ++j;
        }
        out.points.push_back({static_cast<double>(fp) / n_n, static_cast<double>(tp) / n_d});
        i = j;
    }
    out.fpf_lo = out.points.front().fpf;
    out.fpf_hi = out.points.back().fpf;
    return out;
}

}  // namespace rocopula
