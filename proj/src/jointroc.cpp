#include "rocopula/jointroc.hpp"

#include "rocopula/error.hpp"
#include "rocopula/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace rocopula {

namespace {

constexpr double kRangeSlack = 1e-12;

double require_threshold(const std::optional<double>& t, const char* what)
{
    if (!t) {
        throw DomainError(std::string("model has no ") + what + " threshold");
    }
    return *t;
}

void check_probability(double p, const char* name)
{
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError(std::string(name) + " must lie in [0,1]");
    }
}

double mixture_quantile(const Marginal& m1, const Marginal& m2, double p)
{
    const double q1 = m1.quantile(p);
    const double q2 = m2.quantile(p);
    if (q1 == q2) {
        return q1;
    }
    auto f = [&](double x) { return 0.5 * (m1.cdf(x) + m2.cdf(x)) - p; };
    return numeric::bisect(f, std::min(q1, q2), std::max(q1, q2), 1e-14);
}

}  // namespace

void JointModel::validate() const
{
    if (t_a_ro && std::isnan(*t_a_ro)) {
        throw DomainError("rule-out threshold is NaN");
    }
    if (t_a_ri && std::isnan(*t_a_ri)) {
        throw DomainError("rule-in threshold is NaN");
    }
    if (t_a_ro && t_a_ri && !(*t_a_ro < *t_a_ri)) {
        throw DomainError("rule-out threshold must be below the rule-in threshold");
    }
}

double threshold_for_fpf(const Marginal& a_n, double fpf)
{
    if (!(fpf > 0.0 && fpf < 1.0)) {
        throw DomainError("target FPF must lie in (0,1)");
    }
    return a_n.quantile(1.0 - fpf);
}

std::string_view to_string(RocKind kind)
{
    switch (kind) {
    case RocKind::Univariate:
        return "univariate";
    case RocKind::RuleOut:
        return "ruleout";
    case RocKind::RuleIn:
        return "rulein";
    case RocKind::Combined:
        return "combined";
    case RocKind::Empirical:
        return "empirical";
    }
    return "unknown";
}

RocKind roc_kind_from_string(std::string_view name)
{
    for (auto k : {RocKind::Univariate, RocKind::RuleOut, RocKind::RuleIn, RocKind::Combined,
                   RocKind::Empirical}) {
        if (name == to_string(k)) {
            return k;
        }
    }
    throw DomainError("unknown curve kind '" + std::string(name) + "'");
}

RocCurve univariate_curve(const Marginal& n, const Marginal& d, std::size_t n_points)
{
    if (n_points < 2) {
        throw DomainError("univariate_curve: n_points must be >= 2");
    }
    RocCurve out;
    out.kind = RocKind::Univariate;
    out.points.reserve(n_points + 2);
    out.points.push_back({0.0, 0.0});
    for (std::size_t i = n_points; i >= 1; --i) {
        const double p = static_cast<double>(i) / static_cast<double>(n_points + 1);
        const double t = mixture_quantile(n, d, p);
        out.points.push_back({n.survival(t), d.survival(t)});
    }
    out.points.push_back({1.0, 1.0});
    return out;
}

OperatingPoint ruleout_point(const JointModel& model, double x, double t_a)
{
    return {model.copula_n.joint_survival(model.b_n.cdf(x), model.a_n.cdf(t_a)),
            model.copula_d.joint_survival(model.b_d.cdf(x), model.a_d.cdf(t_a))};
}

OperatingPoint ruleout_point(const JointModel& model, double x)
{
    return ruleout_point(model, x, require_threshold(model.t_a_ro, "rule-out"));
}

OperatingPoint rulein_point(const JointModel& model, double x, double t_a)
{
    const OperatingPoint both = ruleout_point(model, x, t_a);
    return {model.b_n.survival(x) + model.a_n.survival(t_a) - both.fpf,
            model.b_d.survival(x) + model.a_d.survival(t_a) - both.tpf};
}

OperatingPoint rulein_point(const JointModel& model, double x)
{
    return rulein_point(model, x, require_threshold(model.t_a_ri, "rule-in"));
}

OperatingPoint combined_point(const JointModel& model, double x)
{
    const double t_ro = require_threshold(model.t_a_ro, "rule-out");
    const double t_ri = require_threshold(model.t_a_ri, "rule-in");
    model.validate();
    // P(A > t_ri) + P(A > t_ro, B > x) − P(A > t_ri, B > x)
    const OperatingPoint low = ruleout_point(model, x, t_ro);
    const OperatingPoint high = ruleout_point(model, x, t_ri);
    return {numeric::clamp_probability(model.a_n.survival(t_ri) + low.fpf - high.fpf),
            numeric::clamp_probability(model.a_d.survival(t_ri) + low.tpf - high.tpf)};
}

std::vector<double> test_b_grid(const JointModel& model, std::size_t n_points)
{
    if (n_points < 2) {
        throw DomainError("curve: n_points must be >= 2");
    }
    std::vector<double> xs;
    xs.reserve(n_points + 2);
    xs.push_back(-std::numeric_limits<double>::infinity());
    for (std::size_t i = 1; i <= n_points; ++i) {
        const double p = static_cast<double>(i) / static_cast<double>(n_points + 1);
        xs.push_back(mixture_quantile(model.b_n, model.b_d, p));
    }
    xs.push_back(std::numeric_limits<double>::infinity());
    return xs;
}

RocCurve curve(const JointModel& model, RocKind kind, std::size_t n_points, unsigned threads)
{
    model.validate();
    RocCurve out;
    out.kind = kind;
    out.model = model;
    switch (kind) {
    case RocKind::Univariate:
        out.fpf_lo = 0.0;
        out.fpf_hi = 1.0;
        break;
    case RocKind::RuleOut:
        out.fpf_lo = 0.0;
        out.fpf_hi = model.fpf_a(require_threshold(model.t_a_ro, "rule-out"));
        break;
    case RocKind::RuleIn:
        out.fpf_lo = model.fpf_a(require_threshold(model.t_a_ri, "rule-in"));
        out.fpf_hi = 1.0;
        break;
    case RocKind::Combined:
        out.fpf_lo = model.fpf_a(require_threshold(model.t_a_ri, "rule-in"));
        out.fpf_hi = model.fpf_a(require_threshold(model.t_a_ro, "rule-out"));
        break;
    case RocKind::Empirical:
        throw DomainError("curve: empirical curves come from data, not a model");
    }

    const std::vector<double> xs = test_b_grid(model, n_points);
    std::vector<OperatingPoint> pts(xs.size());
    numeric::parallel_for(xs.size(), threads, [&](std::size_t i) {
        const double x = xs[i];
        switch (kind) {
        case RocKind::Univariate:
            pts[i] = {model.b_n.survival(x), model.b_d.survival(x)};
            break;
        case RocKind::RuleOut:
            pts[i] = ruleout_point(model, x);
            break;
        case RocKind::RuleIn:
            pts[i] = rulein_point(model, x);
            break;
        case RocKind::Combined:
            pts[i] = combined_point(model, x);
            break;
        case RocKind::Empirical:
            break;
        }
    });
    // Thresholds ascend, so FPF descends; present in ascending FPF.
    std::reverse(pts.begin(), pts.end());
    for (auto& p : pts) {
        if (p.fpf < out.fpf_lo - 1e-9 || p.fpf > out.fpf_hi + 1e-9) {
            throw NumericError("curve: operating point escaped the kind's fpf range");
        }
        p.fpf = std::clamp(p.fpf, out.fpf_lo, out.fpf_hi);
    }
    out.points = std::move(pts);
    return out;
}

double auc(const RocCurve& c)
{
    if (c.points.size() < 2) {
        throw DomainError("auc: curve needs at least 2 points");
    }
    double area = 0.0;
    for (std::size_t i = 1; i < c.points.size(); ++i) {
        const auto& p0 = c.points[i - 1];
        const auto& p1 = c.points[i];
        area += (p1.fpf - p0.fpf) * 0.5 * (p0.tpf + p1.tpf);
    }
    return area;
}

double pauc(const RocCurve& c, double lo, double hi)
{
    if (c.points.size() < 2) {
        throw DomainError("pauc: curve needs at least 2 points");
    }
    if (!(lo <= hi)) {
        throw DomainError("pauc: fpf_lo must not exceed fpf_hi");
    }
    if (lo < c.fpf_lo - kRangeSlack || hi > c.fpf_hi + kRangeSlack) {
        throw DomainError("pauc: range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          "] lies outside the curve's fpf range [" + std::to_string(c.fpf_lo) +
                          ", " + std::to_string(c.fpf_hi) + "]");
    }
    double area = 0.0;
    for (std::size_t i = 1; i < c.points.size(); ++i) {
        const auto& p0 = c.points[i - 1];
        const auto& p1 = c.points[i];
        const double a = std::max(p0.fpf, lo);
        const double b = std::min(p1.fpf, hi);
        if (!(b > a)) {
            continue;
        }
        const double width = p1.fpf - p0.fpf;
        const double slope = (p1.tpf - p0.tpf) / width;
        const double ta = p0.tpf + slope * (a - p0.fpf);
        const double tb = p0.tpf + slope * (b - p0.fpf);
        area += (b - a) * 0.5 * (ta + tb);
    }
    return area;
}

double pauc(const RocCurve& c)
{
    return pauc(c, c.fpf_lo, c.fpf_hi);
}

double tpf_at(const RocCurve& c, double fpf)
{
    if (c.points.empty()) {
        throw DomainError("tpf_at: empty curve");
    }
    if (fpf < c.points.front().fpf - kRangeSlack || fpf > c.points.back().fpf + kRangeSlack) {
        throw DomainError("tpf_at: fpf outside the curve's span");
    }
    // Last point with p.fpf <= fpf.
    auto it = std::upper_bound(c.points.begin(), c.points.end(), fpf,
                               [](double f, const OperatingPoint& p) { return f < p.fpf; });
    if (it == c.points.begin()) {
        return c.points.front().tpf;
    }
    const auto& p0 = *(it - 1);
    if (it == c.points.end() || p0.fpf == fpf) {
        return p0.tpf;
    }
    const auto& p1 = *it;
    const double w = (fpf - p0.fpf) / (p1.fpf - p0.fpf);
    return p0.tpf + w * (p1.tpf - p0.tpf);
}

double workload_ruled_out(double prevalence, double fpf_a, double tpf_a)
{
    check_probability(prevalence, "prevalence");
    check_probability(fpf_a, "fpf");
    check_probability(tpf_a, "tpf");
    return (1.0 - prevalence) * (1.0 - fpf_a) + prevalence * (1.0 - tpf_a);
}

}  // namespace rocopula
