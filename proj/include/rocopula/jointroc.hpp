#pragma once

#include "rocopula/copulas.hpp"
#include "rocopula/marginals.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace rocopula {

/// Two tests (A fixed-threshold triage, B swept) on two disease classes.
///
/// Test A's rule-out threshold sends cases with A score at or below it to
/// "negative"; its rule-in threshold sends cases above it to "positive".
/// When both are set, t_a_ro < t_a_ri.
struct JointModel {
    Marginal a_n;
    Marginal a_d;
    Marginal b_n;
    Marginal b_d;
    Copula copula_n;
    Copula copula_d;
    std::optional<double> t_a_ro;
    std::optional<double> t_a_ri;

    /// Throws DomainError on threshold ordering violations.
    void validate() const;

    double fpf_a(double t) const { return a_n.survival(t); }
    double tpf_a(double t) const { return a_d.survival(t); }

    bool operator==(const JointModel&) const = default;
};

/// Test-A threshold with the given marginal FPF, i.e. the (1 − fpf) quantile of a_n.
double threshold_for_fpf(const Marginal& a_n, double fpf);

struct OperatingPoint {
    double fpf;
    double tpf;

    bool operator==(const OperatingPoint&) const = default;
};

enum class RocKind { Univariate, RuleOut, RuleIn, Combined, Empirical };

std::string_view to_string(RocKind kind);
RocKind roc_kind_from_string(std::string_view name);

struct RocCurve {
    RocKind kind = RocKind::Univariate;
    std::vector<OperatingPoint> points;  // ascending fpf
    double fpf_lo = 0.0;
    double fpf_hi = 1.0;
    std::optional<JointModel> model;     // generating model, when there is one

    bool operator==(const RocCurve&) const = default;
};

/// Default Test-B sweep resolution.
inline constexpr std::size_t kDefaultCurvePoints = 512;

/// Parametric ROC of one test. Sweeps the threshold over quantiles of the
/// equal mixture of the two class marginals and adds the (0,0), (1,1) ends.
RocCurve univariate_curve(const Marginal& n, const Marginal& d,
                          std::size_t n_points = kDefaultCurvePoints);

/// Believe-the-negative: positive only if A > t_a_ro and B > x.
OperatingPoint ruleout_point(const JointModel& model, double x);
/// Same, with an explicit Test-A threshold.
OperatingPoint ruleout_point(const JointModel& model, double x, double t_a);

/// Believe-the-positive: positive if A > t_a_ri or B > x.
OperatingPoint rulein_point(const JointModel& model, double x);
OperatingPoint rulein_point(const JointModel& model, double x, double t_a);

/// Rule-out below t_a_ro, rule-in above t_a_ri, Test B decides in between.
OperatingPoint combined_point(const JointModel& model, double x);

/// Test-B thresholds used by curve(): -inf, n quantiles of ½F_BN + ½F_BD, +inf.
std::vector<double> test_b_grid(const JointModel& model, std::size_t n_points);

/// Sweeps Test B over test_b_grid and stamps the kind's FPF range:
/// Univariate (Test B alone) [0,1]; RuleOut [0, FPF_A(t_ro)];
/// RuleIn [FPF_A(t_ri), 1]; Combined [FPF_A(t_ri), FPF_A(t_ro)].
RocCurve curve(const JointModel& model, RocKind kind,
               std::size_t n_points = kDefaultCurvePoints, unsigned threads = 1);

/// Trapezoidal area under the full curve.
double auc(const RocCurve& curve);

/// Trapezoidal ∫ TPF dFPF over [fpf_lo, fpf_hi], which must lie inside the
/// curve's fpf range (1e-12 slack).
double pauc(const RocCurve& curve, double fpf_lo, double fpf_hi);

/// pauc over the curve's own fpf range.
double pauc(const RocCurve& curve);

/// TPF on the curve at the given FPF, by linear interpolation. Where the curve
/// has a vertical step the upper TPF is returned.
double tpf_at(const RocCurve& curve, double fpf);

/// Fraction of all cases removed from the reading list by a rule-out test
/// operating at (fpf_a, tpf_a): (1−p)(1−FPF) + p(1−TPF).
double workload_ruled_out(double prevalence, double fpf_a, double tpf_a);

}  // namespace rocopula
