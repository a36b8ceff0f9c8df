#pragma once

#include "rocopula/copulas.hpp"
#include "rocopula/fitting.hpp"
#include "rocopula/jointroc.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rocopula {

/// A Test-A threshold given either as a raw score or as a target Test-A FPF.
struct ThresholdSpec {
    enum class Kind { Score, Fpf };
    Kind kind = Kind::Fpf;
    double value = 0.5;

    static ThresholdSpec score(double s) { return {Kind::Score, s}; }
    static ThresholdSpec fpf(double f) { return {Kind::Fpf, f}; }

    bool operator==(const ThresholdSpec&) const = default;
};

enum class GaussianCalibration { Kendall, Pearson };

struct AnalysisConfig {
    /// Model families; Independence is always added as the baseline.
    std::vector<CopulaFamily> families{CopulaFamily::Gaussian, CopulaFamily::Frank,
                                       CopulaFamily::Clayton};
    std::optional<ThresholdSpec> rule_out;
    std::optional<ThresholdSpec> rule_in;
    /// Defaults to the sample prevalence.
    std::optional<double> prevalence;
    /// Test-B threshold for the single projected operating point; defaults to
    /// the threshold of B's only interior ROC point when B is binary.
    std::optional<double> b_threshold;
    /// Latent Gaussian rho from Kendall (sin(πτ/2)) or the raw Pearson value.
    GaussianCalibration gaussian_calibration = GaussianCalibration::Kendall;
    double deming_delta = 1.0;
    std::size_t n_points = kDefaultCurvePoints;
    unsigned threads = 1;
    std::uint64_t seed = 0;
    std::string input_hash;
};

struct CorrelationSummary {
    std::size_t n = 0;
    std::optional<double> pearson;
    std::optional<double> kendall;
    std::optional<double> spearman;

    bool operator==(const CorrelationSummary&) const = default;
};

struct ModelCurveSet {
    CopulaFamily family = CopulaFamily::Independence;
    Copula copula_n = Copula::independence();
    Copula copula_d = Copula::independence();
    std::string calibration_note;
    std::vector<RocCurve> curves;  // one per scenario, same order as AnalysisReport::scenarios
    std::vector<double> pauc;      // over each curve's fpf range

    bool operator==(const ModelCurveSet&) const = default;
};

struct ProjectedScenario {
    RocKind kind = RocKind::RuleOut;
    RocCurve curve;
    double pauc = 0.0;
    std::optional<OperatingPoint> point;  // at the analysis b_threshold
    // Per family (same order as AnalysisReport::families); empty when the
    // point's FPF falls outside that model curve's range.
    std::vector<std::optional<double>> model_tpf_at_point;

    bool operator==(const ProjectedScenario&) const = default;
};

struct WorkloadRow {
    double prevalence = 0.0;
    double fpf_a = 0.0;
    double tpf_a_empirical = 0.0;
    double tpf_a_model = 0.0;
    double ruled_out_empirical = 0.0;
    double ruled_out_model = 0.0;

    bool operator==(const WorkloadRow&) const = default;
};

struct Provenance {
    std::string tool_version;
    std::string input_hash;
    std::uint64_t seed = 0;
    std::size_t n_nondiseased = 0;
    std::size_t n_diseased = 0;

    bool operator==(const Provenance&) const = default;
};

struct AnalysisReport {
    Provenance provenance;

    RocCurve empirical_a;
    RocCurve empirical_b;
    double auc_empirical_a = 0.0;
    double auc_empirical_b = 0.0;
    BinormalFit fit_a;
    BinormalFit fit_b;
    RocCurve fitted_a;
    RocCurve fitted_b;

    CorrelationSummary correlation_n;
    CorrelationSummary correlation_d;

    std::optional<double> t_a_ro_score;
    std::optional<double> t_a_ri_score;
    std::optional<double> b_threshold;
    /// Base model: fitted binormal marginals and latent Test-A thresholds,
    /// with independence copulas (each family set carries its own copulas).
    JointModel model;

    std::vector<RocKind> scenarios;
    std::vector<ModelCurveSet> families;
    std::vector<ProjectedScenario> projected;
    std::optional<WorkloadRow> workload;

    bool operator==(const AnalysisReport&) const = default;
};

/// Empirical and fitted single-test curves, class-conditional correlations,
/// calibrated copulas per family, model and projected joint curves, and the
/// pAUC / workload tables.
AnalysisReport analyze(const ScoreDataset& data, const AnalysisConfig& config);

/// Raw Test-A score whose empirical non-diseased FPF is closest to `fpf`,
/// placed midway between adjacent distinct scores.
double empirical_threshold_for_fpf(const ScoreDataset& data, double fpf);

}  // namespace rocopula
