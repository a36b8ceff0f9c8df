#pragma once

#include "rocopula/jointroc.hpp"
#include "rocopula/marginals.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rocopula {

struct ScoreRecord {
    std::string case_id;
    bool diseased = false;
    std::optional<double> score_a;
    std::optional<double> score_b;

    bool operator==(const ScoreRecord&) const = default;
};

struct ScoreDataset {
    std::vector<ScoreRecord> records;

    /// Throws DataError on duplicate case ids or non-finite scores.
    void validate() const;
    std::size_t count(bool diseased) const;

    bool operator==(const ScoreDataset&) const = default;
};

enum class TestSide { A, B };

enum class FitSource { DemingFit, PointPlusRatio };

std::string_view to_string(FitSource source);
FitSource fit_source_from_string(std::string_view name);

/// Binormal ROC: non-diseased Normal(0,1), diseased Normal(mu, sigma²).
/// In probit space Φ⁻¹(TPF) = mu/sigma + Φ⁻¹(FPF)/sigma.
struct BinormalFit {
    double mu = 0.0;
    double sigma = 1.0;
    FitSource source = FitSource::DemingFit;
    /// Set when the points sit on the chance line and sigma is not identified.
    bool degenerate = false;

    double auc() const;
    Marginal nondiseased() const { return Marginal::normal(0.0, 1.0); }
    Marginal diseased() const { return Marginal::normal(mu, sigma); }

    bool operator==(const BinormalFit&) const = default;
};

/// Step ROC of one score column. Positivity is score > threshold, thresholds
/// sit between distinct observed values, so tied scores move together.
RocCurve empirical_roc(const ScoreDataset& data, TestSide which);

/// Errors-in-variables line through probit-transformed interior points.
/// `delta` is the ratio of error variances (y over x); 1 is orthogonal regression.
BinormalFit fit_binormal_deming(std::span<const OperatingPoint> points, double delta = 1.0);

/// Binormal curve through `op` whose mean-to-sigma ratio mu/(sigma−1) equals
/// `ratio`. The constraint is linear in sigma, so the root is unique; it must
/// fall in (0.05, 20) or FitError is thrown.
BinormalFit fit_from_point_and_ratio(OperatingPoint op, double ratio);

/// mu/(sigma − 1); undefined (DomainError) when |sigma − 1| <= 1e-9.
double mean_to_sigma_ratio(const BinormalFit& fit);

/// Decision rule applied to the data for one Test-B threshold:
/// positive iff A > t_ri, or A > t_ro and B > t_b. Absent thresholds mean
/// t_ro = −inf (no rule-out) and t_ri = +inf (no rule-in).
OperatingPoint projected_point(const ScoreDataset& data, std::optional<double> t_a_ro,
                               std::optional<double> t_a_ri, double t_b);

/// projected_point swept over every Test-B threshold (midpoints between
/// distinct B scores plus ±inf). Kind is Empirical; fpf range is the span of
/// the points.
RocCurve project_operating_points(const ScoreDataset& data, std::optional<double> t_a_ro,
                                  std::optional<double> t_a_ri);

/// Midpoints between consecutive distinct values, plus one below the minimum
/// and one above the maximum.
std::vector<double> midpoint_thresholds(std::vector<double> values);

/// Scores of one test split by class; throws DataError on missing scores.
struct ClassScores {
    std::vector<double> nondiseased;
    std::vector<double> diseased;
};
ClassScores class_scores(const ScoreDataset& data, TestSide which);

}  // namespace rocopula
