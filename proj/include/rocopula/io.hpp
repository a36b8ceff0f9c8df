#pragma once

#include "rocopula/analysis.hpp"
#include "rocopula/fitting.hpp"
#include "rocopula/jointroc.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rocopula::io {

using nlohmann::json;

/// Parameter varied by a theorem sweep. rho_* requires Gaussian copulas,
/// tau_* recalibrates the class copula's own family, theta_* sets its
/// parameter directly.
struct Sweep {
    std::string parameter;
    std::vector<double> values;

    bool operator==(const Sweep&) const = default;
};

struct ModelSpec {
    JointModel model;  // thresholds unset; see rule_out/rule_in
    std::optional<ThresholdSpec> rule_out;
    std::optional<ThresholdSpec> rule_in;
    std::optional<Sweep> sweep;

    /// Model with the thresholds resolved to Test-A scores.
    JointModel resolved() const;
};

json to_json(const Marginal& m);
Marginal marginal_from_json(const json& j);
json to_json(const Copula& c);
Copula copula_from_json(const json& j);

/// Model spec form with thresholds written as scores.
json to_json(const JointModel& model);
json to_json(const ModelSpec& spec);
ModelSpec model_spec_from_json(const json& j);
ModelSpec load_model_spec(const std::filesystem::path& path);

/// Copy of `model` with the class copula for `parameter` replaced.
JointModel apply_sweep_value(const JointModel& model, std::string_view parameter, double value);

json to_json(const RocCurve& c);
RocCurve curve_from_json(const json& j);
void write_curve_csv(std::ostream& os, const RocCurve& c);

ScoreDataset read_dataset_csv(std::istream& is);
ScoreDataset read_dataset_csv(const std::filesystem::path& path);
void write_dataset_csv(std::ostream& os, const ScoreDataset& data);

json to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const json& j);
/// Flat `metric,value` table.
void write_metrics_csv(std::ostream& os, const AnalysisReport& r);

/// 64-bit FNV-1a as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);
std::string read_file(const std::filesystem::path& path);
/// %.17g
std::string format_double(double x);

}  // namespace rocopula::io
