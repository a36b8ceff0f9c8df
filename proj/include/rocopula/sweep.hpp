#pragma once

#include "rocopula/jointroc.hpp"

#include <string>
#include <vector>

namespace rocopula {

struct SweepRow {
    double value;
    double pauc;
};

struct SweepResult {
    std::string parameter;
    RocKind kind = RocKind::RuleOut;
    double fpf_lo = 0.0;
    double fpf_hi = 1.0;
    std::vector<SweepRow> rows;  // ascending parameter value
    bool expect_increasing = true;
    /// Smallest step in the expected direction (negative when violated).
    double min_step = 0.0;
    bool pass = false;
};

/// pAUC range used for sweeps: rule-out integrates from FPF_A(T_ri) (or 0)
/// to FPF_A(T_ro); rule-in from FPF_A(T_ri) to 1.
std::pair<double, double> sweep_fpf_range(const JointModel& model, RocKind kind);

/// Varies one class copula (see io::apply_sweep_value for parameter names)
/// and checks that pAUC moves strictly in the direction predicted for
/// `kind`: rule-out pAUC rises with diseased-class dependence and falls with
/// non-diseased-class dependence; rule-in is the mirror image.
SweepResult theorem_sweep(const JointModel& base, RocKind kind, const std::string& parameter,
                          std::vector<double> values, double margin = 1e-4,
                          std::size_t n_points = kDefaultCurvePoints, unsigned threads = 1);

}  // namespace rocopula
