#include "rocopula/sweep.hpp"

#include "rocopula/error.hpp"
#include "rocopula/io.hpp"

#include <algorithm>
#include <limits>

namespace rocopula {

std::pair<double, double> sweep_fpf_range(const JointModel& model, RocKind kind)
{
    switch (kind) {
    case RocKind::RuleOut:
        if (!model.t_a_ro) {
            throw DomainError("rule-out sweep needs a rule-out threshold");
        }
        return {model.t_a_ri ? model.fpf_a(*model.t_a_ri) : 0.0, model.fpf_a(*model.t_a_ro)};
    case RocKind::RuleIn:
        if (!model.t_a_ri) {
            throw DomainError("rule-in sweep needs a rule-in threshold");
        }
        return {model.fpf_a(*model.t_a_ri), 1.0};
    default:
        throw DomainError("theorem sweeps apply to rule-out or rule-in curves");
    }
}

SweepResult theorem_sweep(const JointModel& base, RocKind kind, const std::string& parameter,
                          std::vector<double> values, double margin, std::size_t n_points, unsigned threads)
{
    if (values.size() < 2) {
        throw DomainError("a sweep needs at least two parameter values");
    }
    std::sort(values.begin(), values.end());
    SweepResult out;
    out.parameter = parameter;
    out.kind = kind;
    std::tie(out.fpf_lo, out.fpf_hi) = sweep_fpf_range(base, kind);
    const bool diseased = parameter.ends_with("_d");
    out.expect_increasing = diseased == (kind == RocKind::RuleOut);

    for (double v : values) {
        const JointModel m = io::apply_sweep_value(base, parameter, v);
        const RocCurve c = curve(m, kind, n_points, threads);
        out.rows.push_back({v, pauc(c, out.fpf_lo, out.fpf_hi)});
    }
    out.min_step = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < out.rows.size(); ++i) {
        const double step = out.rows[i].pauc - out.rows[i - 1].pauc;
        out.min_step = std::min(out.min_step, out.expect_increasing ? step : -step);
    }
    out.pass = out.min_step > margin;
    return out;
}

}  // namespace rocopula
