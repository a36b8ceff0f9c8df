"""Joint ROC curves for two-test reading under copula dependence."""

from ._core import (
    Copula,
    CopulaFamily,
    DataError,
    JointModel,
    Marginal,
    NumericError,
    analyze_csv,
    auc,
    fit_binormal_deming,
    fit_from_point_and_ratio,
    pauc,
    run_cli,
    simulate_csv,
    tau_from_theta,
    theta_from_tau,
    workload_ruled_out,
)

__version__ = "0.1.0"

__all__ = [
    "Copula",
    "CopulaFamily",
    "DataError",
    "JointModel",
    "Marginal",
    "NumericError",
    "analyze_csv",
    "auc",
    "fit_binormal_deming",
    "fit_from_point_and_ratio",
    "pauc",
    "run_cli",
    "simulate_csv",
    "tau_from_theta",
    "theta_from_tau",
    "workload_ruled_out",
]
