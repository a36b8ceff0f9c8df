#pragma once

#include "rocopula/copulas.hpp"

#include <span>
#include <vector>

namespace rocopula {

enum class DependenceKind { PearsonRho, KendallTau, SpearmanRho };

struct DependenceMeasure {
    DependenceKind kind;
    double value;  // in [-1, 1]
};

/// Debye function D1(θ) = (1/θ)∫₀^θ t/(eᵗ−1) dt, with D1(0) = 1.
/// Bernoulli series for θ <= 2, exponential tail sum above.
double debye1(double theta);

/// Kendall's tau implied by an Archimedean parameter:
/// Gumbel 1 − 1/θ, Clayton θ/(θ+2), Frank 1 + (4/θ)(D1(θ) − 1).
/// Gaussian is accepted too, with θ read as rho: (2/π) asin ρ.
double tau_from_theta(CopulaFamily family, double theta);

/// Inverse of tau_from_theta for tau in (0,1). Frank is solved by bisection on
/// θ in [1e-9, 100] followed by Newton polishing; tau above τ(100) ≈ 0.9607
/// is rejected.
double theta_from_tau(CopulaFamily family, double tau);

/// Kendall's tau of a copula (0 for Independence).
double kendall_tau(const Copula& c);

/// Builds the copula of `family` whose Kendall tau equals `tau`.
/// tau == 0 gives the independence copula.
Copula copula_from_tau(CopulaFamily family, double tau);

/// Spearman's rho as 12∫∫C − 3, by 128×128 tensor Gauss-Legendre.
double spearman_from_copula(const Copula& c);

/// Sample product-moment correlation.
double sample_pearson(std::span<const double> x, std::span<const double> y);
/// Tie-adjusted Kendall tau-b, O(n log n) merge count.
double sample_kendall(std::span<const double> x, std::span<const double> y);
/// Pearson correlation of mid-ranks.
double sample_spearman(std::span<const double> x, std::span<const double> y);

/// Mid-ranks (1-based, ties share the average rank).
std::vector<double> midranks(std::span<const double> v);

}  // namespace rocopula
