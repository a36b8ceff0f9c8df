#pragma once

#include "rocopula/copulas.hpp"
#include "rocopula/fitting.hpp"
#include "rocopula/jointroc.hpp"
#include "rocopula/marginals.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace rocopula {

/// Samples drawn per RNG block; blocks are the unit of parallel work.
inline constexpr std::size_t kSampleBlock = 4096;

struct UniformPair {
    double u;
    double v;
};

/// n draws of (U, V) from the copula. Samplers: Gaussian by correlated latent
/// normals; Clayton by gamma frailty; Gumbel by positive-stable frailty
/// (Marshall-Olkin); Frank by inverting the conditional distribution of V|U.
/// `stream` separates independent uses of one seed.
std::vector<UniformPair> sample_uniform_pairs(const Copula& copula, std::size_t n, std::uint64_t seed,
                                              std::uint64_t stream = 0, unsigned threads = 1);

/// n draws of (x, y) with the given copula and marginals.
std::vector<std::pair<double, double>> sample_pairs(const Copula& copula, const Marginal& marg_x,
                                                    const Marginal& marg_y, std::size_t n,
                                                    std::uint64_t seed, unsigned threads = 1);

struct Estimate {
    double value;
    double standard_error;  // sqrt(p(1−p)/n)
};

/// Frequency of {U > u, V > v} among n copula draws.
Estimate oracle_survival(const Copula& copula, double u, double v, std::size_t n,
                         std::uint64_t seed, unsigned threads = 1);

struct SimulationConfig {
    JointModel model;
    /// Cases per class; with `prevalence` set, the total cohort size.
    std::size_t n_per_class = 1000;
    std::uint64_t seed = 0;
    std::optional<double> prevalence;
};

/// Labelled (score_a, score_b) records drawn from the model's class-conditional
/// joint distributions. Case ids are "case000001"...; non-diseased records
/// come first unless a prevalence mix is requested.
ScoreDataset synth_dataset(const SimulationConfig& config, unsigned threads = 1);

}  // namespace rocopula
