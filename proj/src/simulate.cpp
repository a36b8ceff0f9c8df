#include "rocopula/simulate.hpp"

#include "rocopula/error.hpp"
#include "rocopula/numeric.hpp"
#include "rocopula/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace rocopula {

double RandomStream::exponential()
{
    return -std::log(uniform());
}

double RandomStream::standard_normal()
{
    return standard_normal_quantile(uniform());
}

double RandomStream::gamma(double shape)
{
    if (!(shape > 0.0)) {
        throw DomainError("gamma: shape must be positive");
    }
    if (shape < 1.0) {
        const double g = gamma(shape + 1.0);
        return g * std::pow(uniform(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = 0.0;
        double v = 0.0;
        do {
            x = standard_normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x) {
            return d * v;
        }
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
            return d * v;
        }
    }
}

double RandomStream::positive_stable(double alpha)
{
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw DomainError("positive_stable: alpha must lie in (0,1]");
    }
    if (alpha == 1.0) {
        return 1.0;
    }
    const double theta = std::numbers::pi * uniform();
    const double w = exponential();
    const double a = std::sin(alpha * theta) / std::pow(std::sin(theta), 1.0 / alpha);
    const double b = std::pow(std::sin((1.0 - alpha) * theta) / w, (1.0 - alpha) / alpha);
    return a * b;
}

namespace {

UniformPair draw_pair(const Copula& c, RandomStream& rng)
{
    switch (c.family()) {
    case CopulaFamily::Independence:
        return {rng.uniform(), rng.uniform()};
    case CopulaFamily::Gaussian: {
        const double rho = c.param();
        const double u = rng.uniform();
        const double z1 = standard_normal_quantile(u);
        const double z2 = rho * z1 + std::sqrt(1.0 - rho * rho) * rng.standard_normal();
        return {u, standard_normal_cdf(z2)};
    }
    case CopulaFamily::Clayton: {
        const double theta = c.param();
        const double v = rng.gamma(1.0 / theta);
        const double e1 = rng.exponential();
        const double e2 = rng.exponential();
        return {std::pow(1.0 + e1 / v, -1.0 / theta), std::pow(1.0 + e2 / v, -1.0 / theta)};
    }
    case CopulaFamily::Gumbel: {
        const double theta = c.param();
        const double alpha = 1.0 / theta;
        const double s = rng.positive_stable(alpha);
        const double e1 = rng.exponential();
        const double e2 = rng.exponential();
        return {std::exp(-std::pow(e1 / s, alpha)), std::exp(-std::pow(e2 / s, alpha))};
    }
    case CopulaFamily::Frank: {
        const double theta = c.param();
        const double u = rng.uniform();
        const double w = rng.uniform();
        if (c.is_independent()) {
            return {u, w};
        }
        // Closed-form root of ∂C/∂u (u, v) = w.
        const double v =
            -std::log1p(w * std::expm1(-theta) / (w + (1.0 - w) * std::exp(-theta * u))) / theta;
        return {u, v};
    }
    }
    return {0.5, 0.5};
}

double open_unit(double u)
{
    constexpr double lo = 1e-300;
    constexpr double hi = 1.0 - 0x1.0p-53;
    return std::clamp(u, lo, hi);
}

}  // namespace

std::vector<UniformPair> sample_uniform_pairs(const Copula& copula, std::size_t n, std::uint64_t seed,
                                              std::uint64_t stream, unsigned threads)
{
    std::vector<UniformPair> out(n);
    const std::size_t blocks = (n + kSampleBlock - 1) / kSampleBlock;
    numeric::parallel_for(blocks, threads, [&](std::size_t b) {
        RandomStream rng = RandomStream::substream(seed, stream, b);
        const std::size_t end = std::min(n, (b + 1) * kSampleBlock);
        for (std::size_t i = b * kSampleBlock; i < end; ++i) {
            out[i] = draw_pair(copula, rng);
        }
    });
    return out;
}

std::vector<std::pair<double, double>> sample_pairs(const Copula& copula, const Marginal& marg_x,
                                                    const Marginal& marg_y, std::size_t n,
                                                    std::uint64_t seed, unsigned threads)
{
    if (n == 0) {
        throw DomainError("sample_pairs: n must be >= 1");
    }
    const auto uv = sample_uniform_pairs(copula, n, seed, 0, threads);
    std::vector<std::pair<double, double>> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = {marg_x.quantile(open_unit(uv[i].u)), marg_y.quantile(open_unit(uv[i].v))};
    }
    return out;
}

Estimate oracle_survival(const Copula& copula, double u, double v, std::size_t n,
                         std::uint64_t seed, unsigned threads)
{
    if (!(u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0)) {
        throw DomainError("oracle_survival: u, v must lie in [0,1]");
    }
    if (n == 0) {
        throw DomainError("oracle_survival: n must be >= 1");
    }
    const auto uv = sample_uniform_pairs(copula, n, seed, 0, threads);
    const auto hits = std::count_if(uv.begin(), uv.end(), [&](const UniformPair& p) {
        return p.u > u && p.v > v;
    });
    const double p = static_cast<double>(hits) / static_cast<double>(n);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n))};
}

namespace {

constexpr std::uint64_t kStreamNondiseased = 1;
constexpr std::uint64_t kStreamDiseased = 2;
constexpr std::uint64_t kStreamLabels = 3;

std::string case_id(std::size_t i)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "case%06zu", i + 1);
    return buf;
}

}  // namespace

ScoreDataset synth_dataset(const SimulationConfig& config, unsigned threads)
{
    const JointModel& m = config.model;
    if (config.n_per_class == 0) {
        throw DomainError("synth_dataset: n must be >= 1");
    }
    std::size_t n_n = config.n_per_class;
    std::size_t n_d = config.n_per_class;
    std::vector<bool> labels;
    if (config.prevalence) {
        const double p = *config.prevalence;
        if (!(p >= 0.0 && p <= 1.0)) {
            throw DomainError("synth_dataset: prevalence must lie in [0,1]");
        }
        RandomStream rng = RandomStream::substream(config.seed, kStreamLabels, 0);
        labels.resize(config.n_per_class);
        n_d = 0;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            labels[i] = rng.uniform() < p;
            n_d += labels[i] ? 1 : 0;
        }
        n_n = labels.size() - n_d;
    } else {
        labels.assign(n_n, false);
        labels.resize(n_n + n_d, true);
    }

    // Column order (B, A) matches the copula argument order C(F_B, F_A).
    const auto uv_n = sample_uniform_pairs(m.copula_n, n_n, config.seed, kStreamNondiseased, threads);
    const auto uv_d = sample_uniform_pairs(m.copula_d, n_d, config.seed, kStreamDiseased, threads);

    ScoreDataset data;
    data.records.reserve(labels.size());
    std::size_t in = 0;
    std::size_t id = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        ScoreRecord r;
        r.case_id = case_id(i);
        r.diseased = labels[i];
        if (labels[i]) {
            const auto& p = uv_d[id++];
            r.score_b = m.b_d.quantile(open_unit(p.u));
            r.score_a = m.a_d.quantile(open_unit(p.v));
        } else {
            const auto& p = uv_n[in++];
            r.score_b = m.b_n.quantile(open_unit(p.u));
            r.score_a = m.a_n.quantile(open_unit(p.v));
        }
        data.records.push_back(std::move(r));
    }
    return data;
}

}  // namespace rocopula
