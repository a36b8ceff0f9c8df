#include "rocopula/dependence.hpp"

#include "rocopula/error.hpp"
#include "rocopula/numeric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

namespace rocopula {

namespace {

// B_2k for k = 1..15.
constexpr std::array<double, 15> kBernoulliEven = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
};

constexpr double kSeriesCutoff = 2.0;
constexpr double kFrankThetaLo = 1e-9;
constexpr double kFrankThetaHi = 100.0;

// D1(θ) − 1 + θ/4 from the Bernoulli series; valid for 0 <= θ <= 2.
double debye1_series_tail(double theta)
{
    const double t2 = theta * theta;
    double power = 1.0;      // θ^{2k}
    double factorial = 1.0;  // (2k)!
    double sum = 0.0;
    for (std::size_t k = 1; k <= kBernoulliEven.size(); ++k) {
        power *= t2;
        factorial *= static_cast<double>((2 * k - 1) * (2 * k));
        sum += kBernoulliEven[k - 1] * power / ((2.0 * k + 1.0) * factorial);
    }
    return sum;
}

// ∫₀^θ t/(eᵗ−1) dt for θ > 2.
double debye_integral_large(double theta)
{
    double tail = 0.0;
    for (int k = 1; k < 1000; ++k) {
        const double kk = static_cast<double>(k);
        const double term = std::exp(-kk * theta) * (theta / kk + 1.0 / (kk * kk));
        tail += term;
        if (term < 1e-18 * tail) {
            break;
        }
    }
    return std::numbers::pi * std::numbers::pi / 6.0 - tail;
}

double frank_tau_positive(double theta)
{
    if (theta <= kSeriesCutoff) {
        return 4.0 * debye1_series_tail(theta) / theta;
    }
    return 1.0 + 4.0 / theta * (debye1(theta) - 1.0);
}

double frank_dtau(double theta)
{
    // d/dθ [1 + 4/θ (D1 − 1)] = 4/(θ(eᵗ−1)) − 8 D1/θ² + 4/θ²
    return 4.0 / (theta * std::expm1(theta)) - 8.0 * debye1(theta) / (theta * theta) +
           4.0 / (theta * theta);
}

}  // namespace

double debye1(double theta)
{
    if (std::isnan(theta) || theta < 0.0) {
        throw DomainError("debye1: theta must be >= 0");
    }
    if (theta == 0.0) {
        return 1.0;
    }
    if (theta <= kSeriesCutoff) {
        return 1.0 - theta / 4.0 + debye1_series_tail(theta);
    }
    return debye_integral_large(theta) / theta;
}

double tau_from_theta(CopulaFamily family, double theta)
{
    switch (family) {
    case CopulaFamily::Independence:
        return 0.0;
    case CopulaFamily::Gaussian:
        if (!(theta > -1.0 && theta < 1.0)) {
            throw DomainError("tau_from_theta: gaussian rho must lie in (-1,1)");
        }
        return 2.0 / std::numbers::pi * std::asin(theta);
    case CopulaFamily::Gumbel:
        if (!(theta >= 1.0) || !std::isfinite(theta)) {
            throw DomainError("tau_from_theta: gumbel theta must be >= 1");
        }
        return 1.0 - 1.0 / theta;
    case CopulaFamily::Clayton:
        if (!(theta > 0.0) || !std::isfinite(theta)) {
            throw DomainError("tau_from_theta: clayton theta must be > 0");
        }
        return theta / (theta + 2.0);
    case CopulaFamily::Frank:
        if (!std::isfinite(theta)) {
            throw DomainError("tau_from_theta: frank theta must be finite");
        }
        if (theta == 0.0) {
            return 0.0;
        }
        return theta > 0.0 ? frank_tau_positive(theta) : -frank_tau_positive(-theta);
    }
    throw DomainError("tau_from_theta: unknown family");
}

double theta_from_tau(CopulaFamily family, double tau)
{
    if (!(tau > 0.0 && tau < 1.0)) {
        throw DomainError("theta_from_tau: tau must lie in (0,1), got " + std::to_string(tau));
    }
    switch (family) {
    case CopulaFamily::Independence:
        throw DomainError("theta_from_tau: independence copula has no parameter");
    case CopulaFamily::Gaussian:
        return std::sin(std::numbers::pi * tau / 2.0);
    case CopulaFamily::Gumbel:
        return 1.0 / (1.0 - tau);
    case CopulaFamily::Clayton:
        return 2.0 * tau / (1.0 - tau);
    case CopulaFamily::Frank: {
        if (tau >= frank_tau_positive(kFrankThetaHi)) {
            throw DomainError("theta_from_tau: frank tau " + std::to_string(tau) +
                              " exceeds supported range (theta <= 100)");
        }
        if (tau <= frank_tau_positive(kFrankThetaLo)) {
            return 9.0 * tau;  // τ ≈ θ/9 near the origin
        }
        auto f = [tau](double th) { return frank_tau_positive(th) - tau; };
        double theta = numeric::bisect(f, kFrankThetaLo, kFrankThetaHi, 1e-10);
        for (int i = 0; i < 4; ++i) {
            const double step = f(theta) / frank_dtau(theta);
            const double next = theta - step;
            if (!(next > kFrankThetaLo && next < kFrankThetaHi)) {
                break;
            }
            theta = next;
            if (std::abs(step) < 1e-15 * theta) {
                break;
            }
        }
        return theta;
    }
    }
    throw DomainError("theta_from_tau: unknown family");
}

double kendall_tau(const Copula& c)
{
    return tau_from_theta(c.family(), c.param());
}

Copula copula_from_tau(CopulaFamily family, double tau)
{
    if (family == CopulaFamily::Independence || tau == 0.0) {
        return Copula::independence();
    }
    if (family == CopulaFamily::Frank && tau < 0.0) {
        return Copula::frank(-theta_from_tau(family, -tau));
    }
    return Copula::make(family, theta_from_tau(family, tau));
}

double spearman_from_copula(const Copula& c)
{
    static const numeric::GaussLegendreRule rule = numeric::gauss_legendre(128);
    const std::size_t n = rule.nodes.size();
    double integral = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double u = 0.5 * (rule.nodes[i] + 1.0);
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double v = 0.5 * (rule.nodes[j] + 1.0);
            row += rule.weights[j] * c.cdf(u, v);
        }
        integral += rule.weights[i] * row;
    }
    integral *= 0.25;
    return std::clamp(12.0 * integral - 3.0, -1.0, 1.0);
}

namespace {

void check_pairs(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size()) {
        throw DomainError("correlation: x and y differ in length");
    }
    if (x.size() < 2) {
        throw DomainError("correlation: at least 2 pairs required");
    }
}

}  // namespace

double sample_pearson(std::span<const double> x, std::span<const double> y)
{
    check_pairs(x, y);
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0;
    double syy = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw UndefinedCorrelationError("correlation undefined: zero variance in a coordinate");
    }
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<double> midranks(std::span<const double> v)
{
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> ranks(v.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i + 1;
        while (j < order.size() && v[order[j]] == v[order[i]]) {
            ++j;
        }
        const double r = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j));
        for (std::size_t k = i; k < j; ++k) {
            ranks[order[k]] = r;
        }
        i = j;
    }
    return ranks;
}

double sample_spearman(std::span<const double> x, std::span<const double> y)
{
    check_pairs(x, y);
    const auto rx = midranks(x);
    const auto ry = midranks(y);
    return sample_pearson(rx, ry);
}

namespace {

std::int64_t tied_pairs_sorted(const std::vector<double>& sorted)
{
    std::int64_t total = 0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i + 1;
        while (j < sorted.size() && sorted[j] == sorted[i]) {
            ++j;
        }
        const auto t = static_cast<std::int64_t>(j - i);
        total += t * (t - 1) / 2;
        i = j;
    }
    return total;
}

// Sorts v[lo, hi) ascending, returning the number of inversions (strict).
std::int64_t merge_count(std::vector<double>& v, std::vector<double>& buf, std::size_t lo,
                         std::size_t hi)
{
    if (hi - lo < 2) {
        return 0;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    std::int64_t swaps = merge_count(v, buf, lo, mid) + merge_count(v, buf, mid, hi);
    std::size_t i = lo;
    std::size_t j = mid;
    std::size_t k = lo;
    while (i < mid && j < hi) {
        if (v[j] < v[i]) {
            swaps += static_cast<std::int64_t>(mid - i);
            buf[k++] = v[j++];
        } else {
            buf[k++] = v[i++];
        }
    }
    while (i < mid) {
        buf[k++] = v[i++];
    }
    while (j < hi) {
        buf[k++] = v[j++];
    }
    std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo), buf.begin() + static_cast<std::ptrdiff_t>(hi),
              v.begin() + static_cast<std::ptrdiff_t>(lo));
    return swaps;
}

}  // namespace

double sample_kendall(std::span<const double> x, std::span<const double> y)
{
    check_pairs(x, y);
    const std::size_t n = x.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return x[a] < x[b] || (x[a] == x[b] && y[a] < y[b]);
    });

    std::vector<double> xs(n);
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = x[order[i]];
        ys[i] = y[order[i]];
    }

    const auto n0 = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n - 1) / 2;
    const std::int64_t ties_x = tied_pairs_sorted(xs);
    std::int64_t ties_xy = 0;
    {
        std::size_t i = 0;
        while (i < n) {
            std::size_t j = i + 1;
            while (j < n && xs[j] == xs[i] && ys[j] == ys[i]) {
                ++j;
            }
            const auto t = static_cast<std::int64_t>(j - i);
            ties_xy += t * (t - 1) / 2;
            i = j;
        }
    }
    std::vector<double> buf(n);
    const std::int64_t swaps = merge_count(ys, buf, 0, n);
    const std::int64_t ties_y = tied_pairs_sorted(ys);

    const double denom =
        std::sqrt(static_cast<double>(n0 - ties_x)) * std::sqrt(static_cast<double>(n0 - ties_y));
    if (denom == 0.0) {
        throw UndefinedCorrelationError("kendall tau undefined: all values tied in a coordinate");
    }
    const double numer = static_cast<double>(n0 - ties_x - ties_y + ties_xy - 2 * swaps);
    return std::clamp(numer / denom, -1.0, 1.0);
}

}  // namespace rocopula
