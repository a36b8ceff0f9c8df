#include "rocopula/copulas.hpp"

#include "rocopula/error.hpp"
#include "rocopula/marginals.hpp"
#include "rocopula/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace rocopula {

namespace {

constexpr double kFrankIndependenceBand = 1e-6;

void check_unit(double u, const char* name)
{
    if (!(u >= 0.0 && u <= 1.0)) {
        throw DomainError(std::string("copula argument ") + name + " must lie in [0,1]");
    }
}

double frank_cdf(double u, double v, double theta)
{
    if (theta <= -1.0) {
        // C_{-θ}(u, v) = u − C_θ(u, 1 − v)
        return u - frank_cdf(u, 1.0 - v, -theta);
    }
    if (theta >= 1.0) {
        // e^{-θu}(1 − e^{-θv}) + e^{-θv}(1 − e^{-θ(1−v)}) over 1 − e^{-θ}; both terms are
        // positive, so nothing cancels when θ is large.
        const double num = std::exp(-theta * u) * -std::expm1(-theta * v) +
                           std::exp(-theta * v) * -std::expm1(-theta * (1.0 - v));
        return -(std::log(num) - std::log(-std::expm1(-theta))) / theta;
    }
    const double ratio = std::expm1(-theta * u) * std::expm1(-theta * v) / std::expm1(-theta);
    return -std::log1p(ratio) / theta;
}

}  // namespace

double bivariate_normal_cdf(double x, double y, double rho)
{
    if (std::isnan(x) || std::isnan(y) || std::isnan(rho)) {
        throw DomainError("bivariate_normal_cdf: NaN argument");
    }
    if (!(std::abs(rho) < 1.0)) {
        throw DomainError("bivariate_normal_cdf: |rho| must be < 1");
    }
    if (x == -INFINITY || y == -INFINITY) {
        return 0.0;
    }
    if (x == INFINITY) {
        return standard_normal_cdf(y);
    }
    if (y == INFINITY) {
        return standard_normal_cdf(x);
    }
    const double base = standard_normal_cdf(x) * standard_normal_cdf(y);
    if (rho == 0.0) {
        return base;
    }
    if (rho < 0.0) {
        return numeric::clamp_probability(standard_normal_cdf(x) - bivariate_normal_cdf(x, -y, -rho));
    }
    const double hi = std::asin(rho);
    const double diff_sq = (x - y) * (x - y);
    const double xy = x * y;
    // (x² + y² − 2xy sin s) / (2cos²s) split so nothing cancels as s → ±π/2
    auto integrand = [&](double s) {
        const double c = std::cos(s);
        const double e = (diff_sq > 0.0 ? diff_sq / (2.0 * c * c) : 0.0) + xy / (1.0 + std::sin(s));
        return std::exp(-e);
    };
    const double path = numeric::integrate(integrand, 0.0, hi, 1e-14 * 2.0 * std::numbers::pi);
    return numeric::clamp_probability(base + path / (2.0 * std::numbers::pi));
}

std::string_view to_string(CopulaFamily family)
{
    switch (family) {
    case CopulaFamily::Independence:
        return "independence";
    case CopulaFamily::Gaussian:
        return "gaussian";
    case CopulaFamily::Gumbel:
        return "gumbel";
    case CopulaFamily::Clayton:
        return "clayton";
    case CopulaFamily::Frank:
        return "frank";
    }
    return "unknown";
}

CopulaFamily copula_family_from_string(std::string_view name)
{
    for (auto f : {CopulaFamily::Independence, CopulaFamily::Gaussian, CopulaFamily::Gumbel,
                   CopulaFamily::Clayton, CopulaFamily::Frank}) {
        if (name == to_string(f)) {
            return f;
        }
    }
    throw DomainError("unknown copula family '" + std::string(name) + "'");
}

Copula Copula::independence() { return Copula(CopulaFamily::Independence, 0.0); }

Copula Copula::gaussian(double rho)
{
    if (!(rho > -1.0 && rho < 1.0)) {
        throw DomainError("gaussian copula: rho must lie in (-1,1)");
    }
    return Copula(CopulaFamily::Gaussian, rho);
}

Copula Copula::gumbel(double theta)
{
    if (!(theta >= 1.0) || !std::isfinite(theta)) {
        throw DomainError("gumbel copula: theta must be >= 1 and finite");
    }
    return Copula(CopulaFamily::Gumbel, theta);
}

Copula Copula::clayton(double theta)
{
    if (!(theta > 0.0) || !std::isfinite(theta)) {
        throw DomainError("clayton copula: theta must be > 0 and finite");
    }
    return Copula(CopulaFamily::Clayton, theta);
}

Copula Copula::frank(double theta)
{
    if (theta == 0.0 || !std::isfinite(theta)) {
        throw DomainError("frank copula: theta must be finite and nonzero");
    }
    return Copula(CopulaFamily::Frank, theta);
}

Copula Copula::make(CopulaFamily family, double param)
{
    switch (family) {
    case CopulaFamily::Independence:
        return independence();
    case CopulaFamily::Gaussian:
        return gaussian(param);
    case CopulaFamily::Gumbel:
        return gumbel(param);
    case CopulaFamily::Clayton:
        return clayton(param);
    case CopulaFamily::Frank:
        return frank(param);
    }
    throw DomainError("unknown copula family");
}

bool Copula::is_independent() const
{
    switch (family_) {
    case CopulaFamily::Independence:
        return true;
    case CopulaFamily::Gaussian:
        return param_ == 0.0;
    case CopulaFamily::Gumbel:
        return param_ == 1.0;
    case CopulaFamily::Clayton:
        return false;
    case CopulaFamily::Frank:
        return std::abs(param_) < kFrankIndependenceBand;
    }
    return false;
}

double Copula::cdf(double u, double v) const
{
    check_unit(u, "u");
    check_unit(v, "v");
    if (u == 0.0 || v == 0.0) {
        return 0.0;
    }
    if (u == 1.0) {
        return v;
    }
    if (v == 1.0) {
        return u;
    }
    if (is_independent()) {
        return u * v;
    }
    const double theta = param_;
    double c = 0.0;
    switch (family_) {
    case CopulaFamily::Independence:
        c = u * v;
        break;
    case CopulaFamily::Gaussian:
        c = bivariate_normal_cdf(standard_normal_quantile(u), standard_normal_quantile(v), theta);
        break;
    case CopulaFamily::Gumbel: {
        const double a = std::pow(-std::log(u), theta);
        const double b = std::pow(-std::log(v), theta);
        c = std::exp(-std::pow(a + b, 1.0 / theta));
        break;
    }
    case CopulaFamily::Clayton: {
        const double s = std::pow(u, -theta) + std::pow(v, -theta) - 1.0;
        c = std::pow(std::max(s, 0.0), -1.0 / theta);
        break;
    }
    case CopulaFamily::Frank:
        c = frank_cdf(u, v, theta);
        break;
    }
    return numeric::clamp_probability(c);
}

double Copula::joint_survival(double u, double v) const
{
    check_unit(u, "u");
    check_unit(v, "v");
    if (u == 1.0 || v == 1.0) {
        return 0.0;
    }
    if (u == 0.0) {
        return 1.0 - v;
    }
    if (v == 0.0) {
        return 1.0 - u;
    }
    if (is_independent()) {
        return (1.0 - u) * (1.0 - v);
    }
    if (family_ == CopulaFamily::Gaussian) {
        // Radial symmetry: P(Z1 > a, Z2 > b) = Φ2(-a, -b), no cancellation.
        return bivariate_normal_cdf(-standard_normal_quantile(u), -standard_normal_quantile(v),
                                    param_);
    }
    return numeric::clamp_probability(1.0 - u - v + cdf(u, v));
}

}  // namespace rocopula
