#include "rocopula/marginals.hpp"

#include "rocopula/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace rocopula {

double standard_normal_cdf(double x)
{
    if (std::isnan(x)) {
        throw DomainError("standard_normal_cdf: NaN argument");
    }
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

namespace {

// Acklam's lower-region and central-region approximations, relative error ~1e-9.
double acklam(double p)
{
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00, 2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

// Lower-half quantile (p <= 0.5), where Φ is evaluated without cancellation.
double lower_quantile(double p)
{
    double x = acklam(p);
    for (int step = 0; step < 2; ++step) {
        const double e = standard_normal_cdf(x) - p;
        const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
        x -= u / (1.0 + 0.5 * x * u);
    }
    return x;
}

}  // namespace

double standard_normal_quantile(double p)
{
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError("standard_normal_quantile: p must lie in (0,1), got " + std::to_string(p));
    }
    if (p == 0.5) {
        return 0.0;
    }
    if (p < 0.5) {
        return lower_quantile(p);
    }
    return -lower_quantile(1.0 - p);
}

std::string_view to_string(MarginalFamily family)
{
    switch (family) {
    case MarginalFamily::Normal:
        return "normal";
    case MarginalFamily::Exponential:
        return "exponential";
    }
    return "unknown";
}

Marginal Marginal::normal(double mu, double sigma)
{
    if (!std::isfinite(mu)) {
        throw DomainError("normal marginal: mu must be finite");
    }
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw DomainError("normal marginal: sigma must be positive and finite");
    }
    return Marginal(MarginalFamily::Normal, mu, sigma);
}

Marginal Marginal::exponential(double lambda)
{
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw DomainError("exponential marginal: lambda must be positive and finite");
    }
    return Marginal(MarginalFamily::Exponential, lambda, 0.0);
}

double Marginal::cdf(double x) const
{
    if (std::isnan(x)) {
        throw DomainError("marginal cdf: NaN argument");
    }
    switch (family_) {
    case MarginalFamily::Normal:
        return standard_normal_cdf((x - p0_) / p1_);
    case MarginalFamily::Exponential:
        return x <= 0.0 ? 0.0 : -std::expm1(-p0_ * x);
    }
    return 0.0;
}

double Marginal::survival(double x) const
{
    if (std::isnan(x)) {
        throw DomainError("marginal survival: NaN argument");
    }
    switch (family_) {
    case MarginalFamily::Normal:
        return standard_normal_cdf(-(x - p0_) / p1_);
    case MarginalFamily::Exponential:
        return x <= 0.0 ? 1.0 : std::exp(-p0_ * x);
    }
    return 1.0;
}

double Marginal::quantile(double p) const
{
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError("marginal quantile: p must lie in (0,1), got " + std::to_string(p));
    }
    switch (family_) {
    case MarginalFamily::Normal:
        return p0_ + p1_ * standard_normal_quantile(p);
    case MarginalFamily::Exponential:
        return -std::log1p(-p) / p0_;
    }
    return 0.0;
}

}  // namespace rocopula
