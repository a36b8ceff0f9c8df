#pragma once

#include <string_view>

namespace rocopula {

/// Standard normal CDF, Φ(x). Absolute error below 1e-15 on the real line.
double standard_normal_cdf(double x);

/// Standard normal quantile, Φ⁻¹(p). Acklam's rational approximation polished
/// by one Halley step against erfc; throws DomainError for p outside (0,1).
double standard_normal_quantile(double p);

enum class MarginalFamily { Normal, Exponential };

std::string_view to_string(MarginalFamily family);

/// Univariate score distribution for one test on one disease class.
class Marginal {
public:
    /// Standard normal.
    Marginal() : Marginal(MarginalFamily::Normal, 0.0, 1.0) {}

    static Marginal normal(double mu, double sigma);
    static Marginal exponential(double lambda);

    MarginalFamily family() const { return family_; }
    double mu() const { return p0_; }       // Normal only
    double sigma() const { return p1_; }    // Normal only
    double lambda() const { return p0_; }   // Exponential only

    double cdf(double x) const;
    double survival(double x) const;
    double quantile(double p) const;

    bool operator==(const Marginal&) const = default;

private:
    Marginal(MarginalFamily family, double p0, double p1) : family_(family), p0_(p0), p1_(p1) {}

    MarginalFamily family_;
    double p0_;
    double p1_;
};

inline double cdf(const Marginal& m, double x) { return m.cdf(x); }
inline double survival(const Marginal& m, double x) { return m.survival(x); }
inline double quantile(const Marginal& m, double p) { return m.quantile(p); }

}  // namespace rocopula
