#pragma once

#include <string_view>

namespace rocopula {

/// P(X <= x, Y <= y) for a standard bivariate normal with correlation rho.
///
/// Evaluated as Φ(x)Φ(y) plus the integral of the bivariate density along the
/// correlation path t in [0, rho]. With t = sin(s) the 1/sqrt(1-t²) factor
/// cancels and the remaining integrand is smooth, so adaptive Gauss-Kronrod
/// reaches ~1e-14 absolute accuracy. |rho| >= 1 throws DomainError.
double bivariate_normal_cdf(double x, double y, double rho);

enum class CopulaFamily { Independence, Gaussian, Gumbel, Clayton, Frank };

std::string_view to_string(CopulaFamily family);
CopulaFamily copula_family_from_string(std::string_view name);

/// A bivariate copula family with its dependence parameter.
///
/// Domains: Gaussian rho in (-1,1); Gumbel theta >= 1; Clayton theta > 0;
/// Frank theta != 0. Parameters at the independence point (rho = 0,
/// Gumbel theta = 1, |Frank theta| < 1e-6) evaluate by the exact product uv.
class Copula {
public:
    Copula() : Copula(CopulaFamily::Independence, 0.0) {}

    static Copula independence();
    static Copula gaussian(double rho);
    static Copula gumbel(double theta);
    static Copula clayton(double theta);
    static Copula frank(double theta);
    /// Dispatches to the named factory; `param` ignored for Independence.
    static Copula make(CopulaFamily family, double param);

    CopulaFamily family() const { return family_; }
    /// rho for Gaussian, theta for Archimedean, 0 for Independence.
    double param() const { return param_; }
    /// True when the copula is exactly the product copula.
    bool is_independent() const;

    /// C(u, v). Inputs outside [0,1] throw DomainError.
    double cdf(double u, double v) const;
    /// P(U > u, V > v) = 1 - u - v + C(u, v).
    double joint_survival(double u, double v) const;

    bool operator==(const Copula&) const = default;

private:
    Copula(CopulaFamily family, double param) : family_(family), param_(param) {}

    CopulaFamily family_;
    double param_;
};

inline double copula_cdf(const Copula& c, double u, double v) { return c.cdf(u, v); }
inline double joint_survival(const Copula& c, double u, double v) { return c.joint_survival(u, v); }

}  // namespace rocopula
