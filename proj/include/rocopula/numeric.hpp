#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace rocopula::numeric {

struct GaussLegendreRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

// n-point Gauss-Legendre rule computed by Newton iteration on P_n.
GaussLegendreRule gauss_legendre(std::size_t n);

// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b].
// Bisects until the Kronrod-Gauss difference on each panel is below its share
// of abs_tol. Throws NumericError if max_depth is exhausted.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12, int max_depth = 60);

// Bisection for a root of a function whose sign differs at lo and hi.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double x_tol = 1e-15, int max_iter = 300);

// Clamps quadrature noise into [0,1]. Overshoot larger than 1e-9 means the
// value is wrong, not noisy, and throws NumericError.
double clamp_probability(double p);

// Runs body(i) for i in [0, n) on up to `threads` workers. Each index is
// visited exactly once, so writing to slot i keeps results order-independent.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& body);

// Thread count from ROC_COPULA_THREADS, falling back to 1.
unsigned default_threads();

}  // namespace rocopula::numeric
