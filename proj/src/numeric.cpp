#include "rocopula/numeric.hpp"

#include "rocopula/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <cstdlib>
#include <numbers>
#include <string>
#include <thread>

namespace rocopula::numeric {

GaussLegendreRule gauss_legendre(std::size_t n)
{
    if (n == 0) {
        throw DomainError("gauss_legendre: n must be positive");
    }
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = 0.0;
            for (std::size_t k = 1; k <= n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p2) / static_cast<double>(k);
            }
            dp = static_cast<double>(n) * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

namespace {

// QUADPACK G7/K15 abscissae and weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double kronrod;
    double error;
};

Panel gk15(const std::function<double(double)>& f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double resk = fc * kWgk[7];
    double resg = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double fsum = f(center - dx) + f(center + dx);
        resk += kWgk[j] * fsum;
        if (j % 2 == 1) {
            resg += kWg[j / 2] * fsum;
        }
    }
    return {resk * half, std::abs((resk - resg) * half)};
}

constexpr std::size_t kMaxPanels = 200000;

double integrate_rec(const std::function<double(double)>& f, double a, double b,
                     const Panel& whole, double tol, int depth, std::size_t& panels)
{
    // Below ~100 ulp of the panel value the error estimate is round-off.
    const double floor = 100.0 * std::numeric_limits<double>::epsilon() * std::abs(whole.kronrod);
    if (whole.error <= std::max(tol, floor) || std::abs(b - a) < 1e-15) {
        return whole.kronrod;
    }
    if (depth <= 0 || panels > kMaxPanels) {
        throw NumericError("integrate: no convergence within the subdivision budget");
    }
    const double mid = 0.5 * (a + b);
    const Panel left = gk15(f, a, mid);
    const Panel right = gk15(f, mid, b);
    panels += 2;
    return integrate_rec(f, a, mid, left, 0.5 * tol, depth - 1, panels) +
           integrate_rec(f, mid, b, right, 0.5 * tol, depth - 1, panels);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_depth)
{
    if (a == b) {
        return 0.0;
    }
    const Panel whole = gk15(f, a, b);
    std::size_t panels = 1;
    return integrate_rec(f, a, b, whole, abs_tol, max_depth, panels);
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double x_tol, int max_iter)
{
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) {
        return lo;
    }
    if (fhi == 0.0) {
        return hi;
    }
    if ((flo < 0.0) == (fhi < 0.0)) {
        throw NumericError("bisect: root not bracketed");
    }
    for (int i = 0; i < max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi || (hi - lo) <= x_tol * (1.0 + std::abs(mid))) {
            return mid;
        }
        const double fm = f(mid);
        if (fm == 0.0) {
            return mid;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double clamp_probability(double p)
{
    if (std::isnan(p)) {
        throw NumericError("probability evaluated to NaN");
    }
    if (p < 0.0) {
        if (p < -1e-9) {
            throw NumericError("probability below 0 beyond tolerance: " + std::to_string(p));
        }
        return 0.0;
    }
    if (p > 1.0) {
        if (p > 1.0 + 1e-9) {
            throw NumericError("probability above 1 beyond tolerance: " + std::to_string(p));
        }
        return 1.0;
    }
    return p;
}

void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& body)
{
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers) {
                    body(i);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

unsigned default_threads()
{
    if (const char* env = std::getenv("ROC_COPULA_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0) {
            // 0 means every core, as with --threads 0.
            return v == 0 ? std::max(1u, std::thread::hardware_concurrency()) : static_cast<unsigned>(v);
        }
    }
    return 1;
}

}  // namespace rocopula::numeric
