// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Seeds and tolerances are fixed here and must not be tuned after the fact.

#include "rocopula/analysis.hpp"
#include "rocopula/dependence.hpp"
#include "rocopula/fitting.hpp"
#include "rocopula/jointroc.hpp"
#include "rocopula/simulate.hpp"
#include "rocopula/sweep.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace rocopula;

namespace {

unsigned g_threads = 1;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            if (pass) {
                detail << "first failure: " << what << "; ";
            }
            pass = false;
        }
    }
};

JointModel exponential_config(Copula cn, Copula cd)
{
    JointModel m;
    m.a_n = Marginal::exponential(1.0);
    m.a_d = Marginal::exponential(0.23);
    m.b_n = Marginal::exponential(1.0);
    m.b_d = Marginal::exponential(0.17);
    m.copula_n = cn;
    m.copula_d = cd;
    m.t_a_ro = threshold_for_fpf(m.a_n, 0.55);
    m.t_a_ri = threshold_for_fpf(m.a_n, 0.05);
    return m;
}

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

void sweep_check(Outcome& o, const JointModel& base, RocKind kind, const std::string& param,
                 const std::vector<double>& values, const std::string& label)
{
    const SweepResult r = theorem_sweep(base, kind, param, values, 1e-4, kDefaultCurvePoints, g_threads);
    o.detail << label << " " << param << " " << (r.expect_increasing ? "up" : "down") << " min step "
             << fmt(r.min_step) << "; ";
    o.require(r.pass, label + " " + param + " not strictly monotone by 1e-4");
}

std::vector<double> tau_grid()
{
    std::vector<double> v;
    for (int i = 1; i <= 16; ++i) {
        v.push_back(0.05 * i);
    }
    return v;
}

const std::vector<CopulaFamily> kArchimedean{CopulaFamily::Gumbel, CopulaFamily::Clayton, CopulaFamily::Frank};

// ---- criteria --------------------------------------------------------------

Outcome criterion1()
{
    Outcome o;
    const JointModel base = exponential_config(Copula::gaussian(0.4), Copula::gaussian(0.4));
    const auto [lo, hi] = sweep_fpf_range(base, RocKind::RuleOut);
    o.require(std::abs(lo - 0.05) < 1e-9 && std::abs(hi - 0.55) < 1e-9, "pAUC range is not [0.05, 0.55]");
    const std::vector<double> grid{0.0, 0.2, 0.4, 0.6, 0.8};
    sweep_check(o, base, RocKind::RuleOut, "rho_d", grid, "gaussian");
    sweep_check(o, base, RocKind::RuleOut, "rho_n", grid, "gaussian");
    return o;
}

Outcome criterion2()
{
    Outcome o;
    for (CopulaFamily f : kArchimedean) {
        const JointModel base = exponential_config(copula_from_tau(f, 0.4), copula_from_tau(f, 0.4));
        sweep_check(o, base, RocKind::RuleOut, "tau_d", tau_grid(), std::string(to_string(f)));
        sweep_check(o, base, RocKind::RuleOut, "tau_n", tau_grid(), std::string(to_string(f)));
    }
    return o;
}

Outcome criterion3()
{
    Outcome o;
    const JointModel g = exponential_config(Copula::gaussian(0.4), Copula::gaussian(0.4));
    const auto [lo, hi] = sweep_fpf_range(g, RocKind::RuleIn);
    o.require(std::abs(lo - 0.05) < 1e-9 && hi == 1.0, "rule-in pAUC range is not [0.05, 1]");
    const std::vector<double> grid{0.0, 0.2, 0.4, 0.6, 0.8};
    sweep_check(o, g, RocKind::RuleIn, "rho_d", grid, "gaussian");
    sweep_check(o, g, RocKind::RuleIn, "rho_n", grid, "gaussian");
    for (CopulaFamily f : kArchimedean) {
        const JointModel base = exponential_config(copula_from_tau(f, 0.4), copula_from_tau(f, 0.4));
        sweep_check(o, base, RocKind::RuleIn, "tau_d", tau_grid(), std::string(to_string(f)));
        sweep_check(o, base, RocKind::RuleIn, "tau_n", tau_grid(), std::string(to_string(f)));
    }
    return o;
}

Marginal random_marginal(std::mt19937_64& gen)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    if (u(gen) < 0.5) {
        return Marginal::normal(4.0 * u(gen) - 2.0, 0.3 + 2.0 * u(gen));
    }
    return Marginal::exponential(0.1 + 2.0 * u(gen));
}

Copula random_copula(std::mt19937_64& gen)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    switch (std::uniform_int_distribution<int>(0, 4)(gen)) {
    case 0:
        return Copula::independence();
    case 1:
        return Copula::gaussian(-0.95 + 1.9 * u(gen));
    case 2:
        return Copula::gumbel(1.0 + 9.0 * u(gen));
    case 3:
        return Copula::clayton(0.05 + 10.0 * u(gen));
    default:
        return Copula::frank(u(gen) < 0.5 ? -(0.1 + 20.0 * u(gen)) : 0.1 + 20.0 * u(gen));
    }
}

Outcome criterion4()
{
    Outcome o;
    std::mt19937_64 gen(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int model_i = 0; model_i < 100; ++model_i) {
        JointModel m;
        m.a_n = random_marginal(gen);
        m.a_d = random_marginal(gen);
        m.b_n = random_marginal(gen);
        m.b_d = random_marginal(gen);
        m.copula_n = random_copula(gen);
        m.copula_d = random_copula(gen);
        const double t = m.a_n.quantile(0.02 + 0.96 * u(gen));
        for (int k = 0; k < 100; ++k) {
            const double q = u(gen);
            const double x = u(gen) < 0.5 ? m.b_n.quantile(q) : m.b_d.quantile(q);
            const auto ro = ruleout_point(m, x, t);
            const auto ri = rulein_point(m, x, t);
            const double ef = std::abs(ri.fpf + ro.fpf - m.b_n.survival(x) - m.a_n.survival(t));
            const double et = std::abs(ri.tpf + ro.tpf - m.b_d.survival(x) - m.a_d.survival(t));
            worst = std::max({worst, ef, et});
        }
    }
    o.detail << "max identity error " << fmt(worst) << " over 10000 points; ";
    o.require(worst < 1e-12, "identity error above 1e-12");
    return o;
}

Outcome criterion5()
{
    Outcome o;
    std::vector<JointModel> models{exponential_config(Copula::gaussian(0.4), Copula::gaussian(0.4))};
    for (CopulaFamily f : kArchimedean) {
        models.push_back(exponential_config(copula_from_tau(f, 0.3), copula_from_tau(f, 0.5)));
    }
    double worst = 0.0;
    for (const auto& m : models) {
        const RocCurve c = curve(m, RocKind::Combined, kDefaultCurvePoints, g_threads);
        const double f_ri = m.fpf_a(*m.t_a_ri);
        const double f_ro = m.fpf_a(*m.t_a_ro);
        const double t_ri = m.tpf_a(*m.t_a_ri);
        const double t_ro = m.tpf_a(*m.t_a_ro);
        worst = std::max({worst, std::abs(c.fpf_lo - f_ri), std::abs(c.fpf_hi - f_ro),
                          std::abs(c.points.front().fpf - f_ri), std::abs(c.points.back().fpf - f_ro),
                          std::abs(c.points.front().tpf - t_ri), std::abs(c.points.back().tpf - t_ro)});
    }
    o.detail << "max endpoint deviation " << fmt(worst) << " over 4 families; ";
    o.require(worst < 1e-9, "combined endpoints off by more than 1e-9");
    return o;
}

Outcome criterion6()
{
    Outcome o;
    std::mt19937_64 gen(20261018);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const std::size_t n = 1000000;
    double worst_z = 0.0;
    int comparisons = 0;
    for (int cfg = 0; cfg < 10; ++cfg) {
        JointModel m;
        m.a_n = random_marginal(gen);
        m.a_d = random_marginal(gen);
        m.b_n = random_marginal(gen);
        m.b_d = random_marginal(gen);
        m.copula_n = random_copula(gen);
        m.copula_d = random_copula(gen);
        const double ro_fpf = 0.3 + 0.5 * u(gen);
        const double ri_fpf = 0.02 + 0.23 * u(gen);
        const auto kind = std::array{RocKind::RuleOut, RocKind::RuleIn,
                                     RocKind::Combined}[std::uniform_int_distribution<int>(0, 2)(gen)];
        if (kind != RocKind::RuleIn) {
            m.t_a_ro = threshold_for_fpf(m.a_n, ro_fpf);
        }
        if (kind != RocKind::RuleOut) {
            m.t_a_ri = threshold_for_fpf(m.a_n, ri_fpf);
        }
        const ScoreDataset ds = synth_dataset({m, n, static_cast<std::uint64_t>(6 + cfg), std::nullopt}, g_threads);
        auto xs = test_b_grid(m, 10);
        xs = std::vector<double>(xs.begin() + 1, xs.end() - 1);
        for (double x : xs) {
            const OperatingPoint model = kind == RocKind::RuleOut  ? ruleout_point(m, x)
                                         : kind == RocKind::RuleIn ? rulein_point(m, x)
                                                                   : combined_point(m, x);
            const OperatingPoint sim = projected_point(ds, m.t_a_ro, m.t_a_ri, x);
            for (auto [p, q] : {std::pair{model.fpf, sim.fpf}, std::pair{model.tpf, sim.tpf}}) {
                const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
                const double z = se > 0.0 ? std::abs(q - p) / se : (q == p ? 0.0 : 1e9);
                worst_z = std::max(worst_z, z);
                ++comparisons;
                if (z >= 3.0) {
                    o.require(false, std::string(to_string(kind)) + " config " + std::to_string(cfg) + " at x=" +
                                         fmt(x) + ": " + fmt(z) + " SE");
                }
            }
        }
    }
    o.detail << comparisons << " comparisons, max deviation " << fmt(worst_z) << " SE; ";
    return o;
}

bool nondecreasing(const std::vector<double>& v, double tol, double& worst)
{
    bool ok = true;
    for (std::size_t i = 1; i < v.size(); ++i) {
        worst = std::min(worst, v[i] - v[i - 1]);
        ok = ok && v[i] - v[i - 1] >= -tol;
    }
    return ok;
}

Outcome criterion7()
{
    Outcome o;
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    JointModel m = exponential_config(Copula::gaussian(0.4), Copula::gaussian(0.4));
    double worst_gumbel = 0.0;
    double worst_frank = 0.0;
    for (int k = 0; k < 50; ++k) {
        const double x = m.b_d.quantile(0.01 + 0.98 * u(gen));
        std::vector<double> g;
        for (double theta = 1.01; theta <= 20.0 + 1e-12; theta += (20.0 - 1.01) / 399.0) {
            m.copula_d = Copula::gumbel(theta);
            g.push_back(ruleout_point(m, x).tpf);
        }
        o.require(nondecreasing(g, 1e-10, worst_gumbel), "gumbel TPF decreased in theta");
        std::vector<double> f;
        for (int i = 1; i <= 600; ++i) {
            m.copula_d = Copula::frank(0.05 * i);
            f.push_back(ruleout_point(m, x).tpf);
        }
        o.require(nondecreasing(f, 1e-10, worst_frank), "frank TPF decreased in theta");
    }
    double prev = -1.0;
    double min_tau_step = 1.0;
    for (int i = 1; i <= 200; ++i) {
        const double tau = tau_from_theta(CopulaFamily::Frank, 0.1 * i);
        min_tau_step = std::min(min_tau_step, tau - prev);
        prev = tau;
    }
    o.require(min_tau_step > 0.0, "frank tau not strictly increasing");
    o.detail << "gumbel worst step " << fmt(worst_gumbel) << ", frank worst step " << fmt(worst_frank)
             << ", frank tau min step " << fmt(min_tau_step) << "; ";
    return o;
}

Outcome criterion8()
{
    Outcome o;
    o.require(tau_from_theta(CopulaFamily::Gumbel, 2.0) == 0.5, "gumbel tau(2) != 0.5");
    o.require(tau_from_theta(CopulaFamily::Clayton, 2.0) == 0.5, "clayton tau(2) != 0.5");
    double worst = 0.0;
    for (CopulaFamily f : kArchimedean) {
        for (int i = 1; i <= 95; ++i) {
            const double tau = 0.01 * i;
            worst = std::max(worst, std::abs(tau_from_theta(f, theta_from_tau(f, tau)) - tau));
        }
    }
    for (double theta = 1.05; theta <= 20.0; theta += 0.25) {
        worst = std::max(worst, std::abs(theta_from_tau(CopulaFamily::Gumbel,
                                                        tau_from_theta(CopulaFamily::Gumbel, theta)) - theta) / theta);
    }
    for (double theta = 0.05; theta <= 20.0; theta += 0.25) {
        for (CopulaFamily f : {CopulaFamily::Clayton, CopulaFamily::Frank}) {
            worst = std::max(worst, std::abs(theta_from_tau(f, tau_from_theta(f, theta)) - theta) / theta);
        }
    }
    o.require(worst < 1e-7, "round trip error above 1e-7");
    const double rs0 = spearman_from_copula(Copula::independence());
    const double rs1 = spearman_from_copula(Copula::gaussian(0.9999999));
    o.require(std::abs(rs0) < 1e-6, "spearman(independence) not 0");
    o.require(std::abs(rs1 - 1.0) < 1e-3, "spearman near comonotone not 1");
    o.detail << "round trip worst " << fmt(worst) << ", spearman(indep) " << fmt(rs0)
             << ", spearman(rho=0.9999999) " << fmt(rs1) << "; ";
    return o;
}

Outcome criterion9()
{
    Outcome o;
    JointModel m;
    m.a_n = Marginal::normal(0.0, 1.0);
    m.a_d = Marginal::normal(2.0, 1.0);
    m.b_n = m.a_n;
    m.b_d = m.a_d;
    const double truth = standard_normal_cdf(2.0 / std::sqrt(2.0));
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto ds = synth_dataset({m, 1000, seed, std::nullopt});
        const auto fit = fit_binormal_deming(empirical_roc(ds, TestSide::A).points);
        worst = std::max(worst, std::abs(fit.auc() - truth));
    }
    o.require(worst <= 0.02, "AUC off by more than 0.02");

    std::mt19937_64 gen(9);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst_self = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const double mu = 0.2 + 2.5 * u(gen);
        double sigma = 0.4 + 1.8 * u(gen);
        if (std::abs(sigma - 1.0) < 0.02) {
            sigma += 0.05;
        }
        const double fpf = 0.02 + 0.96 * u(gen);
        const double tpf = standard_normal_cdf((mu + standard_normal_quantile(fpf)) / sigma);
        // Near 1 a double cannot hold 1 - tpf, so the point itself carries no information to recover.
        if (!(tpf > 1e-6 && tpf < 1.0 - 1e-6)) {
            continue;
        }
        const auto fit = fit_from_point_and_ratio({fpf, tpf}, mu / (sigma - 1.0));
        worst_self = std::max({worst_self, std::abs(fit.mu - mu), std::abs(fit.sigma - sigma)});
    }
    o.require(worst_self < 1e-6, "point+ratio self-consistency above 1e-6");
    o.detail << "worst AUC deviation " << fmt(worst) << " over 20 seeds, point+ratio worst " << fmt(worst_self)
             << "; ";
    return o;
}

Outcome criterion10()
{
    Outcome o;
    JointModel binormal;
    binormal.a_n = Marginal::normal(0.0, 1.0);
    binormal.a_d = Marginal::normal(1.3, 1.1);
    binormal.b_n = Marginal::normal(0.0, 1.0);
    binormal.b_d = Marginal::normal(1.7, 0.9);
    binormal.copula_n = Copula::gaussian(0.3);
    binormal.copula_d = Copula::gaussian(0.5);
    binormal.t_a_ro = threshold_for_fpf(binormal.a_n, 0.5);
    binormal.t_a_ri = threshold_for_fpf(binormal.a_n, 0.05);
    JointModel expo = exponential_config(Copula::gaussian(0.1), Copula::gaussian(0.6));
    expo.t_a_ro = threshold_for_fpf(expo.a_n, 0.5);

    const std::size_t n = 20000;
    double worst_z = 0.0;
    double worst_range = 0.0;
    std::uint64_t seed = 101;
    for (const JointModel& m : {binormal, expo}) {
        const ScoreDataset ds = synth_dataset({m, n, seed++, std::nullopt}, g_threads);
        auto xs = test_b_grid(m, 7);
        xs = std::vector<double>(xs.begin() + 1, xs.end() - 1);
        for (RocKind kind : {RocKind::RuleOut, RocKind::RuleIn, RocKind::Combined}) {
            const std::optional<double> ro = kind == RocKind::RuleIn ? std::nullopt : m.t_a_ro;
            const std::optional<double> ri = kind == RocKind::RuleOut ? std::nullopt : m.t_a_ri;
            for (double x : xs) {
                const OperatingPoint model = kind == RocKind::RuleOut  ? ruleout_point(m, x)
                                             : kind == RocKind::RuleIn ? rulein_point(m, x)
                                                                       : combined_point(m, x);
                const OperatingPoint emp = projected_point(ds, ro, ri, x);
                for (auto [p, q] : {std::pair{model.fpf, emp.fpf}, std::pair{model.tpf, emp.tpf}}) {
                    const double z = std::abs(q - p) / std::sqrt(p * (1.0 - p) / static_cast<double>(n));
                    worst_z = std::max(worst_z, z);
                    if (z >= 3.0) {
                        o.require(false, std::string(to_string(kind)) + " at x=" + fmt(x) + ": " + fmt(z) + " SE");
                    }
                }
            }
        }

        AnalysisConfig cfg;
        cfg.families = {CopulaFamily::Gaussian, CopulaFamily::Frank, CopulaFamily::Clayton};
        cfg.rule_out = ThresholdSpec::score(*m.t_a_ro);
        cfg.rule_in = ThresholdSpec::score(*m.t_a_ri);
        cfg.b_threshold = m.b_n.quantile(0.5);
        cfg.threads = g_threads;
        const AnalysisReport rep = analyze(ds, cfg);
        for (const auto& p : rep.projected) {
            double lo = 1.0;
            double hi = 0.0;
            for (std::size_t f = 0; f < 3; ++f) {
                if (!p.model_tpf_at_point[f]) {
                    o.require(false, "projected point outside a model curve's FPF range");
                    continue;
                }
                lo = std::min(lo, *p.model_tpf_at_point[f]);
                hi = std::max(hi, *p.model_tpf_at_point[f]);
            }
            const double miss = std::max({0.0, lo - p.point->tpf, p.point->tpf - hi});
            worst_range = std::max(worst_range, miss);
            o.require(miss <= 0.03, std::string(to_string(p.kind)) + " projected point outside model range ± 0.03");
        }
    }
    o.detail << "band max deviation " << fmt(worst_z) << " SE over 84 comparisons, worst distance outside"
             << " model range " << fmt(worst_range) << "; ";
    return o;
}

Outcome criterion11()
{
    Outcome o;
    const std::vector<OperatingPoint> ai_points{{0.3, 0.723}, {0.5, 0.85}, {0.9, 0.98}};
    const BinormalFit ai = fit_binormal_deming(ai_points);
    const BinormalFit rad = fit_from_point_and_ratio({1.0 - 0.768, 0.763}, mean_to_sigma_ratio(ai));
    JointModel m;
    m.a_n = ai.nondiseased();
    m.a_d = ai.diseased();
    m.b_n = rad.nondiseased();
    m.b_d = rad.diseased();
    m.copula_n = Copula::gaussian(0.09);
    m.copula_d = Copula::gaussian(0.40);
    m.t_a_ro = threshold_for_fpf(m.a_n, 0.5);
    const double x = m.b_n.quantile(0.768);
    const OperatingPoint p = ruleout_point(m, x);
    const double se = p.tpf;
    const double sp = 1.0 - p.fpf;
    o.detail << "AI AUC " << fmt(ai.auc()) << ", radiologist AUC " << fmt(rad.auc()) << ", model (Se,Sp) = ("
             << fmt(se) << ", " << fmt(sp) << ") vs (0.697, 0.882); ";
    o.require(std::abs(se - 0.697) <= 0.06, "Se outside ±0.06");
    o.require(std::abs(sp - 0.882) <= 0.06, "Sp outside ±0.06");
    return o;
}

Outcome criterion12()
{
    Outcome o;
    const double w = workload_ruled_out(0.01, 0.5, 0.98);
    o.detail << "workload " << w << "; ";
    o.require(w == 0.4952, "workload != 0.4952");
    return o;
}

}  // namespace

int main(int argc, char** argv)
{
    g_threads = argc > 1 ? static_cast<unsigned>(std::max(1, std::atoi(argv[1]))) : 1;
    struct Entry {
        int id;
        const char* title;
        std::function<Outcome()> run;
        double limit_s;
    };
    const double none = std::numeric_limits<double>::infinity();
    const std::vector<Entry> entries{
        {1, "Gaussian rule-out pAUC sweep, exponential configuration", criterion1, 10.0},
        {2, "Archimedean rule-out sweeps driven by tau", criterion2, 30.0},
        {3, "rule-in sweeps reverse the ordering", criterion3, none},
        {4, "inclusion-exclusion identity", criterion4, none},
        {5, "combined-curve endpoints", criterion5, none},
        {6, "Monte Carlo oracle equivalence", criterion6, 60.0},
        {7, "monotonicity in theta (Gumbel, Frank) and Frank tau", criterion7, none},
        {8, "dependence closed forms", criterion8, none},
        {9, "binormal fitting recovery", criterion9, none},
        {10, "projected empirical curves agree with the model", criterion10, none},
        {11, "rule-out point reproduced from summary operating points", criterion11, none},
        {12, "workload arithmetic", criterion12, none},
    };
    int failures = 0;
    for (const auto& e : entries) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = e.run();
        } catch (const std::exception& ex) {
            o.pass = false;
            o.detail << "exception: " << ex.what() << "; ";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > e.limit_s) {
            o.pass = false;
            o.detail << "runtime " << fmt(secs) << " s exceeds " << fmt(e.limit_s) << " s; ";
        }
        failures += o.pass ? 0 : 1;
        std::printf("criterion %2d %s: %s [%s] (%.2f s)\n", e.id, o.pass ? "PASS" : "FAIL", e.title,
                    o.detail.str().c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(entries.size()) - failures, entries.size());
    return failures == 0 ? 0 : 1;
}
