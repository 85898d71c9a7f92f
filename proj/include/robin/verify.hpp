#ifndef ROBIN_VERIFY_HPP
#define ROBIN_VERIFY_HPP

#include "robin/continuation.hpp"
#include "robin/errors.hpp"
#include "robin/maass_selberg.hpp"
#include "robin/modular_surface.hpp"
#include "robin/numerics.hpp"
#include "robin/robin_maps.hpp"
#include "robin/root_finding.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace robin
{

enum class Bound
{
    at_most,   // observed <= tolerance
    below,     // observed < tolerance
    at_least   // observed >= tolerance
};

struct CheckResult
{
    std::string name;
    double tolerance = 0.0;
    double observed = std::numeric_limits<double>::quiet_NaN();
    Bound bound = Bound::at_most;
    bool passed = false;
    double seconds = 0.0;
    std::string detail;
};

struct VerifyOptions
{
    TruncationConfig cfg;
    std::optional<double> tol_override; // replaces every check's tolerance
    double phi_scale = 1.0;             // multiplies phi of the surface under test

    TruncationConfig effective() const
    {
        TruncationConfig c = cfg;
        if (phi_scale != 1.0) {
            c.surface = perturbed(c.surface, phi_scale);
        }
        return c;
    }
};

struct Measurement
{
    double observed;
    std::string detail;
};

inline CheckResult run_check(const std::string &name, double tol, Bound bound, const VerifyOptions &opt,
                             const std::function<Measurement(const TruncationConfig &)> &body)
{
    CheckResult r;
    r.name = name;
    r.tolerance = opt.tol_override ? *opt.tol_override : tol;
    r.bound = bound;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const auto m = body(opt.effective());
        r.observed = m.observed;
        r.detail = m.detail;
        if (std::isnan(m.observed)) {
            r.passed = false;
        } else if (bound == Bound::at_most) {
            r.passed = m.observed <= r.tolerance;
        } else if (bound == Bound::below) {
            r.passed = m.observed < r.tolerance;
        } else {
            r.passed = m.observed >= r.tolerance;
        }
    } catch (const Error &e) {
        r.passed = false;
        r.detail = std::string(e.kind()) + ": " + e.what();
    } catch (const std::exception &e) {
        r.passed = false;
        r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

namespace detail
{

inline std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

/// Robin root at gamma closest to a height on the critical line.
inline Complex critical_line_seed(ExtendedComplex gamma, double height, const TruncationConfig &cfg)
{
    const auto roots = solve_robin_roots(gamma, Window{0.4, 0.6, height - 2.0, height + 2.0}, cfg);
    if (roots.empty()) {
        throw ConvergenceError("no Robin root near the requested height");
    }
    Complex best = roots.front().point.s;
    for (const auto &r : roots) {
        if (std::abs(r.point.s.imag() - height) < std::abs(best.imag() - height)) {
            best = r.point.s;
        }
    }
    return best;
}

/// dlambda/dgamma by a fourth-order central difference of Newton-solved roots.
inline Complex fd_lambda_prime(Complex s, Complex gamma, const TruncationConfig &cfg)
{
    const double h = 1e-3 * std::max(1.0, std::abs(gamma));
    auto lam = [&](double k) {
        const auto z = robin_newton(gamma + k * h, s, cfg);
        if (!z) {
            throw ConvergenceError("finite-difference Newton solve failed");
        }
        return lambda_of_s(*z);
    };
    return (8.0 * (lam(1) - lam(-1)) - (lam(2) - lam(-2))) / (12.0 * h);
}

/// Real-gamma trace from a critical-line seed at gamma = 0 out to gamma = 1e4.
inline std::vector<TracePoint> dirichlet_trace(const TruncationConfig &cfg, double seed_height = 8.0)
{
    const Complex seed = critical_line_seed(Complex(0.0), seed_height, cfg);
    PathSpec path;
    path.waypoints = {0.0, 10.0, 100.0, 1000.0, 10000.0};
    path.max_step = 1000.0;
    path.min_step = 1e-9;
    return trace_curve(path, make_point(seed, Complex(0.0), cfg.eta), cfg);
}

} // namespace detail

inline CheckResult check_functional_equation(const VerifyOptions &opt, double tol = 1e-9)
{
    return run_check("functional_equation", tol, Bound::at_most, opt, [](const TruncationConfig &cfg) {
        double worst = 0.0;
        int n = 0;
        for (int i = 0; i < 20; ++i) {
            for (int j = 0; j < 20; ++j) {
                const Complex s(-1.0 + 0.2 * i + 0.013, 0.3 + 0.3 * j);
                const auto a = scattering_phi(cfg.surface, s), b = scattering_phi(cfg.surface, 1.0 - s);
                if (a.pole || b.pole) {
                    continue;
                }
                worst = std::max(worst, std::abs(a.value * b.value - 1.0));
                ++n;
            }
        }
        return Measurement{worst, std::to_string(n) + " grid points"};
    });
}

inline CheckResult check_oracle_agreement(const VerifyOptions &opt, double tol = 1e-6)
{
    return run_check("oracle_agreement", tol, Bound::at_most, opt, [](const TruncationConfig &cfg) {
        double worst = 0.0;
        for (double y : {1.0, 1.6, 2.5}) {
            for (Complex s : {Complex(1.8, 0.0), Complex(2.3, 1.0), Complex(3.0, -2.0)}) {
                const Complex e0 = constant_term_oracle(y, s, 1e-12);
                const Complex phi = scattering_phi(cfg.surface, s).value;
                const Complex expect = std::exp(s * std::log(y)) + phi * std::exp((1.0 - s) * std::log(y));
                worst = std::max(worst, std::abs(e0 - expect));
            }
        }
        return Measurement{worst, "9 (y, s) pairs"};
    });
}

inline CheckResult check_robin_reality(const VerifyOptions &opt, double tol = 1e-8)
{
    return run_check("robin_reality", tol, Bound::at_most, opt, [](const TruncationConfig &cfg) {
        double worst = 0.0;
        std::size_t total = 0;
        for (ExtendedComplex g : {ExtendedComplex(-2.0), ExtendedComplex(0.0), ExtendedComplex(1.0),
                                  ExtendedComplex(5.0), ExtendedComplex::infinity()}) {
            const auto roots = solve_robin_roots(g, Window{0.0, 1.0, 0.0, 30.0}, cfg);
            total += roots.size();
            for (const auto &r : roots) {
                const Complex s = r.point.s;
                worst = std::max(worst, std::min(std::abs(s.real() - 0.5), std::abs(s.imag())));
            }
        }
        if (total == 0) {
            throw ConvergenceError("no roots found");
        }
        return Measurement{worst, std::to_string(total) + " roots over 5 gamma values"};
    });
}

inline CheckResult check_derivative_formula(const VerifyOptions &opt, double tol = 1e-5)
{
    return run_check("derivative_formula", tol, Bound::at_most, opt, [](const TruncationConfig &cfg) {
        const Complex seed = detail::critical_line_seed(Complex(0.0), 8.0, cfg);
        PathSpec path;
        path.waypoints = {0.0, 4.0};
        path.max_step = 0.2;
        const auto trace = trace_curve(path, make_point(seed, Complex(0.0), cfg.eta), cfg);
        double worst = 0.0;
        for (const auto &p : trace) {
            const auto lp = lambda_prime_of_gamma(p.point, cfg);
            const Complex fd = detail::fd_lambda_prime(p.point.s, p.point.gamma.value, cfg);
            worst = std::max(worst, std::abs(lp.value - fd) / std::abs(lp.value));
        }
        if (trace.size() < 20) {
            throw ConvergenceError("fewer than 20 checkpoints on the trace");
        }
        return Measurement{worst, std::to_string(trace.size()) + " checkpoints"};
    });
}

inline CheckResult check_maass_selberg(const VerifyOptions &opt, double tol = 1e-3)
{
    return run_check("maass_selberg", tol, Bound::at_most, opt, [](const TruncationConfig &base) {
        double worst = 0.0;
        for (double eta : {1.5, 2.0}) {
            TruncationConfig cfg = base;
            cfg.eta = eta;
            for (Complex s : {Complex(1.5, 0.0), Complex(1.8, 0.0), Complex(2.0, 1.0)}) {
                const auto msr = truncated_pairing_msr(s, cfg);
                const auto quad = pairing_quadrature_oracle(s, cfg);
                worst = std::max(worst, std::abs(msr.value - quad.value) / std::abs(quad.value));
            }
        }
        return Measurement{worst, "6 (s, eta) pairs"};
    });
}

inline CheckResult check_dirichlet_limit(const VerifyOptions &opt, double tol = 1e-4)
{
    return run_check("dirichlet_limit", tol, Bound::at_most, opt, [](const TruncationConfig &cfg) {
        const auto trace = detail::dirichlet_trace(cfg);
        const Complex end = trace.back().point.s;
        const auto roots = solve_robin_roots(ExtendedComplex::infinity(),
                                             Window{end.real() - 0.05, end.real() + 0.05, end.imag() - 0.05,
                                                    end.imag() + 0.05},
                                             cfg);
        if (roots.empty()) {
            throw ConvergenceError("no zero of Q near the terminal point");
        }
        double dist = std::numeric_limits<double>::infinity();
        Complex zq;
        for (const auto &r : roots) {
            if (std::abs(r.point.s - end) < dist) {
                dist = std::abs(r.point.s - end);
                zq = r.point.s;
            }
        }
        // First-order offset of the gamma root from the Dirichlet root: |P / dQ/ds| / gamma.
        RobinFunction f(ExtendedComplex::infinity(), cfg);
        const Complex dq = cauchy_derivative([&](Complex z) { return f.pq(z).Q; }, zq, 1e-3, 16);
        const double predicted = std::abs(f.pq(zq).P / dq) / 1e4;
        return Measurement{dist, "terminal s = " + detail::fmt(end.real()) + "+" + detail::fmt(end.imag()) +
                                     "i, first-order offset |P/Q_s|/gamma = " + detail::fmt(predicted)};
    });
}

inline CheckResult check_continuation(const VerifyOptions &opt, double tol = 1e-4)
{
    return run_check("continuation", tol, Bound::at_most, opt, [](const TruncationConfig &cfg) {
        double worst = 0.0;
        const std::vector<std::vector<Complex>> paths{{2.0, 0.75}, {2.0, Complex(0.5, 3.0)}};
        for (const auto &wp : paths) {
            PathSpec p;
            p.waypoints = wp;
            p.max_step = 0.5;
            p.min_step = 1e-3;
            const auto [v, chain] = continue_beta(p, 1e-6);
            const double d = std::abs(v.value - scattering_phi(cfg.surface, wp.back()).value);
            worst = std::max(worst, d);
        }
        return Measurement{worst, "targets 0.75 and 0.5+3i from s = 2"};
    });
}

inline CheckResult check_half_point(const VerifyOptions &opt, double tol = 1e-6)
{
    return run_check("half_point", tol, Bound::at_most, opt, [](const TruncationConfig &cfg) {
        const auto h = half_point_analysis(cfg);
        const std::string detail = "beta(1/2) = " + detail::fmt(h.beta_half.real()) +
                                   (h.beta_half.imag() < 0 ? "" : "+") + detail::fmt(h.beta_half.imag()) +
                                   "i, m_vanishes = " + (h.m_vanishes ? "true" : "false");
        if (!h.m_vanishes) {
            return Measurement{std::numeric_limits<double>::quiet_NaN(), detail};
        }
        return Measurement{std::abs(h.beta_half + 1.0), detail};
    });
}

inline CheckResult check_disjointness(const VerifyOptions &opt, double tol = 1e-7)
{
    return run_check("root_disjointness", tol, Bound::at_least, opt, [](const TruncationConfig &cfg) {
        const Window w{0.0, 1.0, 0.0, 30.0};
        const auto a = solve_robin_roots(Complex(0.0), w, cfg), b = solve_robin_roots(Complex(1.0), w, cfg);
        double sep = std::numeric_limits<double>::infinity();
        for (const auto &x : a) {
            for (const auto &y : b) {
                sep = std::min(sep, std::abs(x.point.s - y.point.s));
            }
        }
        return Measurement{sep, std::to_string(a.size()) + " and " + std::to_string(b.size()) + " roots"};
    });
}

inline CheckResult check_lambda_prime_decay(const VerifyOptions &opt, double tol = 1.0)
{
    return run_check("lambda_prime_decay", tol, Bound::below, opt, [](const TruncationConfig &cfg) {
        const auto trace = detail::dirichlet_trace(cfg);
        std::vector<double> mags;
        for (double g : {10.0, 100.0, 1000.0, 10000.0}) {
            for (const auto &p : trace) {
                if (p.point.gamma.value.real() == g) {
                    mags.push_back(std::abs(lambda_prime_of_gamma(p.point, cfg).value));
                    break;
                }
            }
        }
        if (mags.size() != 4) {
            throw ConvergenceError("trace missed a checkpoint");
        }
        // Largest ratio of consecutive magnitudes; strictly decreasing means below 1.
        double worst = 0.0;
        for (std::size_t i = 0; i + 1 < mags.size(); ++i) {
            worst = std::max(worst, mags[i + 1] / mags[i]);
        }
        std::string detail = "|lambda'| =";
        for (double m : mags) {
            detail += " " + detail::fmt(m);
        }
        return Measurement{worst, detail};
    });
}

inline CheckResult check_jordan_chain(const VerifyOptions &opt, double tol = 1e-8)
{
    return run_check("jordan_chain", tol, Bound::at_most, opt, [](const TruncationConfig &cfg) {
        double worst = 0.0;
        for (Complex s : {Complex(0.3, 2.0), Complex(0.7, 5.0), Complex(1.5, 0.5), Complex(2.2, -1.0),
                          Complex(0.9, 3.3), Complex(1.2, 6.5), Complex(0.6, -2.5), Complex(1.8, 4.0),
                          Complex(0.2, 1.1), Complex(3.0, 2.0)}) {
            worst = std::max(worst, jordan_chain_residual(s, cfg));
        }
        return Measurement{worst, "10 points"};
    });
}

struct NamedCheck
{
    std::string name;
    std::function<CheckResult(const VerifyOptions &)> run;
};

inline std::vector<NamedCheck> check_registry()
{
    return {
        {"functional_equation", [](const VerifyOptions &o) { return check_functional_equation(o); }},
        {"oracle_agreement", [](const VerifyOptions &o) { return check_oracle_agreement(o); }},
        {"robin_reality", [](const VerifyOptions &o) { return check_robin_reality(o); }},
        {"derivative_formula", [](const VerifyOptions &o) { return check_derivative_formula(o); }},
        {"maass_selberg", [](const VerifyOptions &o) { return check_maass_selberg(o); }},
        {"dirichlet_limit", [](const VerifyOptions &o) { return check_dirichlet_limit(o); }},
        {"continuation", [](const VerifyOptions &o) { return check_continuation(o); }},
        {"half_point", [](const VerifyOptions &o) { return check_half_point(o); }},
        {"root_disjointness", [](const VerifyOptions &o) { return check_disjointness(o); }},
        {"lambda_prime_decay", [](const VerifyOptions &o) { return check_lambda_prime_decay(o); }},
        {"jordan_chain", [](const VerifyOptions &o) { return check_jordan_chain(o); }},
    };
}

/// Run the registered checks, or only those named in `only`.
inline std::vector<CheckResult> run_verify(const VerifyOptions &opt, const std::vector<std::string> &only = {})
{
    std::vector<CheckResult> out;
    for (const auto &c : check_registry()) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.name) == only.end()) {
            continue;
        }
        out.push_back(c.run(opt));
    }
    return out;
}

inline bool all_passed(const std::vector<CheckResult> &results)
{
    for (const auto &r : results) {
        if (!r.passed) {
            return false;
        }
    }
    return !results.empty();
}

} // namespace robin

#endif
