#ifndef ROBIN_ROBIN_MAPS_HPP
#define ROBIN_ROBIN_MAPS_HPP

#include "robin/errors.hpp"
#include "robin/modular_surface.hpp"
#include "robin/numerics.hpp"
#include "robin/root_finding.hpp"
#include "robin/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace robin
{

struct TruncationConfig
{
    double eta = 2.0;
    double newton_tol = 1e-13;
    int max_iter = 60;
    ScatteringData surface = modular_scattering();

    void validate() const
    {
        if (!(eta > surface.eta_floor)) {
            throw DomainError("truncation height must exceed the admissibility floor");
        }
        if (!(newton_tol >= 1e-14)) {
            throw DomainError("newton_tol must be at least 1e-14");
        }
        if (max_iter <= 0) {
            throw DomainError("max_iter must be positive");
        }
    }
};

/// A point of the Riemann sphere: finite complex value or the point at infinity.
struct ExtendedComplex
{
    Complex value{0.0, 0.0};
    bool infinite = false;

    static ExtendedComplex infinity() { return {Complex(0.0, 0.0), true}; }
    ExtendedComplex() = default;
    ExtendedComplex(Complex z) : value(z) {}
    ExtendedComplex(double x) : value(x) {}
    ExtendedComplex(Complex z, bool inf) : value(z), infinite(inf) {}
};

struct SpectralPoint
{
    Complex s;
    Complex s_hat;
    Complex lambda;
    ExtendedComplex gamma;
    double eta = 2.0;
};

struct ConstantTermCoeffs
{
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};
    bool log_form = false;
};

struct EigenfunctionData
{
    SpectralPoint point;
    ConstantTermCoeffs coeffs;
    std::vector<Complex> fourier; // a_1 .. a_M; a_{-m} = a_m
    bool truncated = true;
};

struct PQ
{
    Complex Q;
    Complex P;
};

inline Complex lambda_of_s(Complex s) { return s * (1.0 - s); }

inline Complex s_of_lambda(Complex lambda)
{
    Complex r = std::sqrt(0.25 - lambda);
    if (r.real() == 0.0 && r.imag() < 0.0) {
        r = -r;
    }
    return 0.5 + r;
}

inline SpectralPoint make_point(Complex s, ExtendedComplex gamma, double eta)
{
    return {s, 1.0 - s, lambda_of_s(s), gamma, eta};
}

inline bool near_half(Complex s, double radius) { return std::abs(s - 0.5) <= radius; }

/// M_0(eta) and its y-derivative for the constant term y^s + beta y^{1-s}.
inline PQ constant_term_PQ(Complex s, Complex beta, const TruncationConfig &cfg)
{
    const double le = std::log(cfg.eta);
    const Complex es = std::exp(s * le), e1s = std::exp((1.0 - s) * le);
    return {es + beta * e1s, (s * es + beta * (1.0 - s) * e1s) / cfg.eta};
}

/// Same functionals for a general coefficient pair, including the logarithmic form at s = 1/2.
inline PQ constant_term_PQ(Complex s, const ConstantTermCoeffs &c, const TruncationConfig &cfg)
{
    const double eta = cfg.eta, le = std::log(eta);
    if (c.log_form) {
        if (!near_half(s, 1e-9)) {
            throw DomainError("logarithmic constant term is only defined at s = 1/2");
        }
        const double r = std::sqrt(eta);
        return {r * (c.a + c.b * le), (c.a + c.b * (le + 2.0)) / (2.0 * r)};
    }
    const Complex es = std::exp(s * le), e1s = std::exp((1.0 - s) * le);
    return {c.a * es + c.b * e1s, (c.a * s * es + c.b * (1.0 - s) * e1s) / eta};
}

/// P and Q multiplied by the scattering denominator, so that they stay
/// holomorphic through the poles of beta.
struct RegularizedPQ
{
    Complex Q, P;
    double scale_Q, scale_P;
    Complex num, den;
};

inline RegularizedPQ regularized_PQ(Complex s, const TruncationConfig &cfg)
{
    const Complex num = cfg.surface.numerator(s), den = cfg.surface.denominator(s);
    const double le = std::log(cfg.eta);
    const Complex es = std::exp(s * le), e1s = std::exp((1.0 - s) * le);
    const Complex q1 = den * es, q2 = num * e1s;
    const Complex p1 = den * s * es / cfg.eta, p2 = num * (1.0 - s) * e1s / cfg.eta;
    return {q1 + q2, p1 + p2, std::abs(q1) + std::abs(q2), std::abs(p1) + std::abs(p2), num, den};
}

inline Complex beta_of(Complex s, const TruncationConfig &cfg)
{
    const auto v = scattering_phi(cfg.surface, s);
    if (v.pole) {
        throw PoleError("beta has a pole at the requested point");
    }
    return v.value;
}

/// True when the constant term degenerates at s = 1/2, i.e. beta(1/2) = -1.
inline bool half_degenerate(const TruncationConfig &cfg)
{
    const Complex num = cfg.surface.numerator(0.5), den = cfg.surface.denominator(0.5);
    return std::abs(num + den) < 1e-8 * (std::abs(num) + std::abs(den));
}

inline ExtendedComplex gamma_of_s(Complex s, const TruncationConfig &cfg)
{
    const auto r = regularized_PQ(s, cfg);
    const bool q_small = std::abs(r.Q) < 1e-10 * r.scale_Q;
    const bool p_small = std::abs(r.P) < 1e-10 * r.scale_P;
    if (q_small && p_small) {
        if (near_half(s, 1e-3)) {
            // Removable: both vanish to first order at 1/2.
            const double rad = 1e-2;
            return circle_mean(
                [&](Complex z) {
                    const auto q = regularized_PQ(z, cfg);
                    return -q.P / q.Q;
                },
                s, rad, 32);
        }
        throw IndeterminateError("gamma_of_s: P and Q vanish simultaneously");
    }
    if (q_small) {
        return ExtendedComplex::infinity();
    }
    return -r.P / r.Q;
}

inline Complex beta_from_gamma(ExtendedComplex gamma, Complex s, const TruncationConfig &cfg)
{
    const double le = std::log(cfg.eta);
    if (gamma.infinite) {
        return -std::exp((2.0 * s - 1.0) * le);
    }
    const Complex g = gamma.value;
    const Complex es = std::exp(s * le), e1s = std::exp((1.0 - s) * le);
    const Complex num = g * es + s * es / cfg.eta;
    const Complex den = g * e1s + (1.0 - s) * e1s / cfg.eta;
    if (std::abs(den) <= 1e-14 * (std::abs(g * e1s) + std::abs((1.0 - s) * e1s / cfg.eta))) {
        throw DegenerateError("beta_from_gamma: vanishing denominator");
    }
    return -num / den;
}

/// Holomorphic function of s whose zeros are the Robin eigenvalue parameters for gamma.
/// When beta(1/2) = -1 both P and Q vanish at 1/2 for every gamma; that common
/// factor (s - 1/2) is divided out.
class RobinFunction
{
public:
    RobinFunction(ExtendedComplex gamma, const TruncationConfig &cfg)
        : gamma_(gamma), cfg_(cfg), deflate_(half_degenerate(cfg))
    {
    }

    /// Regularized (and, if needed, deflated) P and Q.
    PQ pq(Complex s) const
    {
        if (!deflate_) {
            const auto r = regularized_PQ(s, cfg_);
            return {r.Q, r.P};
        }
        if (near_half(s, 1e-3)) {
            const Complex q = circle_mean([this](Complex z) { return regularized_PQ(z, cfg_).Q / (z - 0.5); }, s,
                                          1e-2, 16);
            const Complex p = circle_mean([this](Complex z) { return regularized_PQ(z, cfg_).P / (z - 0.5); }, s,
                                          1e-2, 16);
            return {q, p};
        }
        const auto r = regularized_PQ(s, cfg_);
        return {r.Q / (s - 0.5), r.P / (s - 0.5)};
    }

    Complex combine(const PQ &v) const
    {
        if (gamma_.infinite) {
            return v.Q;
        }
        const Complex g = gamma_.value;
        if (std::abs(g) > 1.0) {
            return v.P / g + v.Q;
        }
        return v.P + g * v.Q;
    }

    Complex operator()(Complex s) const { return combine(pq(s)); }

    /// Relative Robin residual of a candidate point.
    double residual(Complex s) const
    {
        if (gamma_.infinite) {
            const auto r = regularized_PQ(s, cfg_);
            const Complex es = std::exp(s * std::log(cfg_.eta));
            const Complex Q = r.Q / r.den;
            if (!is_finite(Q)) {
                return std::abs(r.Q) / r.scale_Q;
            }
            return std::abs(Q) / std::abs(es);
        }
        const Complex g = gamma_.value;
        if (deflate_ && near_half(s, 1e-3)) {
            const auto v = pq(s);
            const double scale = std::abs(v.P) + std::abs(g * v.Q) + std::abs(v.Q) / cfg_.eta;
            return scale == 0.0 ? 0.0 : std::abs(v.P + g * v.Q) / scale;
        }
        // Scale by the individual terms and by |Q|/eta, the natural size of a
        // derivative, so that gamma = 0 with P = 0 stays meaningful.
        const auto r = regularized_PQ(s, cfg_);
        const double scale = r.scale_P + std::abs(g) * r.scale_Q + std::abs(r.Q) / cfg_.eta;
        return scale == 0.0 ? 0.0 : std::abs(r.P + g * r.Q) / scale;
    }

    const ExtendedComplex &gamma() const { return gamma_; }
    bool deflated() const { return deflate_; }
    const TruncationConfig &config() const { return cfg_; }

private:
    ExtendedComplex gamma_;
    TruncationConfig cfg_;
    bool deflate_;
};

struct RobinRoot
{
    SpectralPoint point;
    int multiplicity = 1;
    bool ramification = false;
    double residual = 0.0;
};

inline std::vector<RobinRoot> solve_robin_roots(ExtendedComplex gamma, const Window &window,
                                                const TruncationConfig &cfg)
{
    cfg.validate();
    RobinFunction f(gamma, cfg);
    RootFinderOptions opt;
    opt.newton_tol = cfg.newton_tol;
    opt.max_newton = cfg.max_iter;
    const auto zeros = find_zeros(f, window, opt);
    std::vector<RobinRoot> out;
    for (const auto &z : zeros) {
        RobinRoot r;
        r.point = make_point(z.location, gamma, cfg.eta);
        r.multiplicity = z.multiplicity;
        r.ramification = z.multiplicity > 1;
        r.residual = f.residual(z.location);
        out.push_back(r);
    }
    return out;
}

/// ds/dgamma along the branch through a Robin root s at finite gamma.
inline Complex ds_dgamma(Complex s, ExtendedComplex gamma, const TruncationConfig &cfg)
{
    RobinFunction f(gamma, cfg);
    auto full = [&](Complex z) {
        const auto v = f.pq(z);
        return v.P + gamma.value * v.Q;
    };
    const double r = near_half(s, 1e-3) ? 1e-2 : 1e-4 * std::max(1.0, std::abs(s));
    return -f.pq(s).Q / cauchy_derivative(full, s, r, near_half(s, 1e-3) ? 16 : 8);
}

struct TracePoint
{
    double t = 0.0;
    SpectralPoint point;
    Complex lambda_prime;
    std::string flag;
};

struct PathSpec
{
    std::vector<Complex> waypoints;
    double max_step = 0.25;
    double min_step = 1e-9;

    void validate() const
    {
        if (waypoints.size() < 2) {
            throw DomainError("path needs at least two waypoints");
        }
        if (!(min_step > 0.0) || !(max_step >= min_step)) {
            throw DomainError("path step bounds are invalid");
        }
    }
};

class StepCollapseError : public Error
{
public:
    StepCollapseError(const std::string &what, std::vector<TracePoint> partial)
        : Error(what), partial_(std::move(partial))
    {
    }
    const char *kind() const noexcept override { return "step-collapse"; }
    const std::vector<TracePoint> &partial() const { return partial_; }

private:
    std::vector<TracePoint> partial_;
};

/// Newton correction of s at fixed finite gamma.
inline std::optional<Complex> robin_newton(ExtendedComplex gamma, Complex s0, const TruncationConfig &cfg)
{
    RobinFunction f(gamma, cfg);
    return newton_polish(f, s0, 1, cfg.newton_tol, cfg.max_iter);
}

/// Predictor-corrector continuation of s(gamma) along a polygonal path in the gamma plane.
inline std::vector<TracePoint> trace_curve(const PathSpec &path, const SpectralPoint &seed,
                                           const TruncationConfig &cfg)
{
    path.validate();
    cfg.validate();
    for (const auto &w : path.waypoints) {
        if (!is_finite(w)) {
            throw PoleCrossingError("trace_curve: path passes through gamma = infinity");
        }
    }
    {
        RobinFunction f0(path.waypoints.front(), cfg);
        if (f0.residual(seed.s) > 1e-8) {
            throw DomainError("trace_curve: seed does not satisfy the Robin condition at the path start");
        }
    }
    auto slope_of = [&](Complex s, Complex g) { return (1.0 - 2.0 * s) * ds_dgamma(s, g, cfg); };
    std::vector<TracePoint> out;
    Complex s = seed.s;
    double t = 0.0;
    out.push_back({t, make_point(s, path.waypoints.front(), cfg.eta), slope_of(s, path.waypoints.front()), ""});
    double h = path.max_step;
    for (std::size_t k = 0; k + 1 < path.waypoints.size(); ++k) {
        const Complex ga = path.waypoints[k], gb = path.waypoints[k + 1];
        const double len = std::abs(gb - ga);
        double u = 0.0;
        Complex g = ga;
        while (u < len) {
            const double step = std::min(h, len - u);
            const Complex gn = (u + step >= len) ? gb : ga + (gb - ga) * ((u + step) / len);
            const Complex dsdg = ds_dgamma(s, g, cfg);
            const Complex pred = s + dsdg * (gn - g);
            const auto corr = robin_newton(gn, pred, cfg);
            const bool ok = corr && is_finite(*corr) &&
                            std::abs(*corr - pred) <= 0.2 * std::abs(pred - s) + 1e-9 * std::max(1.0, std::abs(s));
            if (!ok) {
                h *= 0.5;
                if (h < path.min_step) {
                    throw StepCollapseError("trace_curve: step size collapsed (possible ramification)", out);
                }
                continue;
            }
            s = *corr;
            g = gn;
            u += step;
            t += step;
            out.push_back({t, make_point(s, g, cfg.eta), slope_of(s, g), ""});
            h = std::min(path.max_step, h * 1.5);
        }
    }
    return out;
}

struct EtaFlow
{
    ExtendedComplex gamma;
    Complex dgamma_deta;
};

/// gamma as a function of the truncation height for a fixed constant term, with its eta-derivative.
inline EtaFlow eta_flow(Complex s, const ConstantTermCoeffs &c, double eta)
{
    TruncationConfig cfg;
    cfg.eta = eta;
    const auto pq = constant_term_PQ(s, c, cfg);
    const double threshold = 1e-14 * (std::abs(c.a) + std::abs(c.b)) * std::max(1.0, std::abs(std::exp(s * std::log(eta))));
    if (std::abs(pq.Q) <= threshold) {
        return {ExtendedComplex::infinity(), Complex(std::numeric_limits<double>::infinity(), 0.0)};
    }
    const Complex g = -pq.P / pq.Q;
    if (c.log_form) {
        // v0'' = -lambda v0 / y^2 gives the Riccati form directly.
        return {g, g * g + lambda_of_s(s) / (eta * eta)};
    }
    const Complex A = c.a * std::exp(s * std::log(eta)), B = c.b * std::exp((1.0 - s) * std::log(eta));
    const Complex v = A + B;
    const Complex d = (s * A * A + 4.0 * s * (1.0 - s) * A * B + (1.0 - s) * B * B) / (eta * eta * v * v);
    return {g, d};
}

/// Radial Fourier profile of a truncated eigenfunction at one height, reusable for many x.
class TruncatedProfile
{
public:
    TruncatedProfile(double y, const EigenfunctionData &data) : y_(y)
    {
        if (!(y > 0.0)) {
            throw DomainError("evaluate_truncated: y must be positive");
        }
        const Complex nu = data.point.s - 0.5;
        const double sy = std::sqrt(y);
        double mag = 0.0;
        radial_.resize(data.fourier.size());
        for (std::size_t m = 1; m <= data.fourier.size(); ++m) {
            const auto k = bessel_k(nu, 2.0 * pi * static_cast<double>(m) * y);
            radial_[m - 1] = data.fourier[m - 1] * sy * k.value;
            mag += std::abs(radial_[m - 1]);
        }
        if (!radial_.empty()) {
            const double last = std::abs(radial_.back());
            if (last > 1e-13 * std::max(mag, 1e-300) && last > 1e-15) {
                throw TailTooLargeError("evaluate_truncated: Fourier tail not negligible at this height");
            }
        }
        const bool include_constant = !data.truncated || y <= data.point.eta;
        if (include_constant) {
            const auto &c = data.coeffs;
            const Complex s = data.point.s;
            if (c.log_form) {
                constant_ = sy * (c.a + c.b * std::log(y));
            } else {
                constant_ = c.a * std::exp(s * std::log(y)) + c.b * std::exp((1.0 - s) * std::log(y));
            }
        }
    }

    Complex at(double x) const
    {
        CompensatedSum acc;
        for (std::size_t m = radial_.size(); m >= 1; --m) {
            acc.add(radial_[m - 1] * (2.0 * std::cos(2.0 * pi * static_cast<double>(m) * x)));
        }
        acc.add(constant_);
        return acc.value();
    }

    Complex constant() const { return constant_; }

private:
    double y_;
    std::vector<Complex> radial_;
    Complex constant_{0.0, 0.0};
};

inline Complex evaluate_truncated(SurfacePoint z, const EigenfunctionData &data)
{
    return TruncatedProfile(z.y, data).at(z.x);
}

/// Pairing of the constant term against the indicator of the strip y1 <= y <= y2 under dy/y^2.
inline Complex indicator_pairing(const ConstantTermCoeffs &c, Complex s, double y1, double y2)
{
    if (!(y1 > 0.0) || !(y2 > y1)) {
        throw DomainError("indicator_pairing: need 0 < y1 < y2");
    }
    if (c.log_form) {
        auto anti = [&](double y) {
            const double r = 1.0 / std::sqrt(y);
            return c.a * (-2.0 * r) + c.b * (-2.0 * r * std::log(y) - 4.0 * r);
        };
        return anti(y2) - anti(y1);
    }
    if (std::abs(s) < 1e-12 || std::abs(s - 1.0) < 1e-12) {
        throw DomainError("indicator_pairing: s = 0 and s = 1 are excluded");
    }
    auto pw = [](double y, Complex e) { return std::exp(e * std::log(y)); };
    return c.a * (pw(y2, s - 1.0) - pw(y1, s - 1.0)) / (s - 1.0) - c.b * (pw(y2, -s) - pw(y1, -s)) / s;
}

/// Eigenfunction data of the truncated Eisenstein series at s.
inline EigenfunctionData eisenstein_data(Complex s, const TruncationConfig &cfg, int m_max = 24)
{
    EigenfunctionData d;
    d.point = make_point(s, gamma_of_s(s, cfg), cfg.eta);
    d.coeffs = {1.0, beta_of(s, cfg), false};
    d.fourier.resize(m_max);
    for (int m = 1; m <= m_max; ++m) {
        d.fourier[m - 1] = fourier_coefficient(m, s);
    }
    d.truncated = true;
    return d;
}

} // namespace robin

#endif
