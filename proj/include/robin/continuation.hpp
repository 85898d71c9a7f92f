#ifndef ROBIN_CONTINUATION_HPP
#define ROBIN_CONTINUATION_HPP

#include "robin/errors.hpp"
#include "robin/modular_surface.hpp"
#include "robin/numerics.hpp"
#include "robin/robin_maps.hpp"
#include "robin/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace robin
{

struct PoleFlag
{
    Complex location;
    int order = 1;
    double uncertainty = 0.0; // spread of the ratio sequence at the chosen order
};

enum class DiscSource
{
    oracle,
    chain
};

struct TaylorDisc
{
    Complex center;
    double radius = 0.0;
    std::vector<Complex> coeffs; // Taylor coefficients of the pole-cleared function
    DiscSource source = DiscSource::oracle;
    double sample_error = 0.0;   // absolute error of the cleared samples on the circle
    std::vector<Complex> samples; // raw beta on the circle, kept so poles can be re-cleared
    double sample_rel = 0.0;     // nominal relative error of the raw samples
};

struct DiscChain
{
    std::vector<TaylorDisc> discs;
    std::vector<PoleFlag> pole_flags;
};

struct ContinuationOptions
{
    double y1 = 1.5, y2 = 2.5;        // heights of the two constant-term samples
    double sample_tol = 1e-13;
    double sampleable_re = 1.1;       // lattice sums converge to the right of this line
    double radius_factor = 0.6;
    double min_oracle_radius = 0.3;
    double max_radius = 0.9;
    double anchor_re = 2.0;           // oracle discs backing chain steps sit on this line
    double pole_reach = 6.0;          // poles are flagged up to this many radii from a disc center
    int nodes = 64;
    int max_order = 24;
    int max_discs = 400;
    bool use_functional_equation = true;
};

struct ContinuedValue
{
    Complex value;
    double error_estimate = 0.0;
    bool pole = false;
    bool reflected = false; // obtained as 1/beta(1 - s) from the mirrored path
};

/// beta(s) from the x-averaged lattice sum at two heights; valid where the lattice sum converges.
inline Complex beta_from_samples(Complex s, const ContinuationOptions &opt = {})
{
    const double y1 = opt.y1, y2 = opt.y2;
    const Complex e1 = constant_term_oracle(y1, s, opt.sample_tol);
    const Complex e2 = constant_term_oracle(y2, s, opt.sample_tol);
    auto pw = [](double y, Complex e) { return std::exp(e * std::log(y)); };
    return (e1 * pw(y2, s) - e2 * pw(y1, s)) / (pw(y1, 1.0 - s) * pw(y2, s) - pw(y2, 1.0 - s) * pw(y1, s));
}

namespace detail
{

inline Complex pole_factor(Complex z, const std::vector<PoleFlag> &poles)
{
    Complex f = 1.0;
    for (const auto &p : poles) {
        f *= std::pow(z - p.location, p.order);
    }
    return f;
}

inline std::vector<Complex> coefficients_from_samples(const std::vector<Complex> &samples, double radius, int order)
{
    const int n = static_cast<int>(samples.size());
    std::vector<Complex> c(order + 1);
    double rk = 1.0;
    for (int k = 0; k <= order; ++k) {
        CompensatedSum acc;
        for (int j = 0; j < n; ++j) {
            acc.add(samples[j] * std::polar(1.0, -2.0 * pi * k * j / n));
        }
        c[k] = acc.value() / (static_cast<double>(n) * rk);
        rk *= radius;
    }
    return c;
}

/// Truncated Taylor evaluation with the order chosen to balance sample noise against the series tail.
inline ContinuedValue evaluate_disc(const TaylorDisc &d, Complex z)
{
    const double dist = std::abs(z - d.center);
    const double rho = dist / d.radius;
    const int K = static_cast<int>(d.coeffs.size()) - 1;
    Complex partial = 0.0, best_value = 0.0;
    double best_err = std::numeric_limits<double>::infinity();
    double noise = 0.0;
    Complex zk = 1.0;
    double rhok = 1.0;
    for (int k = 0; k <= K; ++k) {
        partial += d.coeffs[k] * zk;
        noise += d.sample_error * rhok;
        double tail = 0.0;
        double dk = std::abs(zk) * dist;
        for (int j = k + 1; j <= std::min(K, k + 2); ++j) {
            tail = std::max(tail, std::abs(d.coeffs[j]) * dk);
            dk *= dist;
        }
        if (k + 1 > K) {
            tail = std::abs(d.coeffs[K]) * std::abs(zk) * dist * 2.0;
        }
        const double err = noise + 2.0 * tail;
        if (k >= 2 && err < best_err) {
            best_err = err;
            best_value = partial;
        }
        zk *= (z - d.center);
        rhok *= rho;
    }
    if (K < 2) {
        return {partial, noise};
    }
    return {best_value, best_err};
}

/// Pole location from the coefficient ratios c_k/c_{k+1} (Domb-Sykes). The
/// ratio is read where consecutive ratios agree best before the noise takes over.
inline std::optional<PoleFlag> detect_pole(const std::vector<Complex> &c, Complex center, double radius,
                                           double noise, double reach)
{
    const int K = static_cast<int>(c.size()) - 1;
    std::vector<Complex> ratios;
    for (int k = 2; k < K; ++k) {
        if (c[k + 1] == 0.0) {
            break;
        }
        const double noise_k = noise / std::pow(radius, k + 1);
        if (std::abs(c[k + 1]) < 1e3 * noise_k) {
            break;
        }
        ratios.push_back(c[k] / c[k + 1]);
    }
    if (ratios.size() < 4) {
        return std::nullopt;
    }
    std::size_t best = 1;
    double best_spread = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < ratios.size(); ++i) {
        const double spread = std::abs(ratios[i] - ratios[i - 1]);
        if (spread < best_spread) {
            best_spread = spread;
            best = i;
        }
    }
    const Complex est = ratios[best];
    if (best_spread > 1e-4 * std::abs(est) || std::abs(est) > reach) {
        return std::nullopt;
    }
    // Order from c_{k+1}/c_k * delta = (k + m)/(k + 1); index of ratios[i] is k = i + 2.
    const int k = static_cast<int>(best) + 2;
    const Complex q = c[k + 1] / c[k] * est;
    const double m = std::real(q) * (k + 1) - k;
    const int order = std::max(1, static_cast<int>(std::lround(m)));
    return PoleFlag{center + est, order, best_spread};
}

} // namespace detail

/// The continued scattering coefficient: a chain of Taylor discs for beta times pole factors.
class ContinuedBeta
{
public:
    explicit ContinuedBeta(ContinuationOptions opt = {}) : opt_(opt) {}

    const DiscChain &chain() const { return chain_; }
    const ContinuationOptions &options() const { return opt_; }

    /// Run the chain along a polygonal path and return beta at the final waypoint.
    ContinuedValue continue_along(const PathSpec &path, double tol)
    {
        path.validate();
        const Complex start = path.waypoints.front();
        if (!sampleable(start, radius_for_oracle(start))) {
            throw DomainError("continue_beta: path must start where the lattice sum converges");
        }
        if (chain_.discs.empty()) {
            add_oracle_disc(start);
        }
        std::vector<Complex> pts;
        double total = 0.0;
        for (std::size_t k = 0; k + 1 < path.waypoints.size(); ++k) {
            total += std::abs(path.waypoints[k + 1] - path.waypoints[k]);
        }
        auto point_at = [&](double t) {
            for (std::size_t k = 0; k + 1 < path.waypoints.size(); ++k) {
                const double len = std::abs(path.waypoints[k + 1] - path.waypoints[k]);
                if (t <= len || k + 2 == path.waypoints.size()) {
                    return len == 0.0 ? path.waypoints[k]
                                      : path.waypoints[k] + (path.waypoints[k + 1] - path.waypoints[k]) *
                                                                std::min(1.0, t / len);
                }
                t -= len;
            }
            return path.waypoints.back();
        };
        const Complex target = path.waypoints.back();
        double t = 0.0;
        while (true) {
            const auto best = evaluate(target);
            if (best && best->error_estimate <= 0.1 * tol) {
                return *best;
            }
            if (t >= total) {
                if (best && best->error_estimate <= tol) {
                    return *best;
                }
                throw RadiusExhaustionError("continue_beta: target not reached within tolerance");
            }
            // Step forward along the path as far as the current discs stay trustworthy.
            double step = std::min(path.max_step, total - t);
            bool placed = false;
            while (step >= path.min_step) {
                const Complex c = point_at(t + step);
                if (try_add_disc(c, tol)) {
                    t += step;
                    placed = true;
                    break;
                }
                step *= 0.5;
            }
            if (!placed) {
                if (best && best->error_estimate <= tol) {
                    return *best;
                }
                throw StepCollapseError("continue_beta: disc step collapsed", {});
            }
            if (static_cast<int>(chain_.discs.size()) > opt_.max_discs) {
                throw RadiusExhaustionError("continue_beta: disc budget exhausted");
            }
        }
    }

    /// Best available value of beta at z from the existing discs.
    std::optional<ContinuedValue> evaluate(Complex z) const
    {
        std::optional<ContinuedValue> best;
        for (const auto &d : chain_.discs) {
            if (std::abs(z - d.center) > 3.5 * d.radius) {
                continue;
            }
            const auto g = detail::evaluate_disc(d, z);
            if (!best || g.error_estimate < best->error_estimate) {
                best = g;
            }
        }
        if (!best) {
            return std::nullopt;
        }
        const Complex f = detail::pole_factor(z, chain_.pole_flags);
        if (std::abs(f) < 1e-14) {
            return ContinuedValue{Complex(std::numeric_limits<double>::infinity(), 0.0), 0.0, true};
        }
        return ContinuedValue{best->value / f, best->error_estimate / std::abs(f), false};
    }

    /// Pole-cleared function g = beta * prod (z - p)^m, or nullopt if no disc covers z.
    std::optional<ContinuedValue> cleared(Complex z) const
    {
        std::optional<ContinuedValue> best;
        for (const auto &d : chain_.discs) {
            if (std::abs(z - d.center) > 3.5 * d.radius) {
                continue;
            }
            const auto g = detail::evaluate_disc(d, z);
            if (!best || g.error_estimate < best->error_estimate) {
                best = g;
            }
        }
        return best;
    }

    /// beta as scattering data: numerator from the chain, denominator the pole factor.
    ScatteringData as_scattering(double eta_floor = 1.0) const
    {
        auto self = std::make_shared<ContinuedBeta>(*this);
        ScatteringData d;
        d.eta_floor = eta_floor;
        d.numerator = [self](Complex z) {
            const auto v = self->cleared(z);
            if (!v) {
                throw RadiusExhaustionError("continued beta requested outside the disc chain");
            }
            return v->value;
        };
        d.denominator = [self](Complex z) { return detail::pole_factor(z, self->chain_.pole_flags); };
        return d;
    }

private:
    double radius_for_oracle(Complex c) const
    {
        double r = std::min(opt_.max_radius, opt_.radius_factor * (c.real() - opt_.sampleable_re));
        for (const auto &p : chain_.pole_flags) {
            r = std::min(r, opt_.radius_factor * std::abs(c - p.location));
        }
        return r;
    }

    bool sampleable(Complex c, double r) const
    {
        return r >= opt_.min_oracle_radius && c.real() - r >= opt_.sampleable_re;
    }

    /// Coefficients of the pole-cleared samples plus an a posteriori noise floor
    /// read off the highest coefficients the node count resolves.
    void fit_disc(TaylorDisc &d) const
    {
        const int n = static_cast<int>(d.samples.size());
        std::vector<Complex> g(n);
        double mag = 0.0;
        for (int j = 0; j < n; ++j) {
            g[j] = d.samples[j] * detail::pole_factor(circle_node(d.center, d.radius, j, n), chain_.pole_flags);
            mag = std::max(mag, std::abs(g[j]));
        }
        const int top = n / 2 - 1;
        auto c = detail::coefficients_from_samples(g, d.radius, top);
        double floor = 0.0;
        double rk = std::pow(d.radius, opt_.max_order);
        for (int k = opt_.max_order; k <= top; ++k) {
            floor = std::max(floor, std::abs(c[k]) * rk);
            rk *= d.radius;
        }
        c.resize(opt_.max_order + 1);
        d.coeffs = std::move(c);
        d.sample_error = std::max(d.sample_rel * mag, 2.0 * floor);
    }

    /// Ratio-test coefficients of beta with every flagged pole cleared except `skip`.
    std::vector<Complex> probe_coefficients(const TaylorDisc &d, int skip, double &mag) const
    {
        const int n = static_cast<int>(d.samples.size());
        std::vector<PoleFlag> others;
        for (int i = 0; i < static_cast<int>(chain_.pole_flags.size()); ++i) {
            if (i != skip) {
                others.push_back(chain_.pole_flags[i]);
            }
        }
        std::vector<Complex> g(n);
        mag = 0.0;
        for (int j = 0; j < n; ++j) {
            g[j] = d.samples[j] * detail::pole_factor(circle_node(d.center, d.radius, j, n), others);
            mag = std::max(mag, std::abs(g[j]));
        }
        return detail::coefficients_from_samples(g, d.radius, n / 2 - 1);
    }

    /// Look for poles near a new disc, sharpening known flags when this disc sees
    /// them more clearly, then refit every disc with the updated flags.
    void finish_disc(TaylorDisc &d)
    {
        bool changed = false;
        for (int i = 0; i < static_cast<int>(chain_.pole_flags.size()); ++i) {
            auto &flag = chain_.pole_flags[i];
            if (std::abs(flag.location - d.center) > opt_.pole_reach * d.radius) {
                continue;
            }
            double mag = 0.0;
            const auto c = probe_coefficients(d, i, mag);
            const auto pole = detail::detect_pole(c, d.center, d.radius, d.sample_rel * mag, opt_.pole_reach * d.radius);
            if (pole && std::abs(pole->location - flag.location) < 1e-3 && pole->uncertainty < flag.uncertainty) {
                flag = *pole;
                changed = true;
            }
        }
        for (int pass = 0; pass < 4; ++pass) {
            double mag = 0.0;
            const auto c = probe_coefficients(d, -1, mag);
            const auto pole = detail::detect_pole(c, d.center, d.radius, d.sample_rel * mag, opt_.pole_reach * d.radius);
            if (!pole) {
                break;
            }
            bool known = false;
            for (const auto &p : chain_.pole_flags) {
                known = known || std::abs(p.location - pole->location) < 1e-3;
            }
            if (known) {
                break;
            }
            chain_.pole_flags.push_back(*pole);
            changed = true;
        }
        fit_disc(d);
        if (changed) {
            for (auto &other : chain_.discs) {
                fit_disc(other);
            }
        }
    }

    void add_oracle_disc(Complex c)
    {
        TaylorDisc d;
        d.center = c;
        d.radius = radius_for_oracle(c);
        d.source = DiscSource::oracle;
        const int n = opt_.nodes;
        std::vector<Complex> samples(n);
        for (int j = 0; j < n; ++j) {
            samples[j] = beta_from_samples(circle_node(c, d.radius, j, n), opt_);
            if (!is_finite(samples[j])) {
                throw NonFiniteError("continue_beta: non-finite oracle sample");
            }
        }
        d.samples = std::move(samples);
        d.sample_rel = 1e-15;
        finish_disc(d);
        chain_.discs.push_back(d);
    }

    bool try_add_disc(Complex c, double tol)
    {
        const double r_or = radius_for_oracle(c);
        if (sampleable(c, r_or)) {
            // Re-detect poles with the new disc; drop flags later refuted is not attempted.
            add_oracle_disc(c);
            return true;
        }
        // Back the chain step with an oracle disc level with it in the convergent region.
        const Complex anchor(std::max(c.real(), opt_.anchor_re), c.imag());
        const double r_anchor = radius_for_oracle(anchor);
        bool anchored = false;
        for (const auto &d : chain_.discs) {
            anchored = anchored || (d.source == DiscSource::oracle && std::abs(d.center - anchor) <= 0.5 * d.radius);
        }
        if (!anchored && sampleable(anchor, r_anchor)) {
            add_oracle_disc(anchor);
        }
        // Chain disc: samples from the best existing discs; the largest radius
        // whose samples are still well inside the error budget wins.
        double r = opt_.max_radius;
        for (int attempt = 0; attempt < 8; ++attempt, r *= 0.7) {
            const int n = opt_.nodes;
            std::vector<Complex> g(n);
            double worst = 0.0, mag = 0.0;
            bool ok = true;
            for (int j = 0; j < n; ++j) {
                const Complex z = circle_node(c, r, j, n);
                const auto v = cleared(z);
                const Complex f = detail::pole_factor(z, chain_.pole_flags);
                if (!v || f == 0.0) {
                    ok = false;
                    break;
                }
                g[j] = v->value / f;
                worst = std::max(worst, v->error_estimate);
                mag = std::max(mag, std::abs(v->value));
            }
            if (!ok || worst > 0.1 * tol) {
                continue;
            }
            TaylorDisc d;
            d.center = c;
            d.radius = r;
            d.source = DiscSource::chain;
            d.samples = std::move(g);
            d.sample_rel = worst / std::max(mag, 1e-300);
            finish_disc(d);
            chain_.discs.push_back(d);
            return true;
        }
        return false;
    }

    ContinuationOptions opt_;
    DiscChain chain_;
};

/// Continue beta along path from a convergent-region start and return its value at the end.
/// With the functional equation enabled, targets left of the critical line are reached
/// on the path mirrored across Re s = 1/2 and inverted there.
inline std::pair<ContinuedValue, DiscChain> continue_beta(const PathSpec &path, double tol,
                                                          const ContinuationOptions &opt = {})
{
    path.validate();
    ContinuedBeta cb(opt);
    if (!opt.use_functional_equation || path.waypoints.back().real() >= 0.5) {
        auto v = cb.continue_along(path, tol);
        return {v, cb.chain()};
    }
    // beta(s) = 1 / beta(1 - s) and beta(conj s) = conj beta(s).
    PathSpec mirrored = path;
    for (auto &w : mirrored.waypoints) {
        if (w.real() < 0.5) {
            w = Complex(1.0 - w.real(), w.imag());
        }
    }
    const auto v = cb.continue_along(mirrored, tol);
    ContinuedValue out;
    out.reflected = true;
    if (v.pole) {
        out.value = 0.0;
        return {out, cb.chain()};
    }
    if (std::abs(v.value) == 0.0) {
        out.value = Complex(std::numeric_limits<double>::infinity(), 0.0);
        out.pole = true;
        return {out, cb.chain()};
    }
    out.value = 1.0 / std::conj(v.value);
    out.error_estimate = v.error_estimate / std::norm(v.value);
    return {out, cb.chain()};
}

/// Admissible heights tried by psi_map, in retry order after the configured one.
inline std::vector<double> eta_retry_order(double configured)
{
    const std::vector<double> pool{1.5, 2.0, 3.0, 5.0};
    std::vector<double> out{configured};
    for (double e : pool) {
        if (e > configured) {
            out.push_back(e);
        }
    }
    for (auto it = pool.rbegin(); it != pool.rend(); ++it) {
        if (*it < configured) {
            out.push_back(*it);
        }
    }
    return out;
}

namespace detail
{

inline Complex fourier_derivative_half(int m)
{
    return holo_derivative([m](Complex z) { return fourier_coefficient(m, z); }, DiscSpec{0.5, 0.05, 1}, 32)[1];
}

/// gamma and eigenfunction data at one height; nullopt if the height is degenerate for s0.
inline std::optional<std::pair<SpectralPoint, EigenfunctionData>> psi_at(Complex s0, const TruncationConfig &cfg,
                                                                         int m_max)
{
    if (!(cfg.eta > cfg.surface.eta_floor)) {
        return std::nullopt;
    }
    ExtendedComplex gamma;
    try {
        gamma = gamma_of_s(s0, cfg);
    } catch (const Error &) {
        return std::nullopt;
    }
    if (gamma.infinite || !is_finite(gamma.value)) {
        return std::nullopt;
    }
    if (RobinFunction(gamma, cfg).residual(s0) > 1e-9) {
        return std::nullopt;
    }
    EigenfunctionData d;
    d.point = make_point(s0, gamma, cfg.eta);
    d.truncated = true;
    d.fourier.resize(m_max);
    if (near_half(s0, 1e-9) && half_degenerate(cfg)) {
        // M[1/2] vanishes; the eigenfunction is the s-derivative, sqrt(y)(beta'(1/2) + 2 log y).
        const Complex dbeta =
            holo_derivative([&](Complex z) { return cfg.surface.phi(z); }, DiscSpec{0.5, 0.05, 1}, 32)[1];
        d.coeffs = {dbeta, 2.0, true};
        for (int m = 1; m <= m_max; ++m) {
            d.fourier[m - 1] = fourier_derivative_half(m);
        }
        return std::pair{d.point, d};
    }
    const auto beta = scattering_phi(cfg.surface, s0);
    if (beta.pole) {
        return std::nullopt;
    }
    d.coeffs = {1.0, beta.value, false};
    for (int m = 1; m <= m_max; ++m) {
        d.fourier[m - 1] = fourier_coefficient(m, s0);
    }
    return std::pair{d.point, d};
}

} // namespace detail

/// The composition s -> lambda -> gamma -> eigenfunction. The configured height
/// is tried first; if gamma degenerates there the other admissible heights are used.
inline std::pair<SpectralPoint, EigenfunctionData> psi_map(Complex s0, const TruncationConfig &cfg, int m_max = 24)
{
    cfg.validate();
    for (double eta : eta_retry_order(cfg.eta)) {
        TruncationConfig c = cfg;
        c.eta = eta;
        if (auto r = detail::psi_at(s0, c, m_max)) {
            return *r;
        }
    }
    throw EtaExhaustionError("psi_map: gamma degenerates at every admissible height");
}

struct HalfPoint
{
    Complex beta_half;
    bool m_vanishes = false;
    double error_estimate = 0.0;
};

/// Limit of beta at s = 1/2 from values on a small circle around it.
template <typename F>
HalfPoint half_point_from(F &&beta, double error_estimate = 0.0, double radius = 1e-3)
{
    const Complex v = circle_mean(beta, Complex(0.5, 0.0), radius, 32);
    if (!is_finite(v) || std::abs(std::abs(v) - 1.0) > 1e-6) {
        throw NonUnimodularError("half_point_analysis: limit at 1/2 is not unimodular");
    }
    return {v, std::abs(v + 1.0) <= 1e-6, error_estimate};
}

/// beta(1/2) and whether the constant term degenerates there. For the modular
/// surface beta is continued from s = 2 using lattice-sum samples only.
inline HalfPoint half_point_analysis(const TruncationConfig &cfg, const ContinuationOptions &opt = {},
                                     double tol = 1e-7)
{
    cfg.validate();
    if (!cfg.surface.lattice_oracle) {
        return half_point_from([&](Complex z) { return cfg.surface.phi(z); });
    }
    PathSpec path;
    path.waypoints = {Complex(2.0, 0.0), Complex(0.5, 0.0)};
    path.max_step = 0.5;
    path.min_step = 1e-3;
    ContinuedBeta cb(opt);
    const auto v = cb.continue_along(path, tol);
    return half_point_from(
        [&](Complex z) {
            const auto e = cb.evaluate(z);
            if (!e) {
                throw RadiusExhaustionError("half_point_analysis: circle around 1/2 not covered");
            }
            return e->value;
        },
        v.error_estimate);
}

enum class EigenfunctionKind
{
    truncated_series,
    conjugated_series,
    derivative_series
};

inline const char *to_string(EigenfunctionKind k)
{
    switch (k) {
    case EigenfunctionKind::truncated_series:
        return "truncated_series";
    case EigenfunctionKind::conjugated_series:
        return "conjugated_series";
    case EigenfunctionKind::derivative_series:
        return "derivative_series";
    }
    return "unknown";
}

/// Which function realizes the eigenfunction at s. At s = 1/2 the truncated series
/// itself vanishes when beta(1/2) = -1, and the s-derivative takes its place.
inline EigenfunctionKind classify_eigenfunction(Complex s, const TruncationConfig &cfg)
{
    cfg.validate();
    if (near_half(s, 1e-9)) {
        const auto h = half_point_from([&](Complex z) { return cfg.surface.phi(z); });
        return h.m_vanishes ? EigenfunctionKind::derivative_series : EigenfunctionKind::truncated_series;
    }
    if (scattering_phi(cfg.surface, s).pole) {
        return EigenfunctionKind::conjugated_series;
    }
    return EigenfunctionKind::truncated_series;
}

/// Same, with poles taken from the flags of a continuation chain.
inline EigenfunctionKind classify_eigenfunction(Complex s, const TruncationConfig &cfg, const DiscChain &chain,
                                                double pole_tol = 1e-6)
{
    for (const auto &p : chain.pole_flags) {
        if (std::abs(s - p.location) <= pole_tol) {
            return EigenfunctionKind::conjugated_series;
        }
    }
    if (near_half(s, 1e-9)) {
        return classify_eigenfunction(s, cfg);
    }
    return EigenfunctionKind::truncated_series;
}

} // namespace robin

#endif
