#ifndef ROBIN_MAASS_SELBERG_HPP
#define ROBIN_MAASS_SELBERG_HPP

#include "robin/errors.hpp"
#include "robin/modular_surface.hpp"
#include "robin/numerics.hpp"
#include "robin/robin_maps.hpp"
#include "robin/root_finding.hpp"
#include "robin/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace robin
{

enum class PairingVia
{
    msr_formula,
    quadrature
};

struct PairingValue
{
    Complex value;
    PairingVia via = PairingVia::msr_formula;
    bool pole = false;
    double error_estimate = 0.0;
};

namespace detail
{

struct Wronskian
{
    Complex W;       // P'Q - PQ' for the regularized pair
    double scale;    // |P'Q| + |PQ'|
    Complex Q, den;
};

inline Wronskian regularized_wronskian(Complex s, const TruncationConfig &cfg, double radius = 0.05)
{
    const int nodes = 32;
    std::vector<Complex> qs(nodes), ps(nodes);
    for (int j = 0; j < nodes; ++j) {
        const auto r = regularized_PQ(circle_node(s, radius, j, nodes), cfg);
        qs[j] = r.Q;
        ps[j] = r.P;
    }
    auto first = [&](const std::vector<Complex> &v) {
        CompensatedSum acc;
        for (int j = 0; j < nodes; ++j) {
            acc.add(v[j] * std::polar(1.0, -2.0 * pi * j / nodes));
        }
        return acc.value() / (static_cast<double>(nodes) * radius);
    };
    const auto r = regularized_PQ(s, cfg);
    const Complex dP = first(ps), dQ = first(qs);
    return {dP * r.Q - r.P * dQ, std::abs(dP * r.Q) + std::abs(r.P * dQ), r.Q, r.den};
}

inline Complex pairing_raw(Complex s, const TruncationConfig &cfg)
{
    const auto w = regularized_wronskian(s, cfg);
    return w.W / (w.den * w.den * (2.0 * s - 1.0));
}

} // namespace detail

/// Self-pairing of the truncated Eisenstein series from boundary data at eta.
inline PairingValue truncated_pairing_msr(Complex s, const TruncationConfig &cfg)
{
    cfg.validate();
    const Complex den = cfg.surface.denominator(s);
    if (std::abs(den) < 1e-13 * std::abs(cfg.surface.numerator(s))) {
        return {Complex(std::numeric_limits<double>::infinity(), 0.0), PairingVia::msr_formula, true, 0.0};
    }
    if (near_half(s, 1e-4)) {
        // (2s - 1) is a removable singularity of the quotient.
        const Complex v = circle_mean([&](Complex z) { return detail::pairing_raw(z, cfg); }, s, 1e-2, 32);
        return {v, PairingVia::msr_formula, false, 1e-12 * std::abs(v)};
    }
    const auto w = detail::regularized_wronskian(s, cfg);
    const Complex v = w.W / (w.den * w.den * (2.0 * s - 1.0));
    const double err = 1e-14 * w.scale / std::abs(w.den * w.den * (2.0 * s - 1.0));
    return {v, PairingVia::msr_formula, false, err};
}

struct LambdaPrime
{
    Complex value;
    bool ramification = false;
    bool infinite = false;
};

/// dlambda/dgamma at a Robin point: v0(eta)^2 divided by the self-pairing.
inline LambdaPrime lambda_prime_of_gamma(const SpectralPoint &point, const TruncationConfig &cfg)
{
    cfg.validate();
    auto formula = [&](Complex z) {
        const auto w = detail::regularized_wronskian(z, cfg);
        return w.Q * w.Q * (2.0 * z - 1.0) / w.W;
    };
    const Complex s = point.s;
    if (half_degenerate(cfg) && near_half(s, 1e-3)) {
        return {circle_mean(formula, s, 1e-2, 32), false, false};
    }
    const auto w = detail::regularized_wronskian(s, cfg);
    if (std::abs(w.Q) < 1e-10 * std::abs(w.den * std::exp(s * std::log(cfg.eta))) &&
        std::abs(w.W) > 1e-6 * w.scale) {
        return {0.0, false, false};
    }
    if (std::abs(w.W) <= 1e-6 * w.scale) {
        return {Complex(std::numeric_limits<double>::infinity(), 0.0), true, true};
    }
    return {w.Q * w.Q * (2.0 * s - 1.0) / w.W, false, false};
}

/// Bilinear pairing of the truncated series with itself by quadrature over the
/// standard fundamental domain, from the Fourier expansion.
inline PairingValue pairing_quadrature_oracle(Complex s, const TruncationConfig &cfg, double tol = 1e-9,
                                              int max_nodes = 256)
{
    cfg.validate();
    if (s.real() <= 1.1) {
        throw DomainError("pairing_quadrature_oracle: needs Re s > 1.1");
    }
    const EigenfunctionData data = eisenstein_data(s, cfg);
    const double eta = cfg.eta, y_split = 1.2;
    if (!(eta > y_split)) {
        throw DomainError("pairing_quadrature_oracle: eta must exceed the split height 1.2");
    }
    auto curved = [&](int n) {
        const auto [gx, gw] = gauss_legendre(n, 0.0, 0.5);
        const auto [gt, gtw] = gauss_legendre(n, 0.0, 1.0);
        CompensatedSum acc;
        for (int i = 0; i < n; ++i) {
            const double x = gx[i], ylow = std::sqrt(1.0 - x * x), len = y_split - ylow;
            for (int j = 0; j < n; ++j) {
                const double y = ylow + len * gt[j];
                const Complex v = evaluate_truncated({x, y}, data);
                acc.add(2.0 * gw[i] * gtw[j] * len * v * v / (y * y));
            }
        }
        return acc.value();
    };
    auto strip = [&](int n, double ya, double yb) {
        const auto [gx, gw] = gauss_legendre(n, 0.0, 0.5);
        const auto [gy, gyw] = gauss_legendre(n, ya, yb);
        CompensatedSum acc;
        for (int j = 0; j < n; ++j) {
            const TruncatedProfile prof(gy[j], data);
            for (int i = 0; i < n; ++i) {
                const Complex v = prof.at(gx[i]);
                acc.add(2.0 * gw[i] * gyw[j] * v * v / (gy[j] * gy[j]));
            }
        }
        return acc.value();
    };
    auto total = [&](int n) {
        // Just above eta the constant term is gone and the integrand is exponentially small.
        return curved(n) + strip(n, y_split, eta) + strip(n, eta * (1.0 + 1e-15), eta + 3.0);
    };
    int n = 16;
    Complex prev = total(n);
    while (true) {
        n *= 2;
        if (n > max_nodes) {
            throw QuadratureBudgetError("pairing_quadrature_oracle: node budget exhausted");
        }
        const Complex cur = total(n);
        const double diff = std::abs(cur - prev);
        if (diff <= tol * std::abs(cur)) {
            return {cur, PairingVia::quadrature, false, diff};
        }
        prev = cur;
    }
}

struct RamificationHit
{
    Complex s;
    int order = 1;
    double pairing_abs = 0.0;
    bool verified = false;
};

/// Zeros of gamma'(s) in a window, i.e. zeros of the boundary Wronskian away
/// from s = 1/2, each checked against the vanishing of the self-pairing.
inline std::vector<RamificationHit> ramification_scan(const Window &window, const TruncationConfig &cfg)
{
    cfg.validate();
    int k = 0;
    const bool half_inside = window.contains(0.5, 2e-2);
    if (half_inside) {
        k = winding_number([&](Complex z) { return detail::regularized_wronskian(z, cfg).W; }, 0.5, 1e-2, 32);
        k = std::max(k, 0);
    }
    auto deflated = [&](Complex z) {
        if (k > 0) {
            if (near_half(z, 1e-3)) {
                return circle_mean(
                    [&](Complex u) { return detail::regularized_wronskian(u, cfg).W / std::pow(u - 0.5, k); }, z,
                    1e-2, 32);
            }
            return detail::regularized_wronskian(z, cfg).W / std::pow(z - 0.5, k);
        }
        return detail::regularized_wronskian(z, cfg).W;
    };
    RootFinderOptions opt;
    opt.newton_tol = std::max(cfg.newton_tol, 1e-12);
    const auto zeros = find_zeros(deflated, window, opt);
    // Typical pairing size on a coarse grid of the window.
    std::vector<double> mags;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            const Complex z(window.x0 + (i + 0.5) / 5.0 * window.width(), window.y0 + (j + 0.5) / 5.0 * window.height());
            const auto p = truncated_pairing_msr(z, cfg);
            if (!p.pole && is_finite(p.value)) {
                mags.push_back(std::abs(p.value));
            }
        }
    }
    std::sort(mags.begin(), mags.end());
    const double typical = mags.empty() ? 1.0 : mags[mags.size() / 2];
    std::vector<RamificationHit> out;
    for (const auto &z : zeros) {
        if (near_half(z.location, 1e-6)) {
            continue;
        }
        RamificationHit h;
        h.s = z.location;
        h.order = z.multiplicity + 1;
        const auto p = truncated_pairing_msr(z.location, cfg);
        h.pairing_abs = std::abs(p.value);
        h.verified = !p.pole && h.pairing_abs <= 1e-6 * typical;
        out.push_back(h);
    }
    return out;
}

/// Residual of the s-derivative of the constant-term equation, -y^2 N'' = lambda N + lambda'(s) M_0 with N = dM_0/ds.
inline double jordan_chain_residual(Complex s, const TruncationConfig &cfg)
{
    cfg.validate();
    if (near_half(s, 1e-6)) {
        throw DomainError("jordan_chain_residual: s = 1/2 is excluded");
    }
    const Complex beta = beta_of(s, cfg);
    const Complex dbeta =
        holo_derivative([&](Complex z) { return cfg.surface.phi(z); }, DiscSpec{s, 0.02, 1}, 32)[1];
    const Complex lam = lambda_of_s(s);
    double worst = 0.0;
    for (double frac : {0.5, 0.625, 0.75, 0.875, 1.0}) {
        const double y = frac * cfg.eta, L = std::log(y);
        const Complex ys = std::exp(s * L), y1s = std::exp((1.0 - s) * L);
        const Complex M0 = ys + beta * y1s;
        const Complex N = L * ys + dbeta * y1s - beta * L * y1s;
        const Complex d2_Lys = (2.0 * s - 1.0) * ys / (y * y) + s * (s - 1.0) * L * ys / (y * y);
        const Complex d2_y1s = -s * (1.0 - s) * y1s / (y * y);
        const Complex d2_Ly1s = (1.0 - 2.0 * s) * y1s / (y * y) - s * (1.0 - s) * L * y1s / (y * y);
        const Complex N2 = d2_Lys + dbeta * d2_y1s - beta * d2_Ly1s;
        const Complex res = -y * y * N2 - lam * N - (1.0 - 2.0 * s) * M0;
        const double scale = std::abs(y * y * N2) + std::abs(lam * N) + std::abs((1.0 - 2.0 * s) * M0);
        worst = std::max(worst, std::abs(res) / scale);
    }
    return worst;
}

} // namespace robin

#endif
