#ifndef ROBIN_SPECIAL_FUNCTIONS_HPP
#define ROBIN_SPECIAL_FUNCTIONS_HPP

#include "robin/errors.hpp"
#include "robin/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace robin
{

namespace detail
{

inline constexpr double lanczos_g = 7.0;
inline constexpr std::array<double, 9> lanczos_coef = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

inline const std::array<double, 12> &bernoulli_table()
{
    // B_{2k}/(2k)! computed once from exact rationals B_{2k}.
    static const std::array<double, 12> table = [] {
        const std::array<double, 12> num = {1.0,       -1.0,       1.0,          -1.0,          5.0,
                                            -691.0,    7.0,        -3617.0,      43867.0,       -174611.0,
                                            854513.0,  -236364091.0};
        const std::array<double, 12> den = {6.0, 30.0, 42.0, 30.0, 66.0, 2730.0, 6.0, 510.0, 798.0, 330.0, 138.0, 2730.0};
        std::array<double, 12> out{};
        double fact = 1.0;
        for (int k = 1; k <= 12; ++k) {
            fact *= (2.0 * k - 1.0) * (2.0 * k);
            out[k - 1] = num[k - 1] / den[k - 1] / fact;
        }
        return out;
    }();
    return table;
}

// log Gamma for Re z >= 1/2; branch of the imaginary part is irrelevant to callers.
inline Complex lgamma_right(Complex z)
{
    z -= 1.0;
    Complex x = lanczos_coef[0];
    for (std::size_t i = 1; i < lanczos_coef.size(); ++i) {
        x += lanczos_coef[i] / (z + static_cast<double>(i));
    }
    const Complex t = z + lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

inline bool is_nonpositive_integer(Complex z)
{
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

} // namespace detail

/// sin(pi z) with argument reduction so that zeros at the integers stay accurate.
inline Complex sinpi(Complex z)
{
    const double n = std::round(z.real());
    const Complex r = std::sin(pi * Complex(z.real() - n, z.imag()));
    return (static_cast<long long>(n) % 2 == 0) ? r : -r;
}

inline Complex gamma_fn(Complex z)
{
    if (detail::is_nonpositive_integer(z)) {
        throw PoleError("gamma_fn: pole at non-positive integer " + std::to_string(z.real()));
    }
    if (z.real() < 0.5) {
        return pi / (sinpi(z) * std::exp(detail::lgamma_right(1.0 - z)));
    }
    return std::exp(detail::lgamma_right(z));
}

/// 1/Gamma(z); entire, zero at the non-positive integers.
inline Complex rgamma(Complex z)
{
    if (detail::is_nonpositive_integer(z)) {
        return 0.0;
    }
    if (z.real() < 0.5) {
        return sinpi(z) * std::exp(detail::lgamma_right(1.0 - z)) / pi;
    }
    return std::exp(-detail::lgamma_right(z));
}

namespace detail
{

struct EulerMaclaurin
{
    Complex head; // sum_{n<N} n^{-s} + N^{-s}/2 + Bernoulli corrections
    double N;
};

inline EulerMaclaurin zeta_head(Complex s)
{
    const double N = 10.0 + std::ceil(2.0 * std::abs(s.imag())) + std::ceil(2.0 * std::max(0.0, -s.real()));
    CompensatedSum acc;
    const int n_max = static_cast<int>(N);
    for (int n = n_max - 1; n >= 1; --n) {
        acc.add(std::exp(-s * std::log(static_cast<double>(n))));
    }
    const double lnN = std::log(N);
    const Complex Ns = std::exp(-s * lnN);
    acc.add(0.5 * Ns);
    const auto &B = bernoulli_table();
    Complex poch = s;
    Complex power = Ns / N; // N^{-s-1}
    for (int k = 1; k <= 12; ++k) {
        const Complex term = B[k - 1] * poch * power;
        acc.add(term);
        if (std::abs(term) < 1e-18 * std::abs(acc.value())) {
            break;
        }
        poch *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
        power /= N * N;
    }
    return {acc.value(), N};
}

} // namespace detail

inline Complex riemann_zeta(Complex s)
{
    if (s == Complex(1.0, 0.0)) {
        throw PoleError("riemann_zeta: pole at s = 1");
    }
    if (s.real() < -0.5) {
        const Complex t = 1.0 - s;
        return std::pow(Complex(2.0), s) * std::pow(Complex(pi), s - 1.0) * sinpi(0.5 * s) * gamma_fn(t) *
               riemann_zeta(t);
    }
    const auto em = detail::zeta_head(s);
    return em.head + std::exp((1.0 - s) * std::log(em.N)) / (s - 1.0);
}

/// (s - 1) zeta(s), holomorphic across s = 1 with value 1 there.
inline Complex zeta_regularized(Complex s)
{
    if (s.real() < -0.5) {
        return (s - 1.0) * riemann_zeta(s);
    }
    const auto em = detail::zeta_head(s);
    return (s - 1.0) * em.head + std::exp((1.0 - s) * std::log(em.N));
}

/// Euler-Maclaurin tail sum_{n>=0} (n + a)^{-s} for a large compared with |s|.
inline Complex hurwitz_tail(Complex s, double a)
{
    const double lna = std::log(a);
    const Complex as = std::exp(-s * lna);
    Complex total = as * a / (s - 1.0) + 0.5 * as;
    const auto &B = detail::bernoulli_table();
    Complex poch = s;
    Complex power = as / a;
    for (int k = 1; k <= 12; ++k) {
        const Complex term = B[k - 1] * poch * power;
        total += term;
        if (std::abs(term) < 1e-18 * std::abs(total)) {
            break;
        }
        poch *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
        power /= a * a;
    }
    return total;
}

struct BesselResult
{
    Complex value;
    bool underflow = false;
};

/// K_nu(x) for complex order and real x > 0 from the cosh integral along a shifted contour.
inline BesselResult bessel_k(Complex nu, double x)
{
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("bessel_k: argument must be positive and finite");
    }
    if (std::abs(nu.real()) > 20.0) {
        throw DomainError("bessel_k: |Re nu| exceeds 20");
    }
    if (nu.real() < 0.0) {
        nu = -nu;
    }
    // Shift t -> t + i alpha so the stationary phase sits on the real axis.
    double alpha = std::asinh(nu / x).imag();
    alpha = std::clamp(alpha, -1.3, 1.3);
    const double sig = nu.real(), tau = nu.imag(), ca = std::cos(alpha);
    auto lead = [&](double t) { return -x * std::cosh(t) * ca + sig * t - tau * alpha; };
    const double t_star = std::asinh(sig / (x * ca));
    const double lmax = lead(t_star);
    if (lmax > 700.0) {
        throw NonFiniteError("bessel_k: value overflows");
    }
    if (lmax < -745.0) {
        return {0.0, true};
    }
    auto edge = [&](double dir) {
        double lo = 0.0, hi = 1.0;
        while (lead(t_star + dir * hi) - lmax > -48.0 && hi < 200.0) {
            lo = hi;
            hi *= 2.0;
        }
        for (int i = 0; i < 60; ++i) {
            const double mid = 0.5 * (lo + hi);
            if (lead(t_star + dir * mid) - lmax > -48.0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        return t_star + dir * hi;
    };
    const double a = edge(-1.0), b = edge(1.0);
    const Complex ia(0.0, alpha);
    auto f = [&](double t) {
        const Complex w = t + ia;
        return std::exp(-x * std::cosh(w) + nu * w - lmax);
    };
    double h = std::min(0.5, 0.5 * (0.5 * pi - std::abs(alpha)));
    int n = static_cast<int>(std::ceil((b - a) / h));
    h = (b - a) / n;
    CompensatedSum acc;
    double mag = 0.0;
    for (int j = 0; j <= n; ++j) {
        const Complex v = f(a + j * h);
        acc.add((j == 0 || j == n) ? 0.5 * v : v);
        mag += std::abs(v);
    }
    Complex prev = acc.value() * h;
    for (int level = 0; level < 14; ++level) {
        for (int j = 0; j < n; ++j) {
            const Complex v = f(a + (j + 0.5) * h);
            acc.add(v);
            mag += std::abs(v);
        }
        n *= 2;
        h *= 0.5;
        const Complex cur = acc.value() * h;
        const double diff = std::abs(cur - prev);
        prev = cur;
        if (level >= 1 && (diff <= 1e-14 * std::abs(cur) || diff <= 1e-17 * mag * h)) {
            break;
        }
    }
    const double scale = std::exp(lmax);
    if (scale == 0.0) {
        return {0.0, true};
    }
    return {0.5 * prev * scale, false};
}

struct DiscSpec
{
    Complex center;
    double radius = 0.0;
    int order = 0;
};

inline constexpr int max_taylor_order = 48;

/// Taylor coefficients f^{(k)}(center)/k!, k = 0..order, by the trapezoid rule on the circle.
template <typename F>
std::vector<Complex> holo_derivative(F &&f, const DiscSpec &spec, int nodes = 64)
{
    if (!(spec.radius > 0.0)) {
        throw DomainError("holo_derivative: radius must be positive");
    }
    if (spec.order < 0 || spec.order > max_taylor_order || spec.order >= nodes) {
        throw DomainError("holo_derivative: order outside the configured range");
    }
    std::vector<Complex> samples(nodes);
    for (int j = 0; j < nodes; ++j) {
        samples[j] = f(circle_node(spec.center, spec.radius, j, nodes));
        if (!is_finite(samples[j])) {
            throw NonFiniteError("holo_derivative: non-finite sample on the contour");
        }
    }
    std::vector<Complex> coeffs(spec.order + 1);
    double rk = 1.0;
    for (int k = 0; k <= spec.order; ++k) {
        CompensatedSum acc;
        for (int j = 0; j < nodes; ++j) {
            acc.add(samples[j] * std::polar(1.0, -2.0 * pi * k * j / nodes));
        }
        coeffs[k] = acc.value() / (static_cast<double>(nodes) * rk);
        rk *= spec.radius;
    }
    return coeffs;
}

/// First derivative at z by a Cauchy integral of radius r.
template <typename F>
Complex cauchy_derivative(F &&f, Complex z, double r, int nodes = 16)
{
    return holo_derivative(f, DiscSpec{z, r, 1}, nodes)[1];
}

} // namespace robin

#endif
