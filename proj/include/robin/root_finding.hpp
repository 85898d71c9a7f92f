#ifndef ROBIN_ROOT_FINDING_HPP
#define ROBIN_ROOT_FINDING_HPP

#include "robin/errors.hpp"
#include "robin/numerics.hpp"
#include "robin/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <vector>

namespace robin
{

struct Window
{
    double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    bool contains(Complex z, double slack = 0.0) const
    {
        return z.real() >= x0 - slack && z.real() <= x1 + slack && z.imag() >= y0 - slack && z.imag() <= y1 + slack;
    }
    Complex center() const { return {0.5 * (x0 + x1), 0.5 * (y0 + y1)}; }
};

struct Zero
{
    Complex location;
    int multiplicity = 1;
};

struct RootFinderOptions
{
    int max_depth = 12;
    double margin = 1e-3;
    double newton_tol = 1e-13;
    int max_newton = 60;
    double segment = 0.05;
};

/// Newton iteration for a holomorphic f with Cauchy-integral derivatives.
/// Returns nullopt when the iteration stalls or diverges.
template <typename F>
std::optional<Complex> newton_polish(F &&f, Complex z, int multiplicity, double tol, int max_iter)
{
    for (int it = 0; it < max_iter; ++it) {
        const double r = 1e-4 * std::max(1.0, std::abs(z));
        const Complex fz = f(z);
        if (fz == 0.0) {
            return z;
        }
        const Complex d = cauchy_derivative(f, z, r, 8);
        if (!is_finite(d) || d == 0.0) {
            return std::nullopt;
        }
        const Complex step = static_cast<double>(multiplicity) * fz / d;
        if (!is_finite(step) || std::abs(step) > 10.0) {
            return std::nullopt;
        }
        z -= step;
        if (std::abs(step) <= tol * std::max(1.0, std::abs(z))) {
            return z;
        }
    }
    return std::nullopt;
}

namespace detail
{

/// Argument increment of f along a segment, with adaptive bisection so that no
/// consecutive pair of samples differs in phase by more than half a radian.
template <typename F>
std::optional<double> segment_winding(F &f, Complex a, Complex b, double max_len)
{
    const int n0 = std::max(2, static_cast<int>(std::ceil(std::abs(b - a) / max_len)));
    double total = 0.0;
    Complex za = a;
    Complex fa = f(a);
    for (int k = 1; k <= n0; ++k) {
        const Complex zb = a + (b - a) * (static_cast<double>(k) / n0);
        const Complex fb = f(zb);
        struct Piece
        {
            Complex z0, z1, f0, f1;
        };
        std::vector<Piece> stack{{za, zb, fa, fb}};
        while (!stack.empty()) {
            Piece p = stack.back();
            stack.pop_back();
            if (p.f0 == 0.0 || p.f1 == 0.0 || !is_finite(p.f0) || !is_finite(p.f1)) {
                return std::nullopt;
            }
            const double d = std::arg(p.f1 / p.f0);
            if (std::abs(d) < 0.5) {
                total += d;
                continue;
            }
            if (std::abs(p.z1 - p.z0) < 1e-11) {
                return std::nullopt;
            }
            const Complex zm = 0.5 * (p.z0 + p.z1);
            const Complex fm = f(zm);
            // Push the right half first so the left half is processed next.
            stack.push_back({zm, p.z1, fm, p.f1});
            stack.push_back({p.z0, zm, p.f0, fm});
        }
        za = zb;
        fa = fb;
    }
    return total;
}

template <typename F>
std::optional<int> count_zeros(F &f, const Window &w, double max_len)
{
    const Complex c00(w.x0, w.y0), c10(w.x1, w.y0), c11(w.x1, w.y1), c01(w.x0, w.y1);
    double total = 0.0;
    for (auto [a, b] : {std::pair{c00, c10}, std::pair{c10, c11}, std::pair{c11, c01}, std::pair{c01, c00}}) {
        const auto part = segment_winding(f, a, b, max_len);
        if (!part) {
            return std::nullopt;
        }
        total += *part;
    }
    const double n = total / (2.0 * pi);
    const long rounded = std::lround(n);
    if (std::abs(n - rounded) > 0.2 || rounded < 0) {
        return std::nullopt;
    }
    return static_cast<int>(rounded);
}

template <typename F>
void isolate(F &f, const Window &w, int n, int depth, const RootFinderOptions &opt, std::vector<Zero> &out)
{
    if (n == 0) {
        return;
    }
    const double size = std::max(w.width(), w.height());
    const double seg = std::min(opt.segment, size / 8.0);
    if (n == 1 || depth >= opt.max_depth) {
        const double slack = 1e-9 * std::max(1.0, std::abs(w.center()));
        if (auto z = newton_polish(f, w.center(), n, opt.newton_tol, opt.max_newton); z && w.contains(*z, slack)) {
            out.push_back({*z, n});
            return;
        }
        if (depth >= opt.max_depth) {
            throw ConvergenceError("root search: Newton failed in a terminal cell");
        }
    }
    // Split along the longer side, away from the midpoint so that the lines of
    // symmetry of the problem are never hit exactly.
    for (double frac : {0.4619, 0.5381, 0.4127, 0.5873}) {
        Window a = w, b = w;
        if (w.width() >= w.height()) {
            const double xs = w.x0 + frac * w.width();
            a.x1 = xs;
            b.x0 = xs;
        } else {
            const double ys = w.y0 + frac * w.height();
            a.y1 = ys;
            b.y0 = ys;
        }
        const auto na = count_zeros(f, a, seg);
        const auto nb = count_zeros(f, b, seg);
        if (!na || !nb || *na + *nb != n) {
            continue;
        }
        isolate(f, a, *na, depth + 1, opt, out);
        isolate(f, b, *nb, depth + 1, opt, out);
        return;
    }
    throw ConvergenceError("root search: could not split a cell cleanly");
}

} // namespace detail

/// All zeros of a holomorphic function inside a rectangle, by argument-principle subdivision and Newton polish.
template <typename F>
std::vector<Zero> find_zeros(F &&f, Window w, const RootFinderOptions &opt = {})
{
    if (!(w.x1 >= w.x0 && w.y1 >= w.y0)) {
        throw DomainError("find_zeros: malformed window");
    }
    if (w.width() == 0.0 || w.height() == 0.0) {
        return {};
    }
    std::vector<Zero> raw;
    std::optional<int> n;
    Window grown = w;
    for (double m : {opt.margin, 1.7 * opt.margin, 2.9 * opt.margin}) {
        grown = {w.x0 - m, w.x1 + m, w.y0 - m, w.y1 + m};
        n = detail::count_zeros(f, grown, opt.segment);
        if (n) {
            break;
        }
    }
    if (!n) {
        throw ConvergenceError("find_zeros: zero on the window boundary");
    }
    detail::isolate(f, grown, *n, 0, opt, raw);
    std::vector<Zero> out;
    for (const auto &z : raw) {
        if (w.contains(z.location, 1e-9)) {
            out.push_back(z);
        }
    }
    std::sort(out.begin(), out.end(), [](const Zero &a, const Zero &b) {
        if (a.location.imag() != b.location.imag()) {
            return a.location.imag() < b.location.imag();
        }
        return a.location.real() < b.location.real();
    });
    return out;
}

} // namespace robin

#endif
