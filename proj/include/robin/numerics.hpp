#ifndef ROBIN_NUMERICS_HPP
#define ROBIN_NUMERICS_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <vector>

namespace robin
{

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr Complex I{0.0, 1.0};

inline bool is_finite(Complex z) noexcept
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Neumaier compensated summation for complex terms.
class CompensatedSum
{
public:
    void add(Complex term) noexcept
    {
        re_ = step(re_, comp_re_, term.real());
        im_ = step(im_, comp_im_, term.imag());
    }
    Complex value() const noexcept { return {re_ + comp_re_, im_ + comp_im_}; }

private:
    static double step(double sum, double &comp, double x) noexcept
    {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        return t;
    }

    double re_ = 0.0, im_ = 0.0, comp_re_ = 0.0, comp_im_ = 0.0;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n)
{
    std::vector<double> x(n), w(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = z;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) {
                p1 = z;
                p0 = 1.0;
            }
            dp = n * (z * p1 - p0) / (z * z - 1.0);
            const double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
    return {x, w};
}

/// Gauss-Legendre rule mapped onto [a, b].
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n, double a, double b)
{
    auto [x, w] = gauss_legendre(n);
    const double half = 0.5 * (b - a), mid = 0.5 * (b + a);
    for (int i = 0; i < n; ++i) {
        x[i] = mid + half * x[i];
        w[i] *= half;
    }
    return {x, w};
}

inline Complex circle_node(Complex center, double radius, int j, int n)
{
    return center + std::polar(radius, 2.0 * pi * j / n);
}

/// Mean of f over a circle; equals f(center) for f holomorphic on the closed disc.
template <typename F>
Complex circle_mean(F &&f, Complex center, double radius, int nodes = 32)
{
    CompensatedSum acc;
    for (int j = 0; j < nodes; ++j) {
        acc.add(f(circle_node(center, radius, j, nodes)));
    }
    return acc.value() / static_cast<double>(nodes);
}

/// Winding number of f around 0 along a circle (zeros minus poles inside).
template <typename F>
int winding_number(F &&f, Complex center, double radius, int nodes = 64)
{
    double total = 0.0;
    Complex first = f(circle_node(center, radius, 0, nodes));
    Complex prev = first;
    for (int j = 1; j <= nodes; ++j) {
        const Complex cur = (j == nodes) ? first : f(circle_node(center, radius, j, nodes));
        total += std::arg(cur / prev);
        prev = cur;
    }
    return static_cast<int>(std::lround(total / (2.0 * pi)));
}

} // namespace robin

#endif
