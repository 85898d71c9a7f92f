#include "oracles/reference_values.hpp"
#include "robin/modular_surface.hpp"
#include "robin/robin_maps.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace robin;
namespace ref = robin::reference;

namespace
{

bool contains_root(const std::vector<RobinRoot> &roots, Complex z, double tol)
{
    for (const auto &r : roots) {
        if (std::abs(r.point.s - z) <= tol) {
            return true;
        }
    }
    return false;
}

} // namespace

TEST(Config, RejectsInadmissibleHeight)
{
    TruncationConfig cfg;
    cfg.eta = 1.0;
    EXPECT_THROW(cfg.validate(), DomainError);
    cfg.eta = 2.0;
    cfg.newton_tol = 1e-16;
    EXPECT_THROW(cfg.validate(), DomainError);
}

TEST(LambdaMap, RoundTripAndSymmetry)
{
    for (Complex s : {Complex(0.5, 3.0), Complex(0.8, 0.0), Complex(1.7, -2.0)}) {
        EXPECT_LT(std::abs(lambda_of_s(s) - lambda_of_s(1.0 - s)), 1e-14);
        const Complex back = s_of_lambda(lambda_of_s(s));
        EXPECT_TRUE(std::abs(back - s) < 1e-12 || std::abs(back - (1.0 - s)) < 1e-12);
    }
}

TEST(GammaOfS, MatchesReferenceValue)
{
    const TruncationConfig cfg;
    const auto g = gamma_of_s(2.3, cfg);
    ASSERT_FALSE(g.infinite);
    EXPECT_LT(std::abs(g.value - ref::gamma_of_2p3_eta2), 1e-13);
}

TEST(GammaOfS, InvariantUnderReflection)
{
    const TruncationConfig cfg;
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> re(-1.0, 2.0), im(0.3, 12.0);
    for (int k = 0; k < 50; ++k) {
        const Complex s(re(rng), im(rng));
        const auto a = gamma_of_s(s, cfg), b = gamma_of_s(1.0 - s, cfg);
        EXPECT_LT(std::abs(a.value - b.value), 1e-9 * std::max(1.0, std::abs(a.value))) << s;
    }
}

TEST(GammaOfS, BetaRoundTrip)
{
    const TruncationConfig cfg;
    for (Complex s : {Complex(2.3, 0.0), Complex(0.7, 4.0), Complex(1.4, -1.2)}) {
        const auto g = gamma_of_s(s, cfg);
        EXPECT_LT(std::abs(beta_from_gamma(g, s, cfg) - scattering_phi(s).value), 1e-10 * std::abs(scattering_phi(s).value));
    }
    EXPECT_LT(std::abs(beta_from_gamma(ExtendedComplex::infinity(), 0.5, cfg) + 1.0), 1e-15);
}

TEST(GammaOfS, RemovableAtHalf)
{
    const TruncationConfig cfg;
    EXPECT_TRUE(half_degenerate(cfg));
    const auto g = gamma_of_s(0.5, cfg);
    EXPECT_FALSE(g.infinite);
    EXPECT_TRUE(is_finite(g.value));
    EXPECT_LT(std::abs(g.value - gamma_of_s(Complex(0.5, 1e-2), cfg).value), 1e-2);
}

TEST(RobinRoots, DirichletRootMatchesReference)
{
    const TruncationConfig cfg;
    const auto roots = solve_robin_roots(ExtendedComplex::infinity(), Window{0.0, 1.0, 0.0, 5.0}, cfg);
    EXPECT_TRUE(contains_root(roots, ref::dirichlet_root_eta2, 1e-11));
}

TEST(RobinRoots, NeumannAndGeneralRootsMatchReference)
{
    TruncationConfig cfg;
    EXPECT_TRUE(contains_root(solve_robin_roots(Complex(0.0), Window{0.0, 1.0, 0.0, 5.0}, cfg), ref::neumann_root_eta2, 1e-11));
    cfg.eta = 3.0;
    EXPECT_TRUE(contains_root(solve_robin_roots(Complex(5.0), Window{0.0, 1.0, 0.0, 5.0}, cfg), ref::robin_root_gamma5_eta3, 1e-11));
}

TEST(RobinRoots, ResidualAndRealityProperty)
{
    const TruncationConfig cfg;
    for (double g : {-3.7, -0.4, 0.9, 12.0}) {
        const auto roots = solve_robin_roots(Complex(g), Window{0.0, 1.0, 0.0, 15.0}, cfg);
        ASSERT_FALSE(roots.empty());
        for (const auto &r : roots) {
            EXPECT_LE(r.residual, 1e-9);
            const Complex s = r.point.s;
            EXPECT_LT(std::min(std::abs(s.real() - 0.5), std::abs(s.imag())), 1e-8) << g << " " << s;
        }
    }
}

TEST(RobinRoots, ComplexGammaRootsLeaveCriticalLine)
{
    const TruncationConfig cfg;
    const auto roots = solve_robin_roots(Complex(1.0, 1.0), Window{0.0, 1.0, 0.5, 10.0}, cfg);
    ASSERT_FALSE(roots.empty());
    for (const auto &r : roots) {
        EXPECT_LE(r.residual, 1e-9);
    }
    EXPECT_GT(std::abs(roots.front().point.s.real() - 0.5), 1e-6);
}

TEST(DsDgamma, MatchesFiniteDifference)
{
    const TruncationConfig cfg;
    const Complex g(0.7, 0.0);
    const Complex s = *robin_newton(g, ref::neumann_root_eta2, cfg);
    const double h = 1e-4;
    const Complex fd = (*robin_newton(g + h, s, cfg) - *robin_newton(g - h, s, cfg)) / (2.0 * h);
    EXPECT_LT(std::abs(ds_dgamma(s, g, cfg) - fd), 1e-7 * std::abs(fd));
}

TEST(Trace, ConstantPathGivesIdenticalRows)
{
    const TruncationConfig cfg;
    PathSpec p;
    p.waypoints = {1.0, 1.0};
    const Complex s = *robin_newton(Complex(1.0), ref::neumann_root_eta2, cfg);
    const auto rows = trace_curve(p, make_point(s, Complex(1.0), cfg.eta), cfg);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows.front().point.s, s);
}

TEST(Trace, LoopReturnsToStart)
{
    const TruncationConfig cfg;
    PathSpec p;
    p.waypoints = {0.0, 2.0, Complex(2.0, 2.0), Complex(0.0, 2.0), 0.0};
    const Complex s = ref::neumann_root_eta2;
    const auto rows = trace_curve(p, make_point(s, Complex(0.0), cfg.eta), cfg);
    EXPECT_LT(std::abs(rows.back().point.s - s), 1e-8);
}

TEST(Trace, RealPathStaysOnCriticalLineOrRealAxis)
{
    const TruncationConfig cfg;
    PathSpec p;
    p.waypoints = {-5.0, 5.0};
    const Complex s0 = *robin_newton(Complex(-5.0), Complex(0.5, 4.0), cfg);
    for (const auto &r : trace_curve(p, make_point(s0, Complex(-5.0), cfg.eta), cfg)) {
        EXPECT_LT(std::min(std::abs(r.point.s.real() - 0.5), std::abs(r.point.s.imag())), 1e-8);
    }
}

TEST(Trace, RejectsBadSeedAndInfiniteWaypoint)
{
    const TruncationConfig cfg;
    PathSpec p;
    p.waypoints = {0.0, 1.0};
    EXPECT_THROW(trace_curve(p, make_point(Complex(0.5, 4.0), Complex(0.0), cfg.eta), cfg), DomainError);
    p.waypoints = {0.0, Complex(INFINITY, 0.0)};
    EXPECT_THROW(trace_curve(p, make_point(ref::neumann_root_eta2, Complex(0.0), cfg.eta), cfg), PoleCrossingError);
}

TEST(EtaFlow, DerivativeMatchesFiniteDifferenceAndRiccati)
{
    const ConstantTermCoeffs c{1.0, scattering_phi(Complex(0.6, 2.0)).value, false};
    const Complex s(0.6, 2.0);
    const double eta = 2.2, h = 1e-5;
    const auto f = eta_flow(s, c, eta);
    const Complex fd = (eta_flow(s, c, eta + h).gamma.value - eta_flow(s, c, eta - h).gamma.value) / (2.0 * h);
    EXPECT_LT(std::abs(f.dgamma_deta - fd), 1e-7 * std::abs(fd));
    const Complex g = f.gamma.value;
    EXPECT_LT(std::abs(f.dgamma_deta - (g * g + lambda_of_s(s) / (eta * eta))), 1e-12 * std::abs(fd));
}

TEST(EtaFlow, LogFormAtHalf)
{
    const ConstantTermCoeffs c{0.7, 2.0, true};
    const double eta = 2.5, h = 1e-5;
    const auto f = eta_flow(0.5, c, eta);
    const Complex fd = (eta_flow(0.5, c, eta + h).gamma.value - eta_flow(0.5, c, eta - h).gamma.value) / (2.0 * h);
    EXPECT_LT(std::abs(f.dgamma_deta - fd), 1e-7 * std::abs(fd));
}

TEST(ConstantTerm, LogFormOnlyAtHalf)
{
    const TruncationConfig cfg;
    EXPECT_THROW(constant_term_PQ(0.6, ConstantTermCoeffs{1.0, 1.0, true}, cfg), DomainError);
}

TEST(IndicatorPairing, MatchesQuadrature)
{
    const Complex s(0.7, 3.0);
    const ConstantTermCoeffs c{1.0, Complex(0.4, -0.2), false};
    const auto [x, w] = gauss_legendre(40, 1.3, 2.7);
    Complex q = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        q += w[i] * (c.a * std::pow(x[i], s) + c.b * std::pow(x[i], 1.0 - s)) / (x[i] * x[i]);
    }
    EXPECT_LT(std::abs(indicator_pairing(c, s, 1.3, 2.7) - q), 1e-13);
    const ConstantTermCoeffs lg{0.3, 2.0, true};
    Complex ql = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        ql += w[i] * std::sqrt(x[i]) * (lg.a + lg.b * std::log(x[i])) / (x[i] * x[i]);
    }
    EXPECT_LT(std::abs(indicator_pairing(lg, 0.5, 1.3, 2.7) - ql), 1e-13);
    EXPECT_THROW(indicator_pairing(c, 1.0, 1.3, 2.7), DomainError);
    EXPECT_THROW(indicator_pairing(c, s, 2.7, 1.3), DomainError);
}

TEST(Truncated, MatchesLatticeSumBelowAndAboveEta)
{
    const TruncationConfig cfg;
    const Complex s(2.3, 0.0);
    const auto data = eisenstein_data(s, cfg);
    const SurfacePoint low{0.21, 1.3}, high{0.21, 2.4};
    EXPECT_LT(std::abs(evaluate_truncated(low, data) - eisenstein_direct_sum(low, s, 1e-12)), 1e-9);
    const Complex e = eisenstein_direct_sum(high, s, 1e-12);
    const Complex c0 = std::pow(high.y, s) + scattering_phi(s).value * std::pow(high.y, 1.0 - s);
    EXPECT_LT(std::abs(evaluate_truncated(high, data) - (e - c0)), 1e-9 * std::abs(e));
}

TEST(Truncated, TailTooLargeLowInTheDomain)
{
    const TruncationConfig cfg;
    const auto data = eisenstein_data(2.3, cfg, 3);
    EXPECT_THROW(evaluate_truncated({0.0, 0.3}, data), TailTooLargeError);
}
