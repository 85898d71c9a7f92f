#include "oracles/reference_values.hpp"
#include "robin/maass_selberg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace robin;
namespace ref = robin::reference;

namespace
{

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

} // namespace

TEST(Pairing, FormulaMatchesReferenceValues)
{
    TruncationConfig cfg;
    EXPECT_LT(rel(truncated_pairing_msr(1.5, cfg).value, ref::msr_pairing_1p5_eta2), 1e-10);
    cfg.eta = 1.5;
    EXPECT_LT(rel(truncated_pairing_msr(Complex(2.0, 1.0), cfg).value, ref::msr_pairing_2p1i_eta1p5), 1e-10);
}

TEST(Pairing, FormulaMatchesQuadrature)
{
    for (double eta : {1.5, 2.5}) {
        TruncationConfig cfg;
        cfg.eta = eta;
        for (Complex s : {Complex(1.6, 0.0), Complex(2.2, -0.8)}) {
            const auto msr = truncated_pairing_msr(s, cfg);
            const auto quad = pairing_quadrature_oracle(s, cfg);
            EXPECT_EQ(quad.via, PairingVia::quadrature);
            EXPECT_LT(rel(msr.value, quad.value), 1e-8) << eta << " " << s;
        }
    }
}

TEST(Pairing, QuadratureNeedsConvergentRegion)
{
    const TruncationConfig cfg;
    EXPECT_THROW(pairing_quadrature_oracle(Complex(0.8, 2.0), cfg), DomainError);
}

TEST(Pairing, ConjugationSymmetryProperty)
{
    const TruncationConfig cfg;
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> re(0.1, 2.5), im(0.3, 10.0);
    for (int k = 0; k < 20; ++k) {
        const Complex s(re(rng), im(rng));
        const Complex a = truncated_pairing_msr(s, cfg).value, b = truncated_pairing_msr(std::conj(s), cfg).value;
        EXPECT_LT(std::abs(a - std::conj(b)), 1e-10 * std::abs(a)) << s;
    }
}

TEST(Pairing, ReflectionInvariance)
{
    // E(1 - s) = phi(1 - s) E(s), so the pairing scales by phi(1 - s)^2.
    const TruncationConfig cfg;
    for (Complex s : {Complex(0.7, 2.0), Complex(0.3, 5.5)}) {
        const Complex a = truncated_pairing_msr(s, cfg).value, b = truncated_pairing_msr(1.0 - s, cfg).value;
        const Complex f = scattering_phi(1.0 - s).value;
        EXPECT_LT(rel(b, f * f * a), 1e-9) << s;
    }
}

TEST(Pairing, RemovableAtHalfAndPoleAtOne)
{
    const TruncationConfig cfg;
    const auto h = truncated_pairing_msr(0.5, cfg);
    EXPECT_FALSE(h.pole);
    EXPECT_TRUE(is_finite(h.value));
    // E(z, 1/2) vanishes identically, so the limit is zero and nearby values shrink with the offset.
    EXPECT_LT(std::abs(h.value), 1e-12);
    const double far = std::abs(truncated_pairing_msr(Complex(0.5, 1e-2), cfg).value);
    const double near = std::abs(truncated_pairing_msr(Complex(0.5, 1e-4), cfg).value);
    EXPECT_LT(near, 0.05 * far);
    EXPECT_TRUE(truncated_pairing_msr(1.0, cfg).pole);
}

TEST(LambdaPrime, AgreesWithSlopeOfTrace)
{
    const TruncationConfig cfg;
    const Complex g(1.5, 0.0);
    const Complex s = *robin_newton(g, ref::neumann_root_eta2, cfg);
    const auto lp = lambda_prime_of_gamma(make_point(s, g, cfg.eta), cfg);
    EXPECT_FALSE(lp.ramification);
    const Complex slope = (1.0 - 2.0 * s) * ds_dgamma(s, g, cfg);
    EXPECT_LT(rel(lp.value, slope), 1e-8);
}

TEST(LambdaPrime, VanishesAtDirichletPoint)
{
    const TruncationConfig cfg;
    const auto lp = lambda_prime_of_gamma(make_point(ref::dirichlet_root_eta2, ExtendedComplex::infinity(), cfg.eta), cfg);
    EXPECT_EQ(lp.value, Complex(0.0));
    EXPECT_FALSE(lp.infinite);
}

TEST(Ramification, NoneOnModularWindow)
{
    const TruncationConfig cfg;
    const auto hits = ramification_scan(Window{0.05, 0.95, 0.2, 10.0}, cfg);
    for (const auto &h : hits) {
        EXPECT_FALSE(h.verified) << h.s;
    }
}

TEST(Ramification, ToySurfaceWithBranchPoint)
{
    // phi = c constant: gamma(s) = -(s e^{s L} + c (1-s) e^{(1-s) L}) / (eta (e^{s L} + c e^{(1-s) L}))
    // has critical points; at each the self-pairing must vanish.
    TruncationConfig cfg;
    cfg.surface.numerator = [](Complex) { return Complex(0.3, 0.0); };
    cfg.surface.denominator = [](Complex) { return Complex(1.0, 0.0); };
    cfg.surface.lattice_oracle = false;
    const auto hits = ramification_scan(Window{-1.5, 2.5, 0.1, 4.0}, cfg);
    ASSERT_FALSE(hits.empty());
    for (const auto &h : hits) {
        EXPECT_GE(h.order, 2);
        EXPECT_TRUE(h.verified) << h.s << " " << h.pairing_abs;
        const Complex dg = cauchy_derivative([&](Complex z) { return gamma_of_s(z, cfg).value; }, h.s, 1e-4, 16);
        EXPECT_LT(std::abs(dg), 1e-6);
    }
}

TEST(JordanChain, ResidualSmallAtGenericPoints)
{
    const TruncationConfig cfg;
    for (Complex s : {Complex(0.3, 2.0), Complex(1.7, -0.4), Complex(0.9, 8.0)}) {
        EXPECT_LT(jordan_chain_residual(s, cfg), 1e-10) << s;
    }
    EXPECT_THROW(jordan_chain_residual(0.5, cfg), DomainError);
}
