#include "oracles/reference_values.hpp"
#include "robin/modular_surface.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace robin;
namespace ref = robin::reference;

namespace
{

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

} // namespace

TEST(Scattering, MatchesReferenceValues)
{
    EXPECT_LT(rel(scattering_phi(2.3).value, ref::phi_2p3), 1e-13);
    EXPECT_LT(rel(scattering_phi(0.75).value, ref::phi_0p75), 1e-13);
    EXPECT_LT(rel(scattering_phi({0.5, 3.0}).value, ref::phi_0p5_3i), 1e-13);
    EXPECT_LT(rel(scattering_phi({0.4, 5.0}).value, ref::phi_0p4_5i), 1e-12);
}

TEST(Scattering, ValueAtHalfIsMinusOne)
{
    const auto v = scattering_phi(0.5);
    EXPECT_FALSE(v.pole);
    EXPECT_LT(std::abs(v.value + 1.0), 1e-13);
}

TEST(Scattering, PoleAtOneIsSimple)
{
    const auto v = scattering_phi(1.0);
    EXPECT_TRUE(v.pole);
    EXPECT_EQ(v.order, 1);
}

TEST(Scattering, FunctionalEquationAndConjugationProperty)
{
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> re(-1.5, 2.5), im(0.2, 6.5);
    for (int k = 0; k < 200; ++k) {
        const Complex s(re(rng), im(rng));
        const Complex a = scattering_phi(s).value, b = scattering_phi(1.0 - s).value;
        EXPECT_LT(std::abs(a * b - 1.0), 1e-11) << s;
        EXPECT_LT(rel(scattering_phi(std::conj(s)).value, std::conj(a)), 1e-13) << s;
    }
}

TEST(Scattering, UnimodularOnCriticalLine)
{
    for (double t = 0.25; t < 30.0; t += 0.731) {
        EXPECT_NEAR(std::abs(scattering_phi({0.5, t}).value), 1.0, 1e-12) << t;
    }
}

TEST(Scattering, PerturbationScalesPhi)
{
    const auto p = perturbed(modular_scattering(), 1.001);
    EXPECT_FALSE(p.lattice_oracle);
    EXPECT_TRUE(modular_scattering().lattice_oracle);
    EXPECT_LT(rel(scattering_phi(p, 2.3).value, 1.001 * ref::phi_2p3), 1e-13);
}

TEST(DirectSum, MatchesReferenceValues)
{
    EXPECT_LT(rel(eisenstein_direct_sum({0.0, 1.0}, 2.0, 1e-12), ref::eisenstein_i_2), 1e-10);
    EXPECT_LT(rel(eisenstein_direct_sum({0.3, 1.4}, 2.3, 1e-12), ref::eisenstein_0p3_1p4i_2p3), 1e-10);
}

TEST(DirectSum, InvariantUnderModularGroup)
{
    // z -> z + 1 and z -> -1/z
    const Complex s(2.2, 0.7);
    const Complex z(0.17, 0.93);
    const Complex w = -1.0 / z;
    const Complex e = eisenstein_direct_sum({z.real(), z.imag()}, s, 1e-12);
    EXPECT_LT(rel(eisenstein_direct_sum({z.real() + 1.0, z.imag()}, s, 1e-12), e), 1e-11);
    EXPECT_LT(rel(eisenstein_direct_sum({w.real(), w.imag()}, s, 1e-12), e), 1e-10);
}

TEST(DirectSum, RejectsNonConvergentRegion)
{
    EXPECT_THROW(eisenstein_direct_sum({0.0, 1.0}, 1.05, 1e-10), DomainError);
}

TEST(ConstantTerm, OracleMatchesClosedForm)
{
    for (double y : {1.0, 1.7, 3.0}) {
        for (Complex s : {Complex(1.8, 0.0), Complex(2.5, -1.5), Complex(1.5, 4.0)}) {
            const Complex expect = std::exp(s * std::log(y)) + scattering_phi(s).value * std::exp((1.0 - s) * std::log(y));
            EXPECT_LT(std::abs(constant_term_oracle(y, s, 1e-12) - expect), 1e-10 * std::abs(expect)) << y << s;
        }
    }
}

TEST(FourierCoefficients, MatchReferenceAndOracle)
{
    EXPECT_LT(rel(fourier_coefficient(1, 2.3), ref::fourier_a1_2p3), 1e-12);
    EXPECT_LT(rel(fourier_coefficient(6, 2.3), ref::fourier_a6_2p3), 1e-12);
    EXPECT_EQ(fourier_coefficient(-6, 2.3), fourier_coefficient(6, 2.3));
    // Mode 1 of the lattice sum at height y is a_1 sqrt(y) K_{s-1/2}(2 pi y).
    const double y = 1.1;
    const Complex s(2.3, 0.0);
    const Complex mode = fourier_mode_oracle(1, y, s, 1e-12);
    const Complex expect = fourier_coefficient(1, s) * std::sqrt(y) * bessel_k(s - 0.5, 2.0 * pi * y).value;
    EXPECT_LT(rel(mode, expect), 1e-8);
}

TEST(FourierCoefficients, CompletedFormIsSymmetric)
{
    // The completed coefficient 2 |m|^{s-1/2} sigma_{1-2s}(m) is invariant under s -> 1 - s.
    for (int m : {1, 4, 6, 12}) {
        const Complex s(0.3, 2.0);
        EXPECT_LT(rel(completed_fourier_coefficient(m, s), completed_fourier_coefficient(m, 1.0 - s)), 1e-13);
    }
}

TEST(Arithmetic, RamanujanSums)
{
    EXPECT_EQ(detail::ramanujan_sum(1, 5), 1);
    EXPECT_EQ(detail::ramanujan_sum(6, 1), 1);  // mu(6)
    EXPECT_EQ(detail::ramanujan_sum(4, 2), -2);
    EXPECT_EQ(detail::ramanujan_sum(5, 10), 4); // phi(5)
}
