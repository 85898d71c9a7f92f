#include "robin/numerics.hpp"
#include "robin/root_finding.hpp"

#include <gtest/gtest.h>

using namespace robin;

TEST(FindZeros, PolynomialRoots)
{
    auto f = [](Complex z) { return (z - Complex(0.3, 0.2)) * (z - Complex(-0.6, 0.7)) * (z - 2.5); };
    const auto zs = find_zeros(f, Window{-1.0, 1.0, -1.0, 1.0});
    ASSERT_EQ(zs.size(), 2u);
    EXPECT_LT(std::abs(zs[0].location - Complex(0.3, 0.2)), 1e-12);
    EXPECT_LT(std::abs(zs[1].location - Complex(-0.6, 0.7)), 1e-12);
}

TEST(FindZeros, DoubleRootHasMultiplicityTwo)
{
    auto f = [](Complex z) { return (z - Complex(0.1, 0.1)) * (z - Complex(0.1, 0.1)) * (z + 3.0); };
    const auto zs = find_zeros(f, Window{-1.0, 1.0, -1.0, 1.0});
    ASSERT_EQ(zs.size(), 1u);
    EXPECT_EQ(zs[0].multiplicity, 2);
    EXPECT_LT(std::abs(zs[0].location - Complex(0.1, 0.1)), 1e-7);
}

TEST(FindZeros, SineZerosSortedByImaginaryPart)
{
    auto f = [](Complex z) { return std::sin(z * Complex(0.0, -1.0)); }; // zeros at i k pi
    const auto zs = find_zeros(f, Window{-0.5, 0.5, 0.5, 10.0});
    ASSERT_EQ(zs.size(), 3u);
    for (int k = 0; k < 3; ++k) {
        EXPECT_LT(std::abs(zs[k].location - Complex(0.0, (k + 1) * pi)), 1e-12);
    }
}

TEST(FindZeros, DegenerateAndMalformedWindows)
{
    auto f = [](Complex z) { return z; };
    EXPECT_TRUE(find_zeros(f, Window{0.0, 0.0, -1.0, 1.0}).empty());
    EXPECT_THROW(find_zeros(f, Window{1.0, 0.0, 0.0, 1.0}), DomainError);
}

TEST(Winding, CountsZerosInsideCircle)
{
    auto f = [](Complex z) { return (z - 0.1) * (z + 0.2) * (z - 3.0); };
    EXPECT_EQ(winding_number(f, 0.0, 1.0), 2);
    EXPECT_EQ(winding_number([](Complex z) { return 1.0 / z; }, 0.0, 1.0), -1);
}

TEST(Newton, PolishesSimpleRoot)
{
    auto f = [](Complex z) { return z * z - 2.0; };
    const auto z = newton_polish(f, 1.3, 1, 1e-14, 50);
    ASSERT_TRUE(z);
    EXPECT_NEAR(z->real(), std::sqrt(2.0), 1e-13);
}
