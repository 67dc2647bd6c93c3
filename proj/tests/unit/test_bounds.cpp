#include "peerline/bounds.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace peerline;

TEST(Bounds, MedianAlternationValues)
{
    EXPECT_NEAR(median_alternation_bound(100, 64), 1.25, 1e-12);
    EXPECT_NEAR(median_alternation_bound(5, 5), 2.0, 1e-12);
    EXPECT_NEAR(median_alternation_bound(4, 1), 2 * 4 + 1 - 2 * std::sqrt(16.0), 1e-12);
    EXPECT_THROW(median_alternation_bound(3, 4), BadParameters);
}

TEST(Bounds, ExactComparisonAgreesWithFloatingPoint)
{
    for (long long n = 2; n <= 30; ++n)
        for (long long k = 1; k <= n; ++k) {
            const double b = median_alternation_bound(n, k);
            for (long long num = 0; num <= 300; ++num) {
                Rational v = make_rational(num, 100);
                const double d = v.get_d();
                if (std::fabs(d - b) < 1e-9)
                    continue;
                EXPECT_EQ(within_median_alternation_bound(v, n, k), d < b) << n << " " << k << " " << num;
            }
        }
    // exact hits: n=100, k=64 gives 5/4
    EXPECT_EQ(compare_to_median_alternation_bound(make_rational(5, 4), 100, 64), 0);
}

TEST(Bounds, UtilQCost)
{
    EXPECT_EQ(util_qcost_lb(100, 51), 2 - make_rational(49, 101));
    EXPECT_EQ(util_qcost_lb(4, 3), make_rational(9, 5));
    EXPECT_EQ(util_qcost_lb(10, 10), 2);
    EXPECT_THROW(util_qcost_lb(4, 2), BadParameters);
    EXPECT_THROW(util_qcost_lb(2, 2), BadParameters);
}

TEST(Bounds, EgalAdd)
{
    EXPECT_EQ(egalitarian_add_bounds(3).upper, make_rational(4, 3));
    EXPECT_EQ(egalitarian_add_bounds(3).lower, make_rational(7, 6));
    EXPECT_EQ(egalitarian_add_bounds(4).upper, make_rational(4, 3));
    EXPECT_EQ(egalitarian_add_bounds(2).upper, 1);
    EXPECT_EQ(egalitarian_add_bounds(2).lower, 1);
    for (int k = 2; k <= 60; ++k)
        EXPECT_LE(egalitarian_add_bounds(k).lower, egalitarian_add_bounds(k).upper);
    EXPECT_THROW(egalitarian_add_bounds(1), BadParameters);
}

TEST(Bounds, CurveOutput)
{
    std::string fig1 = emit_curve(Curve::fig1, 100, 63, 65);
    EXPECT_EQ(fig1.substr(0, 8), "k,bound\n");
    EXPECT_NE(fig1.find("\n64,1.25\n"), std::string::npos);
    std::string fig5 = emit_curve(Curve::fig5, 4, 3, 4);
    EXPECT_EQ(fig5, "q,bound\n3,1.8\n4,2\n");
    std::string eg = emit_curve(Curve::egal_add, 0, 3, 3);
    EXPECT_EQ(eg, "k,upper,lower\n3,1.333333,1.166667\n");
    EXPECT_EQ(format_value(2.0 / 3.0), "0.666667");
    EXPECT_EQ(format_value(2.0 - 49.0 / 101.0), "1.514851");
    EXPECT_EQ(format_value(1.5), "1.5");
}
