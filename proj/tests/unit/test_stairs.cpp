#include "peerline/stairs.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace peerline;

TEST(Stairs, EvenLayout)
{
    auto m = LineMetric::from_integers({0, 1, 2, 4});
    auto r = stair_rects(m, {2, 3});
    ASSERT_EQ(r.size(), 3u);
    EXPECT_EQ(r[0].x1 - r[0].x0, 4);
    EXPECT_EQ(r[1].x1 - r[1].x0, 1);
    EXPECT_EQ(r[2].cls, "committee");
    EXPECT_EQ(r[2].y1 - r[2].y0, 2);
    EXPECT_EQ(stair_area(r), 4 + 1 + 2);
}

TEST(Stairs, OddLayoutHasMedianStrip)
{
    auto m = LineMetric::from_integers({0, 2, 3, 7, 8});
    auto r = stair_rects(m, {3, 4});
    ASSERT_EQ(r.size(), 4u);
    EXPECT_EQ(r.back().y0, 4);
    EXPECT_EQ(r.back().x1 - r.back().x0, 4); // median at 3, farther member at 7
}

// The area is the pairing bound; it matches the 2-cost when the committee sits in the
// middle, i.e. inside every pair's span.
TEST(Stairs, AreaIsThePairingBound)
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        std::vector<long long> x(static_cast<size_t>(n));
        for (auto& v : x)
            v = rng() % 15;
        auto m = LineMetric::from_integers(x);
        int a = 1 + static_cast<int>(rng() % n), b = 1 + static_cast<int>(rng() % n);
        if (a == b)
            continue;
        Committee c = make_committee({a, b});
        auto rects = stair_rects(m, c);
        EXPECT_EQ(stair_area(rects), pairing_lower_bound(m, c));
        auto o = position_order(m);
        Committee mid = make_committee({o[static_cast<size_t>((n - 1) / 2)], o[static_cast<size_t>((n - 1) / 2 + 1)]});
        EXPECT_EQ(stair_area(stair_rects(m, mid)), social_cost(m, mid, CostSpec::util_q(2)));
    }
}

TEST(Stairs, Output)
{
    auto m = LineMetric::from_integers({0, 1, 2, 4});
    auto r = stair_rects(m, {2, 3});
    std::string csv = stairs_csv(r);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "x0,y0,x1,y1,class");
    EXPECT_NE(csv.find("0,0,4,1,common"), std::string::npos);
    std::string svg = stairs_svg(r);
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_EQ(std::count(svg.begin(), svg.end(), '\n'), 5);
    EXPECT_THROW(stair_rects(m, {1, 2, 3}), std::invalid_argument);
}
