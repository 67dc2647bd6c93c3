#include "peerline/profile.hpp"

#include <gtest/gtest.h>

using namespace peerline;

TEST(Profile, ValidProfilePasses)
{
    PreferenceProfile p{{{1, 2, 3}, {2, 1, 3}, {3, 2, 1}}};
    EXPECT_TRUE(validate_profile(p).ok());
    EXPECT_TRUE(validate_election({p, 2}).ok());
}

TEST(Profile, ReportsEveryProblem)
{
    PreferenceProfile p{{{1, 2, 2}, {2, 1}, {3, 4, 1}}};
    auto rep = validate_profile(p);
    ASSERT_EQ(rep.violations.size(), 3u);
    EXPECT_NE(rep.violations[0].find("duplicate"), std::string::npos);
    EXPECT_NE(rep.violations[1].find("entries"), std::string::npos);
    EXPECT_NE(rep.violations[2].find("out-of-range"), std::string::npos);
}

TEST(Profile, KOutOfRange)
{
    PreferenceProfile p{{{1, 2}, {2, 1}}};
    EXPECT_FALSE(validate_election({p, 0}).ok());
    EXPECT_FALSE(validate_election({p, 3}).ok());
    EXPECT_THROW(require_valid({p, 3}), std::invalid_argument);
}

TEST(Profile, FromPositionsBreaksTiesById)
{
    auto m = LineMetric::from_integers({0, 1, 2});
    auto p = profile_from_positions(m);
    EXPECT_EQ(p.of(2), (Ranking{2, 1, 3}));
    EXPECT_EQ(p.of(1), (Ranking{1, 2, 3}));
    EXPECT_EQ(p.of(3), (Ranking{3, 2, 1}));
    EXPECT_TRUE(is_consistent(p, m));
    auto rev = profile_from_positions(m, [](AgentId, AgentId b, AgentId c) { return b > c; });
    EXPECT_EQ(rev.of(2), (Ranking{2, 3, 1}));
}

TEST(Profile, ConsistencyIsWeak)
{
    PreferenceProfile p{{{1, 3, 2}, {2, 3, 1}, {3, 2, 1}}};
    // agent 1 is equidistant from 2 and 3 only if they coincide
    EXPECT_FALSE(is_consistent(p, LineMetric::from_integers({0, 1, 2})));
    EXPECT_TRUE(is_consistent(p, LineMetric::from_integers({0, 1, 1})));
}

TEST(Profile, PrefersUsesRankPositions)
{
    PreferenceProfile p{{{1, 3, 2}, {2, 1, 3}, {3, 2, 1}}};
    EXPECT_TRUE(p.prefers(1, 3, 2));
    EXPECT_FALSE(p.prefers(1, 2, 3));
}

TEST(Profile, CommitteeIsSortedAndDistinct)
{
    EXPECT_EQ(make_committee({3, 1, 2}), (Committee{1, 2, 3}));
    EXPECT_THROW(make_committee({1, 1}), std::invalid_argument);
}

TEST(Profile, CostSpecNamesAndRange)
{
    EXPECT_EQ(CostSpec::util_add().name(), "util-add");
    EXPECT_EQ(CostSpec::egal_q(3).name(), "egal-q3");
    EXPECT_THROW(check_spec(CostSpec::util_q(3), 2), std::invalid_argument);
    EXPECT_NO_THROW(check_spec(CostSpec::util_q(2), 2));
}

TEST(Profile, FloatPositionsAreMarkedInexact)
{
    auto m = LineMetric::from_doubles({0.5, 1.25});
    EXPECT_FALSE(m.exact);
    EXPECT_EQ(m.d(1, 2), make_rational(3, 4));
    EXPECT_THROW(LineMetric::from_doubles({NAN}), std::invalid_argument);
}
