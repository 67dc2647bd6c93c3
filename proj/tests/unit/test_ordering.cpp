#include "peerline/ordering.hpp"
#include "support/oracles.hpp"
#include "support/sweep.hpp"

#include <gtest/gtest.h>

using namespace peerline;

namespace {

// the agents sorted by position, ties by id, in canonical direction
AgentOrder sorted_order(const std::vector<int>& x)
{
    std::vector<AgentId> perm;
    for (int a = 1; a <= static_cast<int>(x.size()); ++a)
        perm.push_back(a);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return x[a - 1] < x[b - 1]; });
    return canonical_order(perm);
}

} // namespace

TEST(Ordering, ReconstructedOrderAdmitsTheGeneratingMetric)
{
    for (int n = 1; n <= 6; ++n) {
        for (const auto& r : sweep::realizable_profiles(n)) {
            AgentOrder o = reconstruct_order(r.profile);
            ASSERT_TRUE(is_realizable(r.profile, o));
            // some candidate order carries the positions that produced the profile
            bool found = false;
            LineMetric m = sweep::metric_of(r.positions);
            for (const auto& c : candidate_orders(r.profile)) {
                try {
                    auto g = gaps_from_metric(m, c);
                    if (consistency_constraints(r.profile, c).contains(g))
                        found = true;
                } catch (const std::invalid_argument&) {
                }
            }
            EXPECT_TRUE(found) << "n=" << n;
        }
    }
}

TEST(Ordering, SortedOrderOfDistinctPositionsIsACandidate)
{
    for (const auto& r : sweep::realizable_profiles(5)) {
        std::vector<int> x = r.positions;
        std::vector<int> s = x;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            continue;
        auto cands = candidate_orders(r.profile);
        EXPECT_NE(std::find(cands.begin(), cands.end(), sorted_order(x)), cands.end());
    }
}

TEST(Ordering, ConeMembershipMatchesDirectConsistency)
{
    for (const auto& r : sweep::realizable_profiles(4)) {
        for (const auto& o : candidate_orders(r.profile)) {
            auto cone = consistency_constraints(r.profile, o);
            std::vector<int> g(3);
            for (g[0] = 0; g[0] <= 3; ++g[0])
                for (g[1] = 0; g[1] <= 3; ++g[1])
                    for (g[2] = 0; g[2] <= 3; ++g[2]) {
                        std::vector<long long> gl(g.begin(), g.end());
                        LineMetric m = metric_from_gaps(o, gl);
                        std::vector<long long> x;
                        for (const auto& v : m.positions)
                            x.push_back(v.get_num().get_si());
                        EXPECT_EQ(cone.contains(gl), oracle::consistent(r.profile, x));
                    }
        }
    }
}

TEST(Ordering, UnrealizableProfileIsRejected)
{
    // cyclic favourites: an end agent must rank the middle one first
    PreferenceProfile p{{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}};
    EXPECT_THROW(reconstruct_order(p), NotRealizable);
    EXPECT_THROW(candidate_orders(p), NotRealizable);
}

TEST(Ordering, MalformedInputs)
{
    PreferenceProfile p{{{1, 2, 3}, {2, 1, 3}, {3, 2, 1}}};
    EXPECT_THROW(consistency_constraints(p, AgentOrder{{1, 2}}), std::invalid_argument);
    EXPECT_FALSE(is_realizable(p, AgentOrder{{1, 1, 2}}));
    EXPECT_THROW(reconstruct_order(PreferenceProfile{{{1, 1}, {2, 1}}}), std::invalid_argument);
}

TEST(Ordering, GapsRoundTripAndMirror)
{
    AgentOrder o{{2, 1, 3}};
    auto m = metric_from_gaps(o, std::vector<long long>{1, 2});
    EXPECT_EQ(m.x(2), 0);
    EXPECT_EQ(m.x(1), 1);
    EXPECT_EQ(m.x(3), 3);
    EXPECT_EQ(gaps_from_metric(m, o), (std::vector<Rational>{1, 2}));
    EXPECT_EQ(gaps_from_metric(m, AgentOrder{{3, 1, 2}}), (std::vector<Rational>{2, 1}));
    EXPECT_THROW(gaps_from_metric(m, AgentOrder{{1, 2, 3}}), std::invalid_argument);
}

TEST(Ordering, CanonicalOrderPutsSmallerEndLeft)
{
    EXPECT_EQ(canonical_order({3, 1, 2}).perm, (std::vector<AgentId>{2, 1, 3}));
    EXPECT_EQ(to_string(canonical_order({1, 2})), "(1,2)");
}

TEST(Ordering, TieProfileHasSeveralOrders)
{
    // positions 0,0,1 leave agents 1 and 2 interchangeable
    auto p = sweep::realizable_profiles(3);
    size_t most = 0;
    for (const auto& r : p)
        most = std::max(most, candidate_orders(r.profile).size());
    EXPECT_GE(most, 2u);
}
