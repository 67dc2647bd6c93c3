#include "peerline/optimal.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace peerline;

TEST(Optimal, MatchesOracleForEveryObjective)
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        std::vector<long long> x(static_cast<size_t>(n));
        for (auto& v : x)
            v = rng() % 15;
        auto m = LineMetric::from_integers(x);
        for (int k = 1; k <= n; ++k) {
            std::vector<std::pair<CostSpec, int>> specs{{CostSpec::util_add(), 0}, {CostSpec::egal_add(), 0}};
            for (int q = 1; q <= k; ++q)
                specs.push_back({CostSpec::util_q(q), q}), specs.push_back({CostSpec::egal_q(q), q});
            for (const auto& [sp, q] : specs) {
                auto res = optimal_committee(m, k, sp);
                bool egal = sp.voter == VoterAgg::egalitarian;
                EXPECT_EQ(res.cost, make_rational(oracle::optimum(x, k, egal, q))) << sp.name() << " k=" << k;
                EXPECT_EQ(static_cast<int>(res.committee.size()), k);
                EXPECT_EQ(social_cost(m, res.committee, sp), res.cost);
            }
        }
    }
}

TEST(Optimal, FirstMinimumInLexicographicOrder)
{
    auto m = LineMetric::from_integers({0, 0, 0});
    EXPECT_EQ(optimal_committee(m, 2, CostSpec::util_add()).committee, (Committee{1, 2}));
}

TEST(Optimal, ConsecutiveUtilAddMatchesOracle)
{
    std::mt19937 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        std::vector<long long> x(static_cast<size_t>(n));
        for (auto& v : x)
            v = rng() % 20;
        auto m = LineMetric::from_integers(x);
        for (int k = 1; k <= n; ++k) {
            auto res = consecutive_optimal_util_add(m, k);
            EXPECT_EQ(res.cost, make_rational(oracle::optimum(x, k, false, 0)));
            EXPECT_EQ(social_cost(m, res.committee, CostSpec::util_add()), res.cost);
        }
    }
}

TEST(Optimal, RangeChecks)
{
    auto m = LineMetric::from_integers({0, 1});
    EXPECT_THROW(optimal_committee(m, 0, CostSpec::util_add()), std::invalid_argument);
    EXPECT_THROW(optimal_committee(m, 3, CostSpec::util_add()), std::invalid_argument);
    EXPECT_THROW(optimal_committee(m, 1, CostSpec::util_q(2)), std::invalid_argument);
}
