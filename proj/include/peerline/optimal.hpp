#pragma once

#include "combinations.hpp"
#include "parallel.hpp"
#include "social_cost.hpp"

#include <optional>
#include <utility>

namespace peerline {

struct OptimalResult {
    Committee committee;
    Rational cost;
};

// Full enumeration in lexicographic member order; the first minimum wins.
inline OptimalResult optimal_committee(const LineMetric& m, int k, const CostSpec& spec)
{
    const int n = m.n();
    if (k < 1 || k > n)
        throw std::invalid_argument("k out of range");
    check_spec(spec, k);

    // split by smallest member so workers own disjoint lexicographic ranges
    std::vector<std::optional<OptimalResult>> part(static_cast<size_t>(n - k + 1));
    auto scan = [&](size_t first) {
        const int f = static_cast<int>(first);
        Combination rest(n - f - 1, k - 1);
        std::optional<OptimalResult> best;
        do {
            Committee c{f + 1};
            for (int i : rest.idx)
                c.push_back(f + 2 + i);
            Rational v = social_cost(m, c, spec);
            if (!best || v < best->cost)
                best = OptimalResult{std::move(c), std::move(v)};
        } while (rest.advance());
        part[first] = std::move(best);
    };
    const unsigned workers = binomial(n, k) >= 2000 ? 0 : 1;
    parallel_for(part.size(), scan, workers);

    OptimalResult best = *part.front();
    for (size_t i = 1; i < part.size(); ++i)
        if (part[i] && part[i]->cost < best.cost)
            best = *part[i];
    return best;
}

// Best window of k consecutive agents along the line.
inline OptimalResult consecutive_optimal_util_add(const LineMetric& m, int k)
{
    const int n = m.n();
    if (k < 1 || k > n)
        throw std::invalid_argument("k out of range");
    const auto o = position_order(m);
    std::optional<OptimalResult> best;
    for (int i = 0; i + k <= n; ++i) {
        Committee c(o.begin() + i, o.begin() + i + k);
        c = make_committee(std::move(c));
        Rational v = social_cost(m, c, CostSpec::util_add());
        if (!best || v < best->cost)
            best = OptimalResult{std::move(c), std::move(v)};
    }
    return *best;
}

} // namespace peerline
