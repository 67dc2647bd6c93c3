#pragma once

#include "profile.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace peerline {

inline void check_committee(const LineMetric& m, const Committee& c)
{
    if (c.empty())
        throw std::invalid_argument("empty committee");
    for (AgentId a : c)
        if (a < 1 || a > m.n())
            throw std::invalid_argument("committee member out of range");
}

inline Rational agent_cost(const LineMetric& m, const Committee& c, AgentId a, const CostSpec& spec)
{
    check_committee(m, c);
    check_spec(spec, static_cast<int>(c.size()));
    if (spec.cand == CandAgg::additive) {
        Rational s = 0;
        for (AgentId b : c)
            s += m.d(a, b);
        return s;
    }
    std::vector<Rational> d;
    d.reserve(c.size());
    for (AgentId b : c)
        d.push_back(m.d(a, b));
    auto it = d.begin() + (spec.q - 1);
    std::nth_element(d.begin(), it, d.end());
    return *it;
}

inline Rational social_cost(const LineMetric& m, const Committee& c, const CostSpec& spec)
{
    Rational total = 0;
    for (AgentId a = 1; a <= m.n(); ++a) {
        Rational v = agent_cost(m, c, a, spec);
        if (spec.voter == VoterAgg::utilitarian)
            total += v;
        else if (v > total)
            total = v;
    }
    return total;
}

// agents sorted by position, ties by id
inline std::vector<AgentId> position_order(const LineMetric& m)
{
    std::vector<AgentId> o(static_cast<size_t>(m.n()));
    std::iota(o.begin(), o.end(), 1);
    std::stable_sort(o.begin(), o.end(), [&](AgentId a, AgentId b) { return m.x(a) < m.x(b); });
    return o;
}

// Lower bound on the utilitarian 2-cost of a pair: outer pairs contribute their span,
// the committee's own span counts once per pair, and for odd n the median pays its cost.
inline Rational pairing_lower_bound(const LineMetric& m, const Committee& c)
{
    if (c.size() != 2)
        throw std::invalid_argument("pairing bound needs a committee of size 2");
    check_committee(m, c);
    const int n = m.n();
    const auto o = position_order(m);
    Rational bound = 0;
    for (int i = 1; i <= n / 2; ++i)
        bound += m.d(o[static_cast<size_t>(i - 1)], o[static_cast<size_t>(n - i)]);
    bound += Rational(n / 2) * m.d(c[0], c[1]);
    if (n % 2 == 1)
        bound += agent_cost(m, c, o[static_cast<size_t>(n / 2)], CostSpec::util_q(2));
    return bound;
}

// additive costs of the leftmost and rightmost agents
inline std::pair<Rational, Rational> extreme_costs(const LineMetric& m, const Committee& c)
{
    const auto o = position_order(m);
    const CostSpec add = CostSpec::util_add();
    return {agent_cost(m, c, o.front(), add), agent_cost(m, c, o.back(), add)};
}

} // namespace peerline
