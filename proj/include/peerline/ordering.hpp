#pragma once

#include "lp.hpp"
#include "profile.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

namespace peerline {

struct AgentOrder {
    std::vector<AgentId> perm; // left to right

    int n() const { return static_cast<int>(perm.size()); }
    AgentId at(int i) const { return perm.at(static_cast<size_t>(i - 1)); } // 1-based slot

    // slot[a] = 0-based slot of agent a
    std::vector<int> slots() const
    {
        std::vector<int> s(perm.size() + 1, -1);
        for (size_t i = 0; i < perm.size(); ++i)
            s.at(static_cast<size_t>(perm[i])) = static_cast<int>(i);
        return s;
    }

    friend bool operator==(const AgentOrder&, const AgentOrder&) = default;
};

inline bool is_permutation_of_n(const std::vector<AgentId>& v, int n)
{
    if (static_cast<int>(v.size()) != n)
        return false;
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (AgentId a : v) {
        if (a < 1 || a > n || seen[static_cast<size_t>(a)])
            return false;
        seen[static_cast<size_t>(a)] = 1;
    }
    return true;
}

// pick the reversal with the smaller id on the left
inline AgentOrder canonical_order(std::vector<AgentId> perm)
{
    if (!perm.empty() && perm.front() > perm.back())
        std::reverse(perm.begin(), perm.end());
    return {std::move(perm)};
}

// Rows r with r.g <= 0 over the n-1 gaps of `order`.
struct ConsistencyCone {
    AgentOrder order;
    std::vector<std::vector<long long>> rows;

    int dim() const { return std::max(0, order.n() - 1); }

    template <class T>
    bool contains(const std::vector<T>& g) const
    {
        if (static_cast<int>(g.size()) != dim())
            return false;
        for (const auto& x : g)
            if (x < 0)
                return false;
        for (const auto& r : rows) {
            T s = 0;
            for (size_t i = 0; i < r.size(); ++i)
                if (r[i] != 0)
                    s += g[i] * static_cast<long>(r[i]);
            if (s > 0)
                return false;
        }
        return true;
    }
};

inline ConsistencyCone consistency_constraints(const PreferenceProfile& p, const AgentOrder& order)
{
    const int n = p.n();
    if (!is_permutation_of_n(order.perm, n))
        throw std::invalid_argument("order is not a permutation of the agents");
    ConsistencyCone cone{order, {}};
    if (n < 2)
        return cone;
    const std::vector<int> slot = order.slots();
    const size_t dim = static_cast<size_t>(n - 1);
    std::set<std::vector<long long>> seen;

    auto add_span = [&](std::vector<long long>& row, AgentId a, AgentId b, long long sign) {
        int i = slot[static_cast<size_t>(a)], j = slot[static_cast<size_t>(b)];
        if (i > j)
            std::swap(i, j);
        for (int t = i; t < j; ++t)
            row[static_cast<size_t>(t)] += sign;
    };

    for (AgentId a = 1; a <= n; ++a) {
        const Ranking& r = p.of(a);
        for (size_t i = 0; i + 1 < r.size(); ++i) {
            std::vector<long long> row(dim, 0);
            add_span(row, a, r[i], +1);
            add_span(row, a, r[i + 1], -1);
            if (std::none_of(row.begin(), row.end(), [](long long v) { return v > 0; }))
                continue; // implied by g >= 0
            if (seen.insert(row).second)
                cone.rows.push_back(std::move(row));
        }
    }
    return cone;
}

// The cone holds a gap vector with sum 1.
inline bool cone_has_nonzero(const ConsistencyCone& cone)
{
    const int dim = cone.dim();
    if (dim == 0)
        return true;
    lp::Problem pr;
    pr.A = cone.rows;
    pr.b.assign(cone.rows.size(), 0);
    pr.A.emplace_back(static_cast<size_t>(dim), 1);
    pr.b.push_back(1);
    pr.c.assign(static_cast<size_t>(dim), 1);
    auto sol = lp::maximize(pr);
    return sol.status == lp::Status::optimal && sol.value == 1;
}

inline bool is_realizable(const PreferenceProfile& p, const AgentOrder& order)
{
    if (p.n() <= 1)
        return true;
    if (!is_permutation_of_n(order.perm, p.n()) || !validate_profile(p).ok())
        return false;
    return cone_has_nonzero(consistency_constraints(p, order));
}

inline AgentOrder reconstruct_order(const PreferenceProfile& p)
{
    const int n = p.n();
    auto rep = validate_profile(p);
    if (!rep.ok())
        throw std::invalid_argument(rep.violations.front());
    if (n <= 2) {
        std::vector<AgentId> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        return {perm};
    }
    // the agent ranked last by agent 1 is farthest from it, hence at an end of the line
    AgentId e = p.of(1).back();
    AgentOrder cand = canonical_order(p.of(e));
    if (is_realizable(p, cand))
        return cand;
    for (AgentId a = 1; a <= n; ++a) {
        if (a == e)
            continue;
        cand = canonical_order(p.of(a));
        if (is_realizable(p, cand))
            return cand;
    }
    throw NotRealizable("profile is not consistent with any line metric");
}

// Every consistent metric is monotone along the ranking of its leftmost agent, so the
// realizable orders among the agents' own rankings cover all consistent metrics. Under
// ties there can be several, with different cones.
inline std::vector<AgentOrder> candidate_orders(const PreferenceProfile& p)
{
    const int n = p.n();
    std::vector<AgentOrder> out;
    if (n <= 2) {
        out.push_back(reconstruct_order(p));
        return out;
    }
    if (!validate_profile(p).ok())
        throw std::invalid_argument(validate_profile(p).violations.front());
    AgentId first = p.of(1).back();
    std::vector<AgentId> agents{first};
    for (AgentId a = 1; a <= n; ++a)
        if (a != first)
            agents.push_back(a);
    for (AgentId a : agents) {
        AgentOrder cand = canonical_order(p.of(a));
        if (std::find(out.begin(), out.end(), cand) != out.end())
            continue;
        if (is_realizable(p, cand))
            out.push_back(std::move(cand));
    }
    if (out.empty())
        throw NotRealizable("profile is not consistent with any line metric");
    return out;
}

// Gaps of a metric along an order. A metric that decreases along the order is read
// mirrored; one that is not monotone is rejected.
inline std::vector<Rational> gaps_from_metric(const LineMetric& m, const AgentOrder& order)
{
    const int n = order.n();
    if (m.n() != n)
        throw std::invalid_argument("metric size does not match order");
    std::vector<Rational> g;
    bool pos = false, neg = false;
    for (int i = 1; i < n; ++i) {
        g.push_back(m.x(order.at(i + 1)) - m.x(order.at(i)));
        pos |= sgn(g.back()) > 0;
        neg |= sgn(g.back()) < 0;
    }
    if (pos && neg)
        throw std::invalid_argument("metric is not monotone along the order");
    if (neg)
        for (auto& v : g)
            v = -v;
    return g;
}

template <class T>
LineMetric metric_from_gaps(const AgentOrder& order, const std::vector<T>& gaps)
{
    const int n = order.n();
    if (static_cast<int>(gaps.size()) != std::max(0, n - 1))
        throw std::invalid_argument("gap vector has wrong length");
    LineMetric m;
    m.positions.assign(static_cast<size_t>(n), Rational(0));
    Rational x = 0;
    for (int i = 1; i <= n; ++i) {
        if (i > 1)
        {
            const T& v = gaps[static_cast<size_t>(i - 2)];
            if constexpr (std::is_integral_v<T>)
                x += make_rational(static_cast<long long>(v));
            else
                x += Rational(v);
        }
        m.positions[static_cast<size_t>(order.at(i) - 1)] = x;
    }
    return m;
}

inline std::string to_string(const AgentOrder& o)
{
    std::string s = "(";
    for (size_t i = 0; i < o.perm.size(); ++i)
        s += (i ? "," : "") + std::to_string(o.perm[i]);
    return s + ")";
}

} // namespace peerline
