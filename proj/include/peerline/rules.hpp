#pragma once

#include "ordering.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace peerline {

enum class RuleId { median, median_alternation, favorite_couple, two_medians, k_extremes, median_pair };

inline std::string rule_name(RuleId r)
{
    switch (r) {
    case RuleId::median: return "median";
    case RuleId::median_alternation: return "median-alternation";
    case RuleId::favorite_couple: return "favorite-couple";
    case RuleId::two_medians: return "two-medians";
    case RuleId::k_extremes: return "k-extremes";
    case RuleId::median_pair: return "median-pair";
    }
    return "?";
}

inline std::optional<RuleId> parse_rule(std::string_view s)
{
    for (RuleId r : {RuleId::median, RuleId::median_alternation, RuleId::favorite_couple, RuleId::two_medians,
                     RuleId::k_extremes, RuleId::median_pair})
        if (s == rule_name(r))
            return r;
    return std::nullopt;
}

namespace detail {

// agents in slots [lo, hi] (1-based, inclusive)
inline Committee slot_block(const AgentOrder& o, int lo, int hi)
{
    Committee c;
    for (int i = lo; i <= hi; ++i)
        c.push_back(o.at(i));
    return make_committee(std::move(c));
}

inline AgentOrder order_for(const Election& e, const AgentOrder* order)
{
    require_valid(e);
    if (order) {
        if (!is_permutation_of_n(order->perm, e.n()))
            throw std::invalid_argument("order is not a permutation of the agents");
        return *order;
    }
    return reconstruct_order(e.profile);
}

inline AgentId top_other(const PreferenceProfile& p, AgentId a)
{
    for (AgentId x : p.of(a))
        if (x != a)
            return x;
    return a;
}

} // namespace detail

inline bool is_couple(const PreferenceProfile& p, AgentId a, AgentId b)
{
    return a != b && detail::top_other(p, a) == b && detail::top_other(p, b) == a;
}

inline Committee median(const Election& e, const AgentOrder* order = nullptr)
{
    if (e.k != 1)
        throw RuleInapplicable("median needs k = 1");
    AgentOrder o = detail::order_for(e, order);
    int m = (e.n() + 1) / 2;
    return {o.at(m)};
}

// Median plus the neighbour it prefers; odd n, k = 2.
inline Committee median_pair(const Election& e, const AgentOrder* order = nullptr)
{
    if (e.k != 2 || e.n() % 2 == 0 || e.n() < 3)
        throw RuleInapplicable("median pair needs k = 2 and odd n >= 3");
    AgentOrder o = detail::order_for(e, order);
    int m = (e.n() + 1) / 2;
    if (e.profile.prefers(o.at(m), o.at(m - 1), o.at(m + 1)))
        return detail::slot_block(o, m - 1, m);
    return detail::slot_block(o, m, m + 1);
}

inline Committee two_medians(const Election& e, const AgentOrder* order = nullptr)
{
    if (e.k != 2)
        throw RuleInapplicable("two medians needs k = 2");
    if (e.n() % 2 == 1)
        return median_pair(e, order);
    AgentOrder o = detail::order_for(e, order);
    return detail::slot_block(o, e.n() / 2, e.n() / 2 + 1);
}

inline Committee median_alternation(const Election& e, const AgentOrder* order = nullptr)
{
    const int n = e.n(), k = e.k;
    if (k < 2)
        throw RuleInapplicable("median alternation needs k >= 2");
    AgentOrder o = detail::order_for(e, order);
    if ((n - k) % 2 == 0)
        return detail::slot_block(o, (n - k) / 2 + 1, (n + k) / 2);
    const int a = (n - k + 1) / 2, b = (n + k + 1) / 2;
    const AgentId m = o.at((n + 2) / 2);
    if (e.profile.prefers(m, o.at(a), o.at(b)))
        return detail::slot_block(o, a, b - 1);
    return detail::slot_block(o, a + 1, b);
}

inline Committee favorite_couple(const Election& e, const AgentOrder* order = nullptr)
{
    const int n = e.n();
    if (e.k != 2)
        throw RuleInapplicable("favorite couple needs k = 2");
    if (n % 2 == 0)
        throw RuleInapplicable("favorite couple needs an odd number of agents");
    if (n < 5)
        throw RuleInapplicable("favorite couple needs n >= 5");
    AgentOrder o = detail::order_for(e, order);
    const PreferenceProfile& p = e.profile;
    const int m = (n + 1) / 2;
    const AgentId med = o.at(m);
    const bool left = is_couple(p, o.at(m - 1), med);
    const bool right = is_couple(p, med, o.at(m + 1));
    if (left && right) {
        if (p.prefers(med, o.at(m - 1), o.at(m + 1)))
            return detail::slot_block(o, m - 1, m);
        return detail::slot_block(o, m, m + 1);
    }
    if (left)
        return detail::slot_block(o, m - 1, m);
    if (right)
        return detail::slot_block(o, m, m + 1);
    if (p.prefers(med, o.at(m + 2), o.at(m - 2)))
        return detail::slot_block(o, m + 1, m + 2);
    return detail::slot_block(o, m - 2, m - 1);
}

inline Committee k_extremes(const Election& e, const AgentOrder* order = nullptr)
{
    const int n = e.n(), k = e.k;
    if (k < 2)
        throw RuleInapplicable("k-extremes needs k >= 2");
    AgentOrder o = detail::order_for(e, order);
    Committee c;
    for (int i = 1; i <= k / 2; ++i)
        c.push_back(o.at(i));
    for (int i = n - (k + 1) / 2 + 1; i <= n; ++i)
        c.push_back(o.at(i));
    return make_committee(std::move(c));
}

inline Committee apply_rule(RuleId r, const Election& e, const AgentOrder* order = nullptr)
{
    switch (r) {
    case RuleId::median: return median(e, order);
    case RuleId::median_alternation: return median_alternation(e, order);
    case RuleId::favorite_couple:
        if (e.k == 2 && e.n() == 3)
            return median_pair(e, order);
        return favorite_couple(e, order);
    case RuleId::two_medians: return two_medians(e, order);
    case RuleId::k_extremes: return k_extremes(e, order);
    case RuleId::median_pair: return median_pair(e, order);
    }
    throw RuleInapplicable("unknown rule");
}

} // namespace peerline
