#pragma once

#include "errors.hpp"
#include "rational.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

namespace peerline {

using AgentId = int; // 1-based
using Ranking = std::vector<AgentId>;

struct PreferenceProfile {
    std::vector<Ranking> rankings; // rankings[a-1] is agent a's ranking, most preferred first

    int n() const { return static_cast<int>(rankings.size()); }
    const Ranking& of(AgentId a) const { return rankings.at(static_cast<size_t>(a - 1)); }

    // b strictly before c in a's ranking
    bool prefers(AgentId a, AgentId b, AgentId c) const
    {
        for (AgentId x : of(a)) {
            if (x == b)
                return true;
            if (x == c)
                return false;
        }
        return false;
    }

    friend bool operator==(const PreferenceProfile&, const PreferenceProfile&) = default;
};

struct Election {
    PreferenceProfile profile;
    int k = 1;

    int n() const { return profile.n(); }
};

struct LineMetric {
    std::vector<Rational> positions; // positions[a-1] = x_a
    bool exact = true;               // false when built from floating-point input

    LineMetric() = default;
    explicit LineMetric(std::vector<Rational> xs) : positions(std::move(xs)) {}

    static LineMetric from_integers(const std::vector<long long>& xs)
    {
        LineMetric m;
        for (long long v : xs)
            m.positions.push_back(make_rational(v));
        return m;
    }
    static LineMetric from_doubles(const std::vector<double>& xs)
    {
        LineMetric m;
        for (double v : xs) {
            if (!std::isfinite(v))
                throw std::invalid_argument("non-finite position");
            m.positions.emplace_back(v);
        }
        m.exact = false;
        return m;
    }

    int n() const { return static_cast<int>(positions.size()); }
    const Rational& x(AgentId a) const { return positions.at(static_cast<size_t>(a - 1)); }
    Rational d(AgentId a, AgentId b) const { return abs(x(a) - x(b)); }

    friend bool operator==(const LineMetric& a, const LineMetric& b) { return a.positions == b.positions; }
};

using Committee = std::vector<AgentId>; // sorted, distinct

inline Committee make_committee(std::vector<AgentId> members)
{
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw std::invalid_argument("committee has duplicate members");
    return members;
}

enum class VoterAgg { utilitarian, egalitarian };
enum class CandAgg { additive, qcost };

struct CostSpec {
    VoterAgg voter = VoterAgg::utilitarian;
    CandAgg cand = CandAgg::additive;
    int q = 0; // meaningful only for qcost

    static CostSpec util_add() { return {VoterAgg::utilitarian, CandAgg::additive, 0}; }
    static CostSpec egal_add() { return {VoterAgg::egalitarian, CandAgg::additive, 0}; }
    static CostSpec util_q(int q) { return {VoterAgg::utilitarian, CandAgg::qcost, q}; }
    static CostSpec egal_q(int q) { return {VoterAgg::egalitarian, CandAgg::qcost, q}; }

    bool additive() const { return cand == CandAgg::additive; }

    std::string name() const
    {
        std::string s = voter == VoterAgg::utilitarian ? "util" : "egal";
        if (cand == CandAgg::additive)
            return s + "-add";
        return s + "-q" + std::to_string(q);
    }

    friend bool operator==(const CostSpec&, const CostSpec&) = default;
};

inline void check_spec(const CostSpec& spec, int k)
{
    if (spec.cand == CandAgg::qcost && (spec.q < 1 || spec.q > k))
        throw std::invalid_argument("q must lie in [1, k], got q=" + std::to_string(spec.q) + " with k=" + std::to_string(k));
}

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

inline ValidationReport validate_profile(const PreferenceProfile& p)
{
    ValidationReport rep;
    const int n = p.n();
    for (int a = 1; a <= n; ++a) {
        const Ranking& r = p.of(a);
        const std::string who = "ranking " + std::to_string(a);
        if (static_cast<int>(r.size()) != n)
            rep.violations.push_back(who + " has " + std::to_string(r.size()) + " entries, expected " + std::to_string(n));
        std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
        bool dup = false;
        for (AgentId x : r) {
            if (x < 1 || x > n) {
                rep.violations.push_back("out-of-range agent " + std::to_string(x) + " in " + who);
                continue;
            }
            if (seen[static_cast<size_t>(x)] && !dup) {
                rep.violations.push_back("duplicate agent in " + who);
                dup = true;
            }
            seen[static_cast<size_t>(x)] = 1;
        }
    }
    return rep;
}

inline ValidationReport validate_election(const Election& e)
{
    ValidationReport rep = validate_profile(e.profile);
    if (e.k < 1 || e.k > e.n())
        rep.violations.push_back("k out of range");
    return rep;
}

inline void require_valid(const Election& e)
{
    auto rep = validate_election(e);
    if (!rep.ok())
        throw std::invalid_argument(rep.violations.front());
}

// tie(owner, b, c): true when b should come before c among agents equidistant from owner
using TieBreak = std::function<bool(AgentId, AgentId, AgentId)>;

inline bool tie_by_id(AgentId, AgentId b, AgentId c) { return b < c; }

inline PreferenceProfile profile_from_positions(const LineMetric& m, const TieBreak& tie = tie_by_id)
{
    const int n = m.n();
    if (n < 1)
        throw std::invalid_argument("need at least one agent");
    PreferenceProfile p;
    p.rankings.resize(static_cast<size_t>(n));
    for (AgentId a = 1; a <= n; ++a) {
        Ranking others;
        for (AgentId b = 1; b <= n; ++b)
            if (b != a)
                others.push_back(b);
        std::vector<Rational> dist(static_cast<size_t>(n) + 1);
        for (AgentId b = 1; b <= n; ++b)
            dist[static_cast<size_t>(b)] = m.d(a, b);
        std::stable_sort(others.begin(), others.end(), [&](AgentId b, AgentId c) {
            int s = cmp(dist[static_cast<size_t>(b)], dist[static_cast<size_t>(c)]);
            if (s != 0)
                return s < 0;
            return tie(a, b, c);
        });
        Ranking& r = p.rankings[static_cast<size_t>(a - 1)];
        r.push_back(a);
        r.insert(r.end(), others.begin(), others.end());
    }
    return p;
}

// weak consistency: b before c in a's ranking implies d(a,b) <= d(a,c)
inline bool is_consistent(const PreferenceProfile& p, const LineMetric& m)
{
    if (m.n() != p.n())
        return false;
    for (AgentId a = 1; a <= p.n(); ++a) {
        const Ranking& r = p.of(a);
        for (size_t i = 0; i + 1 < r.size(); ++i)
            if (m.d(a, r[i]) > m.d(a, r[i + 1]))
                return false;
    }
    return true;
}

inline std::string to_string(const Committee& c)
{
    std::string s = "[";
    for (size_t i = 0; i < c.size(); ++i)
        s += (i ? ", " : "") + std::to_string(c[i]);
    return s + "]";
}

} // namespace peerline
