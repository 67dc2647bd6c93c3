#pragma once

// Brute-force reference implementations. Plain integers and direct definitions only;
// nothing here calls the library's cost, order or LP code.

#include "peerline/profile.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <vector>

namespace oracle {

using peerline::PreferenceProfile;
using peerline::Ranking;

// q = 0 means additive.
inline long long agent_cost(const std::vector<long long>& x, uint64_t mask, int a, int q)
{
    long long d[64];
    int m = 0;
    for (size_t b = 0; b < x.size(); ++b)
        if (mask >> b & 1)
            d[m++] = std::llabs(x[static_cast<size_t>(a)] - x[b]);
    if (q == 0) {
        long long s = 0;
        for (int i = 0; i < m; ++i)
            s += d[i];
        return s;
    }
    std::sort(d, d + m);
    return d[q - 1];
}

inline long long social_cost(const std::vector<long long>& x, uint64_t mask, bool egal, int q)
{
    long long t = 0;
    for (size_t a = 0; a < x.size(); ++a) {
        long long v = agent_cost(x, mask, static_cast<int>(a), q);
        t = egal ? std::max(t, v) : t + v;
    }
    return t;
}

inline long long optimum(const std::vector<long long>& x, int k, bool egal, int q)
{
    const int n = static_cast<int>(x.size());
    long long best = -1;
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        if (__builtin_popcountll(mask) != k)
            continue;
        long long v = social_cost(x, mask, egal, q);
        if (best < 0 || v < best)
            best = v;
    }
    return best;
}

inline uint64_t mask_of(const std::vector<int>& committee)
{
    uint64_t m = 0;
    for (int a : committee)
        m |= uint64_t{1} << (a - 1);
    return m;
}

// Weak consistency straight from the definition.
inline bool consistent(const PreferenceProfile& p, const std::vector<long long>& x)
{
    for (int a = 1; a <= p.n(); ++a) {
        const Ranking& r = p.of(a);
        for (size_t i = 0; i + 1 < r.size(); ++i)
            if (std::llabs(x[a - 1] - x[r[i] - 1]) > std::llabs(x[a - 1] - x[r[i + 1] - 1]))
                return false;
    }
    return true;
}

// Every consistent metric is sorted along the ranking of its leftmost agent, so walking
// each distinct ranking (up to reversal) with gaps in {0..G} reaches every consistent
// integer metric with gaps in that range. fn(x, gaps) gets positions by agent and the
// gap vector along the order. Metrics reachable from two rankings are visited twice.
template <class F>
void for_each_grid_metric(const PreferenceProfile& p, int G, F&& fn)
{
    const int n = p.n();
    if (n == 1) {
        std::vector<long long> x{0};
        fn(x, std::vector<int>{});
        return;
    }
    std::set<Ranking> orders;
    for (int a = 1; a <= n; ++a) {
        Ranking r = p.of(a);
        if (r.front() > r.back())
            std::reverse(r.begin(), r.end());
        orders.insert(r);
    }
    for (const Ranking& ord : orders) {
        std::vector<int> slot(static_cast<size_t>(n) + 1);
        for (int i = 0; i < n; ++i)
            slot[static_cast<size_t>(ord[static_cast<size_t>(i)])] = i;
        // checks that become decidable once slot j is placed
        struct Check {
            int a, b, c;
        };
        std::vector<std::vector<Check>> at(static_cast<size_t>(n));
        for (int a = 1; a <= n; ++a) {
            const Ranking& r = p.of(a);
            for (size_t i = 0; i + 1 < r.size(); ++i) {
                int j = std::max({slot[a], slot[r[i]], slot[r[i + 1]]});
                at[static_cast<size_t>(j)].push_back({a, r[i], r[i + 1]});
            }
        }
        std::vector<long long> x(static_cast<size_t>(n), 0);
        std::vector<int> gaps(static_cast<size_t>(n - 1), 0);
        auto ok = [&](int j) {
            for (const Check& t : at[static_cast<size_t>(j)])
                if (std::llabs(x[t.a - 1] - x[t.b - 1]) > std::llabs(x[t.a - 1] - x[t.c - 1]))
                    return false;
            return true;
        };
        auto dfs = [&](auto&& self, int j) -> void {
            if (j == n) {
                fn(x, gaps);
                return;
            }
            const long long prev = x[static_cast<size_t>(ord[static_cast<size_t>(j - 1)] - 1)];
            for (int g = 0; g <= G; ++g) {
                gaps[static_cast<size_t>(j - 1)] = g;
                x[static_cast<size_t>(ord[static_cast<size_t>(j)] - 1)] = prev + g;
                if (ok(j))
                    self(self, j + 1);
            }
        };
        x[static_cast<size_t>(ord[0] - 1)] = 0;
        if (ok(0))
            dfs(dfs, 1);
    }
}

// Exact fraction a/b with b > 0, or infinity when b == 0 < a (0/0 counts as 1).
struct Frac {
    long long num = 1, den = 1;
    bool inf() const { return den == 0; }
    static Frac of(long long a, long long b)
    {
        if (b == 0)
            return a == 0 ? Frac{1, 1} : Frac{1, 0};
        return {a, b};
    }
    friend bool operator<(const Frac& l, const Frac& r)
    {
        if (r.inf())
            return !l.inf();
        if (l.inf())
            return false;
        return static_cast<__int128>(l.num) * r.den < static_cast<__int128>(r.num) * l.den;
    }
};

} // namespace oracle
