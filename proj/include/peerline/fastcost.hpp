#pragma once

// Integer-coordinate cost evaluation used by the estimators and sweeps. Agents are
// addressed by slot along a fixed order and positions are nondecreasing int64 values;
// committees are bitmasks over slots (n <= 62). Positions need not be sorted.

#include "combinations.hpp"
#include "profile.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace peerline::fast {

using i128 = __int128;

struct Layout {
    std::vector<long long> x; // x[slot]

    explicit Layout(std::vector<long long> xs) : x(std::move(xs)) {}

    int n() const { return static_cast<int>(x.size()); }
    long long dist(int a, int b) const
    {
        long long d = x[static_cast<size_t>(a)] - x[static_cast<size_t>(b)];
        return d < 0 ? -d : d;
    }

    i128 agent_cost(int a, uint64_t mask, const CostSpec& spec) const
    {
        if (spec.cand == CandAgg::additive) {
            i128 s = 0;
            for (int b = 0; b < n(); ++b)
                if (mask >> b & 1)
                    s += dist(a, b);
            return s;
        }
        long long d[64];
        int m = 0;
        for (int b = 0; b < n(); ++b)
            if (mask >> b & 1)
                d[m++] = dist(a, b);
        if (spec.q < 1 || spec.q > m)
            return 0;
        std::nth_element(d, d + spec.q - 1, d + m);
        return d[spec.q - 1];
    }

    // Social cost, or any value >= cap once the running total reaches cap.
    i128 social_cost(uint64_t mask, const CostSpec& spec, i128 cap = -1) const
    {
        i128 t = 0;
        for (int a = 0; a < n(); ++a) {
            i128 v = agent_cost(a, mask, spec);
            if (spec.voter == VoterAgg::utilitarian)
                t += v;
            else if (v > t)
                t = v;
            if (cap >= 0 && t >= cap)
                return t;
        }
        return t;
    }

    i128 optimum(int k, const CostSpec& spec) const
    {
        const int nn = n();
        if (k < 1 || k > nn || nn > 62)
            throw std::invalid_argument("optimum: need 1 <= k <= n <= 62");
        // k-subsets as bitmasks in increasing order (Gosper)
        uint64_t mask = (uint64_t{1} << k) - 1;
        const uint64_t limit = uint64_t{1} << nn;
        i128 best = -1;
        while (mask < limit) {
            i128 v = social_cost(mask, spec, best);
            if (best < 0 || v < best)
                best = v;
            if (best == 0)
                break;
            uint64_t c = mask & (~mask + 1), r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
        return best;
    }
};

inline Integer to_integer(i128 v)
{
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    Integer hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(static_cast<uint64_t>(u)));
    Integer r = (hi << 64) + lo;
    return neg ? Integer(-r) : r;
}

inline Extended ratio(i128 num, i128 den)
{
    if (den == 0)
        return num == 0 ? Extended::of(1) : Extended::inf();
    Rational r(to_integer(num), to_integer(den));
    r.canonicalize();
    return Extended::of(r);
}

// Integer positions for a rational gap vector (scaled by the lcm of denominators), or
// nothing when they would not fit comfortably in int64.
inline std::optional<std::vector<long long>> integer_positions(const std::vector<Rational>& gaps)
{
    Integer l = 1;
    for (const auto& g : gaps)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), g.get_den_mpz_t());
    std::vector<long long> x{0};
    Integer acc = 0;
    const Integer limit = Integer(1) << 40;
    for (const auto& g : gaps) {
        acc += g.get_num() * (l / g.get_den());
        if (acc > limit)
            return std::nullopt;
        x.push_back(acc.get_si());
    }
    return x;
}

} // namespace peerline::fast
