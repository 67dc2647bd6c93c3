#pragma once

// Exact simplex for   max c.x  s.t.  A x <= b, x >= 0   with integer data and b >= 0,
// so the origin is a feasible start and no phase one is needed.
//
// The dictionary is kept fraction-free (Edmonds/Bareiss pivoting): every entry is an
// integer over the common denominator D, the previous pivot. Entries stay bounded by
// minors of [A b; c 0], so int64 with 128-bit intermediates covers desk-scale problems;
// on overflow we redo the solve over GMP integers. Bland's rule prevents cycling.

#include "rational.hpp"

#include <cstdint>
#include <type_traits>
#include <vector>

namespace peerline::lp {

struct Problem {
    std::vector<std::vector<long long>> A;
    std::vector<long long> b;
    std::vector<long long> c;
};

enum class Status { optimal, unbounded };

struct Solution {
    Status status = Status::optimal;
    Rational value = 0;          // optimal objective (optimal only)
    std::vector<Rational> x;     // optimal vertex (optimal only)
    std::vector<Integer> ray;    // r >= 0, A r <= 0, c.r > 0 (unbounded only)
    int pivots = 0;
};

namespace detail {

struct Overflow {};

inline long long narrow(__int128 v)
{
    if (v > INT64_MAX || v < INT64_MIN)
        throw Overflow{};
    return static_cast<long long>(v);
}

// (p*a - q*b) / d, exact division
inline long long ffstep(long long p, long long a, long long q, long long b, long long d)
{
    __int128 t = static_cast<__int128>(p) * a - static_cast<__int128>(q) * b;
    if (d == 1)
        return narrow(t);
    if (t >= INT64_MIN && t <= INT64_MAX)
        return static_cast<long long>(t) / d;
    return narrow(t / d);
}
inline Integer ffstep(const Integer& p, const Integer& a, const Integer& q, const Integer& b, const Integer& d)
{
    Integer t = p * a - q * b;
    if (d != 1)
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t());
    return t;
}

// a/b < c/d for b, d > 0
inline bool ratio_less(long long a, long long b, long long c, long long d)
{
    return static_cast<__int128>(a) * d < static_cast<__int128>(c) * b;
}
inline bool ratio_less(const Integer& a, const Integer& b, const Integer& c, const Integer& d) { return a * d < c * b; }
inline bool ratio_equal(long long a, long long b, long long c, long long d)
{
    return static_cast<__int128>(a) * d == static_cast<__int128>(c) * b;
}
inline bool ratio_equal(const Integer& a, const Integer& b, const Integer& c, const Integer& d) { return a * d == c * b; }

template <class Z>
Z from_ll(long long v)
{
    if constexpr (std::is_same_v<Z, long long>)
        return v;
    else
        return Z(static_cast<long>(v));
}

inline Integer to_integer(long long v) { return Integer(static_cast<long>(v)); }
inline Integer to_integer(const Integer& v) { return v; }

template <class Z>
Solution solve(const Problem& pr)
{
    const size_t m = pr.A.size();
    const size_t nv = pr.c.size();

    // row-major dictionary: m constraint rows then the objective row, each with nv
    // nonbasic columns followed by the right-hand side
    const size_t w = nv + 1;
    std::vector<Z> T((m + 1) * w);
    auto at = [&](size_t i, size_t j) -> Z& { return T[i * w + j]; };
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < nv; ++j)
            at(i, j) = from_ll<Z>(pr.A[i][j]);
        at(i, nv) = from_ll<Z>(pr.b[i]);
    }
    for (size_t j = 0; j < nv; ++j)
        at(m, j) = from_ll<Z>(-pr.c[j]);
    at(m, nv) = Z(0);

    std::vector<size_t> basic(m), nonbasic(nv);
    for (size_t i = 0; i < m; ++i)
        basic[i] = nv + i;
    for (size_t j = 0; j < nv; ++j)
        nonbasic[j] = j;
    Z D(1);

    Solution sol;
    for (;;) {
        size_t s = nv;
        for (size_t j = 0; j < nv; ++j)
            if (at(m, j) < 0 && (s == nv || nonbasic[j] < nonbasic[s]))
                s = j;
        if (s == nv)
            break;

        size_t r = m;
        for (size_t i = 0; i < m; ++i) {
            if (!(at(i, s) > 0))
                continue;
            if (r == m) {
                r = i;
                continue;
            }
            const Z &ai = at(i, nv), &bi = at(i, s), &ar = at(r, nv), &br = at(r, s);
            if (ratio_less(ai, bi, ar, br) || (ratio_equal(ai, bi, ar, br) && basic[i] < basic[r]))
                r = i;
        }
        if (r == m) {
            sol.status = Status::unbounded;
            sol.ray.assign(nv, Integer(0));
            if (nonbasic[s] < nv)
                sol.ray[nonbasic[s]] = to_integer(D);
            for (size_t i = 0; i < m; ++i)
                if (basic[i] < nv)
                    sol.ray[basic[i]] = to_integer(Z(-at(i, s)));
            return sol;
        }

        const Z p = at(r, s);
        for (size_t i = 0; i <= m; ++i) {
            if (i == r)
                continue;
            const Z q = at(i, s);
            for (size_t j = 0; j <= nv; ++j) {
                if (j == s)
                    continue;
                at(i, j) = ffstep(p, at(i, j), q, at(r, j), D);
            }
            at(i, s) = Z(-q);
        }
        at(r, s) = D;
        D = p;
        std::swap(basic[r], nonbasic[s]);
        ++sol.pivots;
    }

    sol.status = Status::optimal;
    const Integer den = to_integer(D);
    sol.value = Rational(to_integer(at(m, nv)), den);
    sol.value.canonicalize();
    sol.x.assign(nv, Rational(0));
    for (size_t i = 0; i < m; ++i)
        if (basic[i] < nv) {
            sol.x[basic[i]] = Rational(to_integer(at(i, nv)), den);
            sol.x[basic[i]].canonicalize();
        }
    return sol;
}

} // namespace detail

inline Solution maximize(const Problem& pr)
{
    for (size_t i = 0; i < pr.A.size(); ++i)
        if (pr.A[i].size() != pr.c.size() || pr.b[i] < 0)
            throw std::invalid_argument("lp: malformed problem");
    if (pr.b.size() != pr.A.size())
        throw std::invalid_argument("lp: malformed problem");
    try {
        return detail::solve<long long>(pr);
    } catch (const detail::Overflow&) {
        return detail::solve<Integer>(pr);
    }
}

} // namespace peerline::lp
