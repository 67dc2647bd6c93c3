#pragma once

#include "errors.hpp"
#include "rational.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace peerline {

namespace detail {
inline void check_nk(long long n, long long k)
{
    if (k < 1 || k > n)
        throw BadParameters("need 1 <= k <= n");
}
} // namespace detail

// (1/k)(2n + chi - 2 sqrt(n(n-k+chi))), chi = (n-k) mod 2
inline double median_alternation_bound(long long n, long long k)
{
    detail::check_nk(n, k);
    const long long chi = (n - k) % 2;
    return (2.0 * n + chi - 2.0 * std::sqrt(static_cast<double>(n) * static_cast<double>(n - k + chi))) / k;
}

// Sign of (bound - v) without touching the square root: with t = 2n+chi-kv,
// bound - v = (t - sqrt(4n(n-k+chi)))/k.
inline int compare_to_median_alternation_bound(const Rational& v, long long n, long long k)
{
    detail::check_nk(n, k);
    const long long chi = (n - k) % 2;
    Rational t = make_rational(2 * n + chi) - make_rational(k) * v;
    Rational s = make_rational(4 * n * (n - k + chi));
    if (sgn(t) < 0)
        return -1;
    return cmp(t * t, s) > 0 ? 1 : (cmp(t * t, s) == 0 ? 0 : -1);
}

inline bool within_median_alternation_bound(const Rational& v, long long n, long long k)
{
    return compare_to_median_alternation_bound(v, n, k) >= 0;
}

inline Rational util_qcost_lb(int k, int q)
{
    if (k < 3 || 2 * q < k + 2 || q > k)
        throw BadParameters("need k >= 3 and k/2+1 <= q <= k");
    return 2 - make_rational(k - q, 4 * q - k - 3);
}

struct EgalAddBounds {
    Rational upper, lower;
};

inline EgalAddBounds egalitarian_add_bounds(int k)
{
    if (k < 2)
        throw BadParameters("need k >= 2");
    Rational upper = k % 2 == 0 ? make_rational(3, 2) - make_rational(1, 2LL * (k - 1))
                                : make_rational(3, 2) - make_rational(1, static_cast<long long>(k) * (k - 1));
    // k = 2 is solved exactly (both values are 1)
    Rational lower = k >= 3 ? make_rational(3, 2) - make_rational(1, k) : Rational(1);
    return {upper, lower};
}

enum class Curve { fig1, fig5, egal_add };

struct CurveRow {
    long long param;
    std::vector<double> values;
};

// fig1: k = lo..hi at fixed n; fig5: q = lo..hi at fixed k; egal_add: k = lo..hi.
inline std::vector<CurveRow> curve_rows(Curve which, long long fixed, long long lo, long long hi)
{
    std::vector<CurveRow> rows;
    for (long long x = lo; x <= hi; ++x) {
        switch (which) {
        case Curve::fig1:
            rows.push_back({x, {median_alternation_bound(fixed, x)}});
            break;
        case Curve::fig5:
            rows.push_back({x, {util_qcost_lb(static_cast<int>(fixed), static_cast<int>(x)).get_d()}});
            break;
        case Curve::egal_add: {
            auto b = egalitarian_add_bounds(static_cast<int>(x));
            rows.push_back({x, {b.upper.get_d(), b.lower.get_d()}});
            break;
        }
        }
    }
    return rows;
}

inline std::string curve_header(Curve which)
{
    switch (which) {
    case Curve::fig1:
        return "k,bound";
    case Curve::fig5:
        return "q,bound";
    case Curve::egal_add:
        return "k,upper,lower";
    }
    return "";
}

// Six decimals, trailing zeros dropped. Values here lie in [1, 2], so this keeps at
// least six significant digits and stays within 1e-6 of the exact bound.
inline std::string format_value(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s = buf;
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0')
            s.pop_back();
        if (s.back() == '.')
            s.pop_back();
    }
    return s;
}

inline std::string emit_curve(Curve which, long long fixed, long long lo, long long hi)
{
    std::string out = curve_header(which) + "\n";
    for (const auto& r : curve_rows(which, fixed, lo, hi)) {
        out += std::to_string(r.param);
        for (double v : r.values)
            out += "," + format_value(v);
        out += "\n";
    }
    return out;
}

} // namespace peerline
