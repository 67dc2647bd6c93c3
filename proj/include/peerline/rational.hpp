#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace peerline {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long long num, long long den = 1)
{
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    Rational r{Integer(static_cast<long>(num)), Integer(static_cast<long>(den))};
    r.canonicalize();
    return r;
}

// Accepts "p", "p/q", and finite decimals like "-1.25" or "3e-2" (the latter
// are converted exactly from their decimal text, not via double).
inline std::optional<Rational> parse_rational(std::string_view s)
{
    std::string t(s);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back())))
        t.pop_back();
    size_t b = 0;
    while (b < t.size() && std::isspace(static_cast<unsigned char>(t[b])))
        ++b;
    t = t.substr(b);
    if (t.empty())
        return std::nullopt;

    auto all_digits = [](std::string_view v) {
        if (v.empty())
            return false;
        for (char c : v)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    auto parse_int = [&](std::string_view v, Integer& out) {
        bool neg = false;
        if (!v.empty() && (v[0] == '-' || v[0] == '+')) {
            neg = v[0] == '-';
            v.remove_prefix(1);
        }
        if (!all_digits(v))
            return false;
        out = Integer(std::string(v));
        if (neg)
            out = -out;
        return true;
    };

    auto slash = t.find('/');
    if (slash != std::string::npos) {
        Integer p, q;
        if (!parse_int(std::string_view(t).substr(0, slash), p))
            return std::nullopt;
        std::string_view den = std::string_view(t).substr(slash + 1);
        if (!all_digits(den))
            return std::nullopt;
        q = Integer(std::string(den));
        if (q == 0)
            return std::nullopt;
        Rational r(p, q);
        r.canonicalize();
        return r;
    }

    // decimal / exponent form
    std::string_view v = t;
    bool neg = false;
    if (v[0] == '-' || v[0] == '+') {
        neg = v[0] == '-';
        v.remove_prefix(1);
    }
    long exp10 = 0;
    auto epos = v.find_first_of("eE");
    if (epos != std::string_view::npos) {
        Integer e;
        if (!parse_int(v.substr(epos + 1), e) || !e.fits_slong_p())
            return std::nullopt;
        exp10 = e.get_si();
        v = v.substr(0, epos);
    }
    std::string digits;
    auto dot = v.find('.');
    if (dot != std::string_view::npos) {
        std::string_view ip = v.substr(0, dot), fp = v.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
            return std::nullopt;
        digits = std::string(ip) + std::string(fp);
        exp10 -= static_cast<long>(fp.size());
    } else {
        if (!all_digits(v))
            return std::nullopt;
        digits = std::string(v);
    }
    if (std::labs(exp10) > 4000)
        return std::nullopt;
    Integer m(digits.empty() ? std::string("0") : digits);
    Integer p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
    Rational r = exp10 >= 0 ? Rational(m * p10) : Rational(m, p10);
    r.canonicalize();
    if (neg)
        r = -r;
    return r;
}

inline std::string to_string(const Rational& r)
{
    Rational c = r;
    c.canonicalize();
    if (c.get_den() == 1)
        return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// A nonnegative quantity that may be +infinity (distortion values).
struct Extended {
    bool infinite = false;
    Rational value = 0;

    static Extended inf() { return {true, 0}; }
    static Extended of(Rational v) { return {false, std::move(v)}; }

    double to_double() const { return infinite ? HUGE_VAL : value.get_d(); }
};

inline bool operator==(const Extended& a, const Extended& b)
{
    if (a.infinite || b.infinite)
        return a.infinite == b.infinite;
    return a.value == b.value;
}

inline std::strong_ordering operator<=>(const Extended& a, const Extended& b)
{
    if (a.infinite && b.infinite)
        return std::strong_ordering::equal;
    if (a.infinite)
        return std::strong_ordering::greater;
    if (b.infinite)
        return std::strong_ordering::less;
    int c = cmp(a.value, b.value);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

inline bool operator==(const Extended& a, const Rational& b) { return !a.infinite && a.value == b; }
inline std::strong_ordering operator<=>(const Extended& a, const Rational& b) { return a <=> Extended::of(b); }

inline std::string to_string(const Extended& e) { return e.infinite ? std::string("inf") : to_string(e.value); }

// Ratio with the conventions 0/0 = 1 and x/0 = inf for x > 0.
inline Extended ratio(const Rational& num, const Rational& den)
{
    if (sgn(den) == 0)
        return sgn(num) == 0 ? Extended::of(1) : Extended::inf();
    return Extended::of(Rational(num / den));
}

inline std::string to_decimal(const Rational& r, int digits)
{
    // round half away from zero at the requested number of decimals
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rational s = abs(r) * scale;
    Integer q = s.get_num() / s.get_den();
    Rational frac = s - Rational(q);
    if (frac * 2 >= 1)
        q += 1;
    std::string str = q.get_str();
    if (static_cast<int>(str.size()) <= digits)
        str.insert(0, static_cast<size_t>(digits + 1) - str.size(), '0');
    std::string out = (sgn(r) < 0 && q != 0 ? "-" : "") + str.substr(0, str.size() - static_cast<size_t>(digits));
    if (digits > 0)
        out += "." + str.substr(str.size() - static_cast<size_t>(digits));
    return out;
}

} // namespace peerline
