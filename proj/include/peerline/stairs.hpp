#pragma once

#include "profile.hpp"
#include "social_cost.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace peerline {

struct StairRect {
    Rational x0, y0, x1, y1;
    std::string cls; // "common" or "committee"

    Rational area() const { return (x1 - x0) * (y1 - y0); }
};

// Rectangles of the 2-cost staircase for a pair committee. Row i-1..i holds the span of
// the i-th outermost pair; the committee span is stacked n/2 rows high above them, and
// for odd n the median gets one more row reaching to its farther member.
inline std::vector<StairRect> stair_rects(const LineMetric& m, const Committee& c)
{
    if (c.size() != 2)
        throw std::invalid_argument("stair diagram needs a committee of size 2");
    check_committee(m, c);
    const int n = m.n();
    const auto o = position_order(m);
    auto at = [&](int slot) { return m.x(o[static_cast<size_t>(slot - 1)]); };
    std::vector<StairRect> rects;
    const int h = n / 2;
    for (int i = 1; i <= h; ++i)
        rects.push_back({at(i), i - 1, at(n - i + 1), i, "common"});
    Rational lo = std::min(m.x(c[0]), m.x(c[1])), hi = std::max(m.x(c[0]), m.x(c[1]));
    if (h > 0)
        rects.push_back({lo, h, hi, 2 * h, "committee"});
    if (n % 2 == 1) {
        const Rational med = at(h + 1);
        const Rational far = (med - lo) >= (hi - med) ? lo : hi;
        rects.push_back({std::min(med, far), 2 * h, std::max(med, far), 2 * h + 1, "committee"});
    }
    return rects;
}

inline Rational stair_area(const std::vector<StairRect>& rects)
{
    Rational a = 0;
    for (const auto& r : rects)
        a += r.area();
    return a;
}

inline std::string stairs_csv(const std::vector<StairRect>& rects)
{
    std::ostringstream out;
    out << "x0,y0,x1,y1,class\n";
    for (const auto& r : rects)
        out << to_string(r.x0) << ',' << to_string(r.y0) << ',' << to_string(r.x1) << ',' << to_string(r.y1) << ','
            << r.cls << '\n';
    return out.str();
}

inline std::string stairs_svg(const std::vector<StairRect>& rects)
{
    double xmin = 0, xmax = 1, ymax = 1;
    bool first = true;
    for (const auto& r : rects) {
        if (first) {
            xmin = r.x0.get_d(), xmax = r.x1.get_d();
            first = false;
        }
        xmin = std::min(xmin, r.x0.get_d());
        xmax = std::max(xmax, r.x1.get_d());
        ymax = std::max(ymax, r.y1.get_d());
    }
    const double width = 600, row = 24, pad = 10;
    const double sx = xmax > xmin ? width / (xmax - xmin) : 1.0;
    const double height = ymax * row;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width + 2 * pad << "\" height=\"" << height + 2 * pad
        << "\">\n";
    for (const auto& r : rects) {
        double x = pad + (r.x0.get_d() - xmin) * sx;
        double w = Rational(r.x1 - r.x0).get_d() * sx;
        // rows grow upwards
        double y = pad + height - r.y1.get_d() * row;
        double hgt = Rational(r.y1 - r.y0).get_d() * row;
        out << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << hgt << "\" fill=\""
            << (r.cls == "common" ? "#b0b0b0" : "#d04040") << "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace peerline
