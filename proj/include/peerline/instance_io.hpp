#pragma once

#include "profile.hpp"
#include "rational.hpp"

#include <cctype>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace peerline {

// Line-oriented text format:
//   format: 1
//   label = free text          (optional)
//   objective = util-q2        (optional)
//   n=5
//   k=2
//   ranking 1 = 1 2 3 4 5      (most preferred first; every agent once)
//   position 1 = 0             (optional, all or none; p/q or decimal)
// Blank lines and '#' comments are ignored.
struct Instance {
    std::string label;
    Election election;
    std::optional<LineMetric> metric;
    std::optional<CostSpec> objective;

    friend bool operator==(const Instance& a, const Instance& b)
    {
        return a.label == b.label && a.election.k == b.election.k && a.election.profile == b.election.profile &&
               a.metric == b.metric && a.objective == b.objective;
    }
};

inline std::optional<CostSpec> parse_objective(std::string_view s)
{
    std::string t(s);
    auto qtail = [&](const std::string& prefix) -> int {
        if (t.rfind(prefix, 0) != 0)
            return 0;
        try {
            size_t used = 0;
            int q = std::stoi(t.substr(prefix.size()), &used);
            return used == t.size() - prefix.size() && q >= 1 ? q : 0;
        } catch (const std::exception&) {
            return 0;
        }
    };
    if (t == "util-add")
        return CostSpec::util_add();
    if (t == "egal-add")
        return CostSpec::egal_add();
    if (int q = qtail("util-q"))
        return CostSpec::util_q(q);
    if (int q = qtail("egal-q"))
        return CostSpec::egal_q(q);
    return std::nullopt;
}

inline std::string write_instance(const Instance& inst)
{
    std::ostringstream out;
    out << "format: 1\n";
    if (!inst.label.empty())
        out << "label = " << inst.label << "\n";
    if (inst.objective)
        out << "objective = " << inst.objective->name() << "\n";
    out << "n=" << inst.election.n() << "\n";
    out << "k=" << inst.election.k << "\n";
    for (AgentId a = 1; a <= inst.election.n(); ++a) {
        out << "ranking " << a << " =";
        for (AgentId b : inst.election.profile.of(a))
            out << ' ' << b;
        out << "\n";
    }
    if (inst.metric)
        for (AgentId a = 1; a <= inst.metric->n(); ++a)
            out << "position " << a << " = " << to_string(inst.metric->x(a)) << "\n";
    return out.str();
}

namespace detail {
inline std::string trim(std::string s)
{
    auto sp = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!s.empty() && sp(static_cast<unsigned char>(s.back())))
        s.pop_back();
    size_t b = 0;
    while (b < s.size() && sp(static_cast<unsigned char>(s[b])))
        ++b;
    return s.substr(b);
}

inline long long parse_int(const std::string& s, int line)
{
    try {
        size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used == s.size())
            return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("line " + std::to_string(line) + ": expected an integer, got '" + s + "'");
}
} // namespace detail

inline Instance parse_instance(std::istream& in)
{
    using detail::trim;
    Instance inst;
    bool seen_format = false;
    long long n = -1, k = -1;
    std::map<long long, Ranking> rankings;
    std::map<long long, Rational> positions;
    std::string raw;
    int line = 0;
    auto fail = [&](const std::string& msg) { throw std::invalid_argument("line " + std::to_string(line) + ": " + msg); };
    while (std::getline(in, raw)) {
        ++line;
        if (auto h = raw.find('#'); h != std::string::npos)
            raw.erase(h);
        std::string s = trim(raw);
        if (s.empty())
            continue;
        if (!seen_format) {
            if (s.rfind("format:", 0) != 0)
                fail("first line must be 'format: 1'");
            if (trim(s.substr(7)) != "1")
                fail("unsupported format version");
            seen_format = true;
            continue;
        }
        auto eq = s.find('=');
        if (eq == std::string::npos)
            fail("expected 'key = value'");
        std::string key = trim(s.substr(0, eq)), val = trim(s.substr(eq + 1));
        if (key == "n") {
            n = detail::parse_int(val, line);
        } else if (key == "k") {
            k = detail::parse_int(val, line);
        } else if (key == "label") {
            inst.label = val;
        } else if (key == "objective") {
            inst.objective = parse_objective(val);
            if (!inst.objective)
                fail("unknown objective '" + val + "'");
        } else if (key.rfind("ranking", 0) == 0) {
            long long a = detail::parse_int(trim(key.substr(7)), line);
            Ranking r;
            std::istringstream vs(val);
            std::string tok;
            while (vs >> tok)
                r.push_back(static_cast<AgentId>(detail::parse_int(tok, line)));
            if (!rankings.emplace(a, std::move(r)).second)
                fail("duplicate ranking for agent " + std::to_string(a));
        } else if (key.rfind("position", 0) == 0) {
            long long a = detail::parse_int(trim(key.substr(8)), line);
            auto v = parse_rational(val);
            if (!v)
                fail("bad position '" + val + "'");
            if (!positions.emplace(a, *v).second)
                fail("duplicate position for agent " + std::to_string(a));
        } else {
            fail("unknown key '" + key + "'");
        }
    }
    if (!seen_format)
        throw std::invalid_argument("empty instance");
    if (n < 1 || k < 0)
        throw std::invalid_argument("missing n= or k=");
    inst.election.k = static_cast<int>(k);
    for (long long a = 1; a <= n; ++a) {
        auto it = rankings.find(a);
        if (it == rankings.end())
            throw std::invalid_argument("missing ranking for agent " + std::to_string(a));
        inst.election.profile.rankings.push_back(it->second);
    }
    if (static_cast<long long>(rankings.size()) != n)
        throw std::invalid_argument("ranking for an agent outside 1..n");
    if (!positions.empty()) {
        LineMetric m;
        for (long long a = 1; a <= n; ++a) {
            auto it = positions.find(a);
            if (it == positions.end())
                throw std::invalid_argument("missing position for agent " + std::to_string(a));
            m.positions.push_back(it->second);
        }
        if (static_cast<long long>(positions.size()) != n)
            throw std::invalid_argument("position for an agent outside 1..n");
        inst.metric = std::move(m);
    }
    auto rep = validate_election(inst.election);
    if (!rep.ok())
        throw std::invalid_argument(rep.violations.front());
    return inst;
}

inline Instance parse_instance(const std::string& text)
{
    std::istringstream in(text);
    return parse_instance(in);
}

} // namespace peerline
