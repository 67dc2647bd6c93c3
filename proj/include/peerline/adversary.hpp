#pragma once

#include "distortion.hpp"
#include "errors.hpp"
#include "profile.hpp"
#include "rational.hpp"
#include "rules.hpp"

#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace peerline {

enum class Family {
    util_add_lb,
    util_qcost_unbounded,
    util_qcost_large_q,
    egal_add_lb,
    egal_qcost_unbounded,
    k2_odd_43,
    k2_even_2,
    egal_k1_2,
};

inline const std::vector<std::pair<Family, std::string>>& family_names()
{
    static const std::vector<std::pair<Family, std::string>> names = {
        {Family::util_add_lb, "util-add-lb"},
        {Family::util_qcost_unbounded, "util-qcost-unbounded"},
        {Family::util_qcost_large_q, "util-qcost-large-q"},
        {Family::egal_add_lb, "egal-add-lb"},
        {Family::egal_qcost_unbounded, "egal-qcost-unbounded"},
        {Family::k2_odd_43, "k2-odd-43"},
        {Family::k2_even_2, "k2-even-2"},
        {Family::egal_k1_2, "egal-k1-2"},
    };
    return names;
}

inline std::string family_name(Family f)
{
    for (const auto& [id, name] : family_names())
        if (id == f)
            return name;
    return "?";
}

inline std::optional<Family> parse_family(std::string_view s)
{
    for (const auto& [id, name] : family_names())
        if (name == s)
            return id;
    return std::nullopt;
}

// Zero means "not given"; each family documents its defaults.
struct FamilyParams {
    int k = 0;
    int q = 0;
    int n = 0;
    int n1 = 0, n2 = 0, kprime = 0;
    long long M = 1000;
};

struct LBInstance {
    Family family{};
    std::string label;
    Election election;
    CostSpec spec;
    std::vector<LineMetric> metrics;
    Extended claimed_bound;
    // finite bound the proof certifies for these exact parameters (differs from the
    // claim only for the unbounded families)
    Extended instance_bound;
    std::vector<std::vector<AgentId>> blocks;
    std::vector<std::string> decision_map;      // one line per case, human readable
    std::function<size_t(const Committee&)> punish; // index into metrics
};

namespace detail {

inline int count_in(const Committee& c, const std::vector<AgentId>& set)
{
    int r = 0;
    for (AgentId a : c)
        if (std::find(set.begin(), set.end(), a) != set.end())
            ++r;
    return r;
}

inline std::vector<AgentId> join(std::initializer_list<const std::vector<AgentId>*> parts)
{
    std::vector<AgentId> r;
    for (auto* p : parts)
        r.insert(r.end(), p->begin(), p->end());
    return r;
}

// Consecutive ids, blocks left to right.
inline std::vector<std::vector<AgentId>> make_blocks(const std::vector<int>& sizes)
{
    std::vector<std::vector<AgentId>> blocks;
    AgentId next = 1;
    for (int s : sizes) {
        std::vector<AgentId> b;
        for (int i = 0; i < s; ++i)
            b.push_back(next++);
        blocks.push_back(std::move(b));
    }
    return blocks;
}

inline LineMetric block_metric(const std::vector<std::vector<AgentId>>& blocks, const std::vector<long long>& at)
{
    int n = 0;
    for (const auto& b : blocks)
        n += static_cast<int>(b.size());
    std::vector<Rational> xs(static_cast<size_t>(n));
    for (size_t i = 0; i < blocks.size(); ++i)
        for (AgentId a : blocks[i])
            xs[static_cast<size_t>(a - 1)] = make_rational(at[i]);
    return LineMetric(std::move(xs));
}

// Every agent ranks its own block first, then the other blocks by total distance over
// all metrics (a linear extension of "closer in every metric"), ties to the smaller
// block index. Inside a block, closer ids first. Fails when the metrics disagree.
inline PreferenceProfile block_profile(const std::vector<std::vector<AgentId>>& blocks,
                                       const std::vector<std::vector<long long>>& at)
{
    const size_t nb = blocks.size();
    int n = 0;
    for (const auto& b : blocks)
        n += static_cast<int>(b.size());
    PreferenceProfile p;
    p.rankings.resize(static_cast<size_t>(n));
    for (size_t i = 0; i < nb; ++i) {
        std::vector<size_t> others;
        for (size_t j = 0; j < nb; ++j)
            if (j != i)
                others.push_back(j);
        auto total = [&](size_t j) {
            long long s = 0;
            for (const auto& pos : at)
                s += std::llabs(pos[i] - pos[j]);
            return s;
        };
        std::stable_sort(others.begin(), others.end(), [&](size_t a, size_t b) { return total(a) < total(b); });
        for (AgentId a : blocks[i]) {
            auto by_closeness = [a](std::vector<AgentId> v) {
                std::sort(v.begin(), v.end(), [a](AgentId x, AgentId y) {
                    return std::make_pair(std::abs(x - a), x) < std::make_pair(std::abs(y - a), y);
                });
                return v;
            };
            Ranking r{a};
            for (AgentId b : by_closeness(blocks[i]))
                if (b != a)
                    r.push_back(b);
            for (size_t j : others)
                for (AgentId b : by_closeness(blocks[j]))
                    r.push_back(b);
            p.rankings[static_cast<size_t>(a - 1)] = std::move(r);
        }
    }
    return p;
}

inline void finish(LBInstance& inst, const std::vector<std::vector<long long>>& at)
{
    inst.election.profile = block_profile(inst.blocks, at);
    for (const auto& pos : at)
        inst.metrics.push_back(block_metric(inst.blocks, pos));
    for (size_t i = 0; i < inst.metrics.size(); ++i)
        if (!is_consistent(inst.election.profile, inst.metrics[i]))
            throw BadParameters(inst.label + ": metric d" + std::to_string(i + 1) +
                                " contradicts the other metrics for these parameters");
}

inline void need(bool ok, const std::string& what)
{
    if (!ok)
        throw BadParameters("precondition violated: " + what);
}

inline PreferenceProfile explicit_profile(std::vector<Ranking> r) { return PreferenceProfile{std::move(r)}; }

} // namespace detail

// Objective pair of the lower-bound program, as exact fractions.
inline std::pair<Rational, Rational> lb_program_terms(int k, int n1, int n2, int kprime)
{
    const long long K = k;
    return {make_rational(2LL * kprime * (n1 + n2 - k), static_cast<long long>(n1) * n2 - 2 * K * n2 + 2 * K * K),
            make_rational((K - n1) * (k - n2 - kprime + 1), K * n1)};
}

struct LBProgramSolution {
    int n1 = 0, n2 = 0, kprime = 0;
    Rational gamma;
};

// Exhaustive search; first optimum in lexicographic (n1, n2, k') order.
inline LBProgramSolution solve_lb_program(int k)
{
    if (k < 3)
        throw BadParameters("program needs k >= 3");
    // min{a/b, c/d} compared by cross multiplication; all terms stay far below 2^63
    struct Frac {
        long long num, den;
    };
    auto less = [](Frac x, Frac y) { return static_cast<__int128>(x.num) * y.den < static_cast<__int128>(y.num) * x.den; };
    Frac best{-1, 1};
    int b1 = 0, b2 = 0, b3 = 0;
    const long long K = k;
    for (int n1 = 1; n1 <= k; ++n1) {
        for (int n2 = std::max(1, k - n1); n2 <= k - 1; ++n2) {
            const long long den1 = static_cast<long long>(n1) * n2 - 2 * K * n2 + 2 * K * K;
            const long long den2 = K * n1;
            for (int kp = 1; kp <= k - n2; ++kp) {
                Frac f1{2LL * kp * (n1 + n2 - k), den1};
                Frac f2{static_cast<long long>(k - n1) * (k - n2 - kp + 1), den2};
                Frac m = less(f1, f2) ? f1 : f2;
                if (less(best, m)) {
                    best = m;
                    b1 = n1, b2 = n2, b3 = kp;
                }
            }
        }
    }
    return {b1, b2, b3, make_rational(best.num, best.den)};
}

struct AsymptoticWitness {
    int n1, n2, kprime;
    Rational f1, f2;
};

inline AsymptoticWitness asymptotic_lb_witness(int k)
{
    if (k < 200)
        throw BadParameters("closed-form witness needs k >= 200");
    auto ceil_div = [](long long a, long long b) { return static_cast<int>((a + b - 1) / b); };
    AsymptoticWitness w{ceil_div(3LL * k, 5), ceil_div(13LL * k, 20), ceil_div(k, 5), {}, {}};
    std::tie(w.f1, w.f2) = lb_program_terms(k, w.n1, w.n2, w.kprime);
    const Rational threshold(914, 10000);
    if (!(w.f1 > threshold && w.f2 > threshold))
        throw std::logic_error("witness fractions fall below 0.0914");
    return w;
}

inline LBInstance generate(Family family, const FamilyParams& prm)
{
    using detail::need;
    LBInstance inst;
    inst.family = family;
    inst.label = family_name(family);
    const int k = prm.k;

    switch (family) {
    case Family::util_add_lb: {
        need(k >= 2, "k >= 2");
        int n1 = prm.n1, n2 = prm.n2, kp = prm.kprime;
        if (n1 == 0 && n2 == 0 && kp == 0) {
            need(k >= 3, "k >= 3 when (n1, n2, k') are not given");
            auto s = solve_lb_program(k);
            n1 = s.n1, n2 = s.n2, kp = s.kprime;
        }
        need(n2 >= 1 && n2 <= k - 1, "1 <= n2 <= k-1");
        need(n1 >= k - n2 && n1 <= k, "k-n2 <= n1 <= k");
        need(kp >= 1 && kp <= k - n2, "1 <= k' <= k-n2");
        inst.label += " k=" + std::to_string(k) + " n1=" + std::to_string(n1) + " n2=" + std::to_string(n2) +
                      " k'=" + std::to_string(kp);
        inst.blocks = detail::make_blocks({n1, n2, k - n2});
        inst.election.k = k;
        inst.spec = CostSpec::util_add();
        detail::finish(inst, {{0, 1, 2}, {0, 1, 1}});
        auto [f1, f2] = lb_program_terms(k, n1, n2, kp);
        inst.claimed_bound = Extended::of(1 + std::min(f1, f2));
        inst.instance_bound = inst.claimed_bound;
        auto a3 = inst.blocks[2];
        inst.punish = [a3, kp](const Committee& c) -> size_t { return detail::count_in(c, a3) >= kp ? 0 : 1; };
        inst.decision_map = {"|S cap A3| >= k' -> d1", "otherwise -> d2"};
        break;
    }
    case Family::util_qcost_unbounded: {
        const int q = prm.q;
        need(k >= 2, "k >= 2");
        need(q >= 1 && 2 * q <= k, "1 <= q <= k/2");
        need(prm.M >= 1, "M >= 1");
        const int n = prm.n ? prm.n : 2 * k + q;
        need(n >= 2 * k + q, "n >= 2k+q");
        const int p = k / q;
        std::vector<int> sizes;
        for (int i = 0; i < p; ++i)
            sizes.push_back((n - q) / p + (i < (n - q) % p ? 1 : 0));
        sizes.push_back(q);
        inst.blocks = detail::make_blocks(sizes);
        inst.election.k = k;
        inst.spec = CostSpec::util_q(q);
        inst.label += " k=" + std::to_string(k) + " q=" + std::to_string(q) + " n=" + std::to_string(n) +
                      " M=" + std::to_string(prm.M);
        std::vector<long long> d1, d2;
        for (int i = 0; i < p; ++i) {
            d1.push_back(i);
            d2.push_back(i);
        }
        d1.push_back(2LL * (p - 1));
        d2.push_back(p - 1 + prm.M * n);
        detail::finish(inst, {d1, d2});
        inst.claimed_bound = Extended::inf();
        const long long t = static_cast<long long>(n - q) * q;
        Rational b1 = make_rational(t / k, k - q), b2 = make_rational(prm.M * n * q, (t + k - 1) / k);
        inst.instance_bound = Extended::of(std::min(b1, b2));
        auto far = inst.blocks.back();
        inst.punish = [far](const Committee& c) -> size_t {
            return detail::count_in(c, far) == static_cast<int>(far.size()) ? 0 : 1;
        };
        inst.decision_map = {"B subset of S -> d1", "otherwise -> d2 (B pushed M*n away)"};
        break;
    }
    case Family::util_qcost_large_q: {
        const int q = prm.q;
        need(k >= 3, "k >= 3");
        need(2 * q - k - 1 >= 1, "block size 2q-k-1 >= 1");
        need(2 * q >= k + 2 && q <= k, "k/2+1 <= q <= k");
        inst.blocks = detail::make_blocks({q - 1, 2 * q - k - 1, 2 * q - k - 1, q - 1});
        inst.election.k = k;
        inst.spec = CostSpec::util_q(q);
        inst.label += " k=" + std::to_string(k) + " q=" + std::to_string(q);
        detail::finish(inst, {{0, 0, 2, 2}, {0, 0, 1, 2}, {0, 1, 2, 2}});
        Rational b = 2 - make_rational(k - q, 4 * q - k - 3);
        inst.claimed_bound = inst.instance_bound = Extended::of(b);
        auto left = detail::join({&inst.blocks[0], &inst.blocks[1]});
        auto right = detail::join({&inst.blocks[2], &inst.blocks[3]});
        inst.punish = [left, right, q](const Committee& c) -> size_t {
            if (detail::count_in(c, right) >= q)
                return 1;
            if (detail::count_in(c, left) >= q)
                return 2;
            return 0;
        };
        inst.decision_map = {"fewer than q in both halves -> d1", "|S cap (A3 u A4)| >= q -> d2",
                             "|S cap (A1 u A2)| >= q -> d3"};
        break;
    }
    case Family::egal_add_lb: {
        need(k >= 2, "k >= 2");
        const int q = prm.q;
        if (q) {
            // the two-metric argument needs a majority of S on one side to hold q members
            need(2 * q > k && q <= k, "k/2 < q <= k");
            inst.spec = CostSpec::egal_q(q);
        } else {
            inst.spec = CostSpec::egal_add();
        }
        inst.blocks = detail::make_blocks({1, k, k, 1});
        inst.election.k = k;
        inst.label += " k=" + std::to_string(k) + (q ? " q=" + std::to_string(q) : "");
        detail::finish(inst, {{0, 0, 1, 2}, {0, 1, 2, 2}});
        inst.claimed_bound = inst.instance_bound =
            Extended::of(q ? Rational(2) : make_rational(3, 2) - make_rational(1, k));
        auto left = detail::join({&inst.blocks[0], &inst.blocks[1]});
        inst.punish = [left, k](const Committee& c) -> size_t { return 2 * detail::count_in(c, left) >= k ? 0 : 1; };
        inst.decision_map = {"|S cap (A1 u A2)| >= k/2 -> d1", "otherwise -> d2"};
        break;
    }
    case Family::egal_qcost_unbounded: {
        const int q = prm.q;
        need(k >= 3, "k >= 3");
        need(q >= 1 && 3 * q <= k, "1 <= q <= k/3");
        const int p = k / q;
        inst.blocks = detail::make_blocks(std::vector<int>(static_cast<size_t>(p + 1), q));
        inst.election.k = k;
        inst.spec = CostSpec::egal_q(q);
        inst.label += " k=" + std::to_string(k) + " q=" + std::to_string(q);
        std::vector<long long> d1, d2;
        for (int i = 1; i <= p + 1; ++i) {
            d1.push_back(i <= p ? i - 1 : p - 1);
            d2.push_back(i == 1 ? 0 : i - 2);
        }
        try {
            detail::finish(inst, {d1, d2});
        } catch (const BadParameters&) {
            throw BadParameters("precondition violated: floor(k/q) must be odd; for even floor(k/q) the two "
                                "metrics order the end blocks oppositely for a middle block");
        }
        inst.claimed_bound = inst.instance_bound = Extended::inf();
        auto blocks = inst.blocks;
        inst.punish = [blocks, q, p](const Committee& c) -> size_t {
            for (int j = 0; j < p - 1; ++j)
                if (detail::count_in(c, blocks[static_cast<size_t>(j)]) < q)
                    return 0;
            return 1;
        };
        inst.decision_map = {"some A_j with j < p holds fewer than q members -> d1", "otherwise -> d2"};
        break;
    }
    case Family::k2_odd_43: {
        inst.election = {detail::explicit_profile({{1, 2, 3, 4, 5}, {2, 1, 3, 4, 5}, {3, 2, 1, 4, 5}, {4, 5, 3, 2, 1},
                                                   {5, 4, 3, 2, 1}}),
                         2};
        inst.spec = CostSpec::util_q(2);
        inst.metrics = {LineMetric::from_integers({0, 1, 2, 4, 4}), LineMetric::from_integers({0, 0, 1, 2, 3})};
        inst.claimed_bound = inst.instance_bound = Extended::of(make_rational(4, 3));
        inst.punish = [](const Committee& c) -> size_t { return c == Committee{1, 2} ? 0 : 1; };
        inst.decision_map = {"S = {1,2} -> d1", "otherwise -> d2"};
        break;
    }
    case Family::k2_even_2:
    case Family::egal_k1_2: {
        inst.election = {detail::explicit_profile({{1, 2, 3, 4}, {2, 1, 3, 4}, {3, 4, 2, 1}, {4, 3, 2, 1}}), 2};
        inst.metrics = {LineMetric::from_integers({0, 0, 1, 2}), LineMetric::from_integers({0, 1, 2, 2})};
        inst.claimed_bound = inst.instance_bound = Extended::of(Rational(2));
        if (family == Family::k2_even_2) {
            inst.spec = CostSpec::util_q(2);
            inst.metrics.push_back(LineMetric::from_integers({0, 0, 2, 2}));
            inst.punish = [](const Committee& c) -> size_t {
                if (c == Committee{3, 4})
                    return 0;
                if (c == Committee{1, 2})
                    return 1;
                return 2;
            };
            inst.decision_map = {"S = {3,4} -> d1", "S = {1,2} -> d2", "otherwise -> d3"};
        } else {
            inst.election.k = 1;
            inst.spec = prm.q ? CostSpec::egal_q(1) : CostSpec::egal_add();
            inst.punish = [](const Committee& c) -> size_t { return c.front() <= 2 ? 0 : 1; };
            inst.decision_map = {"S in {1},{2} -> d1", "otherwise -> d2"};
        }
        break;
    }
    }
    for (const auto& m : inst.metrics)
        if (!is_consistent(inst.election.profile, m))
            throw std::logic_error(inst.label + ": generated metric is inconsistent");
    return inst;
}

inline LBInstance generate(Family family, int k = 0) { return generate(family, FamilyParams{.k = k}); }

// Worst case over the instance's metrics for one committee.
inline Extended verify_committee(const LBInstance& inst, const Committee& c)
{
    Extended best = Extended::of(0);
    for (const auto& m : inst.metrics) {
        Extended v = distortion_at(m, c, inst.election.k, inst.spec);
        if (best < v)
            best = v;
    }
    return best;
}

inline Extended verify_rule(const std::function<Committee(const Election&)>& rule, const LBInstance& inst)
{
    return verify_committee(inst, rule(inst.election));
}

inline Extended verify_rule(RuleId rule, const LBInstance& inst)
{
    return verify_committee(inst, apply_rule(rule, inst.election));
}

// Distortion on the metric the decision map assigns to c.
inline Extended punished_distortion(const LBInstance& inst, const Committee& c)
{
    return distortion_at(inst.metrics.at(inst.punish(c)), c, inst.election.k, inst.spec);
}

} // namespace peerline
