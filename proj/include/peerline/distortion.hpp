#pragma once

#include "fastcost.hpp"
#include "optimal.hpp"
#include "ordering.hpp"
#include "parallel.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace peerline {

enum class Exactness { exact, lower_bound };

struct DistortionResult {
    Extended value;
    std::vector<Rational> witness; // gaps along `order`
    AgentOrder order;
    Exactness exactness = Exactness::exact;

    // a zero gap in the witness means the value may only be approached by strictly
    // consistent metrics (perturb the witness by a small enough amount)
    bool witness_on_face() const
    {
        for (const auto& g : witness)
            if (sgn(g) == 0)
                return true;
        return false;
    }
};

inline Extended distortion_at(const LineMetric& m, const Committee& c, int k, const CostSpec& spec)
{
    if (static_cast<int>(c.size()) != k)
        throw std::invalid_argument("committee size differs from k");
    check_committee(m, c);
    check_spec(spec, k);
    if (m.n() <= 62) {
        // exact integer path after clearing denominators
        Integer l = 1;
        for (const auto& x : m.positions)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        const Integer limit = Integer(1) << 40;
        std::vector<long long> xs;
        for (const auto& x : m.positions) {
            Integer v = x.get_num() * (l / x.get_den());
            if (abs(v) > limit)
                break;
            xs.push_back(v.get_si());
        }
        if (static_cast<int>(xs.size()) == m.n()) {
            fast::Layout lay(std::move(xs));
            uint64_t mask = 0;
            for (AgentId a : c)
                mask |= uint64_t{1} << (a - 1);
            return fast::ratio(lay.social_cost(mask, spec), lay.optimum(k, spec));
        }
    }
    return ratio(social_cost(m, c, spec), optimal_committee(m, k, spec).cost);
}

namespace detail {

inline std::vector<char> member_slots(const AgentOrder& o, const Committee& c)
{
    std::vector<char> in(o.perm.size(), 0);
    const auto slot = o.slots();
    for (AgentId a : c) {
        if (a < 1 || a > o.n())
            throw std::invalid_argument("committee member out of range");
        in[static_cast<size_t>(slot[static_cast<size_t>(a)])] = 1;
    }
    return in;
}

// Linear forms over the gaps of an order. For gap i (between slots i and i+1) the
// left block has i+1 agents.
inline std::vector<long long> util_add_form(const std::vector<char>& in)
{
    const int n = static_cast<int>(in.size());
    std::vector<long long> f(static_cast<size_t>(n - 1), 0);
    long long left_members = 0, members = 0;
    for (char v : in)
        members += v;
    for (int i = 0; i + 1 < n; ++i) {
        left_members += in[static_cast<size_t>(i)];
        long long L = i + 1, R = n - L;
        f[static_cast<size_t>(i)] = L * (members - left_members) + R * left_members;
    }
    return f;
}

// additive cost of the leftmost agent (first) and of the rightmost agent (second)
inline std::pair<std::vector<long long>, std::vector<long long>> extreme_forms(const std::vector<char>& in)
{
    const int n = static_cast<int>(in.size());
    std::vector<long long> lf(static_cast<size_t>(n - 1)), rf(static_cast<size_t>(n - 1));
    long long left_members = 0, members = 0;
    for (char v : in)
        members += v;
    for (int i = 0; i + 1 < n; ++i) {
        left_members += in[static_cast<size_t>(i)];
        lf[static_cast<size_t>(i)] = members - left_members;
        rf[static_cast<size_t>(i)] = left_members;
    }
    return {lf, rf};
}

struct Subproblem {
    std::vector<std::vector<long long>> den; // pieces, each required <= 1
    std::vector<long long> num;
};

struct SubResult {
    Extended value;
    std::vector<Rational> witness;
};

inline SubResult solve_sub(const ConsistencyCone& cone, const Subproblem& sp)
{
    lp::Problem pr;
    pr.A = cone.rows;
    pr.b.assign(cone.rows.size(), 0);
    for (const auto& d : sp.den) {
        pr.A.push_back(d);
        pr.b.push_back(1);
    }
    pr.c = sp.num;
    auto sol = lp::maximize(pr);
    SubResult r;
    if (sol.status == lp::Status::unbounded) {
        // the ray has zero denominator and positive numerator
        r.value = Extended::inf();
        for (const auto& v : sol.ray)
            r.witness.emplace_back(v);
    } else {
        r.value = Extended::of(sol.value);
        r.witness = sol.x;
    }
    return r;
}

} // namespace detail

struct ExactOptions {
    unsigned workers = 1; // 0: PEERLINE_THREADS / hardware
};

// Supremum of SC(S)/OPT over all metrics consistent with the profile, for additive
// candidate aggregation.
//
// On a fixed order the numerator is a maximum of linear forms in the gaps and
// OPT = min over S' of a maximum of linear forms. Since
//   sup_g N(g) / min_S' D_S'(g) = max_S' sup_g N(g) / D_S'(g),
// each (S', numerator piece) pair is a linear-fractional program, which after
// normalising D_S' <= 1 becomes one LP. Optimal regions of S' never need to be
// written down. Orders are those of candidate_orders, so tied profiles are covered.
inline DistortionResult exact_sup_distortion(const Election& e, const Committee& c, const CostSpec& spec,
                                             const ExactOptions& opt = {})
{
    require_valid(e);
    if (!spec.additive())
        throw std::invalid_argument("exact distortion is only available for additive objectives");
    const int n = e.n(), k = e.k;
    if (static_cast<int>(c.size()) != k)
        throw std::invalid_argument("committee size differs from k");

    DistortionResult best;
    best.exactness = Exactness::exact;
    const auto orders = candidate_orders(e.profile);
    if (n == 1) {
        best.value = Extended::of(1);
        best.order = orders.front();
        return best;
    }

    bool have = false;
    for (const auto& order : orders) {
        ConsistencyCone cone = consistency_constraints(e.profile, order);
        auto in = detail::member_slots(order, c);

        std::vector<detail::Subproblem> subs;
        std::vector<std::vector<long long>> nums;
        if (spec.voter == VoterAgg::utilitarian) {
            nums.push_back(detail::util_add_form(in));
            for (int i = 0; i + k <= n; ++i) {
                std::vector<char> w(static_cast<size_t>(n), 0);
                std::fill(w.begin() + i, w.begin() + i + k, 1);
                for (const auto& num : nums)
                    subs.push_back({{detail::util_add_form(w)}, num});
            }
        } else {
            auto [l, r] = detail::extreme_forms(in);
            nums = {l, r};
            Combination comb(n, k);
            do {
                std::vector<char> w(static_cast<size_t>(n), 0);
                for (int i : comb.idx)
                    w[static_cast<size_t>(i)] = 1;
                auto [dl, dr] = detail::extreme_forms(w);
                for (const auto& num : nums)
                    subs.push_back({{dl, dr}, num});
            } while (comb.advance());
        }

        std::vector<detail::SubResult> res(subs.size());
        parallel_for(
            subs.size(), [&](size_t i) { res[i] = detail::solve_sub(cone, subs[i]); }, opt.workers);
        for (auto& r : res) {
            if (!have || r.value > best.value) {
                best.value = r.value;
                best.witness = std::move(r.witness);
                best.order = order;
                have = true;
            }
        }
    }
    return best;
}

struct TwoLocationResult {
    Extended value;
    int cut = 0; // agents in slots 1..cut sit at 0, the rest at 1
    AgentOrder order;
};

// Cost of the best committee when `left` agents sit at 0 and `right` at 1.
inline long long two_location_opt(long long left, long long right, long long k)
{
    // a member on the left costs `right`, on the right costs `left`
    if (left >= right) {
        long long a = std::min(k, left);
        return right * a + left * (k - a);
    }
    long long b = std::min(k, right);
    return left * b + right * (k - b);
}

// Largest utilitarian-additive ratio over the two-location metrics along the order: one
// metric per cut, i.e. gap vectors e_c. The cut metrics are not required to lie in the
// consistency cone.
inline TwoLocationResult two_location_sup(const Election& e, const Committee& c)
{
    require_valid(e);
    const int n = e.n(), k = e.k;
    if (static_cast<int>(c.size()) != k)
        throw std::invalid_argument("committee size differs from k");
    TwoLocationResult best;
    best.value = Extended::of(1);
    bool have = false;
    for (const auto& order : candidate_orders(e.profile)) {
        auto in = detail::member_slots(order, c);
        long long sl = 0;
        for (int cut = 1; cut < n; ++cut) {
            sl += in[static_cast<size_t>(cut - 1)];
            long long L = cut, R = n - cut, sr = k - sl;
            Extended v = ratio(make_rational(L * sr + R * sl), make_rational(two_location_opt(L, R, k)));
            if (!have || v > best.value) {
                best = {v, cut, order};
                have = true;
            }
        }
        if (n == 1 && !have) {
            best.order = order;
            have = true;
        }
    }
    return best;
}

struct EstimatorOptions {
    uint64_t seed = 1;
    int budget = 32;          // random vertex probes per order
    int refine_rounds = 6;    // coordinate-ascent halvings from each probe
    bool grid01 = true;       // gap vectors in {0,1}^(n-1) lying in the cone
    std::vector<LineMetric> hints; // extra metrics to evaluate (e.g. known witnesses)
};

// Lower estimate of the supremum for any objective (meant for q-cost). Probe points
// depend only on the profile and options, so they are built once and reused across
// committees and objectives. Probes are integer gap vectors; the ratio is scale
// invariant, so rational points are scaled up rather than rounded.
class SupEstimator {
public:
    using Gaps = std::vector<long long>;

    SupEstimator(const PreferenceProfile& p, EstimatorOptions opt) : profile_(p), opt_(std::move(opt))
    {
        auto rep = validate_profile(p);
        if (!rep.ok())
            throw std::invalid_argument(rep.violations.front());
        std::mt19937_64 rng(opt_.seed);
        for (const auto& o : candidate_orders(p))
            orders_.push_back({o, consistency_constraints(p, o), {}, {}});
        const int dim = p.n() - 1;

        for (auto& po : orders_) {
            if (opt_.grid01 && dim >= 1 && dim <= 14) {
                for (uint32_t bits = 1; bits < (1u << dim); ++bits) {
                    Gaps g(static_cast<size_t>(dim));
                    for (int i = 0; i < dim; ++i)
                        g[static_cast<size_t>(i)] = (bits >> i) & 1;
                    if (po.cone.contains(g))
                        po.fixed.push_back(std::move(g));
                }
            }
            for (const auto& h : opt_.hints) {
                if (h.n() != p.n())
                    continue;
                try {
                    auto g = gaps_from_metric(h, po.order);
                    if (po.cone.contains(g))
                        if (auto z = scaled(g))
                            po.fixed.push_back(std::move(*z));
                } catch (const std::invalid_argument&) {
                }
            }
        }
        // random objectives over {cone, sum g <= 1}; one draw sequence per iteration so
        // a larger budget only appends probes
        for (int it = 0; it < opt_.budget && dim >= 1; ++it) {
            for (auto& po : orders_) {
                std::uniform_int_distribution<int> coef(-6, 6);
                lp::Problem pr;
                pr.A = po.cone.rows;
                pr.b.assign(po.cone.rows.size(), 0);
                pr.A.emplace_back(static_cast<size_t>(dim), 1);
                pr.b.push_back(1);
                pr.c.resize(static_cast<size_t>(dim));
                for (auto& v : pr.c)
                    v = coef(rng);
                if (std::all_of(pr.c.begin(), pr.c.end(), [](long long v) { return v <= 0; }))
                    pr.c[static_cast<size_t>(it % dim)] = 1;
                auto sol = lp::maximize(pr);
                if (sol.status == lp::Status::optimal)
                    if (auto z = scaled(sol.x))
                        po.probes.push_back(std::move(*z));
            }
        }
    }

    DistortionResult estimate(const Committee& c, int k, const CostSpec& spec) const
    {
        check_spec(spec, k);
        if (static_cast<int>(c.size()) != k)
            throw std::invalid_argument("committee size differs from k");
        DistortionResult best;
        best.exactness = Exactness::lower_bound;
        best.value = Extended::of(1);
        best.order = orders_.front().order;
        best.witness.assign(static_cast<size_t>(std::max(0, profile_.n() - 1)), Rational(0));
        if (profile_.n() == 1)
            return best;

        for (const auto& po : orders_) {
            auto in = detail::member_slots(po.order, c);
            uint64_t mask = 0;
            for (size_t i = 0; i < in.size(); ++i)
                if (in[i])
                    mask |= uint64_t{1} << i;
            auto consider = [&](const Gaps& g) -> Extended {
                Extended v = eval(g, mask, k, spec);
                if (v > best.value) {
                    best.value = v;
                    best.witness.clear();
                    for (long long v : g)
                        best.witness.push_back(make_rational(v));
                    best.order = po.order;
                }
                return v;
            };
            for (const auto& g : po.fixed)
                consider(g);
            for (const auto& g0 : po.probes) {
                Extended cur = consider(g0);
                refine(po.cone, g0, cur, consider);
            }
        }
        // report the witness in lowest terms
        Integer d = 0;
        for (const auto& w : best.witness)
            mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), w.get_num_mpz_t());
        if (d > 1)
            for (auto& w : best.witness)
                w /= d;
        return best;
    }

    const EstimatorOptions& options() const { return opt_; }

private:
    struct PerOrder {
        AgentOrder order;
        ConsistencyCone cone;
        std::vector<Gaps> fixed;
        std::vector<Gaps> probes;
    };

    static constexpr long long kLimit = 1LL << 40;

    static std::optional<Gaps> scaled(const std::vector<Rational>& g)
    {
        auto xs = fast::integer_positions(g);
        if (!xs)
            return std::nullopt;
        Gaps out;
        for (size_t i = 1; i < xs->size(); ++i)
            out.push_back((*xs)[i] - (*xs)[i - 1]);
        return out;
    }

    static Extended eval(const Gaps& g, uint64_t mask, int k, const CostSpec& spec)
    {
        std::vector<long long> xs{0};
        for (long long v : g)
            xs.push_back(xs.back() + v);
        fast::Layout lay(std::move(xs));
        return fast::ratio(lay.social_cost(mask, spec), lay.optimum(k, spec));
    }

    // Coordinate ascent with step halving. The start point is scaled by 2^rounds so all
    // steps stay integral.
    template <class F>
    void refine(const ConsistencyCone& cone, const Gaps& start, Extended cur, F&& consider) const
    {
        long long total = 0;
        for (long long v : start)
            total += v;
        if (total == 0 || opt_.refine_rounds <= 0)
            return;
        const int rounds = std::min(opt_.refine_rounds, 20);
        if (total > (kLimit >> rounds))
            return;
        Gaps g = start;
        for (auto& v : g)
            v <<= rounds;
        long long h = total << rounds;
        for (int round = 0; round < rounds; ++round) {
            h /= 2;
            bool moved = true;
            for (int moves = 0; moved && moves < 4 * static_cast<int>(g.size()); ++moves) {
                moved = false;
                for (size_t i = 0; i < g.size() && !moved; ++i) {
                    for (int s : {+1, -1}) {
                        Gaps t = g;
                        t[i] += s * h;
                        if (t[i] < 0 || !cone.contains(t))
                            continue;
                        Extended v = consider(t);
                        if (v > cur) {
                            cur = v;
                            g = std::move(t);
                            moved = true;
                            break;
                        }
                    }
                }
                if (cur.infinite)
                    return;
            }
        }
    }

    PreferenceProfile profile_;
    EstimatorOptions opt_;
    std::vector<PerOrder> orders_;
};

inline DistortionResult estimate_sup_distortion_qcost(const Election& e, const Committee& c, const CostSpec& spec,
                                                      const EstimatorOptions& opt = {})
{
    require_valid(e);
    if (spec.cand != CandAgg::qcost)
        throw std::invalid_argument("estimator expects a q-cost objective");
    return SupEstimator(e.profile, opt).estimate(c, e.k, spec);
}

} // namespace peerline
