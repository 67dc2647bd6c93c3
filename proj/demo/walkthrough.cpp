// Small tour: build an election from positions, run the rules, and measure how far each
// committee can be from optimal over every metric the rankings allow.
#include "peerline/adversary.hpp"
#include "peerline/bounds.hpp"
#include "peerline/distortion.hpp"
#include "peerline/rules.hpp"

#include <iostream>

using namespace peerline;

int main()
{
    LineMetric truth = LineMetric::from_integers({0, 2, 3, 7, 8, 12, 13});
    PreferenceProfile p = profile_from_positions(truth);
    std::cout << "order recovered from rankings: " << to_string(reconstruct_order(p)) << "\n";

    for (int k : {2, 3, 4}) {
        Election e{p, k};
        Committee ma = median_alternation(e);
        auto ex = exact_sup_distortion(e, ma, CostSpec::util_add());
        std::cout << "k=" << k << " median alternation " << to_string(ma) << ": cost "
                  << to_string(social_cost(truth, ma, CostSpec::util_add())) << ", worst case "
                  << to_string(ex.value) << " (guarantee " << median_alternation_bound(p.n(), k) << ")\n";
    }

    Election e2{p, 2};
    for (RuleId r : {RuleId::favorite_couple, RuleId::two_medians}) {
        Committee c = apply_rule(r, e2);
        EstimatorOptions eo;
        eo.hints.push_back(truth);
        auto est = estimate_sup_distortion_qcost(e2, c, CostSpec::util_q(2), eo);
        std::cout << rule_name(r) << " " << to_string(c) << ": 2-cost distortion here "
                  << to_string(distortion_at(truth, c, 2, CostSpec::util_q(2))) << ", worst seen "
                  << to_decimal(est.value.value, 4) << "\n";
    }

    auto inst = generate(Family::util_add_lb, 3);
    Extended least = Extended::inf();
    Combination cb(inst.election.n(), 3);
    do {
        Committee c;
        for (int i : cb.idx)
            c.push_back(i + 1);
        Extended v = verify_committee(inst, c);
        if (v < least)
            least = v;
    } while (cb.advance());
    std::cout << "hard instance for k=3: every committee reaches " << to_string(least) << " on one of "
              << inst.metrics.size() << " metrics\n";
}
