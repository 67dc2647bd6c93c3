// peerline command-line tool. Exit codes: 0 ok, 1 internal error, 2 usage or parameter error.
#include "peerline/adversary.hpp"
#include "peerline/bounds.hpp"
#include "peerline/distortion.hpp"
#include "peerline/instance_io.hpp"
#include "peerline/rules.hpp"
#include "peerline/stairs.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace peerline;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Instance load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    return parse_instance(in);
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw UsageError("cannot write " + path);
    out << text;
}

Committee parse_committee(const std::string& s)
{
    std::vector<AgentId> v;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, ',')) {
        try {
            v.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw UsageError("bad committee member '" + tok + "'");
        }
    }
    return make_committee(v);
}

CostSpec objective_or(const std::string& flag, const Instance& inst)
{
    if (!flag.empty()) {
        auto o = parse_objective(flag);
        if (!o)
            throw UsageError("unknown objective '" + flag + "' (util-add, egal-add, util-qN, egal-qN)");
        return *o;
    }
    return inst.objective.value_or(CostSpec::util_add());
}

std::string gaps_text(const std::vector<Rational>& g)
{
    std::string s;
    for (size_t i = 0; i < g.size(); ++i)
        s += (i ? " " : "") + to_string(g[i]);
    return s;
}

Committee pick_committee(const std::string& rule, const std::string& committee, const Election& e)
{
    if (!committee.empty())
        return parse_committee(committee);
    auto r = parse_rule(rule);
    if (!r)
        throw UsageError("unknown rule '" + rule + "'");
    return apply_rule(*r, e);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"peer selection on the line: rules, costs, distortion"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "write a lower-bound instance and its metrics");
    std::string family_s, out_path;
    FamilyParams fp;
    gen->add_option("--family", family_s, "family name")->required();
    gen->add_option("--k", fp.k);
    gen->add_option("--q", fp.q);
    gen->add_option("--n", fp.n);
    gen->add_option("--n1", fp.n1);
    gen->add_option("--n2", fp.n2);
    gen->add_option("--kprime", fp.kprime);
    gen->add_option("--M", fp.M, "far-block multiplier");
    gen->add_option("--out", out_path, "output file, or a directory ending in /");

    // run
    auto* run = app.add_subcommand("run", "apply a rule to an instance");
    std::string rule_s, inst_path, objective_s;
    run->add_option("--rule", rule_s)->required();
    run->add_option("--objective", objective_s);
    run->add_option("instance", inst_path)->required();

    // distortion
    auto* dist = app.add_subcommand("distortion", "distortion of a committee");
    std::string dist_rule, dist_committee, dist_obj, mode = "exact", dist_path;
    uint64_t seed = 1;
    int budget = 32;
    dist->add_option("--rule", dist_rule);
    dist->add_option("--committee", dist_committee, "comma separated ids");
    dist->add_option("--objective", dist_obj);
    dist->add_option("--mode", mode)->check(CLI::IsMember({"exact", "estimate", "at-metric"}));
    dist->add_option("--seed", seed);
    dist->add_option("--budget", budget)->check(CLI::NonNegativeNumber);
    dist->add_option("instance", dist_path)->required();

    // table2
    auto* table = app.add_subcommand("table2", "solve the lower-bound program for a range of k");
    int kmin = 3, kmax = 200;
    table->add_option("--k-min", kmin);
    table->add_option("--k-max", kmax);

    // stairs
    auto* stairs = app.add_subcommand("stairs", "stair diagram of a pair committee");
    std::string st_path, st_committee, st_rule, st_format = "csv", st_file;
    stairs->add_option("--committee", st_committee);
    stairs->add_option("--rule", st_rule);
    stairs->add_option("--out", st_format, "csv or svg")->check(CLI::IsMember({"csv", "svg", "CSV", "SVG"}));
    stairs->add_option("--file", st_file, "write here instead of stdout");
    stairs->add_option("instance", st_path)->required();

    // curves
    auto* curves = app.add_subcommand("curves", "bound curves as CSV");
    std::string which;
    long long cn = 100, ck = 100, cfrom = 0, cto = 0;
    std::string curve_out;
    curves->add_option("--which", which)->required()->check(CLI::IsMember({"fig1", "fig5", "egal-add"}));
    curves->add_option("--n", cn, "agents (fig1)");
    curves->add_option("--k", ck, "committee size (fig5)");
    curves->add_option("--from", cfrom);
    curves->add_option("--to", cto);
    curves->add_option("--out", curve_out, "CSV file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            auto fam = parse_family(family_s);
            if (!fam)
                throw UsageError("unknown family '" + family_s + "'");
            const bool needs_k = *fam == Family::util_add_lb || *fam == Family::util_qcost_unbounded ||
                                 *fam == Family::util_qcost_large_q || *fam == Family::egal_add_lb ||
                                 *fam == Family::egal_qcost_unbounded;
            const bool needs_q = *fam == Family::util_qcost_unbounded || *fam == Family::util_qcost_large_q ||
                                 *fam == Family::egal_qcost_unbounded;
            if (needs_k && gen->count("--k") == 0)
                throw UsageError("--k is required for family " + family_s);
            if (needs_q && gen->count("--q") == 0)
                throw UsageError("--q is required for family " + family_s);
            LBInstance lb = generate(*fam, fp);
            Instance base{lb.label, lb.election, std::nullopt, lb.spec};
            std::string head = "# claimed bound " + to_string(lb.claimed_bound) + "\n";
            for (const auto& line : lb.decision_map)
                head += "# " + line + "\n";
            std::vector<std::string> docs{head + write_instance(base)};
            for (size_t i = 0; i < lb.metrics.size(); ++i) {
                Instance v = base;
                v.metric = lb.metrics[i];
                v.label += " d" + std::to_string(i + 1);
                docs.push_back(write_instance(v));
            }
            if (out_path.empty()) {
                for (size_t i = 0; i < docs.size(); ++i)
                    std::cout << (i ? "---\n" : "") << docs[i];
                return 0;
            }
            std::filesystem::path target(out_path);
            if (out_path.back() == '/' || std::filesystem::is_directory(target)) {
                std::filesystem::create_directories(target);
                target /= family_s + ".inst";
            }
            write_file(target.string(), docs[0]);
            std::cout << target.string() << "\n";
            for (size_t i = 1; i < docs.size(); ++i) {
                std::string p = target.string() + ".d" + std::to_string(i);
                write_file(p, docs[i]);
                std::cout << p << "\n";
            }
            return 0;
        }

        if (*run) {
            Instance inst = load(inst_path);
            auto r = parse_rule(rule_s);
            if (!r)
                throw UsageError("unknown rule '" + rule_s + "'");
            Committee c = apply_rule(*r, inst.election);
            std::cout << "committee: " << to_string(c);
            if (inst.metric)
                std::cout << " cost: " << to_string(social_cost(*inst.metric, c, objective_or(objective_s, inst)));
            std::cout << "\n";
            return 0;
        }

        if (*dist) {
            Instance inst = load(dist_path);
            if (dist_rule.empty() == dist_committee.empty())
                throw UsageError("give exactly one of --rule and --committee");
            Committee c = pick_committee(dist_rule, dist_committee, inst.election);
            CostSpec spec = objective_or(dist_obj, inst);
            if (mode == "at-metric") {
                if (!inst.metric)
                    throw UsageError("at-metric mode needs positions in the instance");
                std::cout << to_string(distortion_at(*inst.metric, c, inst.election.k, spec)) << "\n";
                return 0;
            }
            DistortionResult res;
            if (mode == "exact") {
                if (!spec.additive())
                    throw UsageError("exact mode supports only util-add and egal-add");
                res = exact_sup_distortion(inst.election, c, spec, {0});
                std::cout << to_string(res.value) << " (exact)\n";
            } else {
                if (spec.additive())
                    throw UsageError("estimate mode expects a q-cost objective");
                EstimatorOptions eo;
                eo.seed = seed;
                eo.budget = budget;
                if (inst.metric)
                    eo.hints.push_back(*inst.metric);
                res = estimate_sup_distortion_qcost(inst.election, c, spec, eo);
                std::cout << (res.value.infinite ? std::string("inf") : to_decimal(res.value.value, 6))
                          << " (lower bound)\n";
            }
            std::cout << "order: " << to_string(res.order) << "\n";
            std::cout << "witness gaps: " << gaps_text(res.witness) << "\n";
            return 0;
        }

        if (*table) {
            if (kmin < 3 || kmax < kmin)
                throw UsageError("need 3 <= k-min <= k-max");
            std::cout << "k,n1,n2,kprime,gamma\n";
            for (int k = kmin; k <= kmax; ++k) {
                auto s = solve_lb_program(k);
                std::cout << k << ',' << s.n1 << ',' << s.n2 << ',' << s.kprime << ',' << to_decimal(s.gamma, 4)
                          << "\n";
            }
            return 0;
        }

        if (*stairs) {
            Instance inst = load(st_path);
            if (!inst.metric)
                throw UsageError("stairs needs positions in the instance");
            if (inst.election.k != 2 && st_committee.empty())
                throw UsageError("stairs needs k = 2");
            if (st_rule.empty() && st_committee.empty())
                throw UsageError("give --committee or --rule");
            Committee c = st_committee.empty() ? pick_committee(st_rule, "", inst.election)
                                               : parse_committee(st_committee);
            if (c.size() != 2)
                throw UsageError("stairs needs a committee of two agents");
            auto rects = stair_rects(*inst.metric, c);
            bool svg = st_format == "svg" || st_format == "SVG";
            std::string text = svg ? stairs_svg(rects) : stairs_csv(rects);
            if (st_file.empty())
                std::cout << text;
            else
                write_file(st_file, text);
            return 0;
        }

        if (*curves) {
            Curve cv = which == "fig1" ? Curve::fig1 : which == "fig5" ? Curve::fig5 : Curve::egal_add;
            long long fixed = 0, lo = 0, hi = 0;
            if (cv == Curve::fig1) {
                fixed = cn, lo = 2, hi = cn - 1;
            } else if (cv == Curve::fig5) {
                fixed = ck, lo = ck / 2 + 1 + (ck % 2), hi = ck;
            } else {
                lo = 2, hi = 99;
            }
            if (curves->count("--from"))
                lo = cfrom;
            if (curves->count("--to"))
                hi = cto;
            std::string text = emit_curve(cv, fixed, lo, hi);
            if (curve_out.empty())
                std::cout << text;
            else
                write_file(curve_out, text);
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BadParameters& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const RuleInapplicable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotRealizable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
