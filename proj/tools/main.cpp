#include <algorithm>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "torus/bounds.hpp"
#include "torus/planner.hpp"
#include "torus/signature.hpp"
#include "torus/stable_genus.hpp"
#include "torus/verify.hpp"

namespace {

using namespace torus;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

long long auto_budget(long long a, long long b, long long c, long long d) {
    const long long m = std::max({a, b, c, d});
    return std::clamp(2 * m, 16LL, 64LL);
}

void print_plan_human(const CobordismPlan& plan) {
    std::cout << "plan " << plan.start.str() << " -> " << plan.end.str()
              << ", total cost " << plan.total_cost
              << (plan.exhaustive ? "" : " (search not exhaustive)") << "\n";
    for (const auto& m : plan.moves) {
        std::cout << "  " << to_string(m.kind) << ": ";
        for (size_t i = 0; i < m.source.size(); ++i)
            std::cout << (i ? " + " : "") << m.source[i].str();
        std::cout << " -> ";
        for (size_t i = 0; i < m.target.size(); ++i)
            std::cout << (i ? " + " : "") << m.target[i].str();
        std::cout << "  (cost " << m.cost << ")\n";
    }
}

int cmd_sig(long long p, long long q, const std::string& theta_text,
            bool want_profile, const std::string& format) {
    const TorusLink link(p, q);
    if (want_profile) {
        const auto prof = profile(link);
        if (format == "csv") {
            std::cout << profile_to_csv(*prof);
        } else if (format == "json") {
            std::cout << profile_to_json(*prof) << "\n";
        } else {
            std::cout << "signature profile of " << link.str() << "\n";
            if (prof->breakpoints.empty()) {
                std::cout << "  constant " << prof->interval_values.front() << "\n";
                return kExitOk;
            }
            std::cout << "  (0, " << to_string(prof->breakpoints.front())
                      << "): " << prof->interval_values.front() << "\n";
            for (size_t i = 0; i < prof->breakpoints.size(); ++i)
                std::cout << "  at " << to_string(prof->breakpoints[i]) << ": "
                          << prof->breakpoint_values[i] << ", then "
                          << prof->interval_values[i + 1] << "\n";
        }
        return kExitOk;
    }
    const Theta theta(parse_rational(theta_text));
    const long long value = signature_at(link, theta);
    if (format == "json") {
        std::cout << "{\"p\":" << link.p() << ",\"q\":" << link.q()
                  << ",\"theta\":\"" << theta.str() << "\",\"sigma\":" << value
                  << "}\n";
    } else {
        std::cout << value << "\n";
    }
    return kExitOk;
}

int cmd_bounds(long long a, long long b, long long c, long long d,
               long long budget, const std::string& format) {
    if (budget <= 0) budget = auto_budget(a, b, c, d);
    const BoundReport rep = report(a, b, c, d, budget);
    if (format == "json") {
        std::cout << report_to_json(rep) << "\n";
        return kExitOk;
    }
    std::cout << "pair " << rep.first.str() << ", " << rep.second.str() << "\n"
              << "  delta_chi       " << rep.delta_chi << "\n"
              << "  delta_sigma_sup " << rep.delta_sigma_sup;
    if (rep.witness_theta)
        std::cout << "  (witness theta = " << rep.witness_theta->str() << ")";
    std::cout << "\n  tau (lower)     " << rep.tau << "\n"
              << "  upper           " << rep.upper << "\n"
              << "  f interval      [" << rep.f_interval.first << ", "
              << rep.f_interval.second << "]\n";
    if (rep.gamma_ratio)
        std::cout << "  gamma ratio     " << to_string(*rep.gamma_ratio) << "\n";
    if (!rep.plan.exhaustive)
        std::cout << "  warning: plan search not exhaustive within budget\n";
    if (!rep.note.empty()) std::cout << "  note: " << rep.note << "\n";
    print_plan_human(rep.plan);
    return kExitOk;
}

int cmd_plan(long long a, long long b, long long c, long long d,
             const std::string& strategy, long long budget,
             const std::string& format) {
    if (budget <= 0) budget = auto_budget(a, b, c, d);
    CobordismPlan plan{TorusLink(a, b), TorusLink(c, d)};
    if (strategy == "thm2") {
        plan = theorem2_upper(a, b, c, d);
    } else if (strategy == "thm1") {
        plan = theorem1_plan(a, b, c, d);
    } else if (strategy == "prop1") {
        auto found = prop1_match(TorusLink(a, b), TorusLink(c, d));
        if (!found)
            throw std::domain_error(
                "pair does not match the swap pattern T(ab,c) / T(a,bc)");
        plan = *found;
    } else {
        plan = best_upper(a, b, c, d, budget);
    }
    if (format == "json")
        std::cout << plan_to_json(plan) << "\n";
    else
        print_plan_human(plan);
    return kExitOk;
}

int cmd_verify(const std::vector<std::string>& claims, long long max, int jobs) {
    bool any_violation = false;
    std::cout << "claim                  checked  violations  seconds  range\n";
    for (const auto& id : claims) {
        std::cerr << "running " << id << "...\n";
        const ScanResult res = run_claim(id, max, jobs);
        any_violation |= !res.violations.empty();
        std::cout << res.claim_id;
        for (size_t i = res.claim_id.size(); i < 23; ++i) std::cout << ' ';
        std::cout << res.checked << "  " << res.violations.size() << "  "
                  << res.elapsed_seconds << "  " << res.range << "\n";
        for (const auto& v : res.violations)
            std::cout << "  violation: " << v << "\n";
    }
    return any_violation ? kExitViolation : kExitOk;
}

int cmd_ball(long long a, long long b, long long c, long long d,
             long long resolution, long long budget, const std::string& format) {
    if (budget <= 0) budget = auto_budget(a, b, c, d);
    const auto rows = ball_polygon(TorusLink(a, b), TorusLink(c, d),
                                   resolution, budget);
    if (format == "json")
        std::cout << ball_to_json(rows) << "\n";
    else
        std::cout << ball_to_csv(rows);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact signature invariants and cobordism bounds for torus links"};
    app.require_subcommand(1);

    std::string format = "human";
    long long p = 0, q = 0, a = 0, b = 0, c = 0, d = 0;
    std::string theta_text = "1/2";
    bool want_profile = false;
    long long budget = 0, max_bound = 0, resolution = 64;
    int jobs = 0;
    std::string claim, strategy = "auto";
    bool all_claims = false;

    auto* sig = app.add_subcommand("sig", "Signature at theta or the full profile");
    sig->add_option("p", p)->required();
    sig->add_option("q", q)->required();
    sig->add_option("--theta", theta_text, "exact fraction NUM/DEN");
    sig->add_flag("--profile", want_profile, "print the full step function");
    sig->add_option("--format", format)->check(CLI::IsMember({"human", "json", "csv"}));

    auto* bounds = app.add_subcommand("bounds", "Lower/upper bound report for a pair");
    bounds->add_option("a", a)->required();
    bounds->add_option("b", b)->required();
    bounds->add_option("c", c)->required();
    bounds->add_option("d", d)->required();
    bounds->add_option("--budget", budget);
    bounds->add_option("--format", format)->check(CLI::IsMember({"human", "json"}));

    auto* plan = app.add_subcommand("plan", "Explicit cobordism plan for a pair");
    plan->add_option("a", a)->required();
    plan->add_option("b", b)->required();
    plan->add_option("c", c)->required();
    plan->add_option("d", d)->required();
    plan->add_option("--strategy", strategy)
        ->check(CLI::IsMember({"auto", "thm1", "thm2", "prop1"}));
    plan->add_option("--budget", budget);
    plan->add_option("--format", format)->check(CLI::IsMember({"human", "json"}));

    auto* verify = app.add_subcommand("verify", "Batch claim verification");
    verify->add_option("--claim", claim, "registered claim id");
    verify->add_flag("--all", all_claims, "run every registered claim");
    verify->add_option("--max", max_bound, "override the range bound");
    verify->add_option("--jobs", jobs, "scan partitions (default: machine parallelism)");

    auto* ball = app.add_subcommand("ball", "Stable 4-genus norm ball polygon data");
    ball->add_option("a", a)->required();
    ball->add_option("b", b)->required();
    ball->add_option("c", c)->required();
    ball->add_option("d", d)->required();
    ball->add_option("--resolution", resolution);
    ball->add_option("--budget", budget);
    ball->add_option("--format", format)->check(CLI::IsMember({"human", "csv", "json"}));

    try {
        app.parse(argc, argv);
        if (sig->parsed()) return cmd_sig(p, q, theta_text, want_profile, format);
        if (bounds->parsed()) return cmd_bounds(a, b, c, d, budget, format);
        if (plan->parsed()) return cmd_plan(a, b, c, d, strategy, budget, format);
        if (verify->parsed()) {
            std::vector<std::string> ids;
            if (all_claims)
                ids = list_claims();
            else if (!claim.empty())
                ids.push_back(claim);
            else
                throw std::invalid_argument("verify needs --claim ID or --all");
            return cmd_verify(ids, max_bound, jobs);
        }
        if (ball->parsed()) {
            if (format == "human") format = "csv";
            return cmd_ball(a, b, c, d, resolution, budget, format);
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitOk;
}
