#include "torus/bounds.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include <nlohmann/json.hpp>

namespace torus {

long long delta_chi(const TorusLink& K, const TorusLink& L) {
    return std::llabs(K.chi() - L.chi());
}

std::pair<long long, Theta> delta_sigma_sup(const TorusLink& K, const TorusLink& L) {
    const auto pk = profile(K);
    const auto pl = profile(L);

    std::vector<Rat> grid;
    grid.reserve(pk->breakpoints.size() + pl->breakpoints.size());
    std::merge(pk->breakpoints.begin(), pk->breakpoints.end(),
               pl->breakpoints.begin(), pl->breakpoints.end(),
               std::back_inserter(grid));
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    long long sup = 0;
    Rat witness(1, 2);
    auto consider = [&](const Rat& theta) {
        const long long gap = std::llabs(pk->evaluate(theta) - pl->evaluate(theta));
        if (gap > sup) {
            sup = gap;
            witness = theta;
        }
    };
    // Breakpoints of the merged partition, then a midpoint of every open
    // interval including (0, first) and (last, 1).
    Rat prev(0);
    for (const Rat& bp : grid) {
        consider((prev + bp) / 2);
        consider(bp);
        prev = bp;
    }
    consider((prev + Rat(1)) / 2);
    return {sup, Theta(witness)};
}

long long tau(const TorusLink& K, const TorusLink& L) {
    return std::max(delta_chi(K, L), delta_sigma_sup(K, L).first);
}

BoundReport report(long long a, long long b, long long c, long long d,
                   long long budget) {
    const TorusLink K(a, b), L(c, d);
    BoundReport rep{K, L};
    rep.delta_chi = delta_chi(K, L);
    auto [sup, witness] = delta_sigma_sup(K, L);
    rep.delta_sigma_sup = sup;
    if (sup > 0) rep.witness_theta = witness;
    rep.tau = std::max(rep.delta_chi, rep.delta_sigma_sup);
    rep.plan = best_upper(a, b, c, d, budget);
    rep.upper = rep.plan.total_cost;
    rep.f_interval = {rep.tau - rep.delta_chi, rep.upper - rep.delta_chi};
    if (rep.tau > 0) rep.gamma_ratio = Rat(rep.upper, rep.tau);
    if (!K.is_knot() || !L.is_knot())
        rep.note = "multi-component pair: bound chain valid because torus-link "
                   "components are positively linked";
    return rep;
}

std::string report_to_json(const BoundReport& rep) {
    nlohmann::json doc;
    doc["schema_version"] = 1;
    doc["pair"] = {{{"p", rep.first.p()}, {"q", rep.first.q()}},
                   {{"p", rep.second.p()}, {"q", rep.second.q()}}};
    doc["delta_chi"] = rep.delta_chi;
    doc["delta_sigma_sup"] = rep.delta_sigma_sup;
    doc["tau"] = rep.tau;
    if (rep.witness_theta)
        doc["witness_theta"] = rep.witness_theta->str();
    else
        doc["witness_theta"] = nullptr;
    doc["upper"] = rep.upper;
    doc["f_interval"] = {rep.f_interval.first, rep.f_interval.second};
    if (rep.gamma_ratio)
        doc["gamma_ratio"] = to_string(*rep.gamma_ratio);
    else
        doc["gamma_ratio"] = nullptr;
    doc["plan"] = nlohmann::json::parse(plan_to_json(rep.plan));
    if (!rep.note.empty()) doc["note"] = rep.note;
    return doc.dump();
}

}  // namespace torus
