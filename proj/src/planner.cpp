#include "torus/planner.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace torus {

namespace {

long long chi_gap(const TorusLink& a, const TorusLink& b) {
    return std::llabs(a.chi() - b.chi());
}

// Trim of T(c,d) down to T(a,b) embeds iff a <= d and b < c, or it is the
// same-braid-index column trim a = c, b <= d.
bool trim_ok(long long a, long long b, long long c, long long d) {
    return (a <= d && b < c) || (a == c && b <= d);
}

bool rect_legal(const TorusLink& src, const TorusLink& dst) {
    const long long so[2][2] = {{src.p(), src.q()}, {src.q(), src.p()}};
    const long long dd[2][2] = {{dst.p(), dst.q()}, {dst.q(), dst.p()}};
    for (auto& s : so)
        for (auto& t : dd)
            if (trim_ok(t[0], t[1], s[0], s[1])) return true;
    return false;
}

Move make_rect(const TorusLink& from, const TorusLink& to) {
    return Move{MoveKind::RectangleSmoothing, {from}, {to}, chi_gap(from, to)};
}

Move make_swap(const TorusLink& from, const TorusLink& to, long long cost) {
    return Move{MoveKind::Prop1Swap, {from}, {to}, cost};
}

void finish(CobordismPlan& plan) {
    plan.total_cost = 0;
    for (const auto& m : plan.moves) plan.total_cost += m.cost;
}

CobordismPlan plan_thm2(const TorusLink& K, const TorusLink& L);

// Case b >= c with strict inequalities on both sides: split off the shared
// T(a,c) from both ends and recurse on the remainders.
CobordismPlan thm2_split_case(const TorusLink& K, const TorusLink& L) {
    const long long a = K.p(), b = K.q(), c = L.p(), d = L.q();
    const TorusLink shared(a, c), k1(a, b - c), l1(c, d - a);
    CobordismPlan plan{K, L, {}, 0};
    plan.moves.push_back(Move{MoveKind::Split, {K}, {shared, k1}, a});
    CobordismPlan sub = plan_thm2(k1, l1);
    plan.moves.insert(plan.moves.end(), sub.moves.begin(), sub.moves.end());
    plan.moves.push_back(Move{MoveKind::Split, {shared, l1}, {L}, c});
    finish(plan);
    return plan;
}

CobordismPlan plan_thm2(const TorusLink& K, const TorusLink& L) {
    if (K == L) return CobordismPlan{K, L, {}, 0};
    if (K.p() == L.p()) {
        CobordismPlan plan{K, L, {make_rect(K, L)}, 0};
        finish(plan);
        return plan;
    }
    if (K.p() > L.q()) return reverse_plan(plan_thm2(L, K));
    // Now a <= d in the proof's orientation.
    if (K.q() <= L.p() || L.q() == K.p()) {
        CobordismPlan plan{K, L, {make_rect(K, L)}, 0};
        finish(plan);
        return plan;
    }
    return thm2_split_case(K, L);
}

struct Prop1Edge {
    TorusLink neighbor;
    long long cost;
};

// All swap partners T(ab,c) <-> T(a,bc) of a link, in both roles.
std::vector<Prop1Edge> prop1_neighbors(const TorusLink& link) {
    std::vector<Prop1Edge> out;
    const long long orient[2][2] = {{link.p(), link.q()}, {link.q(), link.p()}};
    for (auto& o : orient) {
        const long long P = o[0], C = o[1];
        for (long long beta = 2; beta <= P; ++beta) {
            if (P % beta) continue;
            const long long alpha = P / beta;  // link = T(alpha*beta, C)
            out.push_back({TorusLink(alpha, beta * C), (beta - 1) * std::llabs(C - alpha)});
        }
        for (long long beta = 2; beta <= C; ++beta) {
            if (C % beta) continue;
            const long long gamma = C / beta;  // link = T(P, beta*gamma)
            if (P * beta > TorusLink::kMaxParam) continue;
            out.push_back({TorusLink(P * beta, gamma), (beta - 1) * std::llabs(gamma - P)});
        }
    }
    return out;
}

// One-sided match: K in the role T(ab,c).
std::optional<CobordismPlan> detect_prop1_from(const TorusLink& K, const TorusLink& L) {
    std::optional<CobordismPlan> best;
    const long long orient[2][2] = {{K.p(), K.q()}, {K.q(), K.p()}};
    for (auto& o : orient) {
        const long long P = o[0], C = o[1];
        for (long long beta = 1; beta <= P; ++beta) {
            if (P % beta) continue;
            const long long alpha = P / beta;
            if (TorusLink(alpha, beta * C) != L) continue;
            CobordismPlan cand = prop1_plan(alpha, beta, C);
            if (cand.start != K) cand = reverse_plan(cand);
            if (!best || cand.total_cost < best->total_cost) best = cand;
        }
    }
    return best;
}

std::optional<CobordismPlan> detect_prop1(const TorusLink& K, const TorusLink& L) {
    auto best = detect_prop1_from(K, L);
    if (auto rev = detect_prop1_from(L, K); rev &&
        (!best || rev->total_cost < best->total_cost))
        best = reverse_plan(*rev);
    return best;
}

// Uniform-cost search over single-link states with rectangle and swap
// edges, both parameters capped at budget. Ties broken by fewest moves,
// then by smallest intermediate parameters.
std::optional<CobordismPlan> graph_search(const TorusLink& K, const TorusLink& L,
                                          long long budget) {
    if (budget < 1 || K.q() > budget || L.q() > budget) return std::nullopt;
    const long long n = budget;
    auto index = [n](const TorusLink& l) {
        return (l.p() - 1) * n + (l.q() - 1);
    };
    const size_t total = static_cast<size_t>(n * n);
    const auto INF = std::make_pair(std::numeric_limits<long long>::max(), 0LL);
    std::vector<std::pair<long long, long long>> dist(total, INF);
    std::vector<long long> parent(total, -1);
    std::vector<Move> via(total);
    using QItem = std::tuple<long long, long long, long long, long long>;
    std::priority_queue<QItem, std::vector<QItem>, std::greater<>> queue;

    dist[index(K)] = {0, 0};
    queue.push({0, 0, K.p(), K.q()});
    while (!queue.empty()) {
        auto [cost, hops, p, q] = queue.top();
        queue.pop();
        const TorusLink cur(p, q);
        const auto ci = index(cur);
        if (std::make_pair(cost, hops) != dist[ci]) continue;
        if (cur == L) break;

        auto relax = [&](const TorusLink& nb, long long edge, const Move& move) {
            if (nb.q() > n) return;
            const auto cand = std::make_pair(cost + edge, hops + 1);
            const auto ni = index(nb);
            if (cand < dist[ni]) {
                dist[ni] = cand;
                parent[ni] = ci;
                via[ni] = move;
                queue.push({cand.first, cand.second, nb.p(), nb.q()});
            }
        };
        for (long long x = 1; x <= n; ++x)
            for (long long y = x; y <= n; ++y) {
                const TorusLink nb(x, y);
                if (nb == cur) continue;
                if (rect_legal(cur, nb) || rect_legal(nb, cur))
                    relax(nb, chi_gap(cur, nb), make_rect(cur, nb));
            }
        for (const auto& e : prop1_neighbors(cur)) {
            if (e.neighbor == cur) continue;
            relax(e.neighbor, e.cost, make_swap(cur, e.neighbor, e.cost));
        }
    }
    if (dist[index(L)] == INF) return std::nullopt;
    CobordismPlan plan{K, L, {}, 0};
    for (long long at = index(L); parent[at] != -1; at = parent[at])
        plan.moves.push_back(via[at]);
    std::reverse(plan.moves.begin(), plan.moves.end());
    finish(plan);
    return plan;
}

}  // namespace

std::string to_string(MoveKind kind) {
    switch (kind) {
        case MoveKind::RectangleSmoothing: return "rectangle_smoothing";
        case MoveKind::Split: return "split";
        case MoveKind::Prop1Swap: return "swap";
    }
    return "?";
}

long long rectangle_cost(long long a, long long b, long long c, long long d) {
    if (a < 1 || b < 1 || c < 1 || d < 1)
        throw std::domain_error("rectangle parameters must be positive");
    if (!trim_ok(a, b, c, d))
        throw std::domain_error("rectangle embedding condition violated");
    return -a * b + c * d + a + b - c - d;
}

std::tuple<TorusLink, TorusLink, long long>
split_move(long long strands, long long columns, long long a) {
    if (strands < 2 || columns < 1)
        throw std::domain_error("split requires a braid with at least two strands");
    if (a < 1 || a >= strands)
        throw std::domain_error("split position must satisfy 1 <= a < strands");
    return {TorusLink(a, columns), TorusLink(strands - a, columns), columns};
}

CobordismPlan prop1_plan(long long a, long long b, long long c) {
    if (a < 1 || b < 1 || c < 1)
        throw std::domain_error("swap parameters must be positive");
    const TorusLink K(a * b, c), L(a, b * c);
    CobordismPlan plan{K, L, {}, 0};
    if (K != L)
        plan.moves.push_back(make_swap(K, L, (b - 1) * std::llabs(c - a)));
    finish(plan);
    return plan;
}

CobordismPlan theorem2_upper(long long a, long long b, long long c, long long d) {
    return plan_thm2(TorusLink(a, b), TorusLink(c, d));
}

CobordismPlan theorem1_plan(long long a, long long b, long long c, long long d) {
    if (a < 2) throw std::domain_error("theorem1 plan requires a >= 2");
    if (!(a <= c)) throw std::domain_error("theorem1 plan requires a <= c");
    if (!(a <= b)) throw std::domain_error("theorem1 plan requires a <= b");
    if (!(c <= d)) throw std::domain_error("theorem1 plan requires c <= d");
    const long long k = d / a, r = d % a;
    const TorusLink K(a, b), L(c, d), mid1(a, k * c), mid2(c, k * a);
    CobordismPlan plan{K, L, {}, 0};
    if (K != mid1) plan.moves.push_back(make_rect(K, mid1));
    if (mid1 != mid2)
        plan.moves.push_back(make_swap(mid1, mid2, (k - 1) * std::llabs(c - a)));
    if (mid2 != L)
        plan.moves.push_back(Move{MoveKind::RectangleSmoothing, {mid2}, {L},
                                  r * (c - 1)});
    finish(plan);
    return plan;
}

std::optional<CobordismPlan> prop1_match(const TorusLink& K, const TorusLink& L) {
    return detect_prop1(K, L);
}

CobordismPlan best_upper(long long a, long long b, long long c, long long d,
                         long long budget) {
    const TorusLink K(a, b), L(c, d);
    std::vector<CobordismPlan> candidates;
    candidates.push_back(theorem2_upper(a, b, c, d));
    if (auto p1 = detect_prop1(K, L)) candidates.push_back(*p1);
    if (K.p() >= 2 && L.p() >= 2) {
        if (K.p() <= L.p())
            candidates.push_back(theorem1_plan(K.p(), K.q(), L.p(), L.q()));
        else
            candidates.push_back(reverse_plan(theorem1_plan(L.p(), L.q(), K.p(), K.q())));
    }
    bool searched = false;
    if (auto found = graph_search(K, L, budget)) {
        searched = true;
        candidates.push_back(*found);
    }
    auto best = std::min_element(candidates.begin(), candidates.end(),
                                 [](const CobordismPlan& x, const CobordismPlan& y) {
                                     return std::make_pair(x.total_cost, x.moves.size()) <
                                            std::make_pair(y.total_cost, y.moves.size());
                                 });
    CobordismPlan result = *best;
    result.exhaustive = searched || K == L;
    return result;
}

CobordismPlan reverse_plan(const CobordismPlan& plan) {
    CobordismPlan rev{plan.end, plan.start, {}, plan.total_cost, plan.exhaustive};
    for (auto it = plan.moves.rbegin(); it != plan.moves.rend(); ++it)
        rev.moves.push_back(Move{it->kind, it->target, it->source, it->cost});
    return rev;
}

namespace {

bool split_legal(const TorusLink& single, const TorusLink& A, const TorusLink& B,
                 long long cost) {
    for (long long c : {A.p(), A.q()}) {
        const long long x = (c == A.p()) ? A.q() : A.p();
        for (long long cb : {B.p(), B.q()}) {
            if (cb != c) continue;
            const long long y = (cb == B.p()) ? B.q() : B.p();
            if (TorusLink(x + y, c) == single && cost == c) return true;
        }
    }
    return false;
}

bool swap_legal(const TorusLink& S1, const TorusLink& S2, long long cost) {
    for (const auto* side : {&S1, &S2}) {
        const TorusLink& other = (side == &S1) ? S2 : S1;
        const long long orient[2][2] = {{side->p(), side->q()},
                                        {side->q(), side->p()}};
        for (auto& o : orient) {
            const long long P = o[0], C = o[1];
            for (long long beta = 1; beta <= P; ++beta) {
                if (P % beta) continue;
                const long long alpha = P / beta;
                if (TorusLink(alpha, beta * C) == other &&
                    cost == (beta - 1) * std::llabs(C - alpha))
                    return true;
            }
        }
    }
    return false;
}

}  // namespace

bool validate_plan(const CobordismPlan& plan, std::vector<std::string>* diagnostics) {
    std::vector<std::string> local;
    auto fail = [&](const std::string& msg) { local.push_back(msg); };

    std::multiset<TorusLink> state{plan.start};
    long long sum = 0;
    for (size_t i = 0; i < plan.moves.size(); ++i) {
        const Move& m = plan.moves[i];
        const std::string tag = "move " + std::to_string(i) + ": ";
        if (m.cost < 0) fail(tag + "negative cost");
        // Chaining: sources must be present in the running state.
        std::multiset<TorusLink> next = state;
        bool chained = true;
        for (const auto& s : m.source) {
            auto it = next.find(s);
            if (it == next.end()) {
                chained = false;
                break;
            }
            next.erase(it);
        }
        if (!chained) {
            fail(tag + "source links not present in current state");
        } else {
            for (const auto& t : m.target) next.insert(t);
            state = std::move(next);
        }
        switch (m.kind) {
            case MoveKind::RectangleSmoothing:
                if (m.source.size() != 1 || m.target.size() != 1)
                    fail(tag + "rectangle move must touch exactly one link");
                else if (!rect_legal(m.source[0], m.target[0]) &&
                         !rect_legal(m.target[0], m.source[0]))
                    fail(tag + "no orientation admits the rectangle embedding");
                else if (m.cost != chi_gap(m.source[0], m.target[0]))
                    fail(tag + "rectangle cost differs from |delta chi|");
                break;
            case MoveKind::Split: {
                const bool fwd = m.source.size() == 1 && m.target.size() == 2;
                const bool bwd = m.source.size() == 2 && m.target.size() == 1;
                if (!fwd && !bwd) {
                    fail(tag + "split must relate one link and two links");
                    break;
                }
                const TorusLink& single = fwd ? m.source[0] : m.target[0];
                const auto& pair = fwd ? m.target : m.source;
                if (!split_legal(single, pair[0], pair[1], m.cost))
                    fail(tag + "split pieces or cost do not match T(a+b,c) -> T(a,c), T(b,c)");
                break;
            }
            case MoveKind::Prop1Swap:
                if (m.source.size() != 1 || m.target.size() != 1)
                    fail(tag + "swap move must touch exactly one link");
                else if (!swap_legal(m.source[0], m.target[0], m.cost))
                    fail(tag + "pair does not match T(ab,c) <-> T(a,bc) with cost (b-1)|c-a|");
                break;
        }
        sum += m.cost;
    }
    if (state != std::multiset<TorusLink>{plan.end})
        fail("final state is not the declared end link");
    if (sum != plan.total_cost)
        fail("total_cost differs from the sum of move costs");
    const long long gap = chi_gap(plan.start, plan.end);
    if (plan.total_cost < gap) fail("total cost below the Thom lower bound");
    if (plan.start.is_knot() && plan.end.is_knot() &&
        (plan.total_cost - gap) % 2 != 0)
        fail("knot-to-knot cost parity violated");

    if (diagnostics) *diagnostics = local;
    return local.empty();
}

std::optional<long long> rectangle_edge(const TorusLink& a, const TorusLink& b) {
    if (rect_legal(a, b) || rect_legal(b, a)) return chi_gap(a, b);
    return std::nullopt;
}

std::string plan_to_json(const CobordismPlan& plan) {
    nlohmann::json doc;
    doc["schema_version"] = 1;
    auto link_json = [](const TorusLink& l) {
        return nlohmann::json{{"p", l.p()}, {"q", l.q()}};
    };
    doc["start"] = link_json(plan.start);
    doc["end"] = link_json(plan.end);
    doc["total_cost"] = plan.total_cost;
    doc["exhaustive"] = plan.exhaustive;
    nlohmann::json moves = nlohmann::json::array();
    for (const auto& m : plan.moves) {
        nlohmann::json src = nlohmann::json::array();
        for (const auto& l : m.source) src.push_back(link_json(l));
        nlohmann::json dst = nlohmann::json::array();
        for (const auto& l : m.target) dst.push_back(link_json(l));
        moves.push_back({{"kind", to_string(m.kind)},
                         {"source", src},
                         {"target", dst},
                         {"cost", m.cost}});
    }
    doc["moves"] = std::move(moves);
    return doc.dump();
}

}  // namespace torus
