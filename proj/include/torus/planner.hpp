#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "torus/link.hpp"

namespace torus {

enum class MoveKind { RectangleSmoothing, Split, Prop1Swap };

std::string to_string(MoveKind kind);

/// One elementary scissor cobordism. source/target hold the links the move
/// touches (one, or two for a split/merge); cost is |delta chi| of the
/// elementary cobordism. Moves are cost-symmetric, so a plan may traverse
/// them in either direction.
struct Move {
    MoveKind kind;
    std::vector<TorusLink> source;
    std::vector<TorusLink> target;
    long long cost = 0;
};

/// An ordered move sequence from start to end. Intermediate states are
/// formal multisets of torus links; untouched components ride along.
struct CobordismPlan {
    TorusLink start;
    TorusLink end;
    std::vector<Move> moves;
    long long total_cost = 0;
    /// False when best_upper had to skip the graph search because the
    /// parameters exceed the budget.
    bool exhaustive = true;
};

/// Crossings smoothed when trimming T(c,d) down to T(a,b) inside the
/// standard diagram: (c-1)(d-a)+(a-1)(c-b) = -ab+cd+a+b-c-d. Requires the
/// embedding condition a <= d, b < c, or the same-braid-index trim a = c,
/// b <= d.
long long rectangle_cost(long long a, long long b, long long c, long long d);

/// Splits the torus braid T(strands, columns) between strands a and a+1:
/// T(a, columns) and T(strands - a, columns), cost = columns smoothings.
std::tuple<TorusLink, TorusLink, long long>
split_move(long long strands, long long columns, long long a);

/// The swap cobordism T(ab,c) <-> T(a,bc) of cost (b-1)|c-a|; this cost is
/// the exact cobordism distance of the pair.
CobordismPlan prop1_plan(long long a, long long b, long long c);

/// Constructive upper bound by induction: rectangle when it embeds, else a
/// pair of splits sharing a cancelled component plus recursion. Total cost
/// is at most |delta chi| + 2(a+b+c+d).
CobordismPlan theorem2_upper(long long a, long long b, long long c, long long d);

/// Composite plan T(a,b) -> T(a,kc) -> T(c,ka) -> T(c,d) where d = ka+r:
/// a rectangle, the swap, and a column trim of cost r(c-1).
/// Requires 2 <= a <= c, a <= b, c <= d.
CobordismPlan theorem1_plan(long long a, long long b, long long c, long long d);

/// Minimum-cost plan among theorem2_upper, theorem1_plan, the swap pattern
/// when the pair matches T(ab,c)/T(a,bc), and a uniform-cost search over
/// single-link states with rectangle and swap edges capped at budget.
CobordismPlan best_upper(long long a, long long b, long long c, long long d,
                         long long budget);

/// Detects whether the pair matches the swap pattern T(ab,c)/T(a,bc) and
/// returns the one-move plan when it does.
std::optional<CobordismPlan> prop1_match(const TorusLink& K, const TorusLink& L);

/// Re-checks move legality and costs, state chaining, the Thom bound and
/// knot parity. Diagnostics, when requested, name each failure.
bool validate_plan(const CobordismPlan& plan,
                   std::vector<std::string>* diagnostics = nullptr);

/// Rectangle edge between two links, direction-free: the smoothing cost,
/// which equals |delta chi|, or nullopt when no orientation embeds.
std::optional<long long> rectangle_edge(const TorusLink& a, const TorusLink& b);

CobordismPlan reverse_plan(const CobordismPlan& plan);

std::string plan_to_json(const CobordismPlan& plan);

}  // namespace torus
