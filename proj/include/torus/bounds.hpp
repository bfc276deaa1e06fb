#pragma once

#include <optional>
#include <string>
#include <utility>

#include "torus/planner.hpp"
#include "torus/signature.hpp"

namespace torus {

/// Lower/upper bound summary for the cobordism distance of a pair of torus
/// links. tau = max(delta_chi, delta_sigma_sup); f_interval brackets the
/// correction term d_chi - delta_chi.
struct BoundReport {
    BoundReport(TorusLink f, TorusLink s)
        : first(f), second(s), plan{f, s, {}, 0} {}

    TorusLink first;
    TorusLink second;
    long long delta_chi = 0;
    long long delta_sigma_sup = 0;
    long long tau = 0;
    std::optional<Theta> witness_theta;
    long long upper = 0;
    CobordismPlan plan;
    std::pair<long long, long long> f_interval{0, 0};
    std::optional<Rat> gamma_ratio;
    /// Multi-component caveat: the bound chain relies on the components
    /// being positively linked, which holds for torus links.
    std::string note;
};

long long delta_chi(const TorusLink& K, const TorusLink& L);

/// Supremum of |sigma_theta(K) - sigma_theta(L)| over theta in (0,1),
/// exact: both profiles are constant on the open intervals of the merged
/// breakpoint partition and materialized at the breakpoints themselves.
/// The witness is the smallest theta attaining the supremum.
std::pair<long long, Theta> delta_sigma_sup(const TorusLink& K, const TorusLink& L);

long long tau(const TorusLink& K, const TorusLink& L);

BoundReport report(long long a, long long b, long long c, long long d,
                   long long budget);

std::string report_to_json(const BoundReport& report);

}  // namespace torus
