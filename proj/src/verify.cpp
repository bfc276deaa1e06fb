#include "torus/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

#include "torus/bounds.hpp"
#include "torus/planner.hpp"
#include "torus/seifert.hpp"
#include "torus/signature.hpp"

namespace torus {

namespace {

using Check = std::function<std::optional<std::string>(size_t)>;

struct ScanOutcome {
    long long checked = 0;
    std::vector<std::string> violations;
};

ScanOutcome scan_indices(size_t count, int jobs, const Check& check) {
    if (jobs <= 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    const size_t chunk = (count + jobs - 1) / std::max<size_t>(1, jobs);
    std::vector<std::future<std::vector<std::string>>> futures;
    for (size_t begin = 0; begin < count; begin += chunk) {
        const size_t end = std::min(count, begin + chunk);
        futures.push_back(std::async(std::launch::async, [&, begin, end] {
            std::vector<std::string> bad;
            for (size_t i = begin; i < end; ++i)
                if (auto v = check(i)) bad.push_back(*v);
            return bad;
        }));
    }
    ScanOutcome out;
    out.checked = static_cast<long long>(count);
    for (auto& f : futures) {
        auto bad = f.get();
        out.violations.insert(out.violations.end(), bad.begin(), bad.end());
    }
    return out;
}

std::string tuple_str(std::initializer_list<long long> vals) {
    std::ostringstream out;
    out << '(';
    bool first = true;
    for (long long v : vals) {
        if (!first) out << ',';
        out << v;
        first = false;
    }
    out << ')';
    return out.str();
}

// ---- claim runners ----------------------------------------------------

ScanOutcome glm_claim(long long qmax, int jobs, int parity) {
    std::vector<std::pair<long long, long long>> cases;
    for (long long p = 2; p <= 10; ++p)
        if (p % 2 == parity % 2)
            for (long long q = 1; q <= qmax; ++q) cases.emplace_back(p, q);
    return scan_indices(cases.size(), jobs, [&](size_t i) -> std::optional<std::string> {
        auto [p, q] = cases[i];
        if (glm_signature(p, q) != classical_signature(TorusLink(p, q)))
            return tuple_str({p, q});
        return std::nullopt;
    });
}

ScanOutcome lemma1_claim(long long qmax, int jobs, int parity) {
    const long long pmax = parity % 2 ? 11 : 12;
    std::vector<std::pair<long long, long long>> cases;
    for (long long p = 2; p <= pmax; ++p)
        if (p % 2 == parity % 2)
            for (long long q = 1; q <= qmax; ++q) cases.emplace_back(p, q);
    return scan_indices(cases.size(), jobs, [&](size_t i) -> std::optional<std::string> {
        auto [p, q] = cases[i];
        // |sigma| tracks the limit slope within the defect p: the slope is
        // (p^2-1)/(2p) for odd p and p/2 for even p, so the linear term is
        // pq/2 - q/(2p) resp. pq/2.
        const Rat s(-classical_signature(TorusLink(p, q)));
        Rat expected = Rat(p * q, 2);
        if (p % 2 == 1) expected -= Rat(q, 2 * p);
        Rat err = s - expected;
        if (err < 0) err = -err;
        if (err > p) return tuple_str({p, q});
        return std::nullopt;
    });
}

ScanOutcome quasimorphism_claim(long long nmax, int jobs) {
    std::vector<std::tuple<long long, long long, long long>> cases;
    std::map<long long, std::vector<long long>> sig;
    for (long long p = 2; p <= 8; ++p) {
        auto& row = sig[p];
        row.assign(static_cast<size_t>(2 * nmax + 1), 0);
        for (long long k = 1; k <= 2 * nmax; ++k)
            row[k] = classical_signature(TorusLink(p, k));
        for (long long m = 1; m <= nmax; ++m)
            for (long long n = m; n <= nmax; ++n) cases.emplace_back(p, m, n);
    }
    return scan_indices(cases.size(), jobs, [&](size_t i) -> std::optional<std::string> {
        auto [p, m, n] = cases[i];
        const auto& row = sig.at(p);
        if (std::llabs(row[m + n] - row[m] - row[n]) > p)
            return tuple_str({p, m, n});
        return std::nullopt;
    });
}

ScanOutcome theorem2_claim(long long pmax, int jobs) {
    std::vector<TorusLink> links;
    for (long long p = 1; p <= pmax; ++p)
        for (long long q = p; q <= pmax; ++q) links.emplace_back(p, q);
    std::vector<std::pair<size_t, size_t>> cases;
    for (size_t i = 0; i < links.size(); ++i)
        for (size_t j = i; j < links.size(); ++j) cases.emplace_back(i, j);
    return scan_indices(cases.size(), jobs, [&](size_t i) -> std::optional<std::string> {
        const TorusLink& K = links[cases[i].first];
        const TorusLink& L = links[cases[i].second];
        const auto plan = theorem2_upper(K.p(), K.q(), L.p(), L.q());
        const long long f = plan.total_cost - delta_chi(K, L);
        const long long budget = 2 * (K.p() + K.q() + L.p() + L.q());
        if (f < 0 || f > budget || !validate_plan(plan))
            return tuple_str({K.p(), K.q(), L.p(), L.q()});
        return std::nullopt;
    });
}

ScanOutcome prop1_claim(long long maxv, int jobs) {
    std::vector<std::tuple<long long, long long, long long>> cases;
    for (long long a = 1; a <= maxv; ++a)
        for (long long b = 1; b <= maxv; ++b)
            for (long long c = 1; c <= maxv; ++c) cases.emplace_back(a, b, c);
    return scan_indices(cases.size(), jobs, [&](size_t i) -> std::optional<std::string> {
        auto [a, b, c] = cases[i];
        const TorusLink K(a * b, c), L(a, b * c);
        const long long expected = (b - 1) * std::llabs(c - a);
        if (expected != delta_chi(K, L)) return tuple_str({a, b, c});
        const auto plan = best_upper(K.p(), K.q(), L.p(), L.q(), 0);
        if (plan.total_cost != expected || !validate_plan(plan))
            return tuple_str({a, b, c});
        return std::nullopt;
    });
}

ScanOutcome remark1_claim(long long maxv, int jobs) {
    std::vector<std::tuple<long long, long long, long long>> cases;
    for (long long a = 1; a <= maxv; ++a)
        for (long long b = 1; b <= maxv; ++b)
            for (long long c = 1; c <= maxv; ++c) cases.emplace_back(a, b, c);
    return scan_indices(cases.size(), jobs, [&](size_t i) -> std::optional<std::string> {
        auto [a, b, c] = cases[i];
        const long long lhs =
            std::llabs(TorusLink(a * b, c).chi() - TorusLink(a, b * c).chi());
        if (lhs != std::llabs(a * b + c - a - b * c)) return tuple_str({a, b, c});
        return std::nullopt;
    });
}

ScanOutcome family_a_claim(long long nmax, int jobs) {
    std::vector<long long> cases;
    for (long long n = 4; n <= nmax; ++n) cases.push_back(n);
    return scan_indices(cases.size(), jobs, [&](size_t i) -> std::optional<std::string> {
        const long long n = cases[i];
        const long long gap = std::llabs(classical_signature(TorusLink(2, n * n + 1)) -
                                         classical_signature(TorusLink(n + 1, n + 1)));
        // n^2/2 up to a linear error; the gap equals n^2/2 - n at even n,
        // so that is the sharp checkable form.
        if (Rat(gap) < Rat(n * n - 2 * n, 2)) return tuple_str({n});
        return std::nullopt;
    });
}

ScanOutcome family_b_claim(long long nmax, int jobs) {
    std::vector<long long> cases;
    for (long long n = 1; n <= nmax; ++n) cases.push_back(n);
    return scan_indices(cases.size(), jobs, [&](size_t i) -> std::optional<std::string> {
        const long long n = cases[i];
        if (classical_signature(TorusLink(6 * n, 12 * n + 1)) != -36 * n * n)
            return tuple_str({n});
        if (classical_signature(TorusLink(6 * n + 1, 12 * n - 1)) !=
            -36 * n * n - 4 * n)
            return tuple_str({n});
        return std::nullopt;
    });
}

ScanOutcome first_jump_claim(long long pmax, int jobs) {
    // Coprime pairs only: for gcd g > 1 the signature already starts at
    // 1 - g next to zero and the first jump lands at a multiple of 1/pq.
    std::vector<std::pair<long long, long long>> cases;
    for (long long p = 2; p <= pmax; ++p)
        for (long long q = p; q <= pmax; ++q)
            if (std::gcd(p, q) == 1) cases.emplace_back(p, q);
    return scan_indices(cases.size(), jobs, [&](size_t i) -> std::optional<std::string> {
        auto [p, q] = cases[i];
        const auto prof = profile(TorusLink(p, q));
        if (prof->breakpoints.empty() || prof->interval_values[0] != 0 ||
            prof->breakpoints.front() != Rat(1, p * q))
            return tuple_str({p, q});
        return std::nullopt;
    });
}

ScanOutcome profile_symmetry_claim(long long pmax, int jobs) {
    std::vector<std::pair<long long, long long>> cases;
    for (long long p = 1; p <= pmax; ++p)
        for (long long q = p; q <= pmax; ++q) cases.emplace_back(p, q);
    return scan_indices(cases.size(), jobs, [&](size_t i) -> std::optional<std::string> {
        auto [p, q] = cases[i];
        const auto prof = profile(TorusLink(p, q));
        const size_t n = prof->breakpoints.size();
        for (size_t k = 0; k < n; ++k) {
            if (prof->breakpoints[k] != Rat(1) - prof->breakpoints[n - 1 - k])
                return tuple_str({p, q});
            if (prof->breakpoint_values[k] != prof->breakpoint_values[n - 1 - k])
                return tuple_str({p, q});
            if (prof->interval_values[k] != prof->interval_values[n - k])
                return tuple_str({p, q});
        }
        return std::nullopt;
    });
}

ScanOutcome oracle_claim(long long pmax, int jobs) {
    pmax = std::min<long long>(pmax, 8);
    std::vector<std::tuple<long long, long long, long long>> cases;
    for (long long p = 2; p <= pmax; ++p)
        for (long long q = p; q <= pmax; ++q)
            for (long long k = 1; k <= 59; ++k) cases.emplace_back(p, q, k);
    std::map<std::pair<long long, long long>, SeifertMatrix> matrices;
    for (long long p = 2; p <= pmax; ++p)
        for (long long q = p; q <= pmax; ++q)
            matrices.emplace(std::make_pair(p, q), seifert_matrix_torus(p, q));
    return scan_indices(cases.size(), jobs, [&](size_t i) -> std::optional<std::string> {
        auto [p, q, k] = cases[i];
        const TorusLink link(p, q);
        const Theta theta(k, 60);
        // Skip every degenerate theta: the form has a kernel whenever some
        // lattice term is integral, even where jumps cancel and the profile
        // records no breakpoint.
        for (long long x = 1; x <= q - 1; ++x)
            for (long long y = 1; y <= p - 1; ++y)
                if (epsilon(theta, x, y, link) == 0) return std::nullopt;
        try {
            if (oracle_signature(matrices.at({p, q}), theta) !=
                signature_at(link, theta))
                return tuple_str({p, q, k}) + " disagreement";
        } catch (const EvaluationRejected&) {
            return tuple_str({p, q, k}) + " rejected off-breakpoint";
        }
        return std::nullopt;
    });
}

ScanOutcome slope_claim(long long pmax, int jobs) {
    std::vector<std::tuple<long long, long long, long long>> cases;
    for (long long p = 2; p <= pmax; ++p)
        for (long long n : {50, 100, 200})
            for (long long j = 0; j < (p + 1) / 2; ++j) cases.emplace_back(p, n, j);
    return scan_indices(cases.size(), jobs, [&](size_t i) -> std::optional<std::string> {
        auto [p, n, j] = cases[i];
        const auto prof = profile(TorusLink(p, n));
        const Rat delta(1, 2 * n);
        const Rat t1 = Rat(j, p) + delta;
        const Rat t2 = Rat(j + 1, p) - delta;
        // Secant increment per length-1/p segment, normalized by n.
        const Rat emp = Rat(prof->evaluate(t2) - prof->evaluate(t1)) /
                        (Rat(n) * Rat(p) * (t2 - t1));
        Rat err = emp - slope_sequence(p)[j];
        if (err < 0) err = -err;
        if (err > Rat(4 * p, n)) return tuple_str({p, n, j});
        return std::nullopt;
    });
}

ScanOutcome ratio_claim(long long pmax, int jobs) {
    const long long N = 400;
    std::vector<long long> cases;
    for (long long p = 2; p <= pmax; ++p) cases.push_back(p);
    return scan_indices(cases.size(), jobs, [&](size_t i) -> std::optional<std::string> {
        const long long p = cases[i];
        const long long chi_abs = p * N - p - N;
        const Rat ratio(-classical_signature(TorusLink(p, N)), chi_abs);
        Rat err = ratio - sigma_chi_limit(p);
        if (err < 0) err = -err;
        // Deviation bound implied by the quasimorphism defect.
        const Rat tol = (p % 2 == 1) ? Rat(2 * N + 3 * p * p + p, 2 * p * chi_abs)
                                     : Rat(3 * p * p, 2 * (p - 1) * chi_abs);
        if (err > tol) return tuple_str({p});
        return std::nullopt;
    });
}

struct ClaimSpec {
    long long default_max;
    std::string range_fmt;  // uses {} for the bound
    std::function<ScanOutcome(long long, int)> run;
};

const std::map<std::string, ClaimSpec>& registry() {
    static const std::map<std::string, ClaimSpec> reg = {
        {"glm-odd", {60, "odd p <= 10, q <= {}",
                     [](long long m, int j) { return glm_claim(m, j, 1); }}},
        {"glm-even", {60, "even p <= 10, q <= {}",
                      [](long long m, int j) { return glm_claim(m, j, 0); }}},
        {"lemma1-odd", {200, "odd p <= 11, q <= {}",
                        [](long long m, int j) { return lemma1_claim(m, j, 1); }}},
        {"lemma1-even", {200, "even p <= 12, q <= {}",
                         [](long long m, int j) { return lemma1_claim(m, j, 0); }}},
        {"quasimorphism-defect", {40, "p <= 8, m <= n <= {}", quasimorphism_claim}},
        {"theorem2-bound", {30, "all parameters <= {}", theorem2_claim}},
        {"prop1-exactness", {10, "a,b,c <= {}", prop1_claim}},
        {"remark1-identity", {20, "a,b,c <= {}", remark1_claim}},
        {"section4-family-a", {12, "4 <= n <= {}", family_a_claim}},
        {"section4-family-b", {6, "n <= {}", family_b_claim}},
        {"first-jump", {20, "coprime 2 <= p <= q <= {}", first_jump_claim}},
        {"profile-symmetry", {12, "p <= q <= {}", profile_symmetry_claim}},
        {"oracle-agreement", {8, "2 <= p <= q <= {}, theta = k/60", oracle_claim}},
        {"slope-limits", {6, "p <= {}, n in {50,100,200}", slope_claim}},
        {"ratio-limits", {10, "2 <= p <= {}, q = 400", ratio_claim}},
    };
    return reg;
}

std::string format_range(const std::string& fmt, long long bound) {
    std::string out = fmt;
    const auto pos = out.find("{}");
    if (pos != std::string::npos) out.replace(pos, 2, std::to_string(bound));
    return out;
}

}  // namespace

std::vector<std::string> list_claims() {
    std::vector<std::string> names;
    for (const auto& [name, spec] : registry()) names.push_back(name);
    return names;
}

ScanResult run_claim(const std::string& claim_id, long long max, int jobs) {
    const auto it = registry().find(claim_id);
    if (it == registry().end())
        throw std::invalid_argument("unknown claim: " + claim_id);
    const long long bound = max > 0 ? max : it->second.default_max;
    const auto start = std::chrono::steady_clock::now();
    ScanOutcome outcome = it->second.run(bound, jobs);
    const auto stop = std::chrono::steady_clock::now();
    ScanResult result;
    result.claim_id = claim_id;
    result.range = format_range(it->second.range_fmt, bound);
    result.checked = outcome.checked;
    result.violations = std::move(outcome.violations);
    result.elapsed_seconds = std::chrono::duration<double>(stop - start).count();
    return result;
}

}  // namespace torus
