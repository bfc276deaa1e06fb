#pragma once

#include <memory>
#include <string>
#include <vector>

#include "torus/link.hpp"
#include "torus/theta.hpp"

namespace torus {

/// Sorted multiset of the lattice values s = x/q + y/p, 1 <= x <= q-1,
/// 1 <= y <= p-1. All of (0,2), symmetric under s -> 2-s.
struct LatticeSpectrum {
    TorusLink link;
    std::vector<Rat> values;  // ascending

    static LatticeSpectrum compute(const TorusLink& link);
};

/// The Levine-Tristram signature of a torus link as an exact step function
/// on (0,1). interval_values has one more entry than breakpoints; the
/// leading interval (0, breakpoints[0]) carries value 1 - gcd(p,q), which
/// is 0 exactly for knots.
/// breakpoint_values holds the value exactly at each breakpoint, where
/// zero terms of the lattice sum may occur.
struct SignatureProfile {
    TorusLink link;
    std::vector<Rat> breakpoints;            // ascending, denominators divide pq
    std::vector<long long> interval_values;  // size breakpoints.size() + 1
    std::vector<long long> breakpoint_values;

    /// Value of the step function at any theta in (0,1).
    long long evaluate(const Rat& theta) const;

    long long min_value() const;
};

/// Sign of one lattice term of the Brieskorn sum: classifies
/// theta + x/q + y/p mod 2 against the windows (0,1), (1,2) and the
/// integers, by integer comparison on a common denominator.
int epsilon(const Theta& theta, long long x, long long y, const TorusLink& link);

/// sigma_omega(T(p,q)) at omega = exp(2*pi*i*theta): direct sum of the
/// (p-1)(q-1) lattice terms.
long long signature_at(const TorusLink& link, const Theta& theta);

/// Classical signature, omega = -1 (theta = 1/2).
long long classical_signature(const TorusLink& link);

/// sigma(T(p,q)) via the Gordon-Litherland-Murasugi recursions:
/// sigma(T(p,q+2p)) = sigma(T(p,q)) - p^2 + 1 for odd p, - p^2 for even p,
/// reduced to a base case q <= 2p evaluated by the lattice sum.
long long glm_signature(long long p, long long q);

/// Asymptotic per-n slopes of theta -> sigma(T(p,n)) on the segments
/// (j/p, (j+1)/p) covering (0, 1/2]: -2(p-1-2j)/p.
std::vector<Rat> slope_sequence(long long p);

/// lim sigma(T(p,n))/chi(T(p,n)): (p+1)/2p for odd p, p/(2(p-1)) for even p.
Rat sigma_chi_limit(long long p);

/// Full step function of the link, via the sorted lattice spectrum and
/// order statistics (one binary search per candidate breakpoint instead of
/// re-summing the lattice). Results are cached per normalized link; the
/// cache has get-or-compute semantics and is safe for concurrent use.
/// When TORUS_CACHE_DIR is set, profiles persist as textual files.
std::shared_ptr<const SignatureProfile> profile(const TorusLink& link);

/// Computes a profile without touching the cache (test hook).
SignatureProfile compute_profile(const TorusLink& link);

std::string profile_to_csv(const SignatureProfile& profile);
std::string profile_to_json(const SignatureProfile& profile);

}  // namespace torus
