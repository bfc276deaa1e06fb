#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "torus/numeric.hpp"

namespace torus {

/// Canonical torus link T(p,q), stored with p <= q. T(p,q) and T(q,p) are
/// the same link type; all modules consume the normalized form. T(1,q) is
/// the unknot.
class TorusLink {
public:
    // Parameter guard: products up to ~10^6 are the supported working range,
    // and the guard keeps every downstream product inside int64.
    static constexpr long long kMaxParam = 2'000'000;

    TorusLink(long long p, long long q) {
        if (p < 1 || q < 1)
            throw std::domain_error("torus link parameters must be positive");
        if (p > kMaxParam || q > kMaxParam)
            throw std::domain_error("torus link parameter exceeds supported range");
        if (p > q) std::swap(p, q);
        p_ = p;
        q_ = q;
    }

    long long p() const { return p_; }
    long long q() const { return q_; }

    long long component_count() const { return std::gcd(p_, q_); }
    bool is_knot() const { return component_count() == 1; }
    bool is_unknot() const { return p_ == 1; }

    /// Maximal Euler characteristic of a surface in B^4 bounding the link:
    /// -pq + p + q (Thom conjecture).
    long long chi() const { return -p_ * q_ + p_ + q_; }

    /// Smooth 4-genus (p-1)(q-1)/2; knots only.
    Rat genus4() const {
        if (!is_knot())
            throw std::domain_error("genus4 requires a knot (gcd(p,q)=1)");
        return Rat((p_ - 1) * (q_ - 1), 2);
    }

    auto operator<=>(const TorusLink&) const = default;

    std::string str() const {
        return "T(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
    }

private:
    long long p_;
    long long q_;
};

inline TorusLink normalize(long long p, long long q) { return TorusLink(p, q); }

}  // namespace torus
