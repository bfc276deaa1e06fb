#pragma once

#include <stdexcept>
#include <string>

#include "torus/numeric.hpp"

namespace torus {

/// Exact rational theta in (0,1) parameterizing omega = exp(2*pi*i*theta)
/// on the unit circle. All classification downstream is exact integer
/// arithmetic; no floating point touches a comparison.
class Theta {
public:
    explicit Theta(Rat value) : value_(std::move(value)) {
        if (value_ <= 0 || value_ >= 1)
            throw std::domain_error("theta must satisfy 0 < theta < 1");
    }

    Theta(const Int& num, const Int& den) : Theta(Rat(num, den)) {}
    Theta(long long num, long long den) : Theta(Rat(num, den)) {}

    const Rat& value() const { return value_; }
    Int numerator() const { return rat_num(value_); }
    Int denominator() const { return rat_den(value_); }

    /// theta -> 1 - theta (complex conjugation of omega).
    Theta conjugate() const { return Theta(Rat(1) - value_); }

    bool operator==(const Theta&) const = default;
    auto operator<=>(const Theta&) const = default;

    std::string str() const { return to_string(value_); }

private:
    Rat value_;
};

}  // namespace torus
