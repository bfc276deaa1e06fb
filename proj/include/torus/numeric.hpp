#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace torus {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const Int& v) { return v.str(); }

/// Renders a rational as "n" or "n/d" (always reduced).
inline std::string to_string(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

/// Parses "n" or "n/d" with exact integer arithmetic. Decimal input is
/// rejected on purpose: the toolkit is exact end-to-end.
inline Rat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (text.empty() || slash == 0 || slash + 1 == text.size())
            throw std::invalid_argument("empty numerator or denominator");
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an exact fraction: '" + text + "'");
    }
}

inline double to_double(const Rat& r) { return static_cast<double>(r); }

}  // namespace torus
