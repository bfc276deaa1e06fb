#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torus/link.hpp"
#include "torus/numeric.hpp"

namespace torus {

/// The element x*K + y*L of the rationalized concordance group, for a basis
/// of two torus knots. Negative coefficients mean mirrors, handled via
/// sigma_theta(-K) = -sigma_theta(K) and chi(-K) = chi(K).
struct PairSpanPoint {
    TorusLink first;
    TorusLink second;
    Rat x;
    Rat y;

    PairSpanPoint(TorusLink k1, TorusLink k2, Rat px, Rat py);
};

/// Stable 4-genus bounds for one point; 0 <= lower <= upper, both
/// positively homogeneous.
struct NormBounds {
    PairSpanPoint point;
    Rat lower;
    Rat upper;
};

/// Radial bounds of the semi-norm unit ball along one exact rational unit
/// direction. upper_radius is absent when the lower bound vanishes.
struct DirectionBounds {
    Rat dir_x;
    Rat dir_y;
    Rat lower_radius;
    std::optional<Rat> upper_radius;
};

/// g_st(T(p,q)) = (p-1)(q-1)/2 for a torus knot (axis points of the span).
Rat gst_axis(const TorusLink& knot);

/// Upper bound: sub-additivity of g4 under connected sum, with opposite-sign
/// coefficient pairs bounded by half the best cobordism plan cost between
/// the basis knots. Extends to rational points by homogeneity.
Rat norm_upper(const PairSpanPoint& point, long long budget);

/// Lower bound: sup of |x*sigma_theta(K) + y*sigma_theta(L)|/2 over the
/// merged non-breakpoint grid, maxed with |x|*g4(K) + |y|*g4(L) when the
/// coefficient signs agree.
Rat norm_lower(const PairSpanPoint& point);

NormBounds norm_bounds(const PairSpanPoint& point, long long budget);

/// Inner/outer polygonal ball data: `resolution` exact rational unit
/// directions with radial bounds 1/upper and 1/lower.
std::vector<DirectionBounds> ball_polygon(const TorusLink& k1, const TorusLink& k2,
                                          long long resolution, long long budget);

std::string ball_to_csv(const std::vector<DirectionBounds>& rows);
std::string ball_to_json(const std::vector<DirectionBounds>& rows);

}  // namespace torus
