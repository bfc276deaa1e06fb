#include "torus/stable_genus.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "torus/planner.hpp"
#include "torus/signature.hpp"

namespace torus {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

// (x,y) = scale * (X,Y) with X,Y coprime integers and scale > 0.
struct Primitive {
    Int X;
    Int Y;
    Rat scale;
};

Primitive primitive_direction(const Rat& x, const Rat& y) {
    const Int D = lcm(rat_den(x), rat_den(y));
    Int Nx = rat_num(x) * (D / rat_den(x));
    Int Ny = rat_num(y) * (D / rat_den(y));
    Int g = gcd(abs(Nx), abs(Ny));
    if (g == 0) return {0, 0, Rat(1)};
    return {Nx / g, Ny / g, Rat(g, D)};
}

}  // namespace

PairSpanPoint::PairSpanPoint(TorusLink k1, TorusLink k2, Rat px, Rat py)
    : first(k1), second(k2), x(std::move(px)), y(std::move(py)) {
    if (!first.is_knot() || !second.is_knot())
        throw std::domain_error("span basis links must be knots");
}

Rat gst_axis(const TorusLink& knot) { return knot.genus4(); }

Rat norm_upper(const PairSpanPoint& pt, long long budget) {
    const auto [X, Y, scale] = primitive_direction(pt.x, pt.y);
    if (X == 0 && Y == 0) return Rat(0);
    const Int ax = abs(X), ay = abs(Y);
    Rat base;
    if (X * Y >= 0) {
        base = Rat(ax) * gst_axis(pt.first) + Rat(ay) * gst_axis(pt.second);
    } else {
        // min(|X|,|Y|) mixed pairs K # -L, each bounded by the cobordism
        // genus; the leftover copies fall back to the axis value.
        const auto plan = best_upper(pt.first.p(), pt.first.q(),
                                     pt.second.p(), pt.second.q(), budget);
        const Rat pair_genus(plan.total_cost, 2);
        const Int m = std::min(ax, ay);
        base = Rat(m) * pair_genus + Rat(ax - m) * gst_axis(pt.first) +
               Rat(ay - m) * gst_axis(pt.second);
    }
    return scale * base;
}

Rat norm_lower(const PairSpanPoint& pt) {
    const auto pk = profile(pt.first);
    const auto pl = profile(pt.second);

    std::vector<Rat> grid;
    std::merge(pk->breakpoints.begin(), pk->breakpoints.end(),
               pl->breakpoints.begin(), pl->breakpoints.end(),
               std::back_inserter(grid));
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    // |sigma| <= 2*g4 holds away from Alexander-polynomial roots, so the
    // sup runs over interval midpoints only, never the breakpoints.
    Rat best(0);
    Rat prev(0);
    auto consider = [&](const Rat& theta) {
        Rat v = pt.x * pk->evaluate(theta) + pt.y * pl->evaluate(theta);
        if (v < 0) v = -v;
        best = std::max(best, Rat(v / 2));
    };
    for (const Rat& bp : grid) {
        consider((prev + bp) / 2);
        prev = bp;
    }
    consider((prev + Rat(1)) / 2);

    if (pt.x * pt.y >= 0) {
        Rat axis = pt.x * gst_axis(pt.first) + pt.y * gst_axis(pt.second);
        if (axis < 0) axis = -axis;
        best = std::max(best, axis);
    }
    return best;
}

NormBounds norm_bounds(const PairSpanPoint& pt, long long budget) {
    return NormBounds{pt, norm_lower(pt), norm_upper(pt, budget)};
}

std::vector<DirectionBounds> ball_polygon(const TorusLink& k1, const TorusLink& k2,
                                          long long resolution, long long budget) {
    if (resolution < 4)
        throw std::domain_error("ball polygon needs resolution >= 4");
    // Exact rational points of the unit circle via the tangent half-angle
    // map t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)), t in [-1,1), plus mirrors.
    const long long right = (resolution + 1) / 2;
    const long long left = resolution - right;
    std::vector<std::pair<Rat, Rat>> dirs;
    for (long long k = 0; k < right; ++k) {
        const Rat t = Rat(-1) + Rat(2 * k, right);
        const Rat den = 1 + t * t;
        dirs.emplace_back((1 - t * t) / den, 2 * t / den);
    }
    for (long long k = 0; k < left; ++k)
        dirs.emplace_back(-dirs[k].first, -dirs[k].second);

    std::vector<DirectionBounds> rows;
    for (const auto& [dx, dy] : dirs) {
        const PairSpanPoint pt(k1, k2, dx, dy);
        const Rat lo = norm_lower(pt);
        const Rat up = norm_upper(pt, budget);
        DirectionBounds row{dx, dy, Rat(1) / up, std::nullopt};
        if (lo > 0) row.upper_radius = Rat(1) / lo;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string ball_to_csv(const std::vector<DirectionBounds>& rows) {
    std::ostringstream out;
    out << "direction_x,direction_y,lower_radius,upper_radius\n";
    for (const auto& r : rows) {
        out << to_string(r.dir_x) << ',' << to_string(r.dir_y) << ','
            << to_string(r.lower_radius) << ','
            << (r.upper_radius ? to_string(*r.upper_radius) : std::string("inf"))
            << '\n';
    }
    return out.str();
}

std::string ball_to_json(const std::vector<DirectionBounds>& rows) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json row{{"direction_x", to_string(r.dir_x)},
                           {"direction_y", to_string(r.dir_y)},
                           {"lower_radius", to_string(r.lower_radius)}};
        row["upper_radius"] =
            r.upper_radius ? nlohmann::json(to_string(*r.upper_radius))
                           : nlohmann::json(nullptr);
        doc.push_back(std::move(row));
    }
    return doc.dump();
}

}  // namespace torus
