#pragma once

#include <string_view>

#include "parbelos/geometry.hpp"

namespace parbelos {

/// Half-plane selector relative to a directed segment E1 -> E2: Left is the
/// side reached by a counter-clockwise quarter turn of E2 - E1.
enum class Side { Left, Right };

/// "left" / "right"; anything else throws DegenerateSide.
Side parse_side(std::string_view text);
std::string_view side_name(Side side) noexcept;

/// Unit-free normal of the directed segment pointing into `side`.
Vec2 side_normal(const Point& e1, const Point& e2, Side side);

/// Focus-directrix parabola.
class Parabola {
public:
    /// Throws FocusOnDirectrix.
    Parabola(Point focus, Line directrix);

    const Point& focus() const { return focus_; }
    const Line& directrix() const { return directrix_; }

    friend bool operator==(const Parabola&, const Parabola&) = default;

private:
    Point focus_;
    Line directrix_;
};

struct CanonicalElements {
    Point vertex;
    Line axis;
    /// Tangent at the vertex.
    Line supporting_line;
    Segment latus_endpoints;
};

/// Parabola whose latus rectum is E1E2, opening into `side` (the directrix
/// lies in the opposite half-plane at distance |E1E2| / 2). Throws
/// CoincidentPoints.
Parabola parabola_from_latus_rectum(const Point& e1, const Point& e2, Side side);

CanonicalElements canonical_elements(const Parabola& g);

/// Focus-directrix defining property, compared as squared distances.
bool contains_point(const Parabola& g, const Point& p);

/// vertex + t*u + (t^2 / (4*lambda)) * n, where n is the primitive direction
/// from vertex to focus, lambda = (focus - vertex) / n, and u = (n.y, -n.x)
/// runs along the supporting line. Distinct t give distinct points.
Point point_at_parameter(const Parabola& g, const Rational& t);

/// Perpendicular bisector of the focus and the foot of `p` on the directrix.
/// Throws PointNotOnParabola.
Line tangent_at(const Parabola& g, const Point& p);

/// A line is tangent iff the pedal of the focus on it lies on the supporting
/// line. The supporting line itself counts as tangent.
bool is_tangent(const Parabola& g, const Line& line);

std::ostream& operator<<(std::ostream& os, const Parabola& g);

}  // namespace parbelos
