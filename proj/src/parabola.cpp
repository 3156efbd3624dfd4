#include "parbelos/parabola.hpp"

#include <string>

#include "parbelos/error.hpp"

namespace parbelos {

namespace {

struct Frame {
    Point vertex;
    Vec2 opening;    // primitive direction vertex -> focus
    Rational scale;  // focus - vertex = scale * opening
};

Frame frame_of(const Parabola& g) {
    const Point foot = pedal_point(g.focus(), g.directrix());
    const Point vertex = midpoint(g.focus(), foot);
    const Vec2 offset = g.focus() - vertex;
    const Vec2 opening = primitive_direction(offset);
    const Rational scale = opening.x.is_zero() ? offset.y / opening.y : offset.x / opening.x;
    return {vertex, opening, scale};
}

}  // namespace

Side parse_side(std::string_view text) {
    if (text == "left") return Side::Left;
    if (text == "right") return Side::Right;
    throw GeometryError(ErrorKind::DegenerateSide,
                        "side must be 'left' or 'right', got '" + std::string(text) + "'");
}

std::string_view side_name(Side side) noexcept { return side == Side::Left ? "left" : "right"; }

Vec2 side_normal(const Point& e1, const Point& e2, Side side) {
    const Vec2 n = rotate_ccw(e2 - e1);
    return side == Side::Left ? n : -n;
}

Parabola::Parabola(Point focus, Line directrix)
    : focus_(std::move(focus)), directrix_(std::move(directrix)) {
    if (directrix_.contains(focus_)) {
        throw GeometryError(ErrorKind::FocusOnDirectrix, "focus lies on the directrix");
    }
}

Parabola parabola_from_latus_rectum(const Point& e1, const Point& e2, Side side) {
    if (e1 == e2) throw GeometryError(ErrorKind::CoincidentPoints, "latus rectum has zero length");
    const Vec2 shift = Rational(-1, 2) * side_normal(e1, e2, side);
    return Parabola(midpoint(e1, e2), line_through(e1 + shift, e2 + shift));
}

CanonicalElements canonical_elements(const Parabola& g) {
    const Frame f = frame_of(g);
    const Vec2 along{f.opening.y, -f.opening.x};
    const Vec2 half_latus = (2 * f.scale) * along;
    return {
        f.vertex,
        line_through(f.vertex, g.focus()),
        parallel_through(g.directrix(), f.vertex),
        Segment(g.focus() - half_latus, g.focus() + half_latus),
    };
}

bool contains_point(const Parabola& g, const Point& p) {
    const Rational offset = g.directrix().eval(p);
    return dist_sq(p, g.focus()) == offset * offset / norm_sq(g.directrix().normal());
}

Point point_at_parameter(const Parabola& g, const Rational& t) {
    const Frame f = frame_of(g);
    const Vec2 along{f.opening.y, -f.opening.x};
    return f.vertex + t * along + (t * t / (4 * f.scale)) * f.opening;
}

Line tangent_at(const Parabola& g, const Point& p) {
    if (!contains_point(g, p)) {
        throw GeometryError(ErrorKind::PointNotOnParabola, "tangent point is not on the parabola");
    }
    return perpendicular_bisector(g.focus(), pedal_point(p, g.directrix()));
}

bool is_tangent(const Parabola& g, const Line& line) {
    const Frame f = frame_of(g);
    const Line supporting = parallel_through(g.directrix(), f.vertex);
    return supporting.contains(pedal_point(g.focus(), line));
}

std::ostream& operator<<(std::ostream& os, const Parabola& g) {
    return os << "parabola(focus=" << g.focus() << ", directrix=" << g.directrix() << ')';
}

}  // namespace parbelos
