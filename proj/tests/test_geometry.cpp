#include <gtest/gtest.h>

#include "parbelos/error.hpp"
#include "parbelos/fuzz.hpp"
#include "parbelos/geometry.hpp"

using namespace parbelos;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }
Point pt(Rational x, Rational y) { return {std::move(x), std::move(y)}; }

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const GeometryError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no GeometryError thrown";
    return ErrorKind::EmptyScene;
}

// Circumcircle of C2, T1, T2 for cusps (0,0), (1,0), (4,0).
const Circle kRectangleCircle(pt(q(3, 2), q(-1)), q(5, 4));

}  // namespace

TEST(LineCanonical, EqualLinesCompareEqual) {
    EXPECT_EQ(Line(2, 4, 1), Line(q(-1), q(-2), q(-1, 2)));
    EXPECT_EQ(Line(q(1, 2), q(1), q(1, 4)), Line(2, 4, 1));
    const Line l(0, -3, 6);
    EXPECT_EQ(l.a(), 0);
    EXPECT_EQ(l.b(), 1);
    EXPECT_EQ(l.c(), -2);
    EXPECT_EQ(kind_of([] { Line(0, 0, 1); }), ErrorKind::DegenerateLine);
}

TEST(LineThrough, Examples) {
    EXPECT_EQ(line_through(pt(0, 0), pt(1, 1)), Line(1, -1, 0));
    EXPECT_EQ(line_through(pt(0, 0), pt(4, 0)), Line(0, 1, 0));
    const Line diag = line_through(pt(q(1, 2), q(-1, 2)), pt(q(5, 2), q(-3, 2)));
    EXPECT_EQ(diag, Line(2, 4, 1));
    EXPECT_TRUE(diag.contains(pt(q(1, 2), q(-1, 2))));
    EXPECT_TRUE(diag.contains(pt(q(5, 2), q(-3, 2))));
    EXPECT_EQ(kind_of([] { line_through(pt(1, 2), pt(1, 2)); }), ErrorKind::CoincidentPoints);
}

TEST(PerpendicularThrough, Examples) {
    EXPECT_EQ(perpendicular_through(Line(0, 1, 0), pt(1, 0)), Line(1, 0, -1));
    EXPECT_EQ(perpendicular_through(Line(1, -1, 0), pt(0, 0)), Line(1, 1, 0));
    EXPECT_EQ(perpendicular_through(Line(0, 1, 0), pt(2, -2)), Line(1, 0, -2));
}

TEST(PedalPoint, Examples) {
    EXPECT_EQ(pedal_point(pt(2, 0), Line(1, 1, 0)), pt(1, -1));
    EXPECT_EQ(pedal_point(pt(2, 0), Line(2, 4, 1)), pt(q(3, 2), -1));
    EXPECT_EQ(pedal_point(pt(5, 7), Line(0, 1, -7)), pt(5, 7));
}

TEST(PedalPoint, LiesOnLineAndIsOrthogonal) {
    fuzz::RandomSource rng(21, 0);
    for (int i = 0; i < 300; ++i) {
        const Vec2 n = rng.direction(100);
        const Line l(n.x, n.y, rng.rational(100));
        const Point p = rng.point(100);
        const Point f = pedal_point(p, l);
        EXPECT_TRUE(l.contains(f));
        EXPECT_TRUE(dot(p - f, l.direction()).is_zero());
        EXPECT_EQ(f == p, l.contains(p));
    }
}

TEST(IsCollinear, Examples) {
    EXPECT_TRUE(is_collinear(pt(1, -1), pt(3, -1), pt(q(3, 2), -1)));
    EXPECT_FALSE(is_collinear(pt(0, 0), pt(1, 0), pt(0, 1)));
    EXPECT_TRUE(is_collinear(pt(5, 5), pt(5, 5), pt(9, 2)));
}

TEST(Circumcircle, Examples) {
    const Circle k = circumcircle(pt(1, 0), pt(q(1, 2), q(-1, 2)), pt(2, -2));
    EXPECT_EQ(k.center(), pt(q(3, 2), -1));
    EXPECT_EQ(k.radius_sq(), q(5, 4));
    const Circle unit = circumcircle(pt(1, 0), pt(-1, 0), pt(0, 1));
    EXPECT_EQ(unit.center(), pt(0, 0));
    EXPECT_EQ(unit.radius_sq(), q(1));
    EXPECT_EQ(kind_of([] { circumcircle(pt(0, 0), pt(1, 1), pt(2, 2)); }),
              ErrorKind::DegenerateTriangle);
    EXPECT_EQ(kind_of([] { circumcircle(pt(0, 0), pt(0, 0), pt(2, 3)); }),
              ErrorKind::DegenerateTriangle);
}

TEST(Circumcircle, PassesThroughAllVertices) {
    fuzz::RandomSource rng(22, 0);
    for (int i = 0; i < 300; ++i) {
        const Point a = rng.point(1000), b = rng.point(1000), c = rng.point(1000);
        if (is_collinear(a, b, c)) continue;
        const Circle k = circumcircle(a, b, c);
        EXPECT_TRUE(on_circle(k, a) && on_circle(k, b) && on_circle(k, c));
    }
}

TEST(OnCircle, Examples) {
    EXPECT_TRUE(on_circle(kRectangleCircle, pt(2, 0)));
    EXPECT_TRUE(on_circle(kRectangleCircle, pt(1, -2)));
    EXPECT_FALSE(on_circle(kRectangleCircle, pt(0, 0)));
}

TEST(CircleType, RejectsNonPositiveRadius) {
    EXPECT_EQ(kind_of([] { Circle(pt(0, 0), 0); }), ErrorKind::DegenerateCircle);
    EXPECT_EQ(kind_of([] { Circle(pt(0, 0), -1); }), ErrorKind::DegenerateCircle);
    EXPECT_EQ(kind_of([] { Segment(pt(1, 1), pt(1, 1)); }), ErrorKind::CoincidentPoints);
}

TEST(SecondIntersection, Examples) {
    EXPECT_EQ(second_intersection(Line(1, -1, -1), kRectangleCircle, pt(1, 0)),
              pt(q(1, 2), q(-1, 2)));
    EXPECT_EQ(second_intersection(Line(1, 1, 0), kRectangleCircle, pt(2, -2)),
              pt(q(1, 2), q(-1, 2)));
    // tangent to the unit circle at (1, 0)
    const Circle unit(pt(0, 0), 1);
    EXPECT_EQ(second_intersection(Line(1, 0, -1), unit, pt(1, 0)), pt(1, 0));
    EXPECT_EQ(kind_of([&] { second_intersection(Line(1, 0, -1), unit, pt(0, 1)); }),
              ErrorKind::PointNotIncident);
}

TEST(SecondIntersection, IsAnInvolutionOnRandomChords) {
    fuzz::RandomSource rng(23, 0);
    for (int i = 0; i < 300; ++i) {
        const Point a = rng.point(100), b = rng.point(100), c = rng.point(100);
        if (is_collinear(a, b, c)) continue;
        const Circle k = circumcircle(a, b, c);
        const Vec2 d = rng.direction(100);
        const Line l = line_through(a, a + d);
        const Point other = second_intersection(l, k, a);
        EXPECT_TRUE(l.contains(other));
        EXPECT_TRUE(on_circle(k, other));
        EXPECT_EQ(second_intersection(l, k, other), a);
    }
}

TEST(CirclePoint, Examples) {
    EXPECT_EQ(circle_point(kRectangleCircle, pt(1, 0), q(1)), pt(q(1, 2), q(-1, 2)));
    const Circle unit(pt(0, 0), 1);
    EXPECT_EQ(circle_point(unit, pt(1, 0), std::nullopt), pt(1, 0));
    EXPECT_EQ(circle_point(unit, pt(-1, 0), q(1, 2)), pt(q(3, 5), q(4, 5)));
    EXPECT_EQ(kind_of([&] { circle_point(unit, pt(0, 0), q(1)); }), ErrorKind::PointNotIncident);
}

TEST(CirclePoint, MatchesStereographicFormula) {
    // From (-1, 0) the slope-t chord meets the unit circle at
    // ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)).
    const Circle unit(pt(0, 0), 1);
    fuzz::RandomSource rng(24, 0);
    for (int i = 0; i < 200; ++i) {
        const Rational t = rng.rational(100);
        const Rational den = 1 + t * t;
        EXPECT_EQ(circle_point(unit, pt(-1, 0), t), pt((1 - t * t) / den, 2 * t / den));
    }
}

TEST(CircleThroughPoints, Examples) {
    const Circle k = circle_through_points(pt(2, 0), pt(2, -2), q(-1, 2));
    EXPECT_EQ(k, kRectangleCircle);
    const Circle unit = circle_through_points(pt(1, 0), pt(-1, 0), 0);
    EXPECT_EQ(unit, Circle(pt(0, 0), 1));
    EXPECT_EQ(kind_of([] { circle_through_points(pt(1, 1), pt(1, 1), 0); }),
              ErrorKind::CoincidentPoints);
}

TEST(CircleThroughPoints, ContainsBothAndIsInjective) {
    fuzz::RandomSource rng(25, 0);
    for (int i = 0; i < 200; ++i) {
        const Point p = rng.point(100), r = rng.point(100);
        if (p == r) continue;
        const auto ts = rng.distinct(2, 100);
        const Circle k0 = circle_through_points(p, r, ts[0]);
        const Circle k1 = circle_through_points(p, r, ts[1]);
        EXPECT_TRUE(on_circle(k0, p) && on_circle(k0, r));
        EXPECT_NE(k0, k1);
    }
}

TEST(Intersect, ParallelLinesThrow) {
    EXPECT_EQ(intersect(Line(1, 1, 0), Line(1, -1, -1)), pt(q(1, 2), q(-1, 2)));
    EXPECT_EQ(kind_of([] { intersect(Line(1, 1, 0), Line(2, 2, 5)); }), ErrorKind::ParallelLines);
    EXPECT_EQ(kind_of([] { intersect(Line(1, 1, 0), Line(1, 1, 0)); }), ErrorKind::ParallelLines);
}

TEST(PrimitiveDirection, KeepsOrientation) {
    EXPECT_EQ(primitive_direction({q(2), q(0)}), (Vec2{1, 0}));
    EXPECT_EQ(primitive_direction({q(-1, 2), q(-3, 4)}), (Vec2{-2, -3}));
    EXPECT_EQ(kind_of([] { primitive_direction({0, 0}); }), ErrorKind::DegenerateLine);
}
