#include <gtest/gtest.h>

#include "parbelos/error.hpp"
#include "parbelos/fuzz.hpp"
#include "parbelos/parabola.hpp"

using namespace parbelos;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }
Point pt(Rational x, Rational y) { return {std::move(x), std::move(y)}; }

// Outer parabola of cusps (0,0), (1,0), (4,0), opening toward +y.
const Parabola kOuter(pt(2, 0), Line(0, 1, 2));
const Parabola kInner1(pt(q(1, 2), 0), Line(0, 2, 1));

}  // namespace

TEST(ParabolaFromLatusRectum, Examples) {
    EXPECT_EQ(parabola_from_latus_rectum(pt(0, 0), pt(4, 0), Side::Left), kOuter);
    EXPECT_EQ(parabola_from_latus_rectum(pt(-1, 0), pt(1, 0), Side::Left),
              Parabola(pt(0, 0), Line(0, 1, 1)));
    EXPECT_EQ(parabola_from_latus_rectum(pt(0, 0), pt(1, 0), Side::Left), kInner1);
    // opposite opening
    EXPECT_EQ(parabola_from_latus_rectum(pt(0, 0), pt(4, 0), Side::Right),
              Parabola(pt(2, 0), Line(0, 1, -2)));
    try {
        parabola_from_latus_rectum(pt(1, 1), pt(1, 1), Side::Left);
        FAIL();
    } catch (const GeometryError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::CoincidentPoints);
    }
}

TEST(ParabolaType, FocusOnDirectrixRejected) {
    EXPECT_THROW(Parabola(pt(0, 0), Line(1, 1, 0)), GeometryError);
    EXPECT_THROW(parse_side("up"), GeometryError);
    EXPECT_EQ(parse_side("right"), Side::Right);
}

TEST(CanonicalElements, Examples) {
    const CanonicalElements outer = canonical_elements(kOuter);
    EXPECT_EQ(outer.vertex, pt(2, -1));
    EXPECT_EQ(outer.axis, Line(1, 0, -2));
    EXPECT_EQ(outer.supporting_line, Line(0, 1, 1));
    EXPECT_EQ(outer.latus_endpoints.first(), pt(0, 0));
    EXPECT_EQ(outer.latus_endpoints.second(), pt(4, 0));

    const CanonicalElements standard = canonical_elements(Parabola(pt(0, q(1, 2)), Line(0, 2, 1)));
    EXPECT_EQ(standard.vertex, pt(0, 0));
    EXPECT_EQ(standard.supporting_line, Line(0, 1, 0));

    const CanonicalElements inner = canonical_elements(kInner1);
    EXPECT_EQ(inner.vertex, pt(q(1, 2), q(-1, 4)));
    EXPECT_EQ(inner.supporting_line, Line(0, 4, 1));
}

TEST(CanonicalElements, LatusRoundTripAndInvariants) {
    fuzz::RandomSource rng(31, 0);
    for (int i = 0; i < 300; ++i) {
        const Point e1 = rng.point(100);
        const Point e2 = e1 + rng.direction(100);
        const Parabola g = parabola_from_latus_rectum(e1, e2, rng.side());
        const CanonicalElements ce = canonical_elements(g);
        const Point& a = ce.latus_endpoints.first();
        const Point& b = ce.latus_endpoints.second();
        EXPECT_TRUE((a == e1 && b == e2) || (a == e2 && b == e1));
        EXPECT_EQ(ce.vertex, midpoint(g.focus(), pedal_point(g.focus(), g.directrix())));
        EXPECT_TRUE(are_parallel(ce.supporting_line, g.directrix()));
        EXPECT_TRUE(ce.supporting_line.contains(ce.vertex));
        EXPECT_TRUE(are_perpendicular(ce.axis, g.directrix()));
        EXPECT_TRUE(ce.axis.contains(g.focus()));
        EXPECT_TRUE(contains_point(g, a) && contains_point(g, b));
        EXPECT_TRUE(parallel_through(g.directrix(), g.focus()).contains(a));
    }
}

TEST(ContainsPoint, Examples) {
    EXPECT_TRUE(contains_point(kOuter, pt(1, q(-3, 4))));
    EXPECT_TRUE(contains_point(kOuter, pt(2, -1)));
    EXPECT_FALSE(contains_point(kOuter, pt(2, 0)));
}

TEST(PointAtParameter, Examples) {
    EXPECT_EQ(point_at_parameter(kOuter, 0), pt(2, -1));
    EXPECT_EQ(point_at_parameter(kOuter, -1), pt(1, q(-3, 4)));
    EXPECT_EQ(point_at_parameter(kOuter, 2), pt(4, 0));
}

TEST(PointAtParameter, OnCurveAndInjective) {
    fuzz::RandomSource rng(32, 0);
    for (int i = 0; i < 200; ++i) {
        const Parabola g = rng.parabola(100);
        const auto ts = rng.distinct(2, 100);
        const Point a = point_at_parameter(g, ts[0]);
        EXPECT_TRUE(contains_point(g, a));
        EXPECT_NE(a, point_at_parameter(g, ts[1]));
    }
}

TEST(TangentAt, Examples) {
    EXPECT_EQ(tangent_at(kOuter, pt(0, 0)), Line(1, 1, 0));
    EXPECT_EQ(tangent_at(kOuter, pt(2, -1)), Line(0, 1, 1));
    EXPECT_EQ(tangent_at(kOuter, pt(4, 0)), Line(1, -1, -4));
    try {
        tangent_at(kOuter, pt(2, 0));
        FAIL();
    } catch (const GeometryError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::PointNotOnParabola);
    }
}

TEST(IsTangent, Examples) {
    EXPECT_TRUE(is_tangent(kOuter, Line(2, 4, 1)));
    EXPECT_TRUE(is_tangent(kOuter, Line(0, 1, 1)));
    EXPECT_FALSE(is_tangent(kOuter, Line(0, 1, 0)));
}

TEST(IsTangent, TangentsPassSecantsFail) {
    fuzz::RandomSource rng(33, 0);
    for (int i = 0; i < 300; ++i) {
        const Parabola g = rng.parabola(1000);
        const auto ts = rng.distinct(2, 1000);
        const Point a = point_at_parameter(g, ts[0]);
        const Point b = point_at_parameter(g, ts[1]);
        const Line t = tangent_at(g, a);
        EXPECT_TRUE(t.contains(a));
        EXPECT_TRUE(is_tangent(g, t));
        EXPECT_FALSE(is_tangent(g, line_through(a, b)));
    }
}

TEST(LatusEndpoints, TangentMakesQuarterTurnHalfAngle) {
    fuzz::RandomSource rng(34, 0);
    for (int i = 0; i < 300; ++i) {
        const Point e1 = rng.point(1000);
        const Point e2 = e1 + rng.direction(1000);
        const Parabola g = parabola_from_latus_rectum(e1, e2, rng.side());
        const Vec2 u = e2 - e1;
        for (const Point& e : {e1, e2}) {
            const Vec2 d = tangent_at(g, e).direction();
            EXPECT_EQ(dot(d, u) * dot(d, u) * 2, norm_sq(d) * norm_sq(u));
        }
        EXPECT_TRUE(are_perpendicular(tangent_at(g, e1), tangent_at(g, e2)));
    }
}
