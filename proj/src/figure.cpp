#include "parbelos/figure.hpp"

#include <functional>

#include "parbelos/error.hpp"

namespace parbelos {

namespace {

// Verification must report verdicts, never throw, even on mutated figures.
bool holds(const std::function<bool()>& predicate) {
    try {
        return predicate();
    } catch (const GeometryError&) {
        return false;
    }
}

bool is_square(const std::array<Point, 4>& r) {
    const Vec2 s0 = r[1] - r[0];
    const Vec2 s1 = r[2] - r[1];
    const Vec2 s2 = r[3] - r[2];
    const Vec2 s3 = r[0] - r[3];
    const Rational len = norm_sq(s0);
    return len.sign() > 0 && norm_sq(s1) == len && norm_sq(s2) == len && norm_sq(s3) == len &&
           dot(s0, s1).is_zero() && dot(s1, s2).is_zero() && dot(s2, s3).is_zero();
}

}  // namespace

ParbelosFigure build_parbelos(const Point& c1, const Point& c2, const Point& c3, Side side) {
    if (!is_collinear(c1, c2, c3)) {
        throw GeometryError(ErrorKind::CuspsNotCollinear, "cusps must lie on one line");
    }
    if (c2 == c1 || c2 == c3 || dot(c2 - c1, c3 - c2).sign() <= 0) {
        throw GeometryError(ErrorKind::CuspNotInterior, "C2 must lie strictly between C1 and C3");
    }

    Parabola inner1 = parabola_from_latus_rectum(c1, c2, side);
    Parabola inner2 = parabola_from_latus_rectum(c2, c3, side);
    Parabola outer = parabola_from_latus_rectum(c1, c3, side);

    Line t_c1 = tangent_at(inner1, c1);
    Line t_c3 = tangent_at(inner2, c3);
    Line t_c2_left = tangent_at(inner1, c2);
    Line t_c2_right = tangent_at(inner2, c2);

    // The latus-endpoint tangents of one parabola are perpendicular, so the
    // C2 tangent of inner1 meets the C1 tangent and is parallel to the C3 one.
    Point t1 = intersect(t_c1, t_c2_left);
    Point t2 = intersect(t_c1, t_c3);
    Point t3 = intersect(t_c3, t_c2_right);

    const Line cusp_line = line_through(c1, c3);
    const Line side_c2 = cusp_line;
    const Line side_t2 = parallel_through(cusp_line, t2);
    const Line side_t1 = perpendicular_through(cusp_line, t1);
    const Line side_t3 = perpendicular_through(cusp_line, t3);
    std::array<Point, 4> square{intersect(side_c2, side_t1), intersect(side_c2, side_t3),
                                intersect(side_t2, side_t3), intersect(side_t2, side_t1)};

    Circle k = circumcircle(c2, t1, t2);
    Point focus = pedal_point(t2, cusp_line);
    Line diagonal = line_through(t1, t3);
    Line bisector = perpendicular_through(cusp_line, c2);
    Point contact = intersect(diagonal, bisector);
    Point h = intersect(bisector, outer.directrix());
    Point a1 = intersect(canonical_elements(inner1).axis, inner2.directrix());
    Point a3 = intersect(canonical_elements(inner2).axis, inner1.directrix());

    return ParbelosFigure{
        .C1 = c1,
        .C2 = c2,
        .C3 = c3,
        .side = side,
        .inner1 = std::move(inner1),
        .inner2 = std::move(inner2),
        .outer = std::move(outer),
        .tangent_at_C1 = std::move(t_c1),
        .tangent_at_C3 = std::move(t_c3),
        .tangent_at_C2_left = std::move(t_c2_left),
        .tangent_at_C2_right = std::move(t_c2_right),
        .T1 = std::move(t1),
        .T2 = std::move(t2),
        .T3 = std::move(t3),
        .square_R = std::move(square),
        .center_O = k.center(),
        .circumcircle_K = std::move(k),
        .focus_F = std::move(focus),
        .diagonal = std::move(diagonal),
        .contact_T = std::move(contact),
        .bisector = std::move(bisector),
        .H = std::move(h),
        .A1 = std::move(a1),
        .A3 = std::move(a3),
    };
}

TheoremReport verify_sondow(const ParbelosFigure& fig) {
    TheoremReport report("sondow");
    const Point& t = fig.contact_T;
    report.witness("contact_T", t);
    report.witness("FT_sq", dist_sq(fig.focus_F, t));
    report.witness("HT_sq", dist_sq(fig.H, t));
    report.witness("focus_pedal_on_diagonal", pedal_point(fig.outer.focus(), fig.diagonal));

    report.check("diagonal_tangent", holds([&] { return is_tangent(fig.outer, fig.diagonal); }),
                 "diagonal not tangent to outer parabola");
    report.check("contact_on_parabola", contains_point(fig.outer, t), "contact not on parabola");
    report.check("contact_on_diagonal", fig.diagonal.contains(t), "contact not on diagonal");
    report.check("contact_on_bisector", fig.bisector.contains(t), "contact not on cusp bisector");
    report.check("FT_equals_HT", dist_sq(fig.focus_F, t) == dist_sq(fig.H, t), "FT != HT");
    report.check("F_on_circumcircle", on_circle(fig.circumcircle_K, fig.focus_F),
                 "F not on circumcircle of the tangent rectangle");
    report.check("square_R",
                 holds([&] {
                     const Point& o = fig.center_O;
                     return is_square(fig.square_R) &&
                            midpoint(fig.square_R[0], fig.square_R[2]) == o &&
                            midpoint(fig.square_R[1], fig.square_R[3]) == o &&
                            midpoint(fig.C2, fig.T2) == o && midpoint(fig.T1, fig.T3) == o &&
                            fig.circumcircle_K.center() == o;
                 }),
                 "R is not a square sharing its center with the tangent rectangle");

    report.check("focus_is_projection_of_T2",
                 holds([&] {
                     return fig.focus_F == fig.outer.focus() &&
                            pedal_point(fig.T2, line_through(fig.C1, fig.C3)) == fig.focus_F;
                 }),
                 "F is not the outer focus projected from T2");
    report.check("bisector_perpendicular",
                 holds([&] {
                     return fig.bisector.contains(fig.C2) &&
                            are_perpendicular(fig.bisector, line_through(fig.C1, fig.C3));
                 }),
                 "cusp bisector is not perpendicular to C1C3");
    report.check("tangent_rectangle",
                 holds([&] {
                     const Vec2 e0 = fig.T1 - fig.C2;
                     const Vec2 e1 = fig.T2 - fig.T1;
                     const Vec2 e2 = fig.T3 - fig.T2;
                     const Vec2 e3 = fig.C2 - fig.T3;
                     return dot(e0, e1).is_zero() && dot(e1, e2).is_zero() &&
                            dot(e2, e3).is_zero() && dot(e3, e0).is_zero() &&
                            e0 == -e2 && norm_sq(e0).sign() > 0 && norm_sq(e1).sign() > 0;
                 }),
                 "C2 T1 T2 T3 is not a rectangle");
    report.check("shared_cusp_tangents",
                 holds([&] {
                     return tangent_at(fig.outer, fig.C1) == fig.tangent_at_C1 &&
                            tangent_at(fig.outer, fig.C3) == fig.tangent_at_C3;
                 }),
                 "outer parabola does not share the C1/C3 tangents");
    return report;
}

TheoremReport verify_corollaries(const ParbelosFigure& fig) {
    TheoremReport report("corollaries");
    const Circle& k = fig.circumcircle_K;
    report.witness("FT1_sq", dist_sq(fig.focus_F, fig.T1));
    report.witness("FT3_sq", dist_sq(fig.focus_F, fig.T3));
    report.witness("A1C2_sq", dist_sq(fig.A1, fig.C2));
    report.witness("A1T2_sq", dist_sq(fig.A1, fig.T2));

    report.check("1_F_equidistant_T1_T3",
                 dist_sq(fig.focus_F, fig.T1) == dist_sq(fig.focus_F, fig.T3),
                 "item 1: F not equidistant from T1 and T3");
    report.check("2_H_on_circumcircle", on_circle(k, fig.H), "item 2: H not on circumcircle");
    report.check("3_H_equidistant_T1_T3", dist_sq(fig.H, fig.T1) == dist_sq(fig.H, fig.T3),
                 "item 3: H not equidistant from T1 and T3");
    report.check("4_A1_A3_on_circumcircle", on_circle(k, fig.A1) && on_circle(k, fig.A3),
                 "item 4: A1 or A3 not on circumcircle");
    report.check("5_A1_A3_equidistant_C2_T2",
                 dist_sq(fig.A1, fig.C2) == dist_sq(fig.A1, fig.T2) &&
                     dist_sq(fig.A3, fig.C2) == dist_sq(fig.A3, fig.T2),
                 "item 5: A1 or A3 not equidistant from C2 and T2");

    // Sides of R: the inner axes, C1C3 and the outer directrix. A1/A3 sit on
    // the lines parallel to C1C3 through T3/T1.
    report.check("R_sides_axes_directrix",
                 holds([&] {
                     const auto& r = fig.square_R;
                     return line_through(r[0], r[3]) == canonical_elements(fig.inner1).axis &&
                            line_through(r[1], r[2]) == canonical_elements(fig.inner2).axis &&
                            line_through(r[2], r[3]) == fig.outer.directrix() &&
                            line_through(r[0], r[1]) == line_through(fig.C1, fig.C3);
                 }),
                 "sides of R are not the inner axes, C1C3 and the outer directrix");
    report.check("A_lines_through_T",
                 holds([&] {
                     return fig.inner2.directrix().contains(fig.T3) &&
                            fig.inner1.directrix().contains(fig.T1) &&
                            fig.inner2.directrix().contains(fig.A1) &&
                            fig.inner1.directrix().contains(fig.A3);
                 }),
                 "A1/A3 are not on the lines parallel to C1C3 through T3/T1");
    return report;
}

CuspInputs similarity_transform(const CuspInputs& in, const Rational& scale, const Rational& p,
                                const Rational& q, const Point& shift) {
    if (scale.sign() <= 0) throw GeometryError(ErrorKind::InvalidScale, "scale must be positive");
    const auto r = exact_sqrt(p * p + q * q);
    if (!r || r->is_zero()) {
        throw GeometryError(ErrorKind::InvalidRotation, "p^2 + q^2 is not a nonzero rational square");
    }
    const Rational cos_s = scale * p / *r;
    const Rational sin_s = scale * q / *r;
    const auto map = [&](const Point& x) {
        return Point{cos_s * x.x - sin_s * x.y + shift.x, sin_s * x.x + cos_s * x.y + shift.y};
    };
    return {map(in.c1), map(in.c2), map(in.c3), in.side};
}

const std::vector<std::string_view>& figure_field_names() {
    static const std::vector<std::string_view> names{
        "C1",          "C2",           "C3",       "inner1",        "inner2",
        "outer",       "tangent_at_C1", "tangent_at_C3", "tangent_at_C2_left",
        "tangent_at_C2_right", "T1",    "T2",       "T3",            "square_R",
        "center_O",    "circumcircle_K", "focus_F", "diagonal",      "contact_T",
        "bisector",    "H",            "A1",       "A3"};
    return names;
}

}  // namespace parbelos
