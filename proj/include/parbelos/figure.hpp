#pragma once

/**
 * The parbelos built from three collinear cusps C1, C2, C3: the latus-rectum
 * parabolas on C1C2, C2C3 and C1C3, the tangent rectangle C2 T1 T2 T3 formed
 * by the cusp tangents, the square R around it, and the points F, H, A1, A3
 * and the contact point of the diagonal T1T3 with the outer parabola.
 *
 * Every point is computed through kernel operations, so the construction works
 * for cusps on any rational line. The verify_* functions then check the
 * tangency property and its corollaries exactly; nothing is assumed.
 */

#include <array>
#include <string_view>
#include <vector>

#include "parbelos/parabola.hpp"
#include "parbelos/theorems.hpp"

namespace parbelos {

struct ParbelosFigure {
    Point C1, C2, C3;
    Side side = Side::Left;
    Parabola inner1;  // latus rectum C1C2
    Parabola inner2;  // latus rectum C2C3
    Parabola outer;   // latus rectum C1C3
    Line tangent_at_C1;
    Line tangent_at_C3;
    Line tangent_at_C2_left;   // tangent of inner1 at C2
    Line tangent_at_C2_right;  // tangent of inner2 at C2
    Point T1;                  // tangent_at_C1 ∩ tangent_at_C2_left
    Point T2;                  // tangent_at_C1 ∩ tangent_at_C3
    Point T3;                  // tangent_at_C3 ∩ tangent_at_C2_right
    /// Corners of R, in order: (C2 side ∩ T1 side), (C2 side ∩ T3 side),
    /// (T2 side ∩ T3 side), (T2 side ∩ T1 side).
    std::array<Point, 4> square_R;
    Point center_O;
    Circle circumcircle_K;
    Point focus_F;  // pedal of T2 on C1C3
    Line diagonal;  // T1T3
    Point contact_T;
    Line bisector;  // perpendicular to C1C3 through C2
    Point H;        // bisector ∩ directrix(outer)
    Point A1;       // axis(inner1) ∩ directrix(inner2)
    Point A3;       // axis(inner2) ∩ directrix(inner1)
};

/// Throws CuspsNotCollinear or CuspNotInterior.
ParbelosFigure build_parbelos(const Point& c1, const Point& c2, const Point& c3, Side side);

TheoremReport verify_sondow(const ParbelosFigure& fig);
TheoremReport verify_corollaries(const ParbelosFigure& fig);

struct CuspInputs {
    Point c1, c2, c3;
    Side side = Side::Left;
};

/// Applies x -> scale * Rot(p, q) * x + shift to the cusps, where Rot has
/// entries p/r, q/r with r = sqrt(p^2 + q^2) required rational. Rotations
/// keep orientation, so the side selector carries over unchanged. Throws
/// InvalidScale unless scale > 0, and InvalidRotation when r is irrational
/// or zero.
CuspInputs similarity_transform(const CuspInputs& in, const Rational& scale, const Rational& p,
                                const Rational& q, const Point& shift);

/// Field names of ParbelosFigure, in declaration order, for reports.
const std::vector<std::string_view>& figure_field_names();

}  // namespace parbelos
