#include "parbelos/theorems.hpp"

#include <array>

#include "parbelos/error.hpp"

namespace parbelos {

void TheoremReport::witness(std::string label, Witness value) {
    witnesses.emplace_back(std::move(label), std::move(value));
}

void TheoremReport::check(std::string check_name, bool ok, std::string detail) {
    if (!ok && pass) failure_detail = detail;
    pass = pass && ok;
    checks.push_back({std::move(check_name), ok, std::move(detail)});
}

const Check* TheoremReport::find_check(std::string_view check_name) const {
    for (const Check& c : checks) {
        if (c.name == check_name) return &c;
    }
    return nullptr;
}

const Witness* TheoremReport::find_witness(std::string_view label) const {
    for (const auto& [name, value] : witnesses) {
        if (name == label) return &value;
    }
    return nullptr;
}

TheoremReport simson_check(const Point& p, const Point& a, const Point& b, const Point& c) {
    const Circle circle = circumcircle(a, b, c);
    const Point pa = pedal_point(p, line_through(b, c));
    const Point pb = pedal_point(p, line_through(c, a));
    const Point pc = pedal_point(p, line_through(a, b));
    const bool collinear = is_collinear(pa, pb, pc);
    const bool concyclic = on_circle(circle, p);

    TheoremReport report("simson");
    report.witness("pedal_BC", pa);
    report.witness("pedal_CA", pb);
    report.witness("pedal_AB", pc);
    report.witness("circumcircle", circle);
    report.witness("pedals_collinear", collinear);
    report.witness("on_circumcircle", concyclic);
    report.check("collinear_iff_on_circumcircle", collinear == concyclic,
                 "pedal collinearity disagrees with circumcircle membership");
    return report;
}

TheoremReport lambert_circumcircle_check(const Parabola& g, const Line& l1, const Line& l2,
                                         const Line& l3) {
    const std::array<const Line*, 3> lines{&l1, &l2, &l3};
    for (int i = 0; i < 3; ++i) {
        if (!is_tangent(g, *lines[i])) {
            throw GeometryError(ErrorKind::NotTangent,
                                "line " + std::to_string(i + 1) + " is not tangent", i + 1);
        }
    }
    if (are_parallel(l1, l2) || are_parallel(l2, l3) || are_parallel(l1, l3)) {
        throw GeometryError(ErrorKind::DegenerateTriangle, "two tangents are parallel");
    }
    const Point p12 = intersect(l1, l2);
    const Point p23 = intersect(l2, l3);
    const Point p13 = intersect(l1, l3);
    const Circle circle = circumcircle(p12, p23, p13);

    TheoremReport report("lambert");
    report.witness("l1_x_l2", p12);
    report.witness("l2_x_l3", p23);
    report.witness("l1_x_l3", p13);
    report.witness("circumcircle", circle);
    report.witness("focus", g.focus());
    report.check("focus_on_circumcircle", on_circle(circle, g.focus()),
                 "focus is not on the tangent-triangle circumcircle");
    return report;
}

std::pair<Line, TheoremReport> converse_lambert(const Parabola& g, const Line& l1, const Line& l2,
                                                const Circle& circle) {
    if (!is_tangent(g, l1)) throw GeometryError(ErrorKind::NotTangent, "l1 is not tangent", 1);
    if (!is_tangent(g, l2)) throw GeometryError(ErrorKind::NotTangent, "l2 is not tangent", 2);
    if (are_parallel(l1, l2)) {
        throw GeometryError(ErrorKind::ParallelTangents, "tangents are parallel or equal");
    }
    const Point meet = intersect(l1, l2);
    if (!on_circle(circle, g.focus()) || !on_circle(circle, meet)) {
        throw GeometryError(ErrorKind::CircleMissesFocusOrI,
                            "circle must pass through the focus and l1 ∩ l2");
    }
    const Point h1 = second_intersection(l1, circle, meet);
    const Point h2 = second_intersection(l2, circle, meet);
    if (h1 == meet && h2 == meet) {
        throw GeometryError(ErrorKind::BothIntersectionsDegenerate, "H1 = H2 = I");
    }
    // If one H_i is I, the chord degenerates to the other tangent line.
    const Line chord = h1 == meet ? line_through(meet, h2)
                       : h2 == meet ? line_through(meet, h1)
                                    : line_through(h1, h2);

    TheoremReport report("converse_lambert");
    report.witness("I", meet);
    report.witness("H1", h1);
    report.witness("H2", h2);
    report.witness("circle", circle);
    report.witness("H1H2", chord);
    report.witness("focus_pedal", pedal_point(g.focus(), chord));
    report.check("H1H2_tangent", is_tangent(g, chord), "line H1H2 is not tangent");
    return {chord, std::move(report)};
}

}  // namespace parbelos
