#include "parbelos/scene.hpp"

#include "parbelos/error.hpp"

namespace parbelos {

void Scene::add_point(Point at, std::string label) {
    points_.push_back({std::move(at), std::move(label)});
}

void Scene::add_segment(Point from, Point to, std::string css_class) {
    segments_.push_back({std::move(from), std::move(to), std::move(css_class)});
}

void Scene::add_line(Line line, std::string label) {
    lines_.push_back({std::move(line), std::move(label)});
}

void Scene::add_circle(Circle circle, std::string label) {
    circles_.push_back({std::move(circle), std::move(label)});
}

void Scene::add_arc(const Parabola& g, const Point& from, const Point& to, std::string label) {
    if (from == to) throw GeometryError(ErrorKind::DegenerateArc, "arc endpoints coincide");
    Line t_from = tangent_at(g, from);
    Line t_to = tangent_at(g, to);
    Point control = intersect(t_from, t_to);
    // The Bézier point B(1/2) = (from + 2 control + to) / 4 must be on the curve.
    const Point mid = midpoint(midpoint(from, control), midpoint(control, to));
    if (!contains_point(g, mid)) {
        throw GeometryError(ErrorKind::DegenerateArc, "Bézier midpoint is off the parabola");
    }
    arcs_.push_back({g, from, to, std::move(t_from), std::move(t_to), std::move(control),
                     std::move(label)});
}

bool Scene::empty() const {
    return points_.empty() && segments_.empty() && lines_.empty() && circles_.empty() &&
           arcs_.empty();
}

void add_figure(Scene& scene, const ParbelosFigure& fig, const std::string& prefix) {
    scene.add_arc(fig.outer, fig.C1, fig.C3, prefix + "outer");
    scene.add_arc(fig.inner1, fig.C1, fig.C2, prefix + "inner1");
    scene.add_arc(fig.inner2, fig.C2, fig.C3, prefix + "inner2");
    scene.add_circle(fig.circumcircle_K, prefix + "K");

    scene.add_segment(fig.C1, fig.C3, "cusp-line");
    scene.add_segment(fig.C2, fig.T1, "rectangle");
    scene.add_segment(fig.T1, fig.T2, "rectangle");
    scene.add_segment(fig.T2, fig.T3, "rectangle");
    scene.add_segment(fig.T3, fig.C2, "rectangle");
    for (size_t i = 0; i < fig.square_R.size(); ++i) {
        scene.add_segment(fig.square_R[i], fig.square_R[(i + 1) % fig.square_R.size()], "square");
    }
    scene.add_segment(fig.T1, fig.T3, "diagonal");
    scene.add_segment(fig.C2, fig.H, "bisector");

    const std::pair<const Point*, const char*> labeled[] = {
        {&fig.C1, "C1"}, {&fig.C2, "C2"},       {&fig.C3, "C3"},       {&fig.T1, "T1"},
        {&fig.T2, "T2"}, {&fig.T3, "T3"},       {&fig.focus_F, "F"},   {&fig.center_O, "O"},
        {&fig.H, "H"},   {&fig.contact_T, "T"}, {&fig.A1, "A1"},       {&fig.A3, "A3"},
    };
    for (const auto& [p, label] : labeled) scene.add_point(*p, prefix + label);
}

Scene scene_from_report(const dsl::EvalReport& report) {
    Scene scene;
    for (const auto& [name, value] : report.bindings) {
        if (const auto* p = std::get_if<Point>(&value)) {
            scene.add_point(*p, name);
        } else if (const auto* l = std::get_if<Line>(&value)) {
            scene.add_line(*l, name);
        } else if (const auto* k = std::get_if<Circle>(&value)) {
            scene.add_circle(*k, name);
        } else if (const auto* g = std::get_if<Parabola>(&value)) {
            const Segment latus = canonical_elements(*g).latus_endpoints;
            scene.add_arc(*g, latus.first(), latus.second(), name);
        } else if (const auto* fig = std::get_if<dsl::FigurePtr>(&value)) {
            add_figure(scene, **fig, name + ".");
        }
    }
    return scene;
}

}  // namespace parbelos
