#pragma once

// Drawable scenes and SVG output. Parabola arcs are emitted as quadratic
// Bézier segments: an arc of a parabola is exactly a quadratic Bézier whose
// control point is the intersection of the endpoint tangents. The control
// point is computed and checked in rationals; decimals appear only in the
// final string.

#include <string>
#include <vector>

#include "parbelos/dsl.hpp"
#include "parbelos/figure.hpp"

namespace parbelos {

struct ScenePoint {
    Point at;
    std::string label;
};

struct SceneSegment {
    Point from;
    Point to;
    std::string css_class;
};

struct SceneLine {
    Line line;
    std::string label;
};

struct SceneCircle {
    Circle circle;
    std::string label;
};

struct SceneArc {
    Parabola parabola;
    Point from;
    Point to;
    Line tangent_from;
    Line tangent_to;
    Point control;
    std::string label;
};

class Scene {
public:
    void add_point(Point at, std::string label);
    void add_segment(Point from, Point to, std::string css_class);
    void add_line(Line line, std::string label);
    void add_circle(Circle circle, std::string label);
    /// Arc of `g` between two of its points. Throws DegenerateArc when the
    /// endpoints coincide and PointNotOnParabola when one is off the curve.
    void add_arc(const Parabola& g, const Point& from, const Point& to, std::string label);

    const std::vector<ScenePoint>& points() const { return points_; }
    const std::vector<SceneSegment>& segments() const { return segments_; }
    const std::vector<SceneLine>& lines() const { return lines_; }
    const std::vector<SceneCircle>& circles() const { return circles_; }
    const std::vector<SceneArc>& arcs() const { return arcs_; }
    bool empty() const;

private:
    std::vector<ScenePoint> points_;
    std::vector<SceneSegment> segments_;
    std::vector<SceneLine> lines_;
    std::vector<SceneCircle> circles_;
    std::vector<SceneArc> arcs_;
};

/// Latus-rectum arcs, tangent rectangle, square R, diagonal, bisector,
/// circumcircle and labeled points. `prefix` is prepended to labels.
void add_figure(Scene& scene, const ParbelosFigure& fig, const std::string& prefix = "");

/// Points, lines, circles, latus arcs of parabolas and whole figures bound by
/// a script.
Scene scene_from_report(const dsl::EvalReport& report);

struct RenderOptions {
    int width = 800;
    int height = 600;
    int margin = 40;
    int decimal_digits = 12;
};

/// SVG 1.1 document. Throws EmptyScene for a scene with nothing to draw.
std::string render_svg(const Scene& scene, const RenderOptions& opts = {});

}  // namespace parbelos
