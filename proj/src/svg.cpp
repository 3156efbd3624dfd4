#include <algorithm>
#include <sstream>

#include "parbelos/error.hpp"
#include "parbelos/scene.hpp"

namespace parbelos {

namespace {

BigInt pow10(int digits) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(std::max(digits, 0)));
    return out;
}

// sqrt(value) to `digits` places, as a decimal string.
std::string sqrt_decimal(const Rational& value, int digits) {
    const BigInt scale = pow10(digits);
    const BigInt radicand = floor(value * Rational(4 * scale * scale));
    BigInt twice;
    mpz_sqrt(twice.get_mpz_t(), radicand.get_mpz_t());
    return Rational(BigInt((twice + 1) / 2), scale).to_decimal(digits);
}

// Rational upper bound of sqrt(value), within 1/1000.
Rational sqrt_upper(const Rational& value) {
    const BigInt radicand = floor(value * Rational(1000000)) + 1;
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
    return Rational(BigInt(root + 1), BigInt(1000));
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Box {
    Rational xmin, xmax, ymin, ymax;
    bool set = false;

    void include(const Point& p) {
        if (!set) {
            xmin = xmax = p.x;
            ymin = ymax = p.y;
            set = true;
            return;
        }
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }

    bool contains(const Point& p) const {
        return xmin <= p.x && p.x <= xmax && ymin <= p.y && p.y <= ymax;
    }
};

class Canvas {
public:
    Canvas(const Box& box, const RenderOptions& opts) : box_(box), opts_(opts) {
        Rational dx = box.xmax - box.xmin;
        Rational dy = box.ymax - box.ymin;
        if (dx.is_zero()) dx = 1;
        if (dy.is_zero()) dy = 1;
        scale_ = std::min(Rational(opts.width - 2 * opts.margin) / dx,
                          Rational(opts.height - 2 * opts.margin) / dy);
    }

    // y grows upward in the world and downward in SVG.
    Point map(const Point& p) const {
        return {Rational(opts_.margin) + (p.x - box_.xmin) * scale_,
                Rational(opts_.height - opts_.margin) - (p.y - box_.ymin) * scale_};
    }

    std::string num(const Rational& v) const { return v.to_decimal(opts_.decimal_digits); }
    std::string xy(const Point& p) const {
        const Point m = map(p);
        return num(m.x) + " " + num(m.y);
    }
    const Rational& scale() const { return scale_; }

private:
    Box box_;
    RenderOptions opts_;
    Rational scale_;
};

// Line clipped to the box, or nothing when it misses it.
std::optional<std::pair<Point, Point>> clip(const Line& line, const Box& box) {
    std::vector<Point> hits;
    const auto try_edge = [&](const Line& edge) {
        if (are_parallel(line, edge)) return;
        const Point p = intersect(line, edge);
        if (box.contains(p) && std::find(hits.begin(), hits.end(), p) == hits.end()) {
            hits.push_back(p);
        }
    };
    try_edge(Line(1, 0, -box.xmin));
    try_edge(Line(1, 0, -box.xmax));
    try_edge(Line(0, 1, -box.ymin));
    try_edge(Line(0, 1, -box.ymax));
    if (hits.size() < 2) return std::nullopt;
    const auto less = [](const Point& a, const Point& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    };
    std::sort(hits.begin(), hits.end(), less);
    return std::pair{hits.front(), hits.back()};
}

}  // namespace

std::string render_svg(const Scene& scene, const RenderOptions& opts) {
    if (scene.empty()) throw GeometryError(ErrorKind::EmptyScene, "nothing to draw");

    Box box;
    for (const auto& p : scene.points()) box.include(p.at);
    for (const auto& s : scene.segments()) {
        box.include(s.from);
        box.include(s.to);
    }
    for (const auto& a : scene.arcs()) {
        box.include(a.from);
        box.include(a.to);
        box.include(a.control);
    }
    for (const auto& c : scene.circles()) {
        const Rational r = sqrt_upper(c.circle.radius_sq());
        const Point& o = c.circle.center();
        box.include({o.x - r, o.y - r});
        box.include({o.x + r, o.y + r});
    }
    if (!box.set) {
        // Only lines: frame the origin.
        box.include({-1, -1});
        box.include({1, 1});
    }
    const Canvas canvas(box, opts);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opts.width
        << "\" height=\"" << opts.height << "\" viewBox=\"0 0 " << opts.width << ' '
        << opts.height << "\">\n"
        << "<style>"
        << ".circle{fill:none;stroke:#888;stroke-width:1}"
        << ".line{stroke:#bbb;stroke-width:1}"
        << ".cusp-line,.bisector{stroke:#555;stroke-width:1;stroke-dasharray:4 3}"
        << ".rectangle{stroke:#c33;stroke-width:1.5;fill:none}"
        << ".square{stroke:#36c;stroke-width:1;fill:none}"
        << ".diagonal{stroke:#2a2;stroke-width:1.5}"
        << ".arc{fill:none;stroke:#000;stroke-width:2}"
        << ".pt{fill:#000}"
        << "text{font-family:sans-serif;font-size:12px}"
        << "</style>\n";

    out << "<g class=\"circles\">\n";
    for (const auto& c : scene.circles()) {
        const Point m = canvas.map(c.circle.center());
        const Rational r2 = c.circle.radius_sq() * canvas.scale() * canvas.scale();
        out << "<circle class=\"circle\" cx=\"" << canvas.num(m.x) << "\" cy=\"" << canvas.num(m.y)
            << "\" r=\"" << sqrt_decimal(r2, opts.decimal_digits) << "\"><title>"
            << escape(c.label) << "</title></circle>\n";
    }
    out << "</g>\n<g class=\"lines\">\n";
    for (const auto& l : scene.lines()) {
        const auto ends = clip(l.line, box);
        if (!ends) continue;
        const Point a = canvas.map(ends->first);
        const Point b = canvas.map(ends->second);
        out << "<line class=\"line\" x1=\"" << canvas.num(a.x) << "\" y1=\"" << canvas.num(a.y)
            << "\" x2=\"" << canvas.num(b.x) << "\" y2=\"" << canvas.num(b.y) << "\"><title>"
            << escape(l.label) << "</title></line>\n";
    }
    out << "</g>\n<g class=\"segments\">\n";
    for (const auto& s : scene.segments()) {
        const Point a = canvas.map(s.from);
        const Point b = canvas.map(s.to);
        out << "<line class=\"" << escape(s.css_class) << "\" x1=\"" << canvas.num(a.x)
            << "\" y1=\"" << canvas.num(a.y) << "\" x2=\"" << canvas.num(b.x) << "\" y2=\""
            << canvas.num(b.y) << "\"/>\n";
    }
    out << "</g>\n<g class=\"arcs\">\n";
    for (const auto& a : scene.arcs()) {
        out << "<path class=\"arc\" d=\"M " << canvas.xy(a.from) << " Q " << canvas.xy(a.control)
            << ' ' << canvas.xy(a.to) << "\"><title>" << escape(a.label) << "</title></path>\n";
    }
    out << "</g>\n<g class=\"points\">\n";
    for (const auto& p : scene.points()) {
        const Point m = canvas.map(p.at);
        out << "<circle class=\"pt\" cx=\"" << canvas.num(m.x) << "\" cy=\"" << canvas.num(m.y)
            << "\" r=\"3\"/><text x=\"" << canvas.num(m.x + Rational(5)) << "\" y=\""
            << canvas.num(m.y - Rational(5)) << "\">" << escape(p.label) << "</text>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace parbelos
