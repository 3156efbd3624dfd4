#include "parbelos/geometry.hpp"

#include "parbelos/error.hpp"

namespace parbelos {

namespace {

BigInt lcm_of_denominators(std::initializer_list<const Rational*> values) {
    BigInt out = 1;
    for (const Rational* v : values) {
        mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), v->gmp().get_den_mpz_t());
    }
    return out;
}

BigInt as_integer(const Rational& v) {
    // caller guarantees v is an integer
    return v.numerator();
}

BigInt gcd_abs(const BigInt& a, const BigInt& b) {
    BigInt out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

}  // namespace

Rational dot(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }

Rational cross(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }

Rational norm_sq(const Vec2& v) { return dot(v, v); }

Vec2 rotate_ccw(const Vec2& v) { return {-v.y, v.x}; }

Vec2 primitive_direction(const Vec2& v) {
    if (v.x.is_zero() && v.y.is_zero()) {
        throw GeometryError(ErrorKind::DegenerateLine, "zero vector has no direction");
    }
    const Rational scale(lcm_of_denominators({&v.x, &v.y}));
    const BigInt ix = as_integer(v.x * scale);
    const BigInt iy = as_integer(v.y * scale);
    const BigInt g = gcd_abs(ix, iy);
    return {Rational(ix, g), Rational(iy, g)};
}

Rational dist_sq(const Point& p, const Point& q) { return norm_sq(p - q); }

Point midpoint(const Point& p, const Point& q) {
    const Rational half(1, 2);
    return {half * (p.x + q.x), half * (p.y + q.y)};
}

Line::Line(const Rational& a, const Rational& b, const Rational& c) {
    if (a.is_zero() && b.is_zero()) {
        throw GeometryError(ErrorKind::DegenerateLine, "line needs (a, b) != (0, 0)");
    }
    const Rational scale(lcm_of_denominators({&a, &b, &c}));
    a_ = as_integer(a * scale);
    b_ = as_integer(b * scale);
    c_ = as_integer(c * scale);
    BigInt g = gcd_abs(gcd_abs(a_, b_), c_);
    if ((a_ != 0 ? sgn(a_) : sgn(b_)) < 0) g = -g;
    a_ /= g;
    b_ /= g;
    c_ /= g;
}

Rational Line::eval(const Point& p) const {
    return Rational(a_) * p.x + Rational(b_) * p.y + Rational(c_);
}

Vec2 Line::normal() const { return {Rational(a_), Rational(b_)}; }

Vec2 Line::direction() const { return {Rational(b_), Rational(-a_)}; }

Circle::Circle(Point center, Rational radius_sq)
    : center_(std::move(center)), radius_sq_(std::move(radius_sq)) {
    if (radius_sq_.sign() <= 0) {
        throw GeometryError(ErrorKind::DegenerateCircle, "radius_sq must be positive");
    }
}

Segment::Segment(Point first, Point second) : first_(std::move(first)), second_(std::move(second)) {
    if (first_ == second_) {
        throw GeometryError(ErrorKind::CoincidentPoints, "segment endpoints coincide");
    }
}

Line line_through(const Point& p, const Point& q) {
    if (p == q) throw GeometryError(ErrorKind::CoincidentPoints, "line through a single point");
    const Vec2 n = rotate_ccw(q - p);
    return Line(n.x, n.y, -(n.x * p.x + n.y * p.y));
}

Line perpendicular_through(const Line& line, const Point& p) {
    const Vec2 n = rotate_ccw(line.normal());
    return Line(n.x, n.y, -(n.x * p.x + n.y * p.y));
}

Line parallel_through(const Line& line, const Point& p) {
    const Vec2 n = line.normal();
    return Line(n.x, n.y, -(n.x * p.x + n.y * p.y));
}

Line perpendicular_bisector(const Point& p, const Point& q) {
    if (p == q) throw GeometryError(ErrorKind::CoincidentPoints, "bisector of a single point");
    const Vec2 n = q - p;
    const Point m = midpoint(p, q);
    return Line(n.x, n.y, -(n.x * m.x + n.y * m.y));
}

bool are_parallel(const Line& l1, const Line& l2) {
    return cross(l1.normal(), l2.normal()).is_zero();
}

bool are_perpendicular(const Line& l1, const Line& l2) {
    return dot(l1.normal(), l2.normal()).is_zero();
}

Point intersect(const Line& l1, const Line& l2) {
    const Rational a1(l1.a()), b1(l1.b()), c1(l1.c());
    const Rational a2(l2.a()), b2(l2.b()), c2(l2.c());
    const Rational det = a1 * b2 - a2 * b1;
    if (det.is_zero()) throw GeometryError(ErrorKind::ParallelLines, "lines do not meet in one point");
    return {(b1 * c2 - b2 * c1) / det, (c1 * a2 - c2 * a1) / det};
}

Point pedal_point(const Point& p, const Line& line) {
    const Vec2 n = line.normal();
    return p - (line.eval(p) / norm_sq(n)) * n;
}

bool is_collinear(const Point& a, const Point& b, const Point& c) {
    return cross(b - a, c - a).is_zero();
}

Circle circumcircle(const Point& a, const Point& b, const Point& c) {
    const Vec2 u = b - a;
    const Vec2 v = c - a;
    const Rational det = cross(u, v);
    if (det.is_zero()) {
        throw GeometryError(ErrorKind::DegenerateTriangle, "triangle vertices are collinear");
    }
    const Rational uu = norm_sq(u);
    const Rational vv = norm_sq(v);
    const Rational twice = 2 * det;
    const Vec2 w{(uu * v.y - vv * u.y) / twice, (u.x * vv - v.x * uu) / twice};
    return Circle(a + w, norm_sq(w));
}

bool on_circle(const Circle& circle, const Point& p) {
    return dist_sq(circle.center(), p) == circle.radius_sq();
}

Point second_intersection(const Line& line, const Circle& circle, const Point& p) {
    if (!line.contains(p) || !on_circle(circle, p)) {
        throw GeometryError(ErrorKind::PointNotIncident, "known point must lie on line and circle");
    }
    // |p + s*d - o|^2 = r^2 has roots s = 0 and s = -2 d.(p - o) / |d|^2.
    const Vec2 d = line.direction();
    const Rational s = Rational(-2) * dot(d, p - circle.center()) / norm_sq(d);
    return p + s * d;
}

Point circle_point(const Circle& circle, const Point& q, const std::optional<Rational>& slope) {
    if (!on_circle(circle, q)) {
        throw GeometryError(ErrorKind::PointNotIncident, "base point must lie on the circle");
    }
    const Line chord = slope ? Line(*slope, -1, q.y - *slope * q.x) : Line(1, 0, -q.x);
    return second_intersection(chord, circle, q);
}

Circle circle_through_points(const Point& p, const Point& q, const Rational& t) {
    if (p == q) throw GeometryError(ErrorKind::CoincidentPoints, "circle family needs two points");
    const Point center = midpoint(p, q) + t * primitive_direction(rotate_ccw(q - p));
    return Circle(center, dist_sq(center, p));
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << '(' << p.x << ',' << p.y << ')';
}

std::ostream& operator<<(std::ostream& os, const Line& line) {
    return os << '[' << line.a() << ' ' << line.b() << ' ' << line.c() << ']';
}

std::ostream& operator<<(std::ostream& os, const Circle& circle) {
    return os << "circle(" << circle.center() << ", r2=" << circle.radius_sq() << ')';
}

}  // namespace parbelos
