#pragma once

// Rational plane primitives and the incidence, pedal and circumcircle
// operations. Everything here is exact; no operation leaves the rationals.

#include <optional>
#include <ostream>

#include "parbelos/rational.hpp"

namespace parbelos {

struct Vec2 {
    Rational x;
    Rational y;

    friend bool operator==(const Vec2&, const Vec2&) = default;
    friend Vec2 operator+(const Vec2& u, const Vec2& v) { return {u.x + v.x, u.y + v.y}; }
    friend Vec2 operator-(const Vec2& u, const Vec2& v) { return {u.x - v.x, u.y - v.y}; }
    friend Vec2 operator*(const Rational& s, const Vec2& v) { return {s * v.x, s * v.y}; }
    Vec2 operator-() const { return {-x, -y}; }
};

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
    friend Vec2 operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
    friend Point operator+(const Point& p, const Vec2& v) { return {p.x + v.x, p.y + v.y}; }
    friend Point operator-(const Point& p, const Vec2& v) { return {p.x - v.x, p.y - v.y}; }
};

Rational dot(const Vec2& u, const Vec2& v);
Rational cross(const Vec2& u, const Vec2& v);
Rational norm_sq(const Vec2& v);
/// Counter-clockwise quarter turn.
Vec2 rotate_ccw(const Vec2& v);
/// Smallest integer vector with the same direction and orientation as `v`.
Vec2 primitive_direction(const Vec2& v);

Rational dist_sq(const Point& p, const Point& q);
Point midpoint(const Point& p, const Point& q);

/// a*x + b*y + c = 0 with coprime integer coefficients and the leading
/// nonzero coefficient positive, so equal lines compare equal.
class Line {
public:
    /// Throws DegenerateLine when a = b = 0.
    Line(const Rational& a, const Rational& b, const Rational& c);

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    const BigInt& c() const { return c_; }

    /// a*x + b*y + c at `p`.
    Rational eval(const Point& p) const;
    bool contains(const Point& p) const { return eval(p).is_zero(); }
    Vec2 normal() const;
    /// (b, -a).
    Vec2 direction() const;

    friend bool operator==(const Line&, const Line&) = default;

private:
    BigInt a_;
    BigInt b_;
    BigInt c_;
};

class Circle {
public:
    /// Throws DegenerateCircle unless radius_sq > 0.
    Circle(Point center, Rational radius_sq);

    const Point& center() const { return center_; }
    const Rational& radius_sq() const { return radius_sq_; }

    friend bool operator==(const Circle&, const Circle&) = default;

private:
    Point center_;
    Rational radius_sq_;
};

class Segment {
public:
    /// Throws CoincidentPoints.
    Segment(Point first, Point second);

    const Point& first() const { return first_; }
    const Point& second() const { return second_; }

    friend bool operator==(const Segment&, const Segment&) = default;

private:
    Point first_;
    Point second_;
};

Line line_through(const Point& p, const Point& q);
/// The line through `p` whose direction is the normal of `line`.
Line perpendicular_through(const Line& line, const Point& p);
Line parallel_through(const Line& line, const Point& p);
Line perpendicular_bisector(const Point& p, const Point& q);

bool are_parallel(const Line& l1, const Line& l2);
bool are_perpendicular(const Line& l1, const Line& l2);

/// Throws ParallelLines (this includes equal lines).
Point intersect(const Line& l1, const Line& l2);

Point pedal_point(const Point& p, const Line& line);

/// Zero determinant test. Repeated points count as collinear.
bool is_collinear(const Point& a, const Point& b, const Point& c);

/// Throws DegenerateTriangle for collinear or coincident input.
Circle circumcircle(const Point& a, const Point& b, const Point& c);

bool on_circle(const Circle& circle, const Point& p);

/// The other point of line ∩ circle, given one known common point `p`.
/// The chord parameter of the unknown root follows from Vieta, so the result
/// is rational. A tangent line gives back `p`. Throws PointNotIncident.
Point second_intersection(const Line& line, const Circle& circle, const Point& p);

/// Rational parametrization of a circle from a base point `q` on it: the
/// second intersection of the chord through `q` of slope `slope`, or of the
/// vertical chord when `slope` is empty. Throws PointNotIncident.
Point circle_point(const Circle& circle, const Point& q, const std::optional<Rational>& slope);

/// Circle through `p` and `q` whose center is midpoint(p, q) + t * d, where d
/// is the primitive direction of rotate_ccw(q - p). Throws CoincidentPoints.
Circle circle_through_points(const Point& p, const Point& q, const Rational& t);

std::ostream& operator<<(std::ostream& os, const Point& p);
std::ostream& operator<<(std::ostream& os, const Line& line);
std::ostream& operator<<(std::ostream& os, const Circle& circle);

}  // namespace parbelos
