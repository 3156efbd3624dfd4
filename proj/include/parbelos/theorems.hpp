#pragma once

// Executable forms of the Simson-Wallace theorem, Lambert's circumcircle
// theorem on the parabola, and its converse. Each check returns a report
// carrying every intermediate object, so a caller can print the full
// construction trace.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "parbelos/geometry.hpp"
#include "parbelos/parabola.hpp"

namespace parbelos {

using Witness = std::variant<Rational, Point, Line, Circle, bool>;

struct Check {
    std::string name;
    bool pass = false;
    /// Shown when the check fails.
    std::string detail;
};

struct TheoremReport {
    std::string name;
    std::vector<std::pair<std::string, Witness>> witnesses;
    std::vector<Check> checks;
    bool pass = true;
    std::optional<std::string> failure_detail;

    explicit TheoremReport(std::string report_name) : name(std::move(report_name)) {}

    void witness(std::string label, Witness value);
    /// Records a check; the first failing check sets failure_detail.
    void check(std::string check_name, bool ok, std::string detail);
    const Check* find_check(std::string_view check_name) const;
    const Witness* find_witness(std::string_view label) const;
};

/// Pedals of `p` on BC, CA, AB are collinear iff `p` is on the circumcircle;
/// the report passes when the two booleans agree. Throws DegenerateTriangle.
TheoremReport simson_check(const Point& p, const Point& a, const Point& b, const Point& c);

/// Throws NotTangent (index 1..3) or DegenerateTriangle.
TheoremReport lambert_circumcircle_check(const Parabola& g, const Line& l1, const Line& l2,
                                         const Line& l3);

/// H_i is the second intersection of l_i with `circle` through I = l1 ∩ l2;
/// returns the line through the two distinct points among {H1, H2, I}.
/// Throws NotTangent, ParallelTangents, CircleMissesFocusOrI, or
/// BothIntersectionsDegenerate.
std::pair<Line, TheoremReport> converse_lambert(const Parabola& g, const Line& l1, const Line& l2,
                                                const Circle& circle);

}  // namespace parbelos
