#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace parbelos {

enum class ErrorKind {
    ZeroDenominator,
    InvalidRational,
    CoincidentPoints,
    DegenerateLine,
    DegenerateCircle,
    DegenerateTriangle,
    ParallelLines,
    PointNotIncident,
    FocusOnDirectrix,
    PointNotOnParabola,
    NotTangent,
    ParallelTangents,
    CircleMissesFocusOrI,
    BothIntersectionsDegenerate,
    CuspsNotCollinear,
    CuspNotInterior,
    DegenerateSide,
    InvalidScale,
    InvalidRotation,
    EmptyScene,
    DegenerateArc,
};

std::string_view kind_name(ErrorKind kind) noexcept;

/// Every kernel failure. `index()` is set for errors that name an argument
/// position (NotTangent carries the 1-based index of the offending line).
class GeometryError : public std::runtime_error {
public:
    GeometryError(ErrorKind kind, const std::string& message,
                  std::optional<int> index = std::nullopt);

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<int> index() const noexcept { return index_; }

private:
    ErrorKind kind_;
    std::optional<int> index_;
};

}  // namespace parbelos
