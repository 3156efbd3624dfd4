#include "parbelos/error.hpp"

namespace parbelos {

std::string_view kind_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::InvalidRational: return "InvalidRational";
        case ErrorKind::CoincidentPoints: return "CoincidentPoints";
        case ErrorKind::DegenerateLine: return "DegenerateLine";
        case ErrorKind::DegenerateCircle: return "DegenerateCircle";
        case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
        case ErrorKind::ParallelLines: return "ParallelLines";
        case ErrorKind::PointNotIncident: return "PointNotIncident";
        case ErrorKind::FocusOnDirectrix: return "FocusOnDirectrix";
        case ErrorKind::PointNotOnParabola: return "PointNotOnParabola";
        case ErrorKind::NotTangent: return "NotTangent";
        case ErrorKind::ParallelTangents: return "ParallelTangents";
        case ErrorKind::CircleMissesFocusOrI: return "CircleMissesFocusOrI";
        case ErrorKind::BothIntersectionsDegenerate: return "BothIntersectionsDegenerate";
        case ErrorKind::CuspsNotCollinear: return "CuspsNotCollinear";
        case ErrorKind::CuspNotInterior: return "CuspNotInterior";
        case ErrorKind::DegenerateSide: return "DegenerateSide";
        case ErrorKind::InvalidScale: return "InvalidScale";
        case ErrorKind::InvalidRotation: return "InvalidRotation";
        case ErrorKind::EmptyScene: return "EmptyScene";
        case ErrorKind::DegenerateArc: return "DegenerateArc";
    }
    return "Unknown";
}

GeometryError::GeometryError(ErrorKind kind, const std::string& message,
                             std::optional<int> index)
    : std::runtime_error(std::string(kind_name(kind)) + ": " + message),
      kind_(kind),
      index_(index) {}

}  // namespace parbelos
