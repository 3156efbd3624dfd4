#pragma once

// JSON serialization of kernel values and reports. Rationals are always
// strings "p/q" (or "p"), line coefficients are decimal integer strings, and
// object keys keep insertion order so output is byte-stable.

#include "json.hpp"

#include "parbelos/dsl.hpp"
#include "parbelos/figure.hpp"

namespace parbelos {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& value);
Json to_json(const Point& p);
Json to_json(const Line& line);
Json to_json(const Circle& circle);
Json to_json(const Parabola& g);
Json to_json(const Witness& w);
Json to_json(const TheoremReport& report);
/// Every ParbelosFigure field under its own name.
Json to_json(const ParbelosFigure& fig);

/// {"figure": ..., "sondow": ..., "corollaries": ..., "overall": bool}
Json parbelos_report(const ParbelosFigure& fig, const TheoremReport& sondow,
                     const TheoremReport& corollaries);

namespace dsl {
Json to_json(const Value& value);
/// {"bindings": {...}, "assertions": [...], "overall": bool} plus "error"
/// when evaluation stopped early.
Json to_json(const EvalReport& report);
}  // namespace dsl

}  // namespace parbelos
