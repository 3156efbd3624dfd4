#include "parbelos/report_json.hpp"

namespace parbelos {

Json to_json(const Rational& value) { return value.str(); }

Json to_json(const Point& p) { return Json{{"x", p.x.str()}, {"y", p.y.str()}}; }

Json to_json(const Line& line) {
    return Json{{"a", line.a().get_str()}, {"b", line.b().get_str()}, {"c", line.c().get_str()}};
}

Json to_json(const Circle& circle) {
    return Json{{"center", to_json(circle.center())}, {"radius_sq", circle.radius_sq().str()}};
}

Json to_json(const Parabola& g) {
    return Json{{"focus", to_json(g.focus())}, {"directrix", to_json(g.directrix())}};
}

Json to_json(const Witness& w) {
    return std::visit(
        [](const auto& v) -> Json {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, bool>) {
                return v;
            } else {
                return to_json(v);
            }
        },
        w);
}

Json to_json(const TheoremReport& report) {
    Json witnesses = Json::object();
    for (const auto& [label, value] : report.witnesses) witnesses[label] = to_json(value);
    Json checks = Json::object();
    for (const Check& c : report.checks) checks[c.name] = c.pass;
    Json out{{"name", report.name}, {"witnesses", witnesses}, {"checks", checks}, {"pass", report.pass}};
    if (report.failure_detail) out["failure_detail"] = *report.failure_detail;
    return out;
}

Json to_json(const ParbelosFigure& f) {
    Json square = Json::array();
    for (const Point& p : f.square_R) square.push_back(to_json(p));
    return Json{
        {"C1", to_json(f.C1)},
        {"C2", to_json(f.C2)},
        {"C3", to_json(f.C3)},
        {"side", std::string(side_name(f.side))},
        {"inner1", to_json(f.inner1)},
        {"inner2", to_json(f.inner2)},
        {"outer", to_json(f.outer)},
        {"tangent_at_C1", to_json(f.tangent_at_C1)},
        {"tangent_at_C3", to_json(f.tangent_at_C3)},
        {"tangent_at_C2_left", to_json(f.tangent_at_C2_left)},
        {"tangent_at_C2_right", to_json(f.tangent_at_C2_right)},
        {"T1", to_json(f.T1)},
        {"T2", to_json(f.T2)},
        {"T3", to_json(f.T3)},
        {"square_R", square},
        {"center_O", to_json(f.center_O)},
        {"circumcircle_K", to_json(f.circumcircle_K)},
        {"focus_F", to_json(f.focus_F)},
        {"diagonal", to_json(f.diagonal)},
        {"contact_T", to_json(f.contact_T)},
        {"bisector", to_json(f.bisector)},
        {"H", to_json(f.H)},
        {"A1", to_json(f.A1)},
        {"A3", to_json(f.A3)},
    };
}

Json parbelos_report(const ParbelosFigure& fig, const TheoremReport& sondow,
                     const TheoremReport& corollaries) {
    return Json{{"figure", to_json(fig)},
                {"sondow", to_json(sondow)},
                {"corollaries", to_json(corollaries)},
                {"overall", sondow.pass && corollaries.pass}};
}

namespace dsl {

Json to_json(const Value& value) {
    return std::visit(
        [](const auto& v) -> Json {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, FigurePtr>) {
                return parbelos::to_json(*v);
            } else {
                return parbelos::to_json(v);
            }
        },
        value);
}

Json to_json(const EvalReport& report) {
    Json bindings = Json::object();
    for (const auto& [name, value] : report.bindings) bindings[name] = to_json(value);
    Json assertions = Json::array();
    for (const AssertionResult& a : report.assertions) {
        Json witness = Json::object();
        for (const auto& [label, value] : a.witness) witness[label] = to_json(value);
        assertions.push_back(Json{{"line", a.pos.line},
                                  {"pred", a.pred_text},
                                  {"pass", a.pass},
                                  {"witness", witness}});
    }
    Json out{{"bindings", bindings}, {"assertions", assertions}, {"overall", report.overall}};
    if (report.error) {
        out["error"] = Json{{"line", report.error->pos.line},
                            {"column", report.error->pos.column},
                            {"kind", report.error->kind},
                            {"message", report.error->message}};
    }
    return out;
}

}  // namespace dsl

}  // namespace parbelos
