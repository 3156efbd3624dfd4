#include <map>

#include "parbelos/dsl.hpp"
#include "parbelos/error.hpp"

namespace parbelos::dsl {

namespace {

struct EvalFailure {
    SourcePos pos;
    std::string kind;
    std::string message;
};

using Witnesses = std::vector<std::pair<std::string, Value>>;

template <class T>
constexpr std::string_view expected_name() {
    if constexpr (std::is_same_v<T, Rational>) return "Rational";
    else if constexpr (std::is_same_v<T, Point>) return "Point";
    else if constexpr (std::is_same_v<T, Line>) return "Line";
    else if constexpr (std::is_same_v<T, Circle>) return "Circle";
    else if constexpr (std::is_same_v<T, Parabola>) return "Parabola";
    else return "Parbelos";
}

class Evaluator {
public:
    EvalReport run(const Program& program) {
        for (const Statement& statement : program.statements) {
            try {
                if (const auto* let = std::get_if<Let>(&statement.body)) {
                    bind(*let);
                } else {
                    check(std::get<Assert>(statement.body), statement);
                }
            } catch (const GeometryError& e) {
                report_.error = EvalError{statement.pos, std::string(parbelos::kind_name(e.kind())),
                                          e.what()};
                break;
            } catch (const EvalFailure& e) {
                report_.error = EvalError{e.pos, e.kind, e.message};
                break;
            }
        }
        report_.overall = !report_.error;
        for (const AssertionResult& a : report_.assertions) report_.overall &= a.pass;
        return std::move(report_);
    }

private:
    Value lookup(const Arg& arg) const {
        if (const auto* r = std::get_if<Rational>(&arg.value)) return *r;
        const auto& ref = std::get<NameRef>(arg.value);
        const Value& base = env_.at(ref.name);
        if (ref.field.empty()) return base;
        const auto* fig = std::get_if<FigurePtr>(&base);
        std::optional<Value> field = fig ? figure_field(**fig, ref.field) : std::nullopt;
        if (!field) throw EvalFailure{arg.pos, "UnknownField", "no field '" + ref.text() + "'"};
        return *field;
    }

    template <class T>
    T get(const Arg& arg) const {
        Value v = lookup(arg);
        if (auto* out = std::get_if<T>(&v)) return std::move(*out);
        throw EvalFailure{arg.pos, "TypeMismatch",
                          "'" + arg.text() + "' is a " + std::string(type_name(v)) + ", expected " +
                              std::string(expected_name<T>())};
    }

    Side side(const Arg& arg) const { return std::get<Side>(arg.value); }

    void bind(const Let& let) {
        const auto& a = let.args;
        const std::string& c = let.ctor;
        Value v;
        if (c == "point") v = Point{get<Rational>(a[0]), get<Rational>(a[1])};
        else if (c == "rational") v = get<Rational>(a[0]);
        else if (c == "line") v = line_through(get<Point>(a[0]), get<Point>(a[1]));
        else if (c == "circle3") v = circumcircle(get<Point>(a[0]), get<Point>(a[1]), get<Point>(a[2]));
        else if (c == "circle2")
            v = circle_through_points(get<Point>(a[0]), get<Point>(a[1]), get<Rational>(a[2]));
        else if (c == "parabola_latus")
            v = parabola_from_latus_rectum(get<Point>(a[0]), get<Point>(a[1]), side(a[2]));
        else if (c == "tangent_at") v = tangent_at(get<Parabola>(a[0]), get<Point>(a[1]));
        else if (c == "pedal") v = pedal_point(get<Point>(a[0]), get<Line>(a[1]));
        else if (c == "perp") v = perpendicular_through(get<Line>(a[0]), get<Point>(a[1]));
        else if (c == "intersect") v = intersect(get<Line>(a[0]), get<Line>(a[1]));
        else if (c == "second_intersect")
            v = second_intersection(get<Line>(a[0]), get<Circle>(a[1]), get<Point>(a[2]));
        else if (c == "parbelos")
            v = std::make_shared<const ParbelosFigure>(
                build_parbelos(get<Point>(a[0]), get<Point>(a[1]), get<Point>(a[2]), side(a[3])));
        else if (c == "midpoint") v = midpoint(get<Point>(a[0]), get<Point>(a[1]));
        else if (c == "dist2") v = dist_sq(get<Point>(a[0]), get<Point>(a[1]));
        env_.emplace(let.name, v);
        report_.bindings.emplace_back(let.name, std::move(v));
    }

    void check(const Assert& as, const Statement& statement) {
        const auto& a = as.args;
        const std::string& p = as.pred;
        AssertionResult result;
        result.pos = statement.pos;
        result.pred_text = statement_text(statement).substr(std::string_view("assert ").size());
        for (const Arg& arg : a) {
            if (!std::holds_alternative<Side>(arg.value)) result.witness.emplace_back(arg.text(), lookup(arg));
        }
        Witnesses& w = result.witness;
        if (p == "collinear") {
            result.pass = is_collinear(get<Point>(a[0]), get<Point>(a[1]), get<Point>(a[2]));
        } else if (p == "concyclic" && a.size() == 2) {
            const Circle k = get<Circle>(a[0]);
            const Point q = get<Point>(a[1]);
            w.emplace_back("center_dist2", dist_sq(k.center(), q));
            result.pass = on_circle(k, q);
        } else if (p == "concyclic") {
            const Circle k = circumcircle(get<Point>(a[0]), get<Point>(a[1]), get<Point>(a[2]));
            w.emplace_back("circumcircle", k);
            result.pass = on_circle(k, get<Point>(a[3]));
        } else if (p == "on_parabola") {
            result.pass = contains_point(get<Parabola>(a[0]), get<Point>(a[1]));
        } else if (p == "tangent") {
            const Parabola g = get<Parabola>(a[0]);
            const Line l = get<Line>(a[1]);
            w.emplace_back("focus_pedal", pedal_point(g.focus(), l));
            result.pass = is_tangent(g, l);
        } else if (p == "equidistant") {
            const Point q = get<Point>(a[0]);
            const Rational d1 = dist_sq(q, get<Point>(a[1]));
            const Rational d2 = dist_sq(q, get<Point>(a[2]));
            w.emplace_back("dist2_1", d1);
            w.emplace_back("dist2_2", d2);
            result.pass = d1 == d2;
        } else if (p == "perpendicular") {
            result.pass = are_perpendicular(get<Line>(a[0]), get<Line>(a[1]));
        } else if (p == "eq") {
            result.pass = lookup(a[0]) == lookup(a[1]);
        }
        report_.assertions.push_back(std::move(result));
    }

    std::map<std::string, Value, std::less<>> env_;
    EvalReport report_;
};

}  // namespace

std::string_view type_name(const Value& value) {
    static constexpr std::string_view names[] = {"Rational", "Point",    "Line",
                                                 "Circle",   "Parabola", "Parbelos"};
    return names[value.index()];
}

EvalReport evaluate(const Program& program) { return Evaluator().run(program); }

std::optional<Value> figure_field(const ParbelosFigure& f, std::string_view field) {
    if (field == "C1") return f.C1;
    if (field == "C2") return f.C2;
    if (field == "C3") return f.C3;
    if (field == "inner1") return f.inner1;
    if (field == "inner2") return f.inner2;
    if (field == "outer") return f.outer;
    if (field == "tangent_at_C1") return f.tangent_at_C1;
    if (field == "tangent_at_C3") return f.tangent_at_C3;
    if (field == "tangent_at_C2_left") return f.tangent_at_C2_left;
    if (field == "tangent_at_C2_right") return f.tangent_at_C2_right;
    if (field == "T1") return f.T1;
    if (field == "T2") return f.T2;
    if (field == "T3") return f.T3;
    if (field == "center_O") return f.center_O;
    if (field == "circumcircle_K") return f.circumcircle_K;
    if (field == "focus_F") return f.focus_F;
    if (field == "diagonal") return f.diagonal;
    if (field == "contact_T") return f.contact_T;
    if (field == "bisector") return f.bisector;
    if (field == "H") return f.H;
    if (field == "A1") return f.A1;
    if (field == "A3") return f.A3;
    return std::nullopt;
}

}  // namespace parbelos::dsl
