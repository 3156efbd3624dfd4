#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "parbelos/dsl.hpp"
#include "parbelos/fuzz.hpp"
#include "parbelos/report_json.hpp"

using namespace parbelos;
using namespace parbelos::dsl;

namespace {

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ParseError parse_error(std::string_view text) {
    try {
        parse_script(text);
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "no ParseError for: " << text;
    return ParseError(ParseErrorKind::Syntax, {}, "");
}

const char* const kP13Script =
    "let A = point(0, 0)\n"
    "let B = point(1, 0)\n"
    "let C = point(4, 0)\n"
    "let P = parbelos(A, B, C, left)\n"
    "assert tangent(P.outer, P.diagonal)\n";

}  // namespace

TEST(ParseScript, SingleLet) {
    const Program p = parse_script("let A = point(0,0)");
    ASSERT_EQ(p.statements.size(), 1u);
    const auto& let = std::get<Let>(p.statements[0].body);
    EXPECT_EQ(let.name, "A");
    EXPECT_EQ(let.ctor, "point");
    ASSERT_EQ(let.args.size(), 2u);
    EXPECT_EQ(std::get<Rational>(let.args[0].value), Rational(0));
}

TEST(ParseScript, UnboundNameReportsFirstArgument) {
    const ParseError e = parse_error("let G = parabola_latus(A, B, left)\nassert tangent(G, L)");
    EXPECT_EQ(e.kind(), ParseErrorKind::UnboundName);
    EXPECT_EQ(e.pos().line, 1);
    EXPECT_EQ(e.pos().column, 24);
    EXPECT_NE(e.detail().find("'A'"), std::string::npos);
}

TEST(ParseScript, ParbelosProgramHasFiveStatements) {
    const Program p = parse_script(kP13Script);
    ASSERT_EQ(p.statements.size(), 5u);
    EXPECT_EQ(p.statements[4].pos.line, 5);
    const auto& a = std::get<Assert>(p.statements[4].body);
    EXPECT_EQ(a.pred, "tangent");
    EXPECT_EQ(std::get<NameRef>(a.args[1].value), (NameRef{"P", "diagonal"}));
}

TEST(ParseScript, CommentsBlankLinesAndSpacing) {
    const Program p = parse_script("# header\n\n  let   X=point( -1/2 ,3 )  # trailing\n");
    ASSERT_EQ(p.statements.size(), 1u);
    EXPECT_EQ(p.statements[0].pos, (SourcePos{3, 3}));
    EXPECT_EQ(std::get<Rational>(std::get<Let>(p.statements[0].body).args[0].value),
              make_rational(-1, 2));
}

TEST(ParseScript, EachErrorKindWithPosition) {
    struct Case {
        const char* text;
        ParseErrorKind kind;
        int line, column;
    };
    const Case cases[] = {
        {"let A = point(0 0)", ParseErrorKind::Syntax, 1, 17},
        {"let A = point(0, 0", ParseErrorKind::Syntax, 1, 19},
        {"let A point(0, 0)", ParseErrorKind::Syntax, 1, 7},
        {"frobnicate A", ParseErrorKind::Syntax, 1, 1},
        {"let A = point(0, 0) $", ParseErrorKind::Syntax, 1, 21},
        {"let A = point(1/0, 0)", ParseErrorKind::Syntax, 1, 15},
        {"let A = point(0, 0)\nlet B = spline(A)", ParseErrorKind::UnknownConstructor, 2, 9},
        {"let A = point(0, 0)\nassert pretty(A)", ParseErrorKind::UnknownPredicate, 2, 8},
        {"let A = point(0, 0)\nlet A = point(1, 1)", ParseErrorKind::DuplicateName, 2, 5},
        {"let A = point(0, 0)\nlet L = line(A, B)", ParseErrorKind::UnboundName, 2, 17},
        {"let A = point(0, 0)\nlet L = line(A.T1, A)", ParseErrorKind::UnboundName, 2, 14},
        {"let A = point(0, 0)\nlet L = line(A, 3)", ParseErrorKind::Syntax, 2, 9},
        {"let left = point(0, 0)", ParseErrorKind::Syntax, 1, 5},
    };
    for (const Case& c : cases) {
        const ParseError e = parse_error(c.text);
        EXPECT_EQ(e.kind(), c.kind) << c.text << " -> " << e.what();
        EXPECT_EQ(e.pos(), (SourcePos{c.line, c.column})) << c.text << " -> " << e.what();
    }
}

TEST(ParseScript, UnknownParbelosField) {
    const std::string text = std::string(kP13Script) + "assert tangent(P.outer, P.nowhere)\n";
    const ParseError e = parse_error(text);
    EXPECT_EQ(e.kind(), ParseErrorKind::UnboundName);
    EXPECT_EQ(e.pos(), (SourcePos{6, 25}));
}

TEST(PrettyPrint, RoundTripIsFixedPoint) {
    const Program shipped = parse_script(read_text(PARBELOS_SOURCE_DIR "/geo/sondow.geo"));
    EXPECT_EQ(parse_script(to_text(shipped)), shipped);
    EXPECT_EQ(to_text(parse_script(to_text(shipped))), to_text(shipped));

    // random programs over the constructors that take literals
    fuzz::RandomSource rng(61, 0);
    for (int i = 0; i < 100; ++i) {
        std::ostringstream text;
        const int n = static_cast<int>(rng.integer(3, 8));
        for (int k = 0; k < n; ++k) {
            text << "let P" << k << " = point(" << rng.rational(50) << ", " << rng.rational(50)
                 << ")\n";
        }
        text << "let L = line(P0, P1)\nassert collinear(P0, P1, P2)\nassert eq("
             << rng.rational(9) << ", P2)\n";
        const Program p = parse_script(text.str());
        EXPECT_EQ(parse_script(to_text(p)), p);
    }
}

TEST(Evaluate, ParbelosScriptPasses) {
    const std::string text =
        std::string(kP13Script) + "assert concyclic(P.circumcircle_K, P.H)\n";
    const EvalReport r = evaluate(parse_script(text));
    EXPECT_FALSE(r.error.has_value());
    ASSERT_EQ(r.assertions.size(), 2u);
    EXPECT_TRUE(r.assertions[0].pass);
    EXPECT_TRUE(r.assertions[1].pass);
    EXPECT_TRUE(r.overall);
}

TEST(Evaluate, RationalEquality) {
    const EvalReport r = evaluate(parse_script("assert eq(1/2, 2/4)"));
    ASSERT_EQ(r.assertions.size(), 1u);
    EXPECT_TRUE(r.assertions[0].pass);
    EXPECT_TRUE(r.overall);
    EXPECT_FALSE(evaluate(parse_script("assert eq(1/2, 1/3)")).overall);
}

TEST(Evaluate, DegenerateTriangleStopsAtItsLine) {
    const EvalReport r = evaluate(parse_script(
        "let A = point(0, 0)\nlet B = point(1, 1)\nlet C = point(2, 2)\n"
        "let K = circle3(A, B, C)\nassert eq(1, 1)\n"));
    ASSERT_TRUE(r.error.has_value());
    EXPECT_EQ(r.error->kind, "DegenerateTriangle");
    EXPECT_EQ(r.error->pos.line, 4);
    EXPECT_TRUE(r.assertions.empty());
    EXPECT_FALSE(r.overall);
    EXPECT_EQ(r.bindings.size(), 3u);
}

TEST(Evaluate, TypeMismatchIsAnEvalError) {
    const EvalReport r =
        evaluate(parse_script("let A = point(0, 0)\nlet B = point(1, 0)\nlet M = pedal(A, B)\n"));
    ASSERT_TRUE(r.error.has_value());
    EXPECT_EQ(r.error->kind, "TypeMismatch");
    EXPECT_EQ(r.error->pos, (SourcePos{3, 18}));
}

TEST(Evaluate, WitnessesAndBindings) {
    const EvalReport r = evaluate(parse_script(
        "let A = point(0, 0)\nlet B = point(4, 0)\nlet G = parabola_latus(A, B, left)\n"
        "let V = point(2, -1)\nlet L = tangent_at(G, V)\nassert tangent(G, L)\n"));
    ASSERT_TRUE(r.overall);
    EXPECT_EQ(std::get<Line>(r.bindings.back().second), Line(0, 1, 1));
    const auto& w = r.assertions[0].witness;
    // arguments first, then derived values
    ASSERT_EQ(w.size(), 3u);
    EXPECT_EQ(w[0].first, "G");
    EXPECT_EQ(w[1].first, "L");
    EXPECT_EQ(w[2].first, "focus_pedal");
    EXPECT_EQ(std::get<Point>(w[2].second), (Point{2, -1}));
}

TEST(EvalJson, DeterministicAndSchemaShaped) {
    const std::string text = read_text(PARBELOS_SOURCE_DIR "/geo/sondow.geo");
    const std::string first = dsl::to_json(evaluate(parse_script(text))).dump(2);
    const std::string second = dsl::to_json(evaluate(parse_script(text))).dump(2);
    EXPECT_EQ(first, second);

    const Json j = Json::parse(first);
    EXPECT_TRUE(j["overall"].get<bool>());
    EXPECT_EQ(j["bindings"]["P"]["T2"]["x"], "2");
    EXPECT_EQ(j["bindings"]["P"]["contact_T"]["y"], "-3/4");
    EXPECT_EQ(j["bindings"]["P"]["diagonal"]["a"], "2");
    const Json& first_assert = j["assertions"][0];
    EXPECT_TRUE(first_assert.contains("line"));
    EXPECT_TRUE(first_assert.contains("pred"));
    EXPECT_TRUE(first_assert.contains("pass"));
    EXPECT_TRUE(first_assert.contains("witness"));
    EXPECT_FALSE(j.contains("error"));
}
