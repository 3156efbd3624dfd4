#pragma once

/**
 * Construction scripts (.geo).
 *
 * Line-oriented, single assignment:
 *
 *     # comment
 *     let A = point(0, 0)
 *     let P = parbelos(A, B, C, left)
 *     assert tangent(P.outer, P.diagonal)
 *
 * `let` binds a name once to the result of a constructor; `assert` evaluates a
 * predicate exactly. Arguments are names (optionally with a dotted field of a
 * parbelos binding), rational literals `p/q`, or the side keywords left/right.
 * Name resolution happens at parse time; type errors and degenerate
 * constructions surface during evaluation, which stops at the first error.
 */

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "parbelos/figure.hpp"

namespace parbelos::dsl {

struct SourcePos {
    int line = 0;
    int column = 0;
    friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

struct NameRef {
    std::string name;
    std::string field;  // empty unless dotted
    std::string text() const { return field.empty() ? name : name + "." + field; }
    friend bool operator==(const NameRef&, const NameRef&) = default;
};

struct Arg {
    std::variant<Rational, NameRef, Side> value;
    SourcePos pos;
    std::string text() const;
    /// Positions are ignored.
    friend bool operator==(const Arg& a, const Arg& b) { return a.value == b.value; }
};

struct Let {
    std::string name;
    std::string ctor;
    std::vector<Arg> args;
    friend bool operator==(const Let&, const Let&) = default;
};

struct Assert {
    std::string pred;
    std::vector<Arg> args;
    friend bool operator==(const Assert&, const Assert&) = default;
};

struct Statement {
    std::variant<Let, Assert> body;
    SourcePos pos;
    /// Positions are ignored.
    friend bool operator==(const Statement& a, const Statement& b) { return a.body == b.body; }
};

struct Program {
    std::vector<Statement> statements;
    friend bool operator==(const Program&, const Program&) = default;
};

enum class ParseErrorKind { Syntax, UnknownConstructor, UnknownPredicate, DuplicateName, UnboundName };

std::string_view kind_name(ParseErrorKind kind) noexcept;

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, SourcePos pos, const std::string& message);
    ParseErrorKind kind() const noexcept { return kind_; }
    SourcePos pos() const noexcept { return pos_; }
    /// Message without the position prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ParseErrorKind kind_;
    SourcePos pos_;
    std::string detail_;
};

Program parse_script(std::string_view text);

/// Canonical text form; parse_script(to_text(p)) == p.
std::string to_text(const Program& program);
std::string statement_text(const Statement& statement);

using FigurePtr = std::shared_ptr<const ParbelosFigure>;
using Value = std::variant<Rational, Point, Line, Circle, Parabola, FigurePtr>;

std::string_view type_name(const Value& value);

struct AssertionResult {
    SourcePos pos;
    std::string pred_text;
    bool pass = false;
    std::vector<std::pair<std::string, Value>> witness;
};

struct EvalError {
    SourcePos pos;
    std::string kind;  // GeometryError kind name or "TypeMismatch" / "UnknownField"
    std::string message;
};

struct EvalReport {
    /// In binding order.
    std::vector<std::pair<std::string, Value>> bindings;
    std::vector<AssertionResult> assertions;
    std::optional<EvalError> error;
    bool overall = false;
};

EvalReport evaluate(const Program& program);

/// Resolves `fig.field` for every field except square_R.
std::optional<Value> figure_field(const ParbelosFigure& fig, std::string_view field);

}  // namespace parbelos::dsl
